#pragma once

// q-analogue building blocks: q-integers, Pochhammer symbols, Gaussian
// binomials, Eulerian polynomials (classical and Carlitz), complete
// homogeneous symmetric polynomials and divided differences.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include <qdiv/series.hpp>

namespace qdiv
{

// 1 + base + ... + base^{n-1}. Throws std::invalid_argument for n < 1.
MultiSeries q_integer(long n, Var base, const Truncation &tr);

// prod_{j=0}^{n-1} (1 - first * base^j).
MultiSeries pochhammer(const Monomial &first, const Monomial &base, unsigned n, const Truncation &tr);

// s / (first; base)_n, one division by (1 - first base^j) per factor.
MultiSeries div_pochhammer(const MultiSeries &s, const Monomial &first, const Monomial &base, unsigned n);

// (first; base)_inf truncated to the box. The product stops at the first k
// with first * base^k outside the box; since base has a positive exponent
// every later factor is also 1 in the box. Throws NonTruncating when base is
// constant.
MultiSeries pochhammer_inf(const Monomial &first, const Monomial &base, const Truncation &tr,
                           unsigned *factors_used = nullptr);

// s * (first; base)_n and s * (first; base)_inf without forming the product
// separately.
MultiSeries mul_pochhammer(const MultiSeries &s, const Monomial &first, const Monomial &base, unsigned n);
MultiSeries mul_pochhammer_inf(const MultiSeries &s, const Monomial &first, const Monomial &base);

// s / (first; base)_inf.
MultiSeries div_pochhammer_inf(const MultiSeries &s, const Monomial &first, const Monomial &base);

// Gaussian binomial [n, k] in the given base monomial; zero for k outside
// [0, n]. Computed as an exact quotient of Pochhammer polynomials.
MultiSeries q_binomial(long n, long k, const Monomial &base, const Truncation &tr);

// Carlitz q-Eulerian polynomial A_n(t; q), from
//   A_n(t; q) = (t; q)_{n+1} * sum_{j>=0} t^j [j+1]_q^n.
MultiSeries carlitz_eulerian(unsigned n, Var tvar, Var qvar, const Truncation &tr);

struct Permutation {
    // One-line notation, values 1..n.
    std::vector<unsigned> values;

    unsigned descents() const noexcept;
    // Sum of the 1-based descent positions.
    unsigned major_index() const noexcept;
};

// sum over S_n of t^des q^maj, by enumeration. n must be in [1, 7].
MultiSeries carlitz_eulerian_oracle(unsigned n, Var tvar, Var qvar, const Truncation &tr);

// Classical Eulerian polynomial A_n(t) from the binomial recurrence.
MultiSeries eulerian(unsigned n, Var tvar, const Truncation &tr);

// h_k(args...). Requires at least one argument unless k == 0.
MultiSeries homogeneous_sym(unsigned k, std::span<const MultiSeries> args, const Truncation &tr);

// Functions of an alphabet a_0, a_1, ... (0-based).
using AlphabetFunction = std::function<Rational(std::span<const Rational>)>;

// f ∂_i : A -> (f(A) - f(s_i A)) / (a_i - a_{i+1}), where s_i swaps a_i and
// a_{i+1}. Evaluation throws DegenerateAlphabet when a_i == a_{i+1}.
AlphabetFunction divided_difference(AlphabetFunction f, std::size_t i);

// f ∂_0 ∂_1 ... ∂_{count-1}.
AlphabetFunction divided_differences(AlphabetFunction f, std::size_t count);

// Single application at a given alphabet.
Rational divided_difference(const AlphabetFunction &f, std::span<const Rational> alphabet, std::size_t i);

} // namespace qdiv
