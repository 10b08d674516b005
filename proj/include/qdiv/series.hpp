#pragma once

// Truncated multivariate formal power series over exact rationals.
//
// The variable set is closed: q, p, x, z, a, t. A series stores only its
// nonzero coefficients, keyed by a packed exponent vector, and every stored
// exponent lies inside the series' truncation box. Coefficients outside the
// box are unknown, not zero; arithmetic intersects boxes so that every
// retained coefficient is exact.

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qdiv
{

using Rational = mpq_class;

enum class Var : std::uint8_t { q = 0, p, x, z, a, t };

inline constexpr std::size_t num_vars = 6;

inline constexpr std::array<Var, num_vars> all_vars{Var::q, Var::p, Var::x, Var::z, Var::a, Var::t};

constexpr std::size_t index_of(Var v) noexcept
{
    return static_cast<std::size_t>(v);
}

char var_name(Var v) noexcept;

// Throws std::invalid_argument for anything outside {q,p,x,z,a,t}.
Var parse_var(char c);

using Exponents = std::array<std::uint32_t, num_vars>;

// Exponent vector with the given nonzero entries.
Exponents exps(std::initializer_list<std::pair<Var, std::uint32_t>> entries);

struct Monomial {
    Rational coeff{1};
    Exponents exps{};

    bool is_constant() const noexcept;
    std::uint32_t degree(Var v) const noexcept
    {
        return exps[index_of(v)];
    }
};

// c * prod v^e.
Monomial mono(Rational c, std::initializer_list<std::pair<Var, std::uint32_t>> entries = {});
// 1 * v^e.
Monomial mono(Var v, std::uint32_t e = 1);

Monomial operator*(const Monomial &, const Monomial &);
// m^e, with m^0 = 1.
Monomial pow(const Monomial &m, std::uint32_t e);

// Per-variable caps: exponent e of variable v is retained iff e <= cap(v).
class Truncation
{
public:
    // Largest supported cap; keeps two packed keys summable without carries.
    static constexpr std::uint32_t max_cap = 511;

    Truncation() = default;
    explicit Truncation(const Exponents &caps);
    Truncation(std::initializer_list<std::pair<Var, std::uint32_t>> caps);

    std::uint32_t cap(Var v) const noexcept
    {
        return caps_[index_of(v)];
    }
    const Exponents &caps() const noexcept
    {
        return caps_;
    }
    Truncation with(Var v, std::uint32_t cap) const;

    bool contains(const Exponents &e) const noexcept;

    friend Truncation min(const Truncation &, const Truncation &);
    friend bool operator==(const Truncation &, const Truncation &) = default;

private:
    Exponents caps_{};
};

std::string to_string(const Truncation &);

class MultiSeries
{
public:
    using Key = std::uint64_t;
    using Term = std::pair<Key, Rational>;

    static constexpr unsigned key_bits = 10;

    static Key pack(const Exponents &e) noexcept;
    static Exponents unpack(Key k) noexcept;

    // The zero series.
    MultiSeries() = default;
    explicit MultiSeries(const Truncation &tr) : trunc_(tr) {}

    static MultiSeries constant(const Rational &c, const Truncation &tr);
    static MultiSeries from_monomial(const Monomial &m, const Truncation &tr);
    // Takes ownership of unsorted terms that may contain duplicate keys,
    // zeros and out-of-box exponents, and canonicalises them.
    static MultiSeries from_terms(std::vector<Term> terms, const Truncation &tr);

    const Truncation &truncation() const noexcept
    {
        return trunc_;
    }
    // Sorted by key, no zero coefficients.
    const std::vector<Term> &terms() const noexcept
    {
        return terms_;
    }
    std::size_t size() const noexcept
    {
        return terms_.size();
    }
    bool is_zero() const noexcept
    {
        return terms_.empty();
    }

    // Throws OutOfTruncation when e is outside the box.
    Rational coefficient(const Exponents &e) const;
    Rational constant_term() const;

    // Largest exponent of v among stored terms (0 for the zero series).
    std::uint32_t max_degree(Var v) const noexcept;
    // Smallest exponent of v among stored terms (0 for the zero series).
    std::uint32_t min_degree(Var v) const noexcept;

    // Restriction to the intersection of the current box and tr.
    MultiSeries truncated(const Truncation &tr) const;

    MultiSeries operator-() const;
    MultiSeries &operator+=(const MultiSeries &);
    MultiSeries &operator-=(const MultiSeries &);
    MultiSeries &operator*=(const MultiSeries &);
    MultiSeries &operator*=(const Rational &);

    friend MultiSeries operator+(MultiSeries a, const MultiSeries &b)
    {
        a += b;
        return a;
    }
    friend MultiSeries operator-(MultiSeries a, const MultiSeries &b)
    {
        a -= b;
        return a;
    }
    friend MultiSeries operator*(MultiSeries a, const Rational &c)
    {
        a *= c;
        return a;
    }
    friend MultiSeries operator*(const Rational &c, MultiSeries a)
    {
        a *= c;
        return a;
    }
    friend MultiSeries operator*(const MultiSeries &a, const MultiSeries &b);

    // Equal iff the term maps agree once both are restricted to the
    // componentwise-minimum box.
    friend bool operator==(const MultiSeries &a, const MultiSeries &b);

private:
    friend class TermAccumulator;

    Truncation trunc_;
    std::vector<Term> terms_;
};

std::ostream &operator<<(std::ostream &, const MultiSeries &);
std::string to_string(const MultiSeries &);

MultiSeries add(const MultiSeries &, const MultiSeries &);
MultiSeries negate(const MultiSeries &);

// Product; dispatches to the OpenMP kernel for large operands.
MultiSeries mul(const MultiSeries &, const MultiSeries &);
// Single-threaded reference product.
MultiSeries mul_serial(const MultiSeries &, const MultiSeries &);
// OpenMP product: left terms are partitioned across threads, each thread
// accumulates privately, partial results are merged in thread order.
MultiSeries mul_parallel(const MultiSeries &, const MultiSeries &);

MultiSeries mul_monomial(const MultiSeries &, const Monomial &);
// s * (1 - m) in one pass.
MultiSeries mul_one_minus(const MultiSeries &, const Monomial &);
// s / (1 - m). For nonconstant m this is the recurrence r = s + m r; a
// constant m = c != 1 scales by 1/(1 - c). Throws NonInvertible when m = 1.
MultiSeries div_one_minus(const MultiSeries &, const Monomial &);

// Reciprocal of a series with nonzero constant term, computed coefficient
// by coefficient in increasing key order (a linear extension of the
// componentwise exponent order). Throws NonInvertible.
MultiSeries inverse(const MultiSeries &);

// Replace v^e by target^e in every term, then re-truncate.
MultiSeries substitute(const MultiSeries &, Var v, const Monomial &target);

// 1/(1 - q^d). For d < 0 returns the rewrite -q^{-d}/(1 - q^{-d}).
// Throws ZeroExponent for d = 0.
MultiSeries geometric_factor(long d, const Truncation &tr, Var base = Var::q);

MultiSeries pow(const MultiSeries &, unsigned e);

} // namespace qdiv
