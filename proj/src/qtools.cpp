#include <qdiv/qtools.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include <qdiv/errors.hpp>

namespace qdiv
{

MultiSeries q_integer(long n, Var base, const Truncation &tr)
{
    if (n < 1) {
        throw std::invalid_argument("q_integer requires n >= 1");
    }
    std::vector<MultiSeries::Term> terms;
    for (long j = 0; j < n && j <= static_cast<long>(tr.cap(base)); ++j) {
        terms.emplace_back(MultiSeries::pack(exps({{base, static_cast<std::uint32_t>(j)}})), Rational(1));
    }
    return MultiSeries::from_terms(std::move(terms), tr);
}

MultiSeries mul_pochhammer(const MultiSeries &s, const Monomial &first, const Monomial &base, unsigned n)
{
    MultiSeries r = s;
    Monomial factor = first;
    for (unsigned j = 0; j < n; ++j) {
        r = mul_one_minus(r, factor);
        factor = factor * base;
    }
    return r;
}

MultiSeries pochhammer(const Monomial &first, const Monomial &base, unsigned n, const Truncation &tr)
{
    return mul_pochhammer(MultiSeries::constant(1, tr), first, base, n);
}

MultiSeries div_pochhammer(const MultiSeries &s, const Monomial &first, const Monomial &base, unsigned n)
{
    MultiSeries r = s;
    Monomial factor = first;
    for (unsigned j = 0; j < n; ++j) {
        r = div_one_minus(r, factor);
        factor = factor * base;
    }
    return r;
}

namespace
{

// Number of factors of (first; base)_inf that differ from 1 inside the box.
unsigned inf_factor_count(const Monomial &first, const Monomial &base, const Truncation &tr)
{
    if (base.is_constant()) {
        throw NonTruncating("infinite Pochhammer symbol with constant base never stabilises");
    }
    unsigned k = 0;
    Monomial factor = first;
    while (tr.contains(factor.exps) && sgn(factor.coeff) != 0) {
        factor = factor * base;
        ++k;
    }
    return k;
}

} // namespace

MultiSeries pochhammer_inf(const Monomial &first, const Monomial &base, const Truncation &tr, unsigned *factors_used)
{
    const unsigned k = inf_factor_count(first, base, tr);
    if (factors_used != nullptr) {
        *factors_used = k;
    }
    auto r = pochhammer(first, base, k, tr);
    // The next factor is 1 in the box.
    if (mul_one_minus(r, first * pow(base, k)) != r) {
        throw NonTruncating("infinite Pochhammer stopping criterion violated");
    }
    return r;
}

MultiSeries mul_pochhammer_inf(const MultiSeries &s, const Monomial &first, const Monomial &base)
{
    return mul_pochhammer(s, first, base, inf_factor_count(first, base, s.truncation()));
}

MultiSeries div_pochhammer_inf(const MultiSeries &s, const Monomial &first, const Monomial &base)
{
    return div_pochhammer(s, first, base, inf_factor_count(first, base, s.truncation()));
}

namespace
{

using Poly = std::vector<Rational>;

void trim(Poly &p)
{
    while (!p.empty() && sgn(p.back()) == 0) {
        p.pop_back();
    }
}

Poly poly_mul(const Poly &a, const Poly &b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    trim(r);
    return r;
}

// (q; q)_n as a dense univariate polynomial.
Poly q_factorial_poly(long n)
{
    Poly r{Rational(1)};
    for (long j = 1; j <= n; ++j) {
        Poly f(static_cast<std::size_t>(j) + 1);
        f[0] = 1;
        f[static_cast<std::size_t>(j)] = -1;
        r = poly_mul(r, f);
    }
    return r;
}

// Exact long division; throws std::logic_error on a nonzero remainder.
Poly exact_divide(Poly num, const Poly &den)
{
    trim(num);
    if (num.size() < den.size()) {
        if (num.empty()) {
            return {};
        }
        throw std::logic_error("q_binomial: inexact division");
    }
    Poly quot(num.size() - den.size() + 1);
    for (std::size_t i = quot.size(); i-- > 0;) {
        const Rational c = num[i + den.size() - 1] / den.back();
        quot[i] = c;
        for (std::size_t j = 0; j < den.size(); ++j) {
            num[i + j] -= c * den[j];
        }
    }
    trim(num);
    if (!num.empty()) {
        throw std::logic_error("q_binomial: inexact division");
    }
    return quot;
}

} // namespace

MultiSeries q_binomial(long n, long k, const Monomial &base, const Truncation &tr)
{
    if (n < 0 || k < 0 || k > n) {
        return MultiSeries(tr);
    }
    const Poly quot = exact_divide(q_factorial_poly(n), poly_mul(q_factorial_poly(k), q_factorial_poly(n - k)));
    std::vector<MultiSeries::Term> terms;
    for (std::size_t j = 0; j < quot.size(); ++j) {
        if (sgn(quot[j]) == 0) {
            continue;
        }
        const Monomial m = pow(base, static_cast<std::uint32_t>(j));
        if (tr.contains(m.exps)) {
            terms.emplace_back(MultiSeries::pack(m.exps), quot[j] * m.coeff);
        }
    }
    return MultiSeries::from_terms(std::move(terms), tr);
}

MultiSeries carlitz_eulerian(unsigned n, Var tvar, Var qvar, const Truncation &tr)
{
    // A_n has t-degree <= n - 1 and q-degree <= n(n-1)/2, so the sum over
    // j <= n of t^j [j+1]_q^n determines it exactly.
    const auto tdeg = n;
    const auto qdeg = n * (n + 1) / 2 + n * n;
    const Truncation work = Truncation{}.with(tvar, tdeg).with(qvar, qdeg);

    MultiSeries sum(work);
    for (unsigned j = 0; j <= tdeg; ++j) {
        auto term = pow(q_integer(static_cast<long>(j) + 1, qvar, work), n);
        sum += mul_monomial(term, mono(tvar, j));
    }
    auto a = mul(pochhammer(mono(tvar), mono(qvar), n + 1, work), sum);

    const unsigned bound = n == 0 ? 0 : n - 1;
    if (a.max_degree(tvar) > bound || a.max_degree(qvar) > n * (n - 1) / 2) {
        throw std::logic_error("carlitz_eulerian: degree bound violated for n = " + std::to_string(n));
    }
    return MultiSeries::from_terms(a.terms(), tr);
}

unsigned Permutation::descents() const noexcept
{
    unsigned d = 0;
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        d += values[i] > values[i + 1] ? 1u : 0u;
    }
    return d;
}

unsigned Permutation::major_index() const noexcept
{
    unsigned m = 0;
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        if (values[i] > values[i + 1]) {
            m += static_cast<unsigned>(i) + 1;
        }
    }
    return m;
}

MultiSeries carlitz_eulerian_oracle(unsigned n, Var tvar, Var qvar, const Truncation &tr)
{
    if (n < 1 || n > 7) {
        throw std::invalid_argument("permutation oracle supports 1 <= n <= 7");
    }
    Permutation sigma;
    sigma.values.resize(n);
    std::iota(sigma.values.begin(), sigma.values.end(), 1u);
    std::vector<MultiSeries::Term> terms;
    do {
        terms.emplace_back(MultiSeries::pack(exps({{tvar, sigma.descents()}, {qvar, sigma.major_index()}})),
                           Rational(1));
    } while (std::next_permutation(sigma.values.begin(), sigma.values.end()));
    return MultiSeries::from_terms(std::move(terms), tr);
}

MultiSeries eulerian(unsigned n, Var tvar, const Truncation &tr)
{
    const Truncation work = Truncation{}.with(tvar, std::max(n, 1u));
    const auto t_minus_one = MultiSeries::from_terms(
        {{MultiSeries::pack(exps({{tvar, 1}})), Rational(1)}, {0, Rational(-1)}}, work);

    std::vector<MultiSeries> table{MultiSeries::constant(1, work)};
    for (unsigned m = 1; m <= n; ++m) {
        MultiSeries acc(work);
        mpz_class binom = 1;
        for (unsigned k = 0; k < m; ++k) {
            acc += pow(t_minus_one, m - k - 1) * table[k] * Rational(binom);
            binom = binom * (m - k) / (k + 1);
        }
        table.push_back(std::move(acc));
    }
    return MultiSeries::from_terms(table[n].terms(), tr);
}

MultiSeries homogeneous_sym(unsigned k, std::span<const MultiSeries> args, const Truncation &tr)
{
    // h[d] holds h_d over the prefix processed so far:
    //   h_d(x_1..x_j) = h_d(x_1..x_{j-1}) + x_j h_{d-1}(x_1..x_j).
    std::vector<MultiSeries> h(k + 1, MultiSeries(tr));
    h[0] = MultiSeries::constant(1, tr);
    for (const auto &x : args) {
        for (unsigned d = 1; d <= k; ++d) {
            h[d] += mul(x, h[d - 1]);
        }
    }
    return h[k];
}

Rational divided_difference(const AlphabetFunction &f, std::span<const Rational> alphabet, std::size_t i)
{
    if (i + 1 >= alphabet.size()) {
        throw std::out_of_range("divided difference index beyond alphabet");
    }
    if (alphabet[i] == alphabet[i + 1]) {
        throw DegenerateAlphabet("divided difference over equal letters a_" + std::to_string(i) + " = a_"
                                 + std::to_string(i + 1));
    }
    std::vector<Rational> swapped(alphabet.begin(), alphabet.end());
    std::swap(swapped[i], swapped[i + 1]);
    return (f(alphabet) - f(swapped)) / (alphabet[i] - alphabet[i + 1]);
}

AlphabetFunction divided_difference(AlphabetFunction f, std::size_t i)
{
    return [f = std::move(f), i](std::span<const Rational> alphabet) { return divided_difference(f, alphabet, i); };
}

AlphabetFunction divided_differences(AlphabetFunction f, std::size_t count)
{
    for (std::size_t i = 0; i < count; ++i) {
        f = divided_difference(std::move(f), i);
    }
    return f;
}

} // namespace qdiv
