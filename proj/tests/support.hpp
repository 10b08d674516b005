#pragma once

// Random generators and small independent oracles shared by the tests and
// the acceptance driver.

#include <qdiv/series.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace qdiv::testing
{

class Gen
{
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi)
    {
        return std::uniform_int_distribution<long>(lo, hi)(rng_);
    }

    Rational rational()
    {
        Rational r(integer(-9, 9), integer(1, 6));
        r.canonicalize();
        return r;
    }

    Rational nonzero_rational()
    {
        Rational r = rational();
        while (sgn(r) == 0) {
            r = rational();
        }
        return r;
    }

    // Random box with caps <= max_cap on up to `vars` of the variables.
    Truncation box(std::uint32_t max_cap = 8, std::size_t vars = 3)
    {
        Exponents caps{};
        for (std::size_t i = 0; i < vars; ++i) {
            caps[i] = static_cast<std::uint32_t>(integer(1, max_cap));
        }
        return Truncation(caps);
    }

    Exponents exponents(const Truncation &tr)
    {
        Exponents e{};
        for (Var v : all_vars) {
            e[index_of(v)] = static_cast<std::uint32_t>(integer(0, tr.cap(v)));
        }
        return e;
    }

    Monomial monomial(const Truncation &tr, bool allow_constant = true)
    {
        for (;;) {
            Monomial m{nonzero_rational(), exponents(tr)};
            if (allow_constant || !m.is_constant()) {
                return m;
            }
        }
    }

    // Up to max_terms random terms; with unit set the constant term is
    // nonzero.
    MultiSeries series(const Truncation &tr, std::size_t max_terms = 20, bool unit = false)
    {
        std::vector<MultiSeries::Term> terms;
        const auto count = static_cast<std::size_t>(integer(0, static_cast<long>(max_terms)));
        for (std::size_t i = 0; i < count; ++i) {
            terms.emplace_back(MultiSeries::pack(exponents(tr)), rational());
        }
        if (unit) {
            terms.emplace_back(MultiSeries::pack(Exponents{}), nonzero_rational());
        }
        auto s = MultiSeries::from_terms(std::move(terms), tr);
        if (unit && sgn(s.constant_term()) == 0) {
            s += MultiSeries::constant(1, tr);
        }
        return s;
    }

    std::mt19937_64 &engine()
    {
        return rng_;
    }

private:
    std::mt19937_64 rng_;
};

// Dense univariate polynomials in q, truncated at a fixed degree. Kept
// deliberately separate from MultiSeries so it can serve as an oracle.
class Dense
{
public:
    explicit Dense(std::size_t cap, Rational c = 0) : c_(cap + 1)
    {
        c_[0] = c;
    }

    static Dense monomial(std::size_t cap, std::size_t e, Rational c = 1)
    {
        Dense d(cap);
        if (e <= cap) {
            d.c_[e] = c;
        }
        return d;
    }

    std::size_t cap() const
    {
        return c_.size() - 1;
    }
    const Rational &operator[](std::size_t i) const
    {
        return c_[i];
    }

    Dense &operator+=(const Dense &o)
    {
        for (std::size_t i = 0; i < c_.size(); ++i) {
            c_[i] += o.c_[i];
        }
        return *this;
    }
    Dense &operator-=(const Dense &o)
    {
        for (std::size_t i = 0; i < c_.size(); ++i) {
            c_[i] -= o.c_[i];
        }
        return *this;
    }
    friend Dense operator*(const Dense &a, const Dense &b)
    {
        Dense r(a.cap());
        for (std::size_t i = 0; i <= a.cap(); ++i) {
            if (sgn(a.c_[i]) == 0) {
                continue;
            }
            for (std::size_t j = 0; i + j <= a.cap(); ++j) {
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }
    Dense scaled(const Rational &k) const
    {
        Dense r = *this;
        for (auto &c : r.c_) {
            c *= k;
        }
        return r;
    }

    // 1 / (1 - q^e), e >= 1, as the explicit geometric series.
    static Dense geometric(std::size_t cap, std::size_t e)
    {
        Dense d(cap);
        for (std::size_t i = 0; i <= cap; i += e) {
            d.c_[i] = 1;
        }
        return d;
    }

    // prod_{j=1}^{n} (1 - q^j)
    static Dense qfact(std::size_t cap, std::size_t n)
    {
        Dense d(cap, 1);
        for (std::size_t j = 1; j <= n; ++j) {
            d = d * (Dense(cap, 1) - monomial(cap, j));
        }
        return d;
    }

    friend Dense operator-(Dense a, const Dense &b)
    {
        a -= b;
        return a;
    }
    friend Dense operator+(Dense a, const Dense &b)
    {
        a += b;
        return a;
    }

    bool matches(const MultiSeries &s) const
    {
        for (std::size_t i = 0; i <= cap(); ++i) {
            if (s.coefficient(exps({{Var::q, static_cast<std::uint32_t>(i)}})) != c_[i]) {
                return false;
            }
        }
        return s.max_degree(Var::q) <= cap() && s.size() == nonzero_count();
    }

private:
    std::size_t nonzero_count() const
    {
        std::size_t n = 0;
        for (const auto &c : c_) {
            n += sgn(c) != 0;
        }
        return n;
    }

    std::vector<Rational> c_;
};

// Gaussian binomial by the q-Pascal recurrence, as a dense polynomial.
inline Dense gaussian(std::size_t cap, long n, long k)
{
    if (k < 0 || k > n) {
        return Dense(cap);
    }
    if (k == 0 || k == n) {
        return Dense(cap, 1);
    }
    return gaussian(cap, n - 1, k - 1) + Dense::monomial(cap, static_cast<std::size_t>(k)) * gaussian(cap, n - 1, k);
}

// Canonical form: sorted, unique keys, no zeros, every exponent in the box.
inline bool canonical(const MultiSeries &s)
{
    const auto &terms = s.terms();
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (sgn(terms[i].second) == 0 || !s.truncation().contains(MultiSeries::unpack(terms[i].first))) {
            return false;
        }
        if (i > 0 && terms[i - 1].first >= terms[i].first) {
            return false;
        }
    }
    return true;
}

} // namespace qdiv::testing
