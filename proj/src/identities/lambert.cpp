// Lambert-series expansions: Liu, Agarwal, the Carlitz-Eulerian
// generalisations in p and their p = 1 and a = +-1 cases, and the binomial
// variant with its displayed small cases.

#include "kit.hpp"

#include <gmpxx.h>

namespace qdiv::kit
{

namespace
{

constexpr Var q = Var::q;
constexpr Var p = Var::p;
constexpr Var a = Var::a;

using Weight = std::function<MultiSeries(long n)>;

Rational power(long n, long j)
{
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), mpz_class(n).get_mpz_t(), static_cast<unsigned long>(j));
    return Rational(r);
}

MultiSeries two_terms(const Monomial &first, const Monomial &second, const Truncation &tr)
{
    auto s = MultiSeries::from_monomial(first, tr);
    s += MultiSeries::from_monomial(second, tr);
    return s;
}

auto u32(long v)
{
    return static_cast<std::uint32_t>(v);
}

// sum_{n>=1} w(n) a q^n / (1 - a q^n)
long add_lambert_a(Side &side, const Weight &w)
{
    return add_monotone(side, 1, [&](long n) {
        auto body = div_one_minus(w(n), mono(1, {{a, 1}, {q, u32(n)}}));
        return Summand{body, shift({{a, 1}, {q, n}})};
    });
}

// sum_{n>=1} w(n) (1 - a q^{2n}) a^n q^{n^2} / ((1 - q^n)(1 - a q^n))
long add_liu_sum(Side &side, const Weight &w)
{
    return add_monotone(side, 1, [&](long n) {
        auto body = mul_one_minus(w(n), mono(1, {{a, 1}, {q, u32(2 * n)}}));
        body = div_one_minus(body, mono(q, u32(n)));
        body = div_one_minus(body, mono(1, {{a, 1}, {q, u32(n)}}));
        return Summand{body, shift({{a, n}, {q, n * n}})};
    });
}

// c * sum_{n>=1} w(n) P(q^n) a^n q^{n^2 + s n} / (1 - q^n)^pow, with P given
// by its integer coefficients.
long add_displayed(Side &side, const Rational &c, const std::function<Rational(long)> &w,
                   const std::vector<long> &poly, long s, unsigned pow)
{
    const Truncation &tr = side.truncation();
    return add_monotone(side, 1, [&](long n) {
        MultiSeries body(tr);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            body += MultiSeries::from_monomial(mono(Rational(poly[i]), {{q, u32(n * static_cast<long>(i))}}), tr);
        }
        body = div_geometric(body * w(n), q, u32(n), pow);
        return Summand{body, shift({{a, n}, {q, n * n + s * n}}), c};
    });
}

// [n]_p^j in the bibasic case, n^j at p = 1.
struct Family {
    bool bibasic;

    MultiSeries weight(long n, long j, const Truncation &tr) const
    {
        if (bibasic) {
            return pow(q_integer(n, p, tr), static_cast<unsigned>(j));
        }
        return constant(power(n, j), tr);
    }

    // A_k(q^n; p) / (q^n; p)_{k+1}, or A_k(q^n) / (1 - q^n)^{k+1}.
    MultiSeries kernel(long k, long n, const Truncation &tr) const
    {
        if (bibasic) {
            auto body = carlitz_at(static_cast<unsigned>(k), p, q, u32(n), tr);
            return div_pochhammer(body, mono(q, u32(n)), mono(p), static_cast<unsigned>(k + 1));
        }
        return div_geometric(eulerian_at(static_cast<unsigned>(k), q, u32(n), tr), q, u32(n),
                             static_cast<unsigned>(k + 1));
    }

    // p^{kn} q^{n^2 + n}, without the a^n part.
    Shift kernel_offset(long k, long n) const
    {
        return bibasic ? shift({{p, k * n}, {q, n * n + n}}) : shift({{q, n * n + n}});
    }
};

Sides main_identity(const Family &f, long m, const Truncation &tr)
{
    Side lhs(tr), rhs(tr);
    long stop = add_lambert_a(lhs, [&](long n) { return f.weight(n, m, tr); });
    stop = std::max(stop, add_liu_sum(rhs, [&](long n) { return f.weight(n, m, tr); }));
    for (long k = 1; k <= m; ++k) {
        const Rational c = binomial(m, k);
        stop = std::max(stop, add_monotone(rhs, 1, [&](long n) {
                            auto body = mul(f.weight(n, m - k, tr), f.kernel(k, n, tr));
                            auto off = f.kernel_offset(k, n);
                            off[index_of(a)] += n;
                            return Summand{body, off, c};
                        }));
    }
    return finish(lhs, rhs, stop);
}

// The a = 1 and a = -1 cases, the latter with both sides negated.
Sides signed_identity(const Family &f, long m, long sgn, const Truncation &tr)
{
    Side lhs(tr), rhs(tr);
    const bool plus = sgn > 0;
    auto eps = [&](long n) { return plus ? Rational(1) : sign(n - 1); };
    long stop = add_monotone(lhs, 1, [&](long n) {
        const Monomial qn = plus ? mono(q, u32(n)) : mono(Rational(-1), {{q, u32(n)}});
        return Summand{div_one_minus(f.weight(n, m, tr), qn), shift({{q, n}})};
    });
    stop = std::max(stop, add_monotone(rhs, 1, [&](long n) {
                        // (1 + q^n)/(1 - q^n), or (1 + q^{2n})/(1 - q^{2n}) for a = -1
                        const long d = plus ? n : 2 * n;
                        auto body = two_terms(mono(1, {}), mono(q, u32(d)), tr) * f.weight(n, m, tr);
                        body = div_one_minus(body, mono(q, u32(d)));
                        return Summand{body, shift({{q, n * n}}), eps(n)};
                    }));
    for (long k = 1; k <= m; ++k) {
        const Rational c = binomial(m, k);
        stop = std::max(stop, add_monotone(rhs, 1, [&](long n) {
                            auto body = mul(f.weight(n, m - k, tr), f.kernel(k, n, tr));
                            return Summand{body, f.kernel_offset(k, n), c * eps(n)};
                        }));
    }
    return finish(lhs, rhs, stop);
}

void check_sign(long s)
{
    require(s == 1 || s == -1, "sign = 1 or -1");
}

} // namespace

Sides build_liu(const Params &, const Truncation &tr)
{
    Side lhs(tr), rhs(tr);
    const Weight unit = [&](long) { return one(tr); };
    const long stop = std::max(add_lambert_a(lhs, unit), add_liu_sum(rhs, unit));
    return finish(lhs, rhs, stop);
}

Sides build_agarwal(const Params &, const Truncation &tr)
{
    constexpr Var t = Var::t;
    constexpr Var x = Var::x;
    Side lhs(tr), rhs(tr);
    long stop = add_monotone(lhs, 0, [&](long n) {
        return Summand{div_one_minus(one(tr), mono(1, {{x, 1}, {q, u32(n)}})), shift({{t, n}})};
    });
    stop = std::max(stop, add_monotone(rhs, 0, [&](long n) {
                        auto body = two_terms(mono(1, {}), mono(-1, {{x, 1}, {t, 1}, {q, u32(2 * n)}}), tr);
                        body = div_one_minus(body, mono(1, {{x, 1}, {q, u32(n)}}));
                        body = div_one_minus(body, mono(1, {{t, 1}, {q, u32(n)}}));
                        return Summand{body, shift({{x, n}, {t, n}, {q, n * n}})};
                    }));
    return finish(lhs, rhs, stop);
}

Sides build_main1(const Params &ps, const Truncation &tr)
{
    const long m = param(ps, "m");
    require(m >= 0, "m >= 0");
    return main_identity(Family{true}, m, tr);
}

Sides build_main2(const Params &ps, const Truncation &tr)
{
    const long m = param(ps, "m");
    require(m >= 0, "m >= 0");
    return main_identity(Family{false}, m, tr);
}

Sides build_apm1(const Params &ps, const Truncation &tr)
{
    const long m = param(ps, "m");
    const long s = param(ps, "sign");
    require(m >= 0, "m >= 0");
    check_sign(s);
    return signed_identity(Family{true}, m, s, tr);
}

Sides build_p1(const Params &ps, const Truncation &tr)
{
    const long m = param(ps, "m");
    const long s = param(ps, "sign");
    require(m >= 0, "m >= 0");
    check_sign(s);
    return signed_identity(Family{false}, m, s, tr);
}

Sides build_m123(const Params &ps, const Truncation &tr)
{
    const long m = param(ps, "m");
    require(1 <= m && m <= 3, "m in {1, 2, 3}");
    Side lhs(tr), rhs(tr);
    auto npow = [](long j) { return [j](long n) { return power(n, j); }; };
    long stop = add_lambert_a(lhs, [&](long n) { return constant(power(n, m), tr); });
    stop = std::max(stop, add_liu_sum(rhs, [&](long n) { return constant(power(n, m), tr); }));
    switch (m) {
    case 1:
        stop = std::max(stop, add_displayed(rhs, 1, npow(0), {1}, 1, 2));
        break;
    case 2:
        stop = std::max(stop, add_displayed(rhs, 2, npow(1), {1}, 1, 2));
        stop = std::max(stop, add_displayed(rhs, 1, npow(0), {1, 1}, 1, 3));
        break;
    default:
        stop = std::max(stop, add_displayed(rhs, 3, npow(2), {1}, 1, 2));
        stop = std::max(stop, add_displayed(rhs, 3, npow(1), {1, 1}, 1, 3));
        stop = std::max(stop, add_displayed(rhs, 1, npow(0), {1, 4, 1}, 1, 4));
        break;
    }
    return finish(lhs, rhs, stop);
}

namespace
{

auto choose(long j)
{
    return [j](long n) { return binomial(n, j); };
}

// Left side and first right-hand sum, weighted by C(n, m).
long binomial_lhs_and_first(long m, const Truncation &tr, Side &lhs, Side &rhs)
{
    const Weight w = [&](long n) { return constant(binomial(n, m), tr); };
    return std::max(add_lambert_a(lhs, w), add_liu_sum(rhs, w));
}

} // namespace

Sides build_main3(const Params &ps, const Truncation &tr)
{
    const long m = param(ps, "m");
    require(m >= 0, "m >= 0");
    Side lhs(tr), rhs(tr);
    long stop = binomial_lhs_and_first(m, tr, lhs, rhs);
    for (long k = 1; k <= m; ++k) {
        stop = std::max(stop, add_displayed(rhs, 1, choose(m - k), {1}, k, static_cast<unsigned>(k + 1)));
    }
    return finish(lhs, rhs, stop);
}

Sides build_m23(const Params &ps, const Truncation &tr)
{
    const long m = param(ps, "m");
    require(m == 2 || m == 3, "m in {2, 3}");
    Side lhs(tr), rhs(tr);
    long stop = binomial_lhs_and_first(m, tr, lhs, rhs);
    if (m == 2) {
        stop = std::max(stop, add_displayed(rhs, 1, choose(1), {1}, 1, 2));
        stop = std::max(stop, add_displayed(rhs, 1, choose(0), {1}, 2, 3));
    } else {
        stop = std::max(stop, add_displayed(rhs, 1, choose(2), {1}, 1, 2));
        stop = std::max(stop, add_displayed(rhs, 1, choose(1), {1}, 2, 3));
        stop = std::max(stop, add_displayed(rhs, 1, choose(0), {1}, 3, 4));
    }
    return finish(lhs, rhs, stop);
}

} // namespace qdiv::kit
