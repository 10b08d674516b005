// The bibasic transformation in p and q, its corollaries, the infinite
// symmetric form, the two generalisations of Uchimura's identity and the
// partial-fraction expansion behind the second proof.

#include "kit.hpp"

namespace qdiv::kit
{

namespace
{

constexpr Var q = Var::q;
constexpr Var p = Var::p;
constexpr Var x = Var::x;

Shift offset_of(const Monomial &base, long e)
{
    Shift s{};
    for (std::size_t v = 0; v < num_vars; ++v) {
        s[v] = static_cast<long>(base.exps[v]) * e;
    }
    return s;
}

Shift operator+(Shift a, const Shift &b)
{
    for (std::size_t v = 0; v < num_vars; ++v) {
        a[v] += b[v];
    }
    return a;
}

// One half of the transformation:
//   sum_{k=from}^{m} (-1)^k A^{k(k+1)/2 + lin k}
//       / ((A;A)_k (A;A)_{m-k} (x^[with_x] A^k; B)_{n+1})
struct HalfSum {
    long m = 0;
    long n = 0;
    long lin = 0;
    Monomial base_a = mono(p);
    Monomial base_b = mono(q);
    bool with_x = true;
    long from = 0;

    void clear(Clearing &cl) const
    {
        for (long k = from; k <= m; ++k) {
            const auto off = offset_of(base_a, tri(k) + lin * k);
            for (auto v : all_vars) {
                cl.need(v, off[index_of(v)]);
            }
        }
    }

    void add_to(Side &side, const Rational &c = 1, const Shift &extra = {}) const
    {
        const Truncation &tr = side.truncation();
        for (long k = from; k <= m; ++k) {
            auto body = div_pochhammer(one(tr), base_a, base_a, static_cast<unsigned>(k));
            body = div_pochhammer(body, base_a, base_a, static_cast<unsigned>(m - k));
            Monomial first = pow(base_a, static_cast<std::uint32_t>(k));
            if (with_x) {
                first = first * mono(x);
            }
            body = div_pochhammer(body, first, base_b, static_cast<unsigned>(n + 1));
            side.add(body, offset_of(base_a, tri(k) + lin * k) + extra, c * sign(k));
        }
    }
};

// sum_{k=1}^{n} q^k (q;q)_{k-1} / (xq;q)_k
MultiSeries uchimura_tail(long n, const Truncation &tr)
{
    MultiSeries s(tr);
    for (long k = 1; k <= n; ++k) {
        auto body = pochhammer(mono(q), mono(q), static_cast<unsigned>(k - 1), tr);
        body = div_pochhammer(body, mono(1, {{x, 1}, {q, 1}}), mono(q), static_cast<unsigned>(k));
        s += mul_monomial(body, mono(q, static_cast<std::uint32_t>(k)));
    }
    return s;
}

MultiSeries div_both_factorials(const MultiSeries &s, Var a, long m, Var b, long n)
{
    return div_qfact(div_qfact(s, a, m), b, n);
}

MultiSeries harmonic(long n, const Truncation &tr, Var v)
{
    MultiSeries s(tr);
    for (long k = 1; k <= n; ++k) {
        s += lambert_term(k, tr, v);
    }
    return s;
}

void check_mnr(long m, long n, long r)
{
    require(m >= 0 && n >= 0 && 0 <= r && r <= m, "m, n >= 0, 0 <= r <= m");
}

} // namespace

Sides build_new(const Params &ps, const Truncation &tr)
{
    const long m = param(ps, "m");
    const long n = param(ps, "n");
    const long r = param(ps, "r");
    check_mnr(m, n, r);
    const HalfSum left{m, n, -r, mono(p), mono(q), true, 0};
    const HalfSum right{n, m, r, mono(q), mono(p), true, 0};
    Clearing cl;
    left.clear(cl);
    Side lhs(tr, cl), rhs(tr, cl);
    left.add_to(lhs);
    right.add_to(rhs, 1, shift({{x, r}}));
    return finish(lhs, rhs);
}

Sides build_newpf(const Params &ps, const Truncation &tr)
{
    const long m = param(ps, "m");
    const long n = param(ps, "n");
    const long r = param(ps, "r");
    check_mnr(m, n, r);
    const HalfSum left{m, n, -r, mono(p), mono(q), true, 0};
    Clearing cl;
    left.clear(cl);
    Side lhs(tr, cl), rhs(tr, cl);
    left.add_to(lhs);
    const long stop = rhs.add_infinite(
        0, [&](long j) { return outside(tr, {{x, r + j}}); },
        [&](long j) {
            auto body = mul(qbin(m + j, m, tr, p), qbin(n + r + j, n, tr, q));
            return Summand{body, shift({{x, r + j}})};
        });
    return finish(lhs, rhs, stop);
}

Sides build_new2(const Params &ps, const Truncation &tr)
{
    const long m = param(ps, "m");
    const long n = param(ps, "n");
    require(m >= 0 && n >= 0, "m, n >= 0");
    Side lhs(tr), rhs(tr);
    HalfSum{m, n, 0, mono(p), mono(q), true, 0}.add_to(lhs);
    HalfSum{n, m, 0, mono(q), mono(p), true, 0}.add_to(rhs);
    return finish(lhs, rhs);
}

Sides build_sym(const Params &, const Truncation &tr)
{
    // b is carried by the variable z.
    constexpr Var a = Var::a;
    constexpr Var b = Var::z;

    // Summand k of one side, with (base1/c; base1)_k c^k cleared to
    // prod_{j<k} (c - base1^{j+1}):
    //   prod_j (c - u^{j+1}) (x d u^k; w)_inf / ((u;u)_k (x u^k; w)_inf)
    auto side = [&](Var c, Var d, Var u, Var w, Side &out) {
        // prod_{j<k}(c - u^{j+1}) vanishes in the box once k exceeds
        // cap(c) + s, where s is the largest count of distinct positive
        // u-exponents whose sum fits cap(u).
        long s = 0;
        while (tri(s + 1) <= static_cast<long>(tr.cap(u))) {
            ++s;
        }
        const long last = static_cast<long>(tr.cap(c)) + s;
        MultiSeries poly = one(tr);
        auto stop = out.add_infinite(
            0, [&](long k) { return k > last; },
            [&](long k) {
                if (k > 0) {
                    const auto factor = MultiSeries::from_terms(
                        {{MultiSeries::pack(exps({{c, 1}})), Rational(1)},
                         {MultiSeries::pack(exps({{u, static_cast<std::uint32_t>(k)}})), Rational(-1)}},
                        tr);
                    poly = mul(poly, factor);
                }
                auto body = div_qfact(poly, u, k);
                const auto uk = static_cast<std::uint32_t>(k);
                body = mul_pochhammer_inf(body, mono(1, {{x, 1}, {d, 1}, {u, uk}}), mono(w));
                body = div_pochhammer_inf(body, mono(1, {{x, 1}, {u, uk}}), mono(w));
                return Summand{body};
            });
        return stop;
    };

    Side lsum(tr), rsum(tr);
    const long stop_l = side(a, b, p, q, lsum);
    const long stop_r = side(b, a, q, p, rsum);

    auto pre_l = div_pochhammer_inf(pochhammer_inf(mono(a), mono(p), tr), mono(p), mono(p));
    auto pre_r = div_pochhammer_inf(pochhammer_inf(mono(b), mono(q), tr), mono(q), mono(q));
    Side lhs(tr), rhs(tr);
    lhs.add(mul(pre_l, lsum.value()));
    rhs.add(mul(pre_r, rsum.value()));
    return finish(lhs, rhs, std::max(stop_l, stop_r));
}

Sides build_qsq(const Params &, const Truncation &tr)
{
    const auto q2 = mono(q, 2);
    Side lhs(tr), rhs(tr);
    long stop = lhs.add_infinite(
        0, [&](long k) { return outside(tr, {{q, k * (k + 1)}}); },
        [&](long k) {
            auto body = pochhammer(mono(q), q2, static_cast<unsigned>(k + 1), tr);
            return Summand{body, shift({{q, k * (k + 1)}}), sign(k)};
        });
    stop = std::max(stop, rhs.add_infinite(
                              0, [&](long k) { return outside(tr, {{q, (2 * k + 1) * k}}); },
                              [&](long k) {
                                  auto body = div_pochhammer(one(tr), mono(q), q2, static_cast<unsigned>(k));
                                  return Summand{body, shift({{q, (2 * k + 1) * k}})};
                              }));
    Side tail(tr);
    stop = std::max(stop, tail.add_infinite(
                              0, [&](long k) { return outside(tr, {{q, (2 * k + 1) * (k + 1)}}); },
                              [&](long k) {
                                  auto body = div_qfact(one(tr), q, 2, k);
                                  return Summand{body, shift({{q, (2 * k + 1) * (k + 1)}})};
                              }));
    auto pre = div_pochhammer_inf(pochhammer_inf(q2, q2, tr), mono(q), q2);
    rhs.add(mul(pre, tail.value()), {}, -1);
    return finish(lhs, rhs, stop);
}

namespace
{

Sides newnew(long m, long n, long r, const Truncation &tr)
{
    const HalfSum first{m, n, -r, mono(p), mono(q), false, 1};
    const HalfSum second{n, m, r, mono(q), mono(p), false, 1};
    Clearing cl;
    first.clear(cl);
    second.clear(cl);
    Side lhs(tr, cl), rhs(tr, cl);
    first.add_to(lhs);
    second.add_to(lhs, -1);
    auto inner = constant(-r, tr) + harmonic(n, tr, q) - harmonic(m, tr, p);
    rhs.add(div_both_factorials(inner, p, m, q, n));
    return finish(lhs, rhs);
}

} // namespace

Sides build_newnew(const Params &ps, const Truncation &tr)
{
    const long m = param(ps, "m");
    const long n = param(ps, "n");
    const long r = param(ps, "r");
    require(m >= 0 && n >= 0 && -n <= r && r <= m, "m, n >= 0, -n <= r <= m");
    return newnew(m, n, r, tr);
}

Sides build_cornew(const Params &ps, const Truncation &tr)
{
    const long m = param(ps, "m");
    const long n = param(ps, "n");
    require(m >= 0 && n >= 0, "m, n >= 0");
    return newnew(m, n, 0, tr);
}

Sides build_mnpq(const Params &ps, const Truncation &tr)
{
    const long n = param(ps, "n");
    const long r = param(ps, "r");
    require(n >= 0 && -n <= r && r <= n, "n >= 0, |r| <= n");
    const HalfSum minus{n, n, -r, mono(q), mono(q), false, 1};
    const HalfSum plus{n, n, r, mono(q), mono(q), false, 1};
    Clearing cl;
    minus.clear(cl);
    plus.clear(cl);
    Side lhs(tr, cl), rhs(tr, cl);
    // (-1)^{k-1} (q^{..-rk} - q^{..+rk}) = -(-1)^k q^{..-rk} + (-1)^k q^{..+rk}
    minus.add_to(lhs, -1);
    plus.add_to(lhs, 1);
    rhs.add(div_qfact(div_qfact(one(tr), q, n), q, n), {}, r);
    return finish(lhs, rhs);
}

Sides build_long(const Params &ps, const Truncation &tr)
{
    const long n = param(ps, "n");
    require(n >= 0, "n >= 0");
    const auto q2 = mono(q, 2);
    Side lhs(tr), rhs(tr);
    HalfSum{n, n, 0, q2, mono(q), false, 1}.add_to(lhs);
    HalfSum{n, n, 0, mono(q), q2, false, 1}.add_to(lhs, -1);
    MultiSeries odd(tr);
    for (long k = 1; k <= n; ++k) {
        odd += mul_monomial(geometric_factor(2 * k, tr), mono(q, static_cast<std::uint32_t>(k)));
    }
    rhs.add(div_qfact(div_qfact(odd, q, 2, n), q, n));
    return finish(lhs, rhs);
}

Sides build_longinf(const Params &, const Truncation &tr)
{
    const auto q2 = mono(q, 2);
    Side lhs(tr), rhs(tr), tail(tr);
    long stop = lhs.add_infinite(
        1, [&](long k) { return outside(tr, {{q, k * (k + 1)}}); },
        [&](long k) {
            auto body = pochhammer(mono(q), q2, static_cast<unsigned>(k), tr);
            body = div_geometric(body, q, static_cast<std::uint32_t>(2 * k));
            return Summand{body, shift({{q, k * (k + 1)}}), sign(k)};
        });
    stop = std::max(stop, lhs.add_infinite(
                              1, [&](long k) { return outside(tr, {{q, (2 * k + 1) * k}}); },
                              [&](long k) {
                                  auto body = div_pochhammer(one(tr), mono(q), q2, static_cast<unsigned>(k));
                                  body = div_geometric(body, q, static_cast<std::uint32_t>(2 * k));
                                  return Summand{body, shift({{q, (2 * k + 1) * k}}), Rational(-1)};
                              }));
    stop = std::max(stop, tail.add_infinite(
                              0, [&](long k) { return outside(tr, {{q, (2 * k + 1) * (k + 1)}}); },
                              [&](long k) {
                                  auto body = div_qfact(one(tr), q, 2, k);
                                  body = div_geometric(body, q, static_cast<std::uint32_t>(2 * k + 1));
                                  return Summand{body, shift({{q, (2 * k + 1) * (k + 1)}})};
                              }));
    auto pre = div_pochhammer_inf(pochhammer_inf(q2, q2, tr), mono(q), q2);
    lhs.add(mul(pre, tail.value()));
    stop = std::max(stop, rhs.add_infinite(
                              1, [&](long k) { return outside(tr, {{q, k}}); },
                              [&](long k) {
                                  return Summand{geometric_factor(2 * k, tr), shift({{q, k}})};
                              }));
    return finish(lhs, rhs, stop);
}

Sides build_odddiv(const Params &, const Truncation &tr)
{
    Side lhs(tr), rhs(tr);
    long stop = lhs.add_infinite(
        1, [&](long k) { return outside(tr, {{q, k}}); },
        [&](long k) { return Summand{geometric_factor(2 * k, tr), shift({{q, k}})}; });
    stop = std::max(stop, rhs.add_infinite(
                              1, [&](long k) { return outside(tr, {{q, 2 * k - 1}}); },
                              [&](long k) { return Summand{lambert_term(2 * k - 1, tr)}; }));
    return finish(lhs, rhs, stop);
}

Sides build_uch001(const Params &ps, const Truncation &tr)
{
    const long m = param(ps, "m");
    const long n = param(ps, "n");
    const long r = param(ps, "r");
    check_mnr(m, n, r);
    const HalfSum first{m, n, -r, mono(q), mono(q), true, 1};
    const HalfSum second{n, m, r, mono(q), mono(q), true, 1};
    Clearing cl;
    first.clear(cl);
    Side lhs(tr, cl), rhs(tr, cl);
    first.add_to(lhs);
    second.add_to(lhs, -1, shift({{x, r}}));
    // (1 - x^r)/(1 - x) = 1 + x + ... + x^{r-1}
    MultiSeries inner = r > 0 ? -q_integer(r, x, tr) : MultiSeries(tr);
    inner += uchimura_tail(n, tr);
    inner -= mul_monomial(uchimura_tail(m, tr), mono(x, static_cast<std::uint32_t>(r)));
    rhs.add(div_both_factorials(inner, q, m, q, n));
    return finish(lhs, rhs);
}

Sides build_uch002(const Params &ps, const Truncation &tr)
{
    const long m = param(ps, "m");
    const long n = param(ps, "n");
    require(m >= 0 && n >= 0, "m, n >= 0");
    Side lhs(tr), rhs(tr);
    HalfSum{m, n, n, mono(q), mono(q), true, 1}.add_to(lhs);
    HalfSum{n, m, m, mono(q), mono(q), true, 1}.add_to(lhs, -1);
    rhs.add(div_both_factorials(uchimura_tail(n, tr) - uchimura_tail(m, tr), q, m, q, n));
    return finish(lhs, rhs);
}

Sides build_pf12(const Params &ps, const Truncation &tr)
{
    const long n = param(ps, "n");
    require(n >= 0, "n >= 0");
    Side lhs(tr), rhs(tr);
    lhs.add(mul_one_minus(uchimura_tail(n, tr), mono(x)));
    rhs.add(one(tr));
    rhs.add(div_pochhammer(pochhammer(mono(q), mono(q), static_cast<unsigned>(n), tr), mono(1, {{x, 1}, {q, 1}}),
                           mono(q), static_cast<unsigned>(n)),
            {}, -1);
    return finish(lhs, rhs);
}

Sides build_star(const Params &ps, const Truncation &tr)
{
    const long n = param(ps, "n");
    require(n >= 0, "n >= 0");
    constexpr Var z = Var::z;
    Side lhs(tr), rhs(tr);
    lhs.add(one(tr), shift({{x, n}, {q, tri(n)}}));
    for (long k = 0; k <= n; ++k) {
        MultiSeries body = div_both_factorials(one(tr), q, k, q, n - k);
        for (long i = 1; i <= n + 1; ++i) {
            if (i == k + 1) {
                continue;
            }
            const auto factor = MultiSeries::from_terms(
                {{MultiSeries::pack(exps({{z, 1}})), Rational(1)},
                 {MultiSeries::pack(exps({{x, 1}, {q, static_cast<std::uint32_t>(i)}})), Rational(-1)}},
                tr);
            body = mul(body, factor);
        }
        rhs.add(body, shift({{q, choose2(n - k)}}), sign(k));
    }
    return finish(lhs, rhs);
}

} // namespace qdiv::kit
