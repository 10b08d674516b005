// Single-base identities in q: Kluyver/Uchimura, Van Hamme, Uchimura,
// Dilcher, Prodinger, the FLZ generalisation and their r-shifted
// generalisations.

#include "kit.hpp"

namespace qdiv::kit
{

namespace
{

constexpr Var q = Var::q;

// q^k / (1 - q^k) for k = 1..n.
std::vector<MultiSeries> lambert_terms(long n, const Truncation &tr)
{
    std::vector<MultiSeries> ys;
    for (long k = 1; k <= n; ++k) {
        ys.push_back(lambert_term(k, tr));
    }
    return ys;
}

MultiSeries harmonic(long n, const Truncation &tr)
{
    MultiSeries s(tr);
    for (auto &y : lambert_terms(n, tr)) {
        s += y;
    }
    return s;
}

// sum_{k=1}^n (-1)^{k-1} [n,k] q^{C(k,2) + k*j} / (1 - q^k)^j, with the
// exponent offset k*(j - r) relative to C(k,2) supplied through `excess`.
void add_dilcher_sum(Side &side, long n, long power, long excess, const Rational &c, const Truncation &tr)
{
    for (long k = 1; k <= n; ++k) {
        auto body = div_geometric(qbin(n, k, tr), q, static_cast<std::uint32_t>(k), static_cast<unsigned>(power));
        side.add(body, shift({{q, choose2(k) + k * excess}}), c * sign(k - 1));
    }
}

} // namespace

Sides build_u81(const Params &, const Truncation &tr)
{
    Side lhs(tr), rhs(tr);
    const long stop_l = lhs.add_infinite(
        1, [&](long k) { return outside(tr, {{q, tri(k)}}); },
        [&](long k) {
            auto body = div_geometric(div_qfact(one(tr), q, k), q, static_cast<std::uint32_t>(k));
            return Summand{body, shift({{q, tri(k)}}), sign(k - 1)};
        });
    const long stop_r = rhs.add_infinite(
        1, [&](long k) { return outside(tr, {{q, k}}); },
        [&](long k) { return Summand{lambert_term(k, tr)}; });
    return finish(lhs, rhs, std::max(stop_l, stop_r));
}

Sides build_hamme(const Params &p, const Truncation &tr)
{
    const long n = param(p, "n");
    require(n >= 0, "n >= 0");
    Side lhs(tr), rhs(tr);
    for (long k = 1; k <= n; ++k) {
        lhs.add(div_geometric(qbin(n, k, tr), q, static_cast<std::uint32_t>(k)), shift({{q, tri(k)}}), sign(k - 1));
    }
    rhs.add(harmonic(n, tr));
    return finish(lhs, rhs);
}

Sides build_uch(const Params &p, const Truncation &tr)
{
    const long n = param(p, "n");
    const long m = param(p, "m");
    require(n >= 0 && m >= 0, "n, m >= 0");
    Side lhs(tr), rhs(tr);
    for (long k = 1; k <= n; ++k) {
        lhs.add(div_geometric(qbin(n, k, tr), q, static_cast<std::uint32_t>(k + m)), shift({{q, tri(k)}}),
                sign(k - 1));
        rhs.add(mul(lambert_term(k, tr), inverse(qbin(k + m, m, tr))));
    }
    return finish(lhs, rhs);
}

Sides build_dilch(const Params &p, const Truncation &tr)
{
    const long m = param(p, "m");
    const long n = param(p, "n");
    require(m >= 0 && n >= 1, "m >= 0, n >= 1");
    Side lhs(tr), rhs(tr);
    add_dilcher_sum(lhs, n, m, m, 1, tr);
    const auto ys = lambert_terms(n, tr);
    rhs.add(homogeneous_sym(static_cast<unsigned>(m), ys, tr));
    return finish(lhs, rhs);
}

Sides build_prodinger(const Params &p, const Truncation &tr)
{
    const long n = param(p, "n");
    const long m = param(p, "m");
    require(n >= 0 && 0 <= m && m <= n, "0 <= m <= n");
    Side lhs(tr), rhs(tr);
    const auto bin_nm = qbin(n, m, tr);
    for (long k = 0; k <= n; ++k) {
        if (k == m) {
            continue;
        }
        lhs.add(mul(qbin(n, k, tr), geometric_factor(k - m, tr)), shift({{q, tri(k)}}), sign(k - 1));
        // q^{C(m+1,2)} q^{k-m} stays non-negative: C(m+1,2) - m = C(m,2).
        rhs.add(mul(bin_nm, geometric_factor(k - m, tr)), shift({{q, tri(m) + k - m}}), sign(m));
    }
    return finish(lhs, rhs);
}

Sides build_flz(const Params &p, const Truncation &tr)
{
    const long i = param(p, "i");
    const long n = param(p, "n");
    const long m = param(p, "m");
    require(1 <= i && i <= n && m >= 1, "1 <= i <= n, m >= 1");
    constexpr Var z = Var::z;
    Side lhs(tr), rhs(tr);
    for (long k = i; k <= n; ++k) {
        auto body = mul(qbin(n, k, tr), qbin(k, i, tr));
        for (long j = 0; j < m; ++j) {
            body = div_one_minus(body, mono(1, {{z, 1}, {q, static_cast<std::uint32_t>(k)}}));
        }
        lhs.add(body, shift({{q, choose2(k - i) + k * m}}), sign(k - i));
    }
    // q^i (zq;q)_{i-1} (q;q)_n / ((q;q)_i (zq;q)_n) = q^i (q;q)_n / ((q;q)_i (zq^i;q)_{n-i+1}).
    // With (q;q)_{i-1} in place of (zq;q)_{i-1} the two sides differ once i >= 2.
    auto prefactor = pochhammer(mono(q), mono(q), static_cast<unsigned>(n), tr);
    prefactor = div_qfact(prefactor, q, i);
    prefactor = div_pochhammer(prefactor, mono(1, {{z, 1}, {q, static_cast<std::uint32_t>(i)}}), mono(q),
                               static_cast<unsigned>(n - i + 1));
    std::vector<MultiSeries> args;
    for (long j = i; j <= n; ++j) {
        args.push_back(div_one_minus(monomial(mono(q, static_cast<std::uint32_t>(j)), tr),
                                     mono(1, {{z, 1}, {q, static_cast<std::uint32_t>(j)}})));
    }
    rhs.add(mul(prefactor, homogeneous_sym(static_cast<unsigned>(m - 1), args, tr)), shift({{q, i}}));
    return finish(lhs, rhs);
}

Sides build_rdiv(const Params &p, const Truncation &tr)
{
    const long n = param(p, "n");
    const long r = param(p, "r");
    require(n >= 0 && 0 <= r && r <= n, "0 <= r <= n");
    Clearing cl;
    for (long k = 1; k <= n; ++k) {
        cl.need(q, tri(k) - r * k);
    }
    Side lhs(tr, cl), rhs(tr, cl);
    for (long k = 1; k <= n; ++k) {
        lhs.add(div_geometric(qbin(n, k, tr), q, static_cast<std::uint32_t>(k)), shift({{q, tri(k) - r * k}}),
                sign(k - 1));
    }
    rhs.add(constant(r, tr));
    rhs.add(harmonic(n, tr));
    return finish(lhs, rhs);
}

Sides build_ru81(const Params &p, const Truncation &tr)
{
    const long r = param(p, "r");
    require(r >= 0, "r >= 0");
    // max_k (r k - k(k+1)/2) is attained at k = r.
    Clearing cl;
    cl.need(q, tri(r) - r * r);
    const long lift = cl.amount()[index_of(q)];
    Side lhs(tr, cl), rhs(tr, cl);
    // The exponent k(k+1)/2 - r k + lift is increasing for k >= r.
    const long stop_l = lhs.add_infinite(
        1, [&](long k) { return k >= r && outside(tr, {{q, tri(k) - r * k + lift}}); },
        [&](long k) {
            auto body = div_geometric(div_qfact(one(tr), q, k), q, static_cast<std::uint32_t>(k));
            return Summand{body, shift({{q, tri(k) - r * k}}), sign(k - 1)};
        });
    rhs.add(constant(r, tr));
    const long stop_r = rhs.add_infinite(
        1, [&](long k) { return outside(tr, {{q, k + lift}}); },
        [&](long k) { return Summand{lambert_term(k, tr)}; });
    return finish(lhs, rhs, std::max(stop_l, stop_r));
}

Sides build_prodnew(const Params &p, const Truncation &tr)
{
    const long n = param(p, "n");
    const long m = param(p, "m");
    const long r = param(p, "r");
    require(n >= 0 && 0 <= m && m <= n && 0 <= r && r <= n, "0 <= m, r <= n");
    Clearing cl;
    cl.need(q, tri(m) - r * m);
    for (long k = 0; k <= n; ++k) {
        cl.need(q, tri(k) - r * k);
        cl.need(q, tri(m) - r * m + k - m);
    }
    Side lhs(tr, cl), rhs(tr, cl);
    const auto bin_nm = qbin(n, m, tr);
    rhs.add(bin_nm, shift({{q, tri(m) - r * m}}), sign(m) * r);
    for (long k = 0; k <= n; ++k) {
        if (k == m) {
            continue;
        }
        lhs.add(mul(qbin(n, k, tr), geometric_factor(k - m, tr)), shift({{q, tri(k) - r * k}}), sign(k - 1));
        rhs.add(mul(bin_nm, geometric_factor(k - m, tr)), shift({{q, tri(m) - r * m + k - m}}), sign(m));
    }
    return finish(lhs, rhs);
}

Sides build_dilchnew(const Params &p, const Truncation &tr)
{
    const long m = param(p, "m");
    const long n = param(p, "n");
    const long r = param(p, "r");
    require(m >= 1 && n >= 1 && 0 <= r && r <= m + n - 1, "m, n >= 1, 0 <= r <= m + n - 1");
    Clearing cl;
    for (long k = 1; k <= n; ++k) {
        cl.need(q, choose2(k) + k * (m - r));
    }
    Side lhs(tr, cl), rhs(tr, cl);
    add_dilcher_sum(lhs, n, m, m - r, 1, tr);
    const auto ys = lambert_terms(n, tr);
    for (long j = 0; j <= m; ++j) {
        const Rational c = binomial(r, m - j);
        if (sgn(c) != 0) {
            rhs.add(homogeneous_sym(static_cast<unsigned>(j), ys, tr), {}, c);
        }
    }
    return finish(lhs, rhs);
}

Sides build_dilchcor(const Params &p, const Truncation &tr)
{
    const long m = param(p, "m");
    const long n = param(p, "n");
    const long r = param(p, "r");
    require(m >= 1 && n >= 1 && 0 <= r && r <= m + n - 1, "m, n >= 1, 0 <= r <= m + n - 1");
    Clearing cl;
    for (long k = 1; k <= n; ++k) {
        cl.need(q, choose2(k) + k * (m - r));
    }
    Side lhs(tr, cl), rhs(tr, cl);
    add_dilcher_sum(lhs, n, m, m - r, 1, tr);
    for (long j = 0; j <= m; ++j) {
        const Rational c = binomial(r, m - j);
        if (sgn(c) != 0) {
            add_dilcher_sum(rhs, n, j, j, c, tr);
        }
    }
    return finish(lhs, rhs);
}

Sides build_qbt1(const Params &p, const Truncation &tr)
{
    const long n = param(p, "n");
    require(n >= 1, "n >= 1");
    Side lhs(tr), rhs(tr);
    add_dilcher_sum(lhs, n, 0, 0, 1, tr);
    rhs.add(one(tr));
    return finish(lhs, rhs);
}

} // namespace qdiv::kit
