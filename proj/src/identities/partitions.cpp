// Divisor counts against signed smallest-part sums of distinct-part
// partitions, both as series and coefficientwise.

#include "kit.hpp"

#include <qdiv/numbers.hpp>

namespace qdiv::kit
{

namespace
{

constexpr Var q = Var::q;

auto u32(long v)
{
    return static_cast<std::uint32_t>(v);
}

// sum_{n=1}^{cap} c(n) q^n
template <typename Coeff>
MultiSeries coefficient_series(const Truncation &tr, Coeff &&c)
{
    std::vector<MultiSeries::Term> terms;
    for (long n = 1; n <= static_cast<long>(tr.cap(q)); ++n) {
        terms.emplace_back(MultiSeries::pack(exps({{q, u32(n)}})), Rational(c(n)));
    }
    return MultiSeries::from_terms(std::move(terms), tr);
}

long add_harmonic(Side &side, long last)
{
    // Terms beyond the q cap vanish, so `last` may be unbounded.
    const long top = std::min(last, static_cast<long>(side.truncation().cap(q)));
    for (long k = 1; k <= top; ++k) {
        side.add(lambert_term(k, side.truncation()));
    }
    return top;
}

} // namespace

Sides build_vh84(const Params &, const Truncation &tr)
{
    Side lhs(tr), rhs(tr);
    long stop = add_monotone(lhs, 1, [&](long k) { return Summand{geometric_factor(k, tr), shift({{q, k}})}; });
    stop = std::max(stop, add_monotone(rhs, 1, [&](long m) {
                        return Summand{pochhammer_inf(mono(q, u32(m + 1)), mono(q), tr), shift({{q, m}}), Rational(m)};
                    }));
    return finish(lhs, rhs, stop);
}

Sides build_bs(const Params &, const Truncation &tr)
{
    Side lhs(tr), rhs(tr);
    lhs.add(lambert_series(0, tr));
    rhs.add(coefficient_series(tr, [](long n) { return t_stat(n); }));
    return finish(lhs, rhs);
}

Sides build_gvh(const Params &ps, const Truncation &tr)
{
    const long big_n = param(ps, "N");
    require(big_n >= 1, "N >= 1");
    const GapBound bound = static_cast<unsigned>(big_n);
    Side lhs(tr), rhs(tr);
    lhs.add(coefficient_series(tr, [&](long n) {
        return divisor_count_bounded(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(big_n));
    }));
    rhs.add(coefficient_series(tr, [&](long n) { return t_stat(n, bound) - t_stat(n - big_n, bound); }));
    return finish(lhs, rhs);
}

Sides build_gvhser(const Params &ps, const Truncation &tr)
{
    const long big_n = param(ps, "N");
    require(big_n >= 1, "N >= 1");
    Side lhs(tr), rhs(tr);
    add_harmonic(lhs, big_n);
    long stop = add_monotone(rhs, 1, [&](long m) {
        auto body = pochhammer(mono(q, u32(m + 1)), mono(q), static_cast<unsigned>(big_n - 1), tr);
        return Summand{body, shift({{q, m}}), Rational(m)};
    });
    stop = std::max(stop, add_monotone(rhs, 1, [&](long m) {
                        auto body = pochhammer(mono(q, u32(m + 1)), mono(q), static_cast<unsigned>(big_n - 1), tr);
                        return Summand{body, shift({{q, m + big_n}}), Rational(-m)};
                    }));
    return finish(lhs, rhs, stop);
}

} // namespace qdiv::kit
