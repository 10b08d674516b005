#include <qdiv/errors.hpp>
#include <qdiv/identities.hpp>
#include <qdiv/qtools.hpp>

#include <algorithm>

namespace qdiv
{

namespace
{

constexpr Var q = Var::q;
constexpr Var p = Var::p;
constexpr Var x = Var::x;
constexpr Var a = Var::a;

void require_headroom(const MultiSeries &s, Var v)
{
    if (!s.is_zero() && s.max_degree(v) >= s.truncation().cap(v)) {
        throw TruncationTooSmall(std::string("no headroom in ") + var_name(v)
                                 + " before substitution; raise its cap");
    }
}

MultiSeries specialise(MultiSeries s, const Binding &b)
{
    for (Var v : b.headroom) {
        require_headroom(s, v);
    }
    for (const auto &[v, target] : b.substitutions) {
        s = substitute(s, v, target);
    }
    s = s.truncated(b.compare_trunc);
    if (b.factor) {
        s = mul(s, b.factor(b.compare_trunc));
    }
    return s;
}

} // namespace

bool reduction_check(IdentityId general, IdentityId special, const Binding &b)
{
    const Sides g = build_sides({general, b.general_params, b.general_trunc});
    const Sides s = build_sides({special, b.special_params, b.compare_trunc});
    return specialise(g.lhs, b) == s.lhs && specialise(g.rhs, b) == s.rhs;
}

bool new_limit_x1_check(long m, long n, const Truncation &tr)
{
    const std::uint32_t xcap = std::max(tr.cap(p), tr.cap(q)) + 1;
    const Truncation box = tr.with(x, xcap);
    const auto um = static_cast<unsigned>(m);
    const auto un = static_cast<unsigned>(n);

    // k >= 1 parts: NEW minus its k = 0 summands, which carry the poles.
    const Sides full = build_sides({IdentityId::NEW, {{"m", m}, {"n", n}, {"r", 0}}, box});
    const auto one = MultiSeries::constant(1, box);
    const auto lhs0 = div_pochhammer(div_pochhammer(one, mono(p), mono(p), um), mono(x), mono(q), un + 1);
    const auto rhs0 = div_pochhammer(div_pochhammer(one, mono(q), mono(q), un), mono(x), mono(p), um + 1);
    const MultiSeries rest = (full.lhs - lhs0) - (full.rhs - rhs0);
    require_headroom(rest, x);

    const Sides cornew = build_sides({IdentityId::CORNEW, {{"m", m}, {"n", n}}, tr});
    if (substitute(rest, x, mono(1)).truncated(tr) != cornew.lhs) {
        return false;
    }

    // The k = 0 summands combine to N(x) / ((1 - x)(p;p)_m (q;q)_n (xp;p)_m (xq;q)_n)
    // with N(x) = (p;p)_m (xq;q)_n - (q;q)_n (xp;p)_m; N vanishes at x = 1.
    const auto deg = static_cast<std::uint32_t>(std::max(m, n));
    const Truncation exact{{p, static_cast<std::uint32_t>(m * (m + 1))},
                           {q, static_cast<std::uint32_t>(n * (n + 1))},
                           {x, deg + 1}};
    const auto pm = pochhammer(mono(p), mono(p), um, exact);
    const auto qn = pochhammer(mono(q), mono(q), un, exact);
    const auto numer = mul(pm, pochhammer(mono(1, {{x, 1}, {q, 1}}), mono(q), un, exact))
                       - mul(qn, pochhammer(mono(1, {{x, 1}, {p, 1}}), mono(p), um, exact));
    const auto quot = div_one_minus(numer, mono(x));
    if (!quot.is_zero() && quot.max_degree(x) >= deg) {
        throw std::logic_error("N(x) is not divisible by 1 - x");
    }
    auto at_one = substitute(quot, x, mono(1)).truncated(tr);
    for (int rep = 0; rep < 2; ++rep) {
        at_one = div_pochhammer(at_one, mono(p), mono(p), um);
        at_one = div_pochhammer(at_one, mono(q), mono(q), un);
    }
    return at_one == cornew.rhs;
}

std::vector<NamedReduction> standard_reductions()
{
    std::vector<NamedReduction> out;

    for (long m = 0; m <= 3; ++m) {
        out.push_back({"MAIN1 at p=1 equals MAIN2, m=" + std::to_string(m), [m] {
                           Binding b;
                           b.general_params = {{"m", m}};
                           b.special_params = {{"m", m}};
                           b.substitutions = {{p, mono(1)}};
                           b.general_trunc = Truncation{{q, 12}, {a, 6}, {p, 64}};
                           b.compare_trunc = Truncation{{q, 12}, {a, 6}};
                           b.headroom = {p};
                           return reduction_check(IdentityId::MAIN1, IdentityId::MAIN2, b);
                       }});
    }
    const std::uint32_t qcap = 30;
    for (auto general : {IdentityId::UCH001, IdentityId::UCH002}) {
        for (long n = 1; n <= 4; ++n) {
            for (long target = 0; target <= 4; ++target) {
                out.push_back({std::string(name_of(general)) + " at m=0, x=q^" + std::to_string(target)
                                   + " equals UCH, n=" + std::to_string(n),
                               [=] {
                                   Binding b;
                                   b.general_params = {{"m", 0}, {"n", n}};
                                   if (general == IdentityId::UCH001) {
                                       b.general_params["r"] = 0;
                                   }
                                   b.special_params = {{"m", target}, {"n", n}};
                                   b.substitutions = {{x, mono(q, static_cast<std::uint32_t>(target))}};
                                   b.general_trunc = Truncation{{q, qcap}, {x, qcap + 1}};
                                   b.compare_trunc = Truncation{{q, qcap}};
                                   b.factor = [n](const Truncation &tr) {
                                       return pochhammer(mono(q), mono(q), static_cast<unsigned>(n), tr);
                                   };
                                   b.headroom = {x};
                                   return reduction_check(general, IdentityId::UCH, b);
                               }});
            }
        }
    }
    for (long n = 1; n <= 8; ++n) {
        out.push_back({"RDIV at r=0 equals HAMME, n=" + std::to_string(n), [n] {
                           Binding b;
                           b.general_params = {{"n", n}, {"r", 0}};
                           b.special_params = {{"n", n}};
                           b.general_trunc = Truncation{{q, 40}};
                           b.compare_trunc = b.general_trunc;
                           return reduction_check(IdentityId::RDIV, IdentityId::HAMME, b);
                       }});
    }
    for (long m = 0; m <= 3; ++m) {
        for (long n = 0; n <= 3; ++n) {
            out.push_back({"NEW at r=0, x=1 matches CORNEW, m=" + std::to_string(m) + ", n=" + std::to_string(n),
                           [m, n] { return new_limit_x1_check(m, n, Truncation{{p, 12}, {q, 12}}); }});
        }
    }
    return out;
}

} // namespace qdiv
