#include "kit.hpp"

#include <stdexcept>

namespace qdiv::kit
{

Rational binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

Shift shift(std::initializer_list<std::pair<Var, long>> entries)
{
    Shift s{};
    for (const auto &[v, e] : entries) {
        s[index_of(v)] += e;
    }
    return s;
}

MultiSeries Side::contribution(const MultiSeries &body, const Shift &offset, const Rational &c) const
{
    Monomial factor{c, {}};
    for (std::size_t v = 0; v < num_vars; ++v) {
        const long e = offset[v] + clear_[v];
        if (e < 0) {
            throw std::logic_error("summand offset not covered by the clearing monomial");
        }
        factor.exps[v] = static_cast<std::uint32_t>(e);
    }
    if (!value_.truncation().contains(factor.exps)) {
        return MultiSeries(value_.truncation());
    }
    return mul_monomial(body.truncated(value_.truncation()), factor);
}

long param(const Params &p, const std::string &name)
{
    auto it = p.find(name);
    if (it == p.end()) {
        throw InvalidParams("missing parameter '" + name + "'");
    }
    return it->second;
}

void require(bool ok, const std::string &what)
{
    if (!ok) {
        throw InvalidParams("parameter constraint violated: " + what);
    }
}

MultiSeries one(const Truncation &tr)
{
    return MultiSeries::constant(1, tr);
}

MultiSeries constant(const Rational &c, const Truncation &tr)
{
    return MultiSeries::constant(c, tr);
}

MultiSeries monomial(const Monomial &mono, const Truncation &tr)
{
    return MultiSeries::from_monomial(mono, tr);
}

MultiSeries div_qfact(const MultiSeries &s, Var v, long n)
{
    return div_pochhammer(s, mono(v), mono(v), static_cast<unsigned>(n));
}

MultiSeries div_qfact(const MultiSeries &s, Var v, std::uint32_t e, long n)
{
    return div_pochhammer(s, mono(v, e), mono(v, e), static_cast<unsigned>(n));
}

MultiSeries qbin(long n, long k, const Truncation &tr, Var v, std::uint32_t e)
{
    return q_binomial(n, k, mono(v, e), tr);
}

MultiSeries div_geometric(const MultiSeries &s, Var v, std::uint32_t d, unsigned power)
{
    MultiSeries r = s;
    for (unsigned i = 0; i < power; ++i) {
        r = div_one_minus(r, mono(v, d));
    }
    return r;
}

MultiSeries lambert_term(long d, const Truncation &tr, Var v)
{
    if (d > 0) {
        return mul_monomial(geometric_factor(d, tr, v), mono(v, static_cast<std::uint32_t>(d)));
    }
    // v^d * (-v^{-d} / (1 - v^{-d})) = -1 / (1 - v^{-d})
    return -geometric_factor(-d, tr, v);
}

MultiSeries carlitz_at(unsigned k, Var base, Var v, std::uint32_t n, const Truncation &tr)
{
    const Truncation work = tr.with(Var::t, k);
    return substitute(carlitz_eulerian(k, Var::t, base, work), Var::t, mono(v, n)).truncated(tr);
}

MultiSeries eulerian_at(unsigned k, Var v, std::uint32_t n, const Truncation &tr)
{
    const Truncation work = tr.with(Var::t, k);
    return substitute(eulerian(k, Var::t, work), Var::t, mono(v, n)).truncated(tr);
}

bool outside(const Truncation &tr, std::initializer_list<std::pair<Var, long>> lower_bounds)
{
    for (const auto &[v, e] : lower_bounds) {
        if (e > static_cast<long>(tr.cap(v))) {
            return true;
        }
    }
    return false;
}

Sides finish(const Side &lhs, const Side &rhs, long stop_index)
{
    return Sides{lhs.value(), rhs.value(), stop_index};
}

} // namespace qdiv::kit
