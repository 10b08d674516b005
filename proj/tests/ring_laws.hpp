#pragma once

// Series-module invariants as named randomized laws. Each law draws its own
// instance from the generator and reports whether it held.

#include "support.hpp"

#include <qdiv/series.hpp>

#include <functional>
#include <string>
#include <vector>

namespace qdiv::testing
{

struct Law {
    std::string name;
    std::function<bool(Gen &)> holds;
};

inline std::vector<Law> ring_laws()
{
    std::vector<Law> laws;
    laws.push_back({"add commutative", [](Gen &g) {
                        const auto tr = g.box();
                        const auto a = g.series(tr), b = g.series(tr);
                        return a + b == b + a;
                    }});
    laws.push_back({"add associative", [](Gen &g) {
                        const auto tr = g.box();
                        const auto a = g.series(tr), b = g.series(tr), c = g.series(tr);
                        return (a + b) + c == a + (b + c);
                    }});
    laws.push_back({"mul commutative", [](Gen &g) {
                        const auto tr = g.box();
                        const auto a = g.series(tr), b = g.series(tr);
                        return mul(a, b) == mul(b, a);
                    }});
    laws.push_back({"mul associative", [](Gen &g) {
                        const auto tr = g.box();
                        const auto a = g.series(tr), b = g.series(tr), c = g.series(tr);
                        return mul(mul(a, b), c) == mul(a, mul(b, c));
                    }});
    laws.push_back({"distributive", [](Gen &g) {
                        const auto tr = g.box();
                        const auto a = g.series(tr), b = g.series(tr), c = g.series(tr);
                        return mul(a, b + c) == mul(a, b) + mul(a, c);
                    }});
    laws.push_back({"additive inverse", [](Gen &g) {
                        const auto tr = g.box();
                        const auto a = g.series(tr);
                        return (a + negate(a)).is_zero() && (a - a).is_zero();
                    }});
    laws.push_back({"multiplicative identity", [](Gen &g) {
                        const auto tr = g.box();
                        const auto a = g.series(tr);
                        return mul(a, MultiSeries::constant(1, tr)) == a;
                    }});
    laws.push_back({"inverse", [](Gen &g) {
                        const auto tr = g.box();
                        const auto a = g.series(tr, 20, true);
                        return mul(a, inverse(a)) == MultiSeries::constant(1, tr);
                    }});
    laws.push_back({"truncation soundness", [](Gen &g) {
                        const auto small = g.box(4);
                        Exponents wide{};
                        for (Var v : all_vars) {
                            wide[index_of(v)] = 2 * small.cap(v);
                        }
                        const Truncation big(wide);
                        const auto a = g.series(big), b = g.series(big);
                        return mul(a.truncated(small), b.truncated(small)) == mul(a, b).truncated(small);
                    }});
    laws.push_back({"canonical form", [](Gen &g) {
                        const auto tr = g.box();
                        const auto a = g.series(tr), b = g.series(tr);
                        const auto m = g.monomial(tr, false);
                        const auto u = g.series(tr, 20, true);
                        for (const auto &s : {a + b, a - a, mul(a, b), mul_monomial(a, m), mul_one_minus(a, m),
                                              div_one_minus(a, m), inverse(u), a * Rational(0),
                                              substitute(a, Var::q, mono(Var::p, 2))}) {
                            if (!canonical(s)) {
                                return false;
                            }
                        }
                        return true;
                    }});
    laws.push_back({"serial and parallel products agree", [](Gen &g) {
                        const auto tr = g.box();
                        const auto a = g.series(tr), b = g.series(tr);
                        const auto s = mul_serial(a, b);
                        const auto p = mul_parallel(a, b);
                        return s == p && s.terms() == p.terms();
                    }});
    laws.push_back({"one-minus division inverts multiplication", [](Gen &g) {
                        const auto tr = g.box();
                        const auto a = g.series(tr);
                        const auto m = g.monomial(tr, false);
                        return div_one_minus(mul_one_minus(a, m), m) == a;
                    }});
    laws.push_back({"negative geometric factor rewrite", [](Gen &g) {
                        const long d = g.integer(1, 9);
                        const Truncation tr{{Var::q, static_cast<std::uint32_t>(g.integer(1, 40))}};
                        const auto e = static_cast<std::uint32_t>(d);
                        const auto rewrite = mul(MultiSeries::from_monomial(mono(-1, {{Var::q, e}}), tr),
                                                 inverse(MultiSeries::constant(1, tr)
                                                         - MultiSeries::from_monomial(mono(Var::q, e), tr)));
                        return geometric_factor(-d, tr) == rewrite;
                    }});
    return laws;
}

} // namespace qdiv::testing
