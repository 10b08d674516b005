#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <qdiv/errors.hpp>
#include <qdiv/identities.hpp>
#include <qdiv/qtools.hpp>

#include <set>

using namespace qdiv;
using namespace qdiv::testing;

namespace
{

constexpr Var q = Var::q;
constexpr Var p = Var::p;
constexpr Var x = Var::x;
constexpr Var t = Var::t;

Sides sides(IdentityId id, Params ps, const Truncation &tr)
{
    return build_sides({id, std::move(ps), tr});
}

int failures(const std::vector<VerificationResult> &rs)
{
    int n = 0;
    for (const auto &r : rs) {
        n += !r.passed();
    }
    return n;
}

// Exchange the roles of p and q, using t as scratch.
MultiSeries swap_pq(const MultiSeries &s)
{
    return substitute(substitute(substitute(s, p, mono(t)), q, mono(p)), t, mono(q));
}

} // namespace

TEST_CASE("catalog shape")
{
    const auto &cat = catalog();
    CHECK(cat.size() == 43);
    std::set<std::string_view> names;
    for (std::size_t i = 0; i < cat.size(); ++i) {
        CHECK(static_cast<std::size_t>(cat[i].id) == i);
        CHECK(parse_identity(cat[i].name) == cat[i].id);
        CHECK(name_of(cat[i].id) == cat[i].name);
        CHECK(!cat[i].anchor.empty());
        names.insert(cat[i].name);
    }
    CHECK(names.size() == cat.size());
    CHECK(!parse_identity("NOPE"));
}

TEST_CASE("degenerate and one-term instances")
{
    const Truncation tr{{q, 20}, {p, 20}, {x, 8}};
    const auto s = sides(IdentityId::NEW, {{"m", 0}, {"n", 0}, {"r", 0}}, tr);
    const auto expect = inverse(MultiSeries::constant(1, tr) - MultiSeries::from_monomial(mono(x), tr));
    CHECK(s.lhs == expect);
    CHECK(s.rhs == expect);

    const Truncation tq{{q, 40}};
    const auto h = sides(IdentityId::HAMME, {{"n", 1}}, tq);
    const auto one_term = mul_monomial(geometric_factor(1, tq), mono(q));
    CHECK(h.lhs == one_term);
    CHECK(h.rhs == one_term);
}

TEST_CASE("Dilcher at m = 1 matches the shifted Van Hamme builder at r = 0")
{
    const Truncation tr{{q, 40}};
    for (long n = 1; n <= 6; ++n) {
        const auto d = sides(IdentityId::DILCH, {{"m", 1}, {"n", n}}, tr);
        const auto r = sides(IdentityId::RDIV, {{"n", n}, {"r", 0}}, tr);
        CHECK(d.lhs == r.lhs);
        CHECK(d.rhs == r.rhs);
    }
}

TEST_CASE("Van Hamme n = 5 against a dense oracle")
{
    const std::size_t cap = 40;
    const auto built = sides(IdentityId::HAMME, {{"n", 5}}, Truncation{{q, 40}});
    Dense lhs(cap), rhs(cap);
    for (long k = 1; k <= 5; ++k) {
        const auto uk = static_cast<std::size_t>(k);
        auto term = gaussian(cap, 5, k) * Dense::geometric(cap, uk) * Dense::monomial(cap, uk * (uk + 1) / 2);
        lhs += term.scaled(k % 2 == 1 ? 1 : -1);
        rhs += Dense::monomial(cap, uk) * Dense::geometric(cap, uk);
    }
    CHECK(lhs.matches(built.lhs));
    CHECK(rhs.matches(built.rhs));
    CHECK(verify({IdentityId::HAMME, {{"n", 5}}, Truncation{{q, 40}}}).residual_zero);
}

TEST_CASE("bounded divisor series example")
{
    const Truncation tr{{q, 20}};
    const auto r = verify({IdentityId::GVHSER, {{"N", 3}}, tr});
    CHECK(r.residual_zero);
    const auto s = sides(IdentityId::GVHSER, {{"N", 3}}, tr);
    CHECK(s.lhs.coefficient(exps({{q, 9}})) == 2);
    CHECK(s.rhs.coefficient(exps({{q, 9}})) == 2);
    CHECK(verify({IdentityId::GVH, {{"N", 3}}, Truncation{{q, 40}}}).residual_zero);
}

TEST_CASE("constraint violations")
{
    const Truncation tr{{q, 20}, {p, 20}, {x, 8}};
    CHECK_THROWS_AS(verify({IdentityId::NEW, {{"m", 2}, {"n", 3}, {"r", 5}}, tr}), InvalidParams);
    CHECK_THROWS_AS(verify({IdentityId::NEW, {{"m", 2}, {"n", 3}}, tr}), InvalidParams);
    CHECK_THROWS_AS(verify({IdentityId::NEW, {{"m", 2}, {"n", 3}, {"r", 0}, {"i", 1}}, tr}), InvalidParams);
    CHECK_THROWS_AS(verify({IdentityId::DILCHNEW, {{"m", 2}, {"n", 2}, {"r", 4}}, tr}), InvalidParams);
    CHECK_THROWS_AS(verify({IdentityId::PRODNEW, {{"m", 3}, {"n", 2}, {"r", 0}}, tr}), InvalidParams);
}

TEST_CASE("sweeps")
{
    const auto &newinfo = info(IdentityId::NEW);
    SweepOptions admissible{true, 0};
    const auto all = sweep(IdentityId::NEW, {{"m", {0, 4}}, {"n", {0, 4}}, {"r", {0, 4}}}, newinfo.default_trunc,
                           admissible);
    CHECK(all.size() == 75);
    CHECK(failures(all) == 0);

    CHECK(sweep(IdentityId::NEW, {{"m", {3, 2}}}, newinfo.default_trunc).empty());

    const auto prod = sweep(IdentityId::PRODNEW, {{"n", {1, 5}}, {"m", {0, 5}}, {"r", {0, 5}}},
                            info(IdentityId::PRODNEW).default_trunc, admissible);
    CHECK(prod.size() == 4 + 9 + 16 + 25 + 36);
    CHECK(failures(prod) == 0);

    // Strict sweeps record constraint violations instead of aborting.
    const auto strict = sweep(IdentityId::NEW, {{"m", {0, 1}}, {"n", {0, 0}}, {"r", {0, 1}}}, newinfo.default_trunc);
    CHECK(strict.size() == 4);
    CHECK(failures(strict) == 1);
    CHECK(strict[1].error_kind == std::optional<std::string>("InvalidParams"));

    CHECK_THROWS_AS(expand(IdentityId::NEW, {{"k", {0, 1}}}, newinfo.default_trunc, false), InvalidParams);
}

TEST_CASE("serial and parallel sweeps agree")
{
    auto instances = expand(IdentityId::DILCHNEW, {}, info(IdentityId::DILCHNEW).default_trunc, true);
    const auto serial = verify_all(instances, 1);
    const auto parallel = verify_all(instances, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].instance.params == parallel[i].instance.params);
        CHECK(serial[i].passed() == parallel[i].passed());
        CHECK(serial[i].lhs_terms == parallel[i].lhs_terms);
    }
}

TEST_CASE("symmetric bibasic form")
{
    const Truncation tr{{q, 12}, {p, 12}, {x, 6}, {t, 12}};
    for (long m = 0; m <= 3; ++m) {
        for (long n = 0; n <= 3; ++n) {
            const auto a = sides(IdentityId::NEW2, {{"m", m}, {"n", n}}, tr);
            const auto b = sides(IdentityId::NEW2, {{"m", n}, {"n", m}}, tr);
            CHECK(swap_pq(a.lhs) == b.rhs);
            CHECK(swap_pq(a.rhs) == b.lhs);
            CHECK(a.lhs == a.rhs);
        }
    }
}

TEST_CASE("x = 1 limit for negative r")
{
    const auto rs = sweep(IdentityId::NEWNEW, {{"m", {0, 4}}, {"n", {0, 4}}, {"r", {-4, 0}}},
                          info(IdentityId::NEWNEW).default_trunc, {true, 0});
    CHECK(rs.size() == 5 * (1 + 2 + 3 + 4 + 5));
    CHECK(failures(rs) == 0);
}

TEST_CASE("default catalog sweep")
{
    for (const auto &entry : catalog()) {
        const auto rs = sweep(entry.id, {}, entry.default_trunc, {true, 0});
        INFO(entry.name);
        CHECK(!rs.empty());
        CHECK(failures(rs) == 0);
    }
}

TEST_CASE("reductions")
{
    for (const auto &r : standard_reductions()) {
        INFO(r.name);
        CHECK(r.run());
    }
}

TEST_CASE("reduction checks can fail")
{
    Binding b;
    b.general_params = {{"n", 4}, {"r", 1}};
    b.special_params = {{"n", 4}};
    b.general_trunc = Truncation{{q, 30}};
    b.compare_trunc = b.general_trunc;
    CHECK_FALSE(reduction_check(IdentityId::RDIV, IdentityId::HAMME, b));

    // Without p headroom the p = 1 collapse is incomplete and must be refused.
    Binding c;
    c.general_params = {{"m", 2}};
    c.special_params = {{"m", 2}};
    c.substitutions = {{p, mono(1)}};
    c.general_trunc = Truncation{{q, 12}, {Var::a, 6}, {p, 4}};
    c.compare_trunc = Truncation{{q, 12}, {Var::a, 6}};
    c.headroom = {p};
    CHECK_THROWS_AS(reduction_check(IdentityId::MAIN1, IdentityId::MAIN2, c), TruncationTooSmall);
}

TEST_CASE("parameter formatting")
{
    CHECK(to_string(Params{{"n", 3}, {"m", -1}}) == "m=-1,n=3");
    CHECK(to_string(Params{}).empty());
}
