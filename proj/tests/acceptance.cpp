// Acceptance driver: one PASS/FAIL line per criterion, exit status 0 iff all
// criteria pass.

#include "ring_laws.hpp"
#include "support.hpp"

#include <qdiv/identities.hpp>
#include <qdiv/numbers.hpp>
#include <qdiv/qtools.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

using namespace qdiv;
using namespace qdiv::testing;
using Clock = std::chrono::steady_clock;

namespace
{

constexpr Var q = Var::q;
constexpr Var p = Var::p;
constexpr Var x = Var::x;
constexpr Var z = Var::z;
constexpr Var a = Var::a;
constexpr Var t = Var::t;

// Runtime ceilings, in seconds.
constexpr double finite_budget = 300;
constexpr double infinite_budget = 600;
constexpr double oracle_budget = 1;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Grid {
    IdentityId id;
    ParamRanges ranges;
};

Outcome run_grids(const std::vector<Grid> &grids, const Truncation &tr, double budget)
{
    const auto start = Clock::now();
    std::vector<IdentityInstance> instances;
    for (const auto &g : grids) {
        auto part = expand(g.id, g.ranges, tr, true);
        instances.insert(instances.end(), part.begin(), part.end());
    }
    const auto results = verify_all(instances);
    std::size_t passed = 0;
    std::string first_failure;
    for (const auto &r : results) {
        if (r.passed()) {
            ++passed;
        } else if (first_failure.empty()) {
            first_failure = std::string(name_of(r.instance.id)) + " " + to_string(r.instance.params)
                            + (r.error ? " (" + *r.error + ")" : "");
        }
    }
    const double elapsed = seconds_since(start);
    std::ostringstream d;
    d << passed << "/" << results.size() << " instances residual-zero at " << to_string(tr) << " in " << elapsed
      << "s (limit " << budget << "s)";
    if (!first_failure.empty()) {
        d << "; first failure " << first_failure;
    }
    return {!results.empty() && passed == results.size() && elapsed < budget, d.str()};
}

Outcome finite_sweep()
{
    const ParamRange m04{0, 4}, n04{0, 4};
    const std::vector<Grid> grids{
        {IdentityId::HAMME, {{"n", {1, 8}}}},
        {IdentityId::UCH, {{"n", {1, 6}}, {"m", {0, 4}}}},
        {IdentityId::DILCH, {{"m", {0, 4}}, {"n", {1, 5}}}},
        {IdentityId::PRODINGER, {{"n", {0, 5}}, {"m", {0, 5}}}},
        {IdentityId::PRODNEW, {{"n", {0, 5}}, {"m", {0, 5}}, {"r", {0, 5}}}},
        {IdentityId::FLZ, {{"i", {1, 4}}, {"n", {1, 4}}, {"m", {1, 4}}}},
        {IdentityId::NEW, {{"m", m04}, {"n", n04}, {"r", {0, 4}}}},
        {IdentityId::NEW2, {{"m", m04}, {"n", n04}}},
        {IdentityId::NEWNEW, {{"m", m04}, {"n", n04}, {"r", {-4, 4}}}},
        {IdentityId::MNPQ, {{"n", n04}, {"r", {-4, 4}}}},
        {IdentityId::CORNEW, {{"m", m04}, {"n", n04}}},
        {IdentityId::LONG, {{"n", n04}}},
        {IdentityId::UCH001, {{"m", m04}, {"n", n04}, {"r", {0, 4}}}},
        {IdentityId::UCH002, {{"m", m04}, {"n", n04}}},
        {IdentityId::RDIV, {{"n", {0, 8}}, {"r", {0, 8}}}},
        {IdentityId::DILCHNEW, {{"m", {1, 3}}, {"n", {1, 4}}, {"r", {0, 6}}}},
        {IdentityId::DILCHCOR, {{"m", {1, 3}}, {"n", {1, 4}}, {"r", {0, 6}}}},
        {IdentityId::QBT1, {{"n", {1, 10}}}},
        {IdentityId::PF12, {{"n", {0, 6}}}},
    };
    return run_grids(grids, Truncation{{q, 40}, {p, 20}, {x, 8}, {z, 8}}, finite_budget);
}

Outcome infinite_sweep()
{
    const ParamRange sign{-1, 1};
    const std::vector<Grid> grids{
        {IdentityId::U81, {}},
        {IdentityId::RU81, {{"r", {0, 4}}}},
        {IdentityId::LIU, {}},
        {IdentityId::AGARWAL, {}},
        {IdentityId::QSQ, {}},
        {IdentityId::LONGINF, {}},
        {IdentityId::SYM, {}},
        {IdentityId::MAIN1, {{"m", {0, 3}}}},
        {IdentityId::MAIN2, {{"m", {0, 4}}}},
        {IdentityId::APM1, {{"m", {0, 3}}, {"sign", sign}}},
        {IdentityId::P1, {{"m", {0, 4}}, {"sign", sign}}},
        {IdentityId::M123, {{"m", {1, 3}}}},
        {IdentityId::MAIN3, {{"m", {0, 3}}}},
        {IdentityId::M23, {{"m", {2, 3}}}},
        {IdentityId::VH84, {}},
        {IdentityId::GVHSER, {{"N", {1, 8}}}},
    };
    // b of the symmetric form is carried by z.
    return run_grids(grids, Truncation{{q, 36}, {p, 12}, {a, 6}, {t, 6}, {x, 6}, {z, 6}}, infinite_budget);
}

Outcome displayed_values()
{
    std::vector<std::string> bad;
    auto check = [&](bool ok, const char *what) {
        if (!ok) {
            bad.emplace_back(what);
        }
    };
    const Truncation tr{{q, 20}, {t, 8}};
    auto S = [&](const Monomial &m) { return MultiSeries::from_monomial(m, tr); };
    const auto one = MultiSeries::constant(1, tr);
    check(carlitz_eulerian(2, t, q, tr) == one + S(mono(1, {{t, 1}, {q, 1}})), "A2(t;q)");
    check(carlitz_eulerian(3, t, q, tr)
              == one + S(mono(2, {{t, 1}, {q, 1}})) + S(mono(2, {{t, 1}, {q, 2}})) + S(mono(1, {{t, 2}, {q, 3}})),
          "A3(t;q)");
    check(eulerian(3, t, tr) == one + S(mono(4, {{t, 1}})) + S(mono(t, 2)), "A3(t)");
    check(eulerian(4, t, tr) == one + S(mono(11, {{t, 1}})) + S(mono(11, {{t, 2}})) + S(mono(t, 3)), "A4(t)");

    const auto odd = odd_divisor_series(Truncation{{q, 9}});
    const long shown[] = {1, 1, 2, 1, 2, 2, 2, 1, 3};
    bool odd_ok = true;
    for (std::uint32_t e = 1; e <= 9; ++e) {
        odd_ok = odd_ok && odd.coefficient(exps({{q, e}})) == shown[e - 1];
    }
    check(odd_ok, "odd-divisor coefficients");

    check(partitions_distinct(9, 3)
              == std::vector<Partition>{Partition{{9}}, Partition{{5, 4}}, Partition{{4, 3, 2}}},
          "P(9,3)");
    check(partitions_distinct(6, 3)
              == std::vector<Partition>{Partition{{6}}, Partition{{4, 2}}, Partition{{3, 2, 1}}},
          "P(6,3)");
    check(t_stat(9, 3) - t_stat(6, 3) == 2 && divisor_count_bounded(9, 3) == 2, "t(9,3) - t(6,3) = d(9,3) = 2");

    std::string detail = "9 displayed values";
    for (const auto &b : bad) {
        detail += "; mismatch " + b;
    }
    return {bad.empty(), detail};
}

// Every subset of {1..n} summing to n.
std::size_t subsets_summing_to(unsigned n)
{
    std::size_t count = n == 0;
    for (std::uint64_t mask = 1; n > 0 && mask < (std::uint64_t{1} << n); ++mask) {
        unsigned sum = 0;
        for (unsigned i = 1; i <= n; ++i) {
            if (mask & (std::uint64_t{1} << (i - 1))) {
                sum += i;
            }
        }
        count += sum == n;
    }
    return count;
}

Outcome oracles()
{
    const Truncation tr{{q, 40}, {t, 8}};
    const auto start = Clock::now();
    bool carlitz = true;
    for (unsigned n = 1; n <= 6; ++n) {
        carlitz = carlitz && carlitz_eulerian(n, t, q, tr) == carlitz_eulerian_oracle(n, t, q, tr);
    }
    const double oracle_time = seconds_since(start);
    bool at_one = true;
    for (unsigned n = 1; n <= 8; ++n) {
        at_one = at_one && substitute(carlitz_eulerian(n, t, q, tr), q, mono(1)) == eulerian(n, t, tr);
    }
    bool parts = true;
    for (unsigned n = 0; n <= 25; ++n) {
        parts = parts && partitions_distinct(n).size() == subsets_summing_to(n);
    }
    std::ostringstream d;
    d << "Carlitz vs permutations n<=6 " << (carlitz ? "ok" : "MISMATCH") << " in " << oracle_time << "s; q=1 vs "
      << "Eulerian n<=8 " << (at_one ? "ok" : "MISMATCH") << "; partitions vs subsets n<=25 "
      << (parts ? "ok" : "MISMATCH");
    return {carlitz && at_one && parts && oracle_time < oracle_budget, d.str()};
}

Outcome number_sweeps()
{
    int bad_bs = 0, bad_gvh = 0;
    for (unsigned n = 1; n <= 60; ++n) {
        bad_bs += sigma(0, n) != t_stat(n);
    }
    for (long n = 1; n <= 40; ++n) {
        for (unsigned N = 1; N <= 12; ++N) {
            bad_gvh += static_cast<long>(divisor_count_bounded(static_cast<std::uint64_t>(n), N))
                       != t_stat(n, N) - t_stat(n - N, N);
        }
    }
    int bad_lambert = 0;
    const Truncation tr{{q, 50}};
    for (unsigned m = 0; m <= 3; ++m) {
        bad_lambert += !(lambert_series(m, tr) == lambert_series_geometric(m, tr));
    }
    std::ostringstream d;
    d << "d(n)=t(n) mismatches " << bad_bs << "/60; d(n,N)=t(n,N)-t(n-N,N) mismatches " << bad_gvh
      << "/480; Lambert forms mismatches " << bad_lambert << "/4";
    return {bad_bs == 0 && bad_gvh == 0 && bad_lambert == 0, d.str()};
}

Outcome reductions()
{
    const auto all = standard_reductions();
    std::size_t passed = 0;
    std::string first;
    for (const auto &r : all) {
        bool ok = false;
        try {
            ok = r.run();
        } catch (const std::exception &e) {
            first = first.empty() ? r.name + " (" + e.what() + ")" : first;
        }
        passed += ok;
        if (!ok && first.empty()) {
            first = r.name;
        }
    }
    std::string detail = std::to_string(passed) + "/" + std::to_string(all.size()) + " reduction statements hold";
    if (!first.empty()) {
        detail += "; first failure " + first;
    }
    return {passed == all.size() && !all.empty(), detail};
}

Outcome dd_lemmas()
{
    const ParamRange seeds{1, 20};
    const std::vector<Grid> grids{
        {IdentityId::DD1, {{"n", {0, 3}}, {"seed", seeds}}},
        {IdentityId::DD2, {{"m", {0, 3}}, {"r", {0, 3}}, {"seed", seeds}}},
        {IdentityId::DD3, {{"m", {0, 3}}, {"n", {0, 3}}, {"r", {0, 3}}, {"seed", seeds}}},
    };
    return run_grids(grids, Truncation{}, infinite_budget);
}

Outcome ring_core()
{
    const int per_law = 100;
    std::size_t held = 0, total = 0;
    std::string first;
    std::uint64_t seed = 100;
    const auto laws = ring_laws();
    for (const auto &law : laws) {
        Gen g(seed++);
        int fails = 0;
        for (int i = 0; i < per_law; ++i) {
            fails += !law.holds(g);
        }
        held += per_law - fails;
        total += per_law;
        if (fails != 0 && first.empty()) {
            first = law.name;
        }
    }
    std::string detail = std::to_string(laws.size()) + " laws, " + std::to_string(held) + "/" + std::to_string(total)
                         + " instances hold";
    if (!first.empty()) {
        detail += "; first failing law " + first;
    }
    return {held == total, detail};
}

} // namespace

int main()
{
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
        {"finite catalog sweep", finite_sweep},
        {"infinite identities with certified tails", infinite_sweep},
        {"displayed values", displayed_values},
        {"oracle equivalences", oracles},
        {"number-theoretic sweeps", number_sweeps},
        {"reduction checks", reductions},
        {"divided-difference lemmas", dd_lemmas},
        {"ring-core properties", ring_core},
    };
    bool all = true;
    int index = 1;
    for (const auto &[name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all = all && o.pass;
        std::printf("%s criterion %d (%s): %s\n", o.pass ? "PASS" : "FAIL", index++, name, o.detail.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
