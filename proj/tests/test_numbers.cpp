#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qdiv/numbers.hpp>

#include <algorithm>
#include <set>

using namespace qdiv;

namespace
{

constexpr Var q = Var::q;

std::vector<unsigned> divisors(unsigned n)
{
    std::vector<unsigned> out;
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
        }
    }
    return out;
}

Partition of(std::vector<unsigned> parts)
{
    return Partition{std::move(parts)};
}

// Every subset of {1..n} summing to n.
std::vector<Partition> brute_force(unsigned n)
{
    std::vector<Partition> out;
    if (n == 0) {
        out.push_back(Partition{});
        return out;
    }
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<unsigned> parts;
        unsigned sum = 0;
        for (unsigned i = n; i >= 1; --i) {
            if (mask & (std::uint64_t{1} << (i - 1))) {
                parts.push_back(i);
                sum += i;
            }
        }
        if (sum == n) {
            out.push_back(Partition{parts});
        }
    }
    return out;
}

std::set<Partition> within(const std::vector<Partition> &all, GapBound bound)
{
    std::set<Partition> out;
    for (const auto &pi : all) {
        if (!bound || pi.parts.empty() || pi.largest() - pi.smallest() <= *bound - 1) {
            out.insert(pi);
        }
    }
    return out;
}

} // namespace

TEST_CASE("sigma")
{
    for (unsigned m = 0; m <= 4; ++m) {
        CHECK(sigma(m, 1) == 1);
    }
    CHECK(sigma(0, 9) == 3);
    CHECK(sigma(1, 6) == 12);
    for (unsigned n = 1; n <= 100; ++n) {
        for (unsigned m = 0; m <= 3; ++m) {
            mpz_class expect = 0;
            for (unsigned d : divisors(n)) {
                mpz_class pw;
                mpz_ui_pow_ui(pw.get_mpz_t(), d, m);
                expect += pw;
            }
            CHECK(sigma(m, n) == expect);
        }
    }
}

TEST_CASE("bounded and odd divisor counts")
{
    CHECK(divisor_count_bounded(9, 3) == 2);
    CHECK(divisor_count_bounded(7, 1) == 1);
    for (unsigned n = 1; n <= 60; ++n) {
        CHECK(divisor_count_bounded(n, n) == sigma(0, n));
        const auto ds = divisors(n);
        CHECK(odd_divisor_count(n) == std::count_if(ds.begin(), ds.end(), [](unsigned d) { return d % 2 == 1; }));
    }
}

TEST_CASE("distinct partitions, displayed examples")
{
    CHECK(partitions_distinct(9, 3) == std::vector<Partition>{of({9}), of({5, 4}), of({4, 3, 2})});
    CHECK(partitions_distinct(6, 3) == std::vector<Partition>{of({6}), of({4, 2}), of({3, 2, 1})});
    CHECK(partitions_distinct(0, 4) == std::vector<Partition>{Partition{}});
    CHECK(partitions_distinct(0) == std::vector<Partition>{Partition{}});
    CHECK(t_stat(9, 3) == 7);
    CHECK(t_stat(6, 3) == 5);
    CHECK(t_stat(9, 3) - t_stat(6, 3) == 2);
    CHECK(t_stat(1) == 1);
    CHECK(t_stat(0, 3) == 0);
    CHECK(t_stat(-4, 3) == 0);
}

TEST_CASE("partition enumerator against subset enumeration")
{
    for (unsigned n = 0; n <= 25; ++n) {
        const auto subsets = brute_force(n);
        for (std::optional<unsigned> bound : {GapBound{}, GapBound{1}, GapBound{2}, GapBound{3}, GapBound{6}}) {
            const auto got = partitions_distinct(n, bound);
            const auto expect = within(subsets, bound);
            CHECK(got.size() == expect.size());
            CHECK(std::set<Partition>(got.begin(), got.end()) == expect);
            // Decreasing lexicographic order.
            CHECK(std::is_sorted(got.begin(), got.end(), std::greater<>{}));
            for (const auto &pi : got) {
                CHECK(pi.sum() == n);
                CHECK(std::adjacent_find(pi.parts.begin(), pi.parts.end(), std::less_equal<>{}) == pi.parts.end());
                if (bound && !pi.parts.empty()) {
                    CHECK(pi.largest() - pi.smallest() <= *bound - 1);
                }
            }
        }
    }
}

TEST_CASE("partition sets grow with the bound")
{
    for (unsigned n = 1; n <= 30; ++n) {
        for (unsigned N = 1; N <= 12; ++N) {
            const auto small = partitions_distinct(n, N);
            const auto big = partitions_distinct(n, N + 1);
            const std::set<Partition> bigset(big.begin(), big.end());
            CHECK(std::all_of(small.begin(), small.end(), [&](const Partition &pi) { return bigset.count(pi) == 1; }));
        }
    }
}

TEST_CASE("divisor count equals the smallest-part statistic")
{
    for (unsigned n = 1; n <= 60; ++n) {
        CHECK(sigma(0, n) == t_stat(n));
    }
}

TEST_CASE("bounded divisor count refinement")
{
    for (long n = 1; n <= 40; ++n) {
        for (unsigned N = 1; N <= 12; ++N) {
            INFO("n = " << n << ", N = " << N);
            CHECK(static_cast<long>(divisor_count_bounded(static_cast<std::uint64_t>(n), N))
                  == t_stat(n, N) - t_stat(n - N, N));
        }
    }
}

TEST_CASE("Lambert series")
{
    const Truncation tr{{q, 50}};
    CHECK(lambert_series(0, tr).coefficient(exps({{q, 6}})) == 4);
    CHECK(lambert_series(1, tr).coefficient(exps({{q, 4}})) == 7);
    for (unsigned m = 0; m <= 3; ++m) {
        CHECK(lambert_series(m, tr).coefficient(exps({{q, 1}})) == 1);
        CHECK(lambert_series(m, tr) == lambert_series_geometric(m, tr));
    }
}

TEST_CASE("odd divisor series")
{
    const Truncation tr{{q, 64}};
    const auto s = odd_divisor_series(tr);
    const long shown[] = {1, 1, 2, 1, 2, 2, 2, 1, 3};
    for (std::uint32_t e = 1; e <= 9; ++e) {
        CHECK(s.coefficient(exps({{q, e}})) == shown[e - 1]);
    }
    for (std::uint32_t e = 1; e <= 64; e *= 2) {
        CHECK(s.coefficient(exps({{q, e}})) == 1);
    }
    CHECK(s.coefficient(exps({{q, 15}})) == 4);
    for (std::uint32_t e = 1; e <= 64; ++e) {
        CHECK(s.coefficient(exps({{q, e}})) == odd_divisor_count(e));
    }
}
