#pragma once

// Divisor functions, Lambert series and partitions into distinct parts.

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include <qdiv/series.hpp>

namespace qdiv
{

// sum_{d | n} d^m by trial division. n >= 1.
mpz_class sigma(unsigned m, std::uint64_t n);

// Number of divisors of n not exceeding bound.
unsigned divisor_count_bounded(std::uint64_t n, std::uint64_t bound);

// Number of odd divisors of n.
unsigned odd_divisor_count(std::uint64_t n);

// Partition into distinct parts, listed in strictly decreasing order.
struct Partition {
    std::vector<unsigned> parts;

    unsigned largest() const noexcept
    {
        return parts.empty() ? 0 : parts.front();
    }
    // Zero for the empty partition.
    unsigned smallest() const noexcept
    {
        return parts.empty() ? 0 : parts.back();
    }
    std::size_t length() const noexcept
    {
        return parts.size();
    }
    unsigned sum() const noexcept;

    friend bool operator==(const Partition &, const Partition &) = default;
    friend auto operator<=>(const Partition &, const Partition &) = default;
};

// nullopt means no gap constraint.
using GapBound = std::optional<unsigned>;

// Partitions of n into distinct parts with largest - smallest <= bound - 1,
// in decreasing lexicographic order of the part sequence.
std::vector<Partition> partitions_distinct(unsigned n, GapBound bound = std::nullopt);

// Signed sum of smallest parts over P(n, bound): odd-length partitions count
// positively, even-length negatively. Zero for n <= 0.
long t_stat(long n, GapBound bound = std::nullopt);

// sum_{n=1}^{cap} sigma_m(n) q^n.
MultiSeries lambert_series(unsigned m, const Truncation &tr);

// sum_{n>=1} n^m q^n / (1 - q^n), built from geometric factors.
MultiSeries lambert_series_geometric(unsigned m, const Truncation &tr);

// sum_{k>=1} q^k / (1 - q^{2k}).
MultiSeries odd_divisor_series(const Truncation &tr);

} // namespace qdiv
