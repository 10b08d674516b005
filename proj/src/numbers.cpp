#include <qdiv/numbers.hpp>

#include <numeric>
#include <stdexcept>

namespace qdiv
{

mpz_class sigma(unsigned m, std::uint64_t n)
{
    if (n == 0) {
        throw std::invalid_argument("sigma requires n >= 1");
    }
    auto power = [m](std::uint64_t d) {
        mpz_class r;
        mpz_ui_pow_ui(r.get_mpz_t(), d, m);
        return r;
    };
    mpz_class total = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) {
            continue;
        }
        total += power(d);
        if (d * d != n) {
            total += power(n / d);
        }
    }
    return total;
}

unsigned divisor_count_bounded(std::uint64_t n, std::uint64_t bound)
{
    unsigned c = 0;
    for (std::uint64_t d = 1; d <= n && d <= bound; ++d) {
        c += n % d == 0 ? 1u : 0u;
    }
    return c;
}

unsigned odd_divisor_count(std::uint64_t n)
{
    unsigned c = 0;
    for (std::uint64_t d = 1; d <= n; d += 2) {
        c += n % d == 0 ? 1u : 0u;
    }
    return c;
}

unsigned Partition::sum() const noexcept
{
    return std::accumulate(parts.begin(), parts.end(), 0u);
}

namespace
{

// Appends distinct parts in [floor, max_part], decreasing, summing to
// `remaining`.
void extend(unsigned remaining, unsigned max_part, unsigned floor, Partition &current, std::vector<Partition> &out)
{
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= floor; --part) {
        // Distinct parts in [floor, part] sum to at most `reach`.
        const unsigned reach = (part + floor) * (part - floor + 1) / 2;
        if (reach < remaining) {
            break;
        }
        current.parts.push_back(part);
        extend(remaining - part, part - 1, floor, current, out);
        current.parts.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_distinct(unsigned n, GapBound bound)
{
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    if (bound && *bound == 0) {
        return out;
    }
    Partition current;
    for (unsigned largest = n; largest >= 1; --largest) {
        const unsigned floor = bound && largest > *bound - 1 ? largest - (*bound - 1) : 1u;
        current.parts.push_back(largest);
        extend(n - largest, largest - 1, floor, current, out);
        current.parts.pop_back();
    }
    return out;
}

long t_stat(long n, GapBound bound)
{
    if (n <= 0) {
        return 0;
    }
    long t = 0;
    for (const auto &pi : partitions_distinct(static_cast<unsigned>(n), bound)) {
        const long s = pi.smallest();
        t += pi.length() % 2 == 1 ? s : -s;
    }
    return t;
}

MultiSeries lambert_series(unsigned m, const Truncation &tr)
{
    std::vector<MultiSeries::Term> terms;
    for (std::uint32_t n = 1; n <= tr.cap(Var::q); ++n) {
        terms.emplace_back(MultiSeries::pack(exps({{Var::q, n}})), Rational(sigma(m, n)));
    }
    return MultiSeries::from_terms(std::move(terms), tr);
}

MultiSeries lambert_series_geometric(unsigned m, const Truncation &tr)
{
    MultiSeries s(tr);
    for (std::uint32_t n = 1; n <= tr.cap(Var::q); ++n) {
        mpz_class c;
        mpz_ui_pow_ui(c.get_mpz_t(), n, m);
        s += mul_monomial(geometric_factor(n, tr), mono(Rational(c), {{Var::q, n}}));
    }
    return s;
}

MultiSeries odd_divisor_series(const Truncation &tr)
{
    MultiSeries s(tr);
    for (std::uint32_t k = 1; k <= tr.cap(Var::q); ++k) {
        s += mul_monomial(geometric_factor(2 * static_cast<long>(k), tr), mono(Var::q, k));
    }
    return s;
}

} // namespace qdiv
