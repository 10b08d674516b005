// Multiplication kernels: a serial reference and an OpenMP version.

#include <qdiv/series.hpp>

#include <algorithm>
#include <unordered_map>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace qdiv
{

namespace
{

using Key = MultiSeries::Key;
using Acc = std::unordered_map<Key, Rational>;

constexpr Key field_mask = (Key{1} << MultiSeries::key_bits) - 1u;

// Below this many term pairs the thread start-up dominates.
constexpr std::size_t parallel_threshold = 1u << 16;

bool fits(Key k, const Exponents &caps) noexcept
{
    for (std::size_t v = 0; v < num_vars; ++v) {
        if (((k >> (v * MultiSeries::key_bits)) & field_mask) > caps[v]) {
            return false;
        }
    }
    return true;
}

void accumulate_range(Acc &acc, const MultiSeries::Term *first, const MultiSeries::Term *last,
                      const std::vector<MultiSeries::Term> &rhs, const Exponents &caps)
{
    Rational tmp;
    for (auto it = first; it != last; ++it) {
        for (const auto &[kb, cb] : rhs) {
            const Key k = it->first + kb;
            if (!fits(k, caps)) {
                continue;
            }
            mpq_mul(tmp.get_mpq_t(), it->second.get_mpq_t(), cb.get_mpq_t());
            auto [pos, inserted] = acc.try_emplace(k);
            if (inserted) {
                mpq_swap(pos->second.get_mpq_t(), tmp.get_mpq_t());
            } else {
                mpq_add(pos->second.get_mpq_t(), pos->second.get_mpq_t(), tmp.get_mpq_t());
            }
        }
    }
}

std::vector<MultiSeries::Term> drain(Acc &acc)
{
    std::vector<MultiSeries::Term> out;
    out.reserve(acc.size());
    for (auto &[k, c] : acc) {
        if (sgn(c) != 0) {
            out.emplace_back(k, std::move(c));
        }
    }
    return out;
}

} // namespace

MultiSeries mul_serial(const MultiSeries &a, const MultiSeries &b)
{
    const Truncation tr = min(a.truncation(), b.truncation());
    Acc acc;
    acc.reserve(std::min<std::size_t>(a.size() * b.size(), 1u << 20));
    const auto &lhs = a.terms();
    accumulate_range(acc, lhs.data(), lhs.data() + lhs.size(), b.terms(), tr.caps());
    return MultiSeries::from_terms(drain(acc), tr);
}

MultiSeries mul_parallel(const MultiSeries &a, const MultiSeries &b)
{
    const Truncation tr = min(a.truncation(), b.truncation());
    const auto &lhs = a.terms();
    const auto &rhs = b.terms();

#if defined(_OPENMP)
    const int nthreads = omp_in_parallel() ? 1 : omp_get_max_threads();
#else
    const int nthreads = 1;
#endif
    std::vector<Acc> partial(static_cast<std::size_t>(nthreads));

#pragma omp parallel for schedule(static) num_threads(nthreads)
    for (int tid = 0; tid < nthreads; ++tid) {
        const std::size_t n = lhs.size();
        const std::size_t lo = n * static_cast<std::size_t>(tid) / static_cast<std::size_t>(nthreads);
        const std::size_t hi = n * static_cast<std::size_t>(tid + 1) / static_cast<std::size_t>(nthreads);
        accumulate_range(partial[static_cast<std::size_t>(tid)], lhs.data() + lo, lhs.data() + hi, rhs,
                         tr.caps());
    }

    // Deterministic merge in thread order.
    std::vector<MultiSeries::Term> all;
    for (auto &p : partial) {
        auto part = drain(p);
        all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return MultiSeries::from_terms(std::move(all), tr);
}

MultiSeries mul(const MultiSeries &a, const MultiSeries &b)
{
    // The longer operand is the one partitioned across threads.
    const MultiSeries &outer = a.size() >= b.size() ? a : b;
    const MultiSeries &inner = a.size() >= b.size() ? b : a;
    if (inner.size() == 1 && inner.terms().front().first == 0) {
        return outer.truncated(inner.truncation()) * inner.terms().front().second;
    }
#if defined(_OPENMP)
    if (outer.size() * inner.size() >= parallel_threshold && !omp_in_parallel() && omp_get_max_threads() > 1) {
        return mul_parallel(outer, inner);
    }
#endif
    return mul_serial(outer, inner);
}

} // namespace qdiv
