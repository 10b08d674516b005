// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <qdiv/identities.hpp>
#include <qdiv/qtools.hpp>

using namespace qdiv;

namespace
{

// Dense bivariate operand: (q;q)_n / (xq;q)_n at the given box.
MultiSeries operand(std::uint32_t qcap, std::uint32_t xcap)
{
    const Truncation tr{{Var::q, qcap}, {Var::x, xcap}};
    const auto n = static_cast<unsigned>(qcap / 4);
    auto s = pochhammer(mono(Var::q), mono(Var::q), n, tr);
    return div_pochhammer(s, mono(1, {{Var::x, 1}, {Var::q, 1}}), mono(Var::q), n);
}

void BM_mul_serial(benchmark::State &state)
{
    const auto s = operand(static_cast<std::uint32_t>(state.range(0)), 8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mul_serial(s, s));
    }
    state.counters["terms"] = static_cast<double>(s.size());
}

void BM_mul_parallel(benchmark::State &state)
{
    const auto s = operand(static_cast<std::uint32_t>(state.range(0)), 8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mul_parallel(s, s));
    }
    state.counters["terms"] = static_cast<double>(s.size());
}

std::vector<IdentityInstance> sweep_instances()
{
    std::vector<IdentityInstance> all;
    for (auto id : {IdentityId::NEW, IdentityId::PRODNEW, IdentityId::DILCHNEW}) {
        auto part = expand(id, {}, info(id).default_trunc, true);
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

void BM_sweep(benchmark::State &state)
{
    const auto instances = sweep_instances();
    const int jobs = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_all(instances, jobs));
    }
    state.counters["instances"] = static_cast<double>(instances.size());
}

} // namespace

BENCHMARK(BM_mul_serial)->Arg(24)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mul_parallel)->Arg(24)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
// 1 runs the sweep serially, 0 uses every available thread.
BENCHMARK(BM_sweep)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
