#include <benchmark/benchmark.h>

#include "plumbline/alkanes.hpp"
#include "plumbline/curve_periods.hpp"
#include "plumbline/relations.hpp"
#include "plumbline/surfaces.hpp"

using namespace plumbline;
using Q = GaussianRational;

namespace {

// Dense-ish jet in n variables: (1 + t_1 + ... + t_n)^k truncated.
template <class F>
Jet<F> power_of_linear(const JetRing<F>& ring, int k)
{
    Jet<F> base = ring.one();
    for (std::size_t v = 0; v < ring.num_variables(); ++v) base += ring.variable(v) * F(static_cast<long>(v + 2));
    Jet<F> out = ring.one();
    for (int i = 0; i < k; ++i) out = out * base;
    return out;
}

void BM_JetMultiplyExact(benchmark::State& state)
{
    const int order = static_cast<int>(state.range(0));
    const JetRing<Q> ring({"t1", "t2", "t3", "t4"}, order);
    const auto a = power_of_linear(ring, order / 2), b = power_of_linear(ring, order / 2 + 1);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
    state.counters["terms"] = static_cast<double>(a.size());
}
BENCHMARK(BM_JetMultiplyExact)->Arg(4)->Arg(8)->Arg(12)->Arg(17)->Unit(benchmark::kMillisecond);

void BM_JetMultiplyFloat(benchmark::State& state)
{
    const int order = static_cast<int>(state.range(0));
    const JetRing<Complex> ring({"t1", "t2", "t3", "t4"}, order);
    const auto a = power_of_linear(ring, order / 2), b = power_of_linear(ring, order / 2 + 1);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_JetMultiplyFloat)->Arg(8)->Arg(17)->Unit(benchmark::kMillisecond);

void BM_EnumerateAlkanes(benchmark::State& state)
{
    const int g = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_alkanes(g));
}
BENCHMARK(BM_EnumerateAlkanes)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

void BM_AsymptoticOcticG4(benchmark::State& state)
{
    Rng rng(1);
    const auto s = random_star_config<Q>(4, rng);
    for (auto _ : state) benchmark::DoNotOptimize(verify_asymptotic_vanishing(s, ScaleMode::ExactUnits, 7));
}
BENCHMARK(BM_AsymptoticOcticG4)->Unit(benchmark::kMillisecond);

void BM_ConeOcticsExact(benchmark::State& state)
{
    const int g = static_cast<int>(state.range(0));
    Rng rng(2);
    const auto cone = plucker_to_cone(plucker_coordinates(random_frame<Q>(g, rng)));
    const auto idx = octic_indices(g);
    for (auto _ : state)
        for (const auto& q : idx) benchmark::DoNotOptimize(octic_eval(cone.tau_bar, q));
}
BENCHMARK(BM_ConeOcticsExact)->Arg(4)->Arg(6)->Arg(8);

void BM_EGammaSpan(benchmark::State& state)
{
    const int h = static_cast<int>(state.range(0));
    Rng rng(3);
    const auto model = random_surface_model<Q>(chain_alkane(h), rng);
    for (auto _ : state) benchmark::DoNotOptimize(span_dimension_E_Gamma(model));
}
BENCHMARK(BM_EGammaSpan)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMicrosecond);

} // namespace
BENCHMARK_MAIN();
