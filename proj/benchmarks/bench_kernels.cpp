#include <benchmark/benchmark.h>

#include "fresnelkit/fracrod.hpp"
#include "fresnelkit/plates.hpp"
#include "fresnelkit/pseudo.hpp"
#include "fresnelkit/quad.hpp"
#include "fresnelkit/rod.hpp"
#include "fresnelkit/specfun.hpp"
#include "fresnelkit/subord.hpp"

namespace fk = fresnelkit;

static void BM_FresnelCS(benchmark::State& s) {
    double x = 0.1;
    for (auto _ : s) {
        benchmark::DoNotOptimize(fk::fresnel_cs(x));
        x = x > 20 ? 0.1 : x + 0.37;
    }
}
BENCHMARK(BM_FresnelCS);

static void BM_AiryComplex(benchmark::State& s) {
    const fk::cplx z(3, 2);
    for (auto _ : s) benchmark::DoNotOptimize(fk::airy_ai(z));
}
BENCHMARK(BM_AiryComplex);

static void BM_MittagLeffler(benchmark::State& s) {
    for (auto _ : s) benchmark::DoNotOptimize(fk::mittag_leffler(0.75, fk::cplx(0, 4)));
}
BENCHMARK(BM_MittagLeffler);

static void BM_HalflineElastic(benchmark::State& s) {
    const auto b = fk::BoundarySpec::elastic(1.0, 1.0);
    for (auto _ : s) benchmark::DoNotOptimize(fk::halfline_solution(0.7, 1.3, b));
}
BENCHMARK(BM_HalflineElastic);

static void BM_FiniteRod(benchmark::State& s) {
    const auto b = fk::BoundarySpec::finite_reflecting(0.5, 1.0);
    const int K = static_cast<int>(s.range(0));
    for (auto _ : s) benchmark::DoNotOptimize(fk::finite_rod_solution(0.3, 1.0, b, K));
}
BENCHMARK(BM_FiniteRod)->Arg(10)->Arg(50);

static void BM_U2nuSeries(benchmark::State& s) {
    const auto o = fk::FracOrder::make(0.6);
    for (auto _ : s) benchmark::DoNotOptimize(fk::u2nu_series(2.0, 1.0, o));
}
BENCHMARK(BM_U2nuSeries);

static void BM_U2nuWright(benchmark::State& s) {
    const auto o = fk::FracOrder::make(0.6);
    for (auto _ : s) benchmark::DoNotOptimize(fk::u2nu_wright(6.0, 1.0, o));
}
BENCHMARK(BM_U2nuWright);

static void BM_DiskVibration(benchmark::State& s) {
    const auto d = fk::DiskSpec::make(1.0);
    for (auto _ : s) benchmark::DoNotOptimize(fk::disk_vibration_kernels(0.4, 50.0, d));
}
BENCHMARK(BM_DiskVibration);

static void BM_CylinderMeasure(benchmark::State& s) {
    const auto c = fk::CylinderSet::make({0.5, 1.3}, {{-1, 1}, {-0.5, 2}});
    for (auto _ : s) benchmark::DoNotOptimize(fk::cylinder_measure(c));
}
BENCHMARK(BM_CylinderMeasure)->Unit(benchmark::kMillisecond);

static void BM_IteratedDensity(benchmark::State& s) {
    const auto d = fk::IterationDepth::make(static_cast<int>(s.range(0)));
    for (auto _ : s) benchmark::DoNotOptimize(fk::iterated_density(1.0, 1.0, d));
}
BENCHMARK(BM_IteratedDensity)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

static void BM_OscillatoryTail(benchmark::State& s) {
    const auto amp = fk::Amplitude::exponential([](double w) { return std::exp(-w); }, 1.0);
    for (auto _ : s) benchmark::DoNotOptimize(fk::integrate_oscillatory(amp, 1.0, 0.0, INFINITY, 1e-10));
}
BENCHMARK(BM_OscillatoryTail);
BENCHMARK_MAIN();
