#include <benchmark/benchmark.h>

#include "wco/koenigs.hpp"
#include "wco/operators.hpp"

namespace {

using wco::Complex;
using wco::PPFParams;
using wco::TruncatedSeries;
using wco::WeightSequence;

void BM_SeriesMultiply(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const TruncatedSeries f = TruncatedSeries::geometric(1.0, Complex{0.4, 0.3}, n);
    const TruncatedSeries g = TruncatedSeries::geometric(2.0, Complex{-0.5, 0.1}, n);
    for (auto _ : state) {
        auto p = f * g;
        benchmark::DoNotOptimize(p);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SeriesMultiply)->RangeMultiplier(2)->Range(32, 512)->Complexity();

void BM_SeriesCompose(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const TruncatedSeries outer = TruncatedSeries::geometric(1.0, Complex{0.7, 0.1}, n);
    const TruncatedSeries inner =
        TruncatedSeries::identity(n) * TruncatedSeries::geometric(0.5, 0.3, n);
    for (auto _ : state) {
        auto c = compose(outer, inner);
        benchmark::DoNotOptimize(c);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SeriesCompose)->RangeMultiplier(2)->Range(16, 128)->Complexity();

void BM_SeriesRevert(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const TruncatedSeries s =
        TruncatedSeries::identity(n) * TruncatedSeries::geometric(1.0, 0.6, n);
    for (auto _ : state) {
        auto r = revert(s);
        benchmark::DoNotOptimize(r);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SeriesRevert)->RangeMultiplier(2)->Range(16, 128)->Complexity();

void BM_BuildMatrix(benchmark::State& state) {
    const std::size_t N = static_cast<std::size_t>(state.range(0));
    const PPFParams p{0.3, 0.4, 1.0, 1.0};
    const WeightSequence w = WeightSequence::beta_kappa(p.kappa, N - 1);
    const TruncatedSeries phi = wco::ppf_phi_series(p, N - 1);
    const TruncatedSeries psi = wco::ppf_psi_series(p, N - 1);
    for (auto _ : state) {
        auto M = build_matrix(phi, psi, w, N);
        benchmark::DoNotOptimize(M);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildMatrix)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_Spectrum(benchmark::State& state) {
    const std::size_t N = static_cast<std::size_t>(state.range(0));
    const PPFParams p{0.3, 0.4, 1.0, 1.0};
    const WeightSequence w = WeightSequence::beta_kappa(p.kappa, N - 1);
    const wco::OperatorMatrix M =
        build_matrix(wco::ppf_phi_series(p, N - 1), wco::ppf_psi_series(p, N - 1), w, N);
    for (auto _ : state) {
        auto eig = spectrum(M);
        benchmark::DoNotOptimize(eig);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Spectrum)->RangeMultiplier(2)->Range(16, 128)->Complexity();

void BM_KoenigsIterate(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const wco::MobiusMap phi{0.5, 0.0, -0.3, 1.0};
    const wco::FixedPointInfo fp = wco::fixed_point_in_disk(phi);
    for (auto _ : state) {
        auto kr = wco::koenigs_iterate(phi, fp, n, 400);
        benchmark::DoNotOptimize(kr);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KoenigsIterate)->RangeMultiplier(2)->Range(16, 128)->Complexity();

}  // namespace

BENCHMARK_MAIN();
