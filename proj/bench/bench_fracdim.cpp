// Optimized kernels vs the serial reference transcription, and parallel vs
// single-thread window tracking.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <cstdint>
#include <span>
#include <vector>

#include "fracdim/estimators.hpp"
#include "fracdim/reference.hpp"
#include "fracdim/tracking.hpp"

namespace {

std::vector<double> walk(std::size_t n) {
  std::vector<double> x(n);
  std::uint64_t s = 0x9e3779b97f4a7c15ULL;
  double acc = 0.0;
  for (auto& v : x) {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    acc += 2.0 * (static_cast<double>(s >> 11) * 0x1p-53) - 1.0;
    v = acc;
  }
  return x;
}

const std::vector<double>& series16k() {
  static const std::vector<double> x = walk(16384);
  return x;
}

fracdim::EstimatorConfig config(int k_max, double alpha = 0.0) {
  fracdim::EstimatorConfig cfg;
  cfg.k_max = k_max;
  cfg.alpha = alpha;
  return cfg;
}

}  // namespace

static void BM_higuchi_optimized(benchmark::State& state) {
  const auto& x = series16k();
  const auto cfg = config(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fracdim::higuchi_profile(std::span<const double>(x), cfg));
  }
}
BENCHMARK(BM_higuchi_optimized)->Arg(32)->Arg(128);

static void BM_higuchi_reference(benchmark::State& state) {
  const auto& x = series16k();
  const auto cfg = config(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fracdim::reference::higuchi_profile(std::span<const double>(x), cfg));
  }
}
BENCHMARK(BM_higuchi_reference)->Arg(32)->Arg(128);

static void BM_bk_optimized(benchmark::State& state) {
  const auto& x = series16k();
  const auto cfg = config(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fracdim::bk_profile(std::span<const double>(x), cfg));
  }
}
BENCHMARK(BM_bk_optimized)->Arg(128);

static void BM_bk_reference(benchmark::State& state) {
  const auto& x = series16k();
  const auto cfg = config(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fracdim::reference::bk_profile(std::span<const double>(x), cfg));
  }
}
BENCHMARK(BM_bk_reference)->Arg(128);

static void BM_pursuit_optimized(benchmark::State& state) {
  const auto& x = series16k();
  const auto cfg = config(static_cast<int>(state.range(0)), 1.0 / 16384.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fracdim::pursuit_profile(std::span<const double>(x), cfg));
  }
}
BENCHMARK(BM_pursuit_optimized)->Arg(32)->Arg(128);

static void BM_pursuit_reference(benchmark::State& state) {
  const auto& x = series16k();
  const auto cfg = config(static_cast<int>(state.range(0)), 1.0 / 16384.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fracdim::reference::pursuit_profile(std::span<const double>(x), cfg));
  }
}
BENCHMARK(BM_pursuit_reference)->Arg(32)->Arg(128);

static void BM_track(benchmark::State& state) {
  const fracdim::TimeSeries x(walk(8192));
  fracdim::TrackingConfig cfg;
  cfg.window = 1024;
  cfg.stride = 64;
  cfg.method = fracdim::Method::higuchi;
  cfg.est_cfg.k_max = 64;
  // range 0 selects the machine's full parallelism
  const int threads =
      state.range(0) == 0 ? omp_get_num_procs() : static_cast<int>(state.range(0));
  omp_set_num_threads(threads);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fracdim::track(x, cfg));
  }
  omp_set_num_threads(omp_get_num_procs());
}
BENCHMARK(BM_track)->Arg(1)->Arg(0)->ArgName("threads");

BENCHMARK_MAIN();
