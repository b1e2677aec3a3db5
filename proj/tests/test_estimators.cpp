#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "fracdim/estimators.hpp"
#include "fracdim/fbm.hpp"
#include "fracdim/reference.hpp"
#include "helpers.hpp"

using namespace fracdim;

namespace {

// (k, value) pairs computed independently at 40-digit precision from the
// textbook definitions, on the hand-typed series in helpers.hpp.
struct KernelOracle {
  int k;
  double value;
};

constexpr KernelOracle kHiguchiOracle[] = {
    {1, 41.21},
    {2, 8.353181818181818},
    {3, 3.187142857142857},
    {5, 1.01338},
    {6, 1.0868209876543210},
};

constexpr KernelOracle kBkOracle[] = {
    {1, 41.21}, {2, 6.235}, {3, 1.3811111111111111}, {4, 0.299375}, {6, 0.045},
};

struct PursuitOracle {
  int k;
  double alpha;
  double weighted;  // default normalization
  double literal;   // alternate normalization (per-subsequence / M)
};

constexpr PursuitOracle kPursuitOracle[] = {
    {1, 0.25, 37.101885510112068, 1.6131254569613943},
    {2, 0.25, 8.4873294303102714, 0.77157540275547922},
    {3, 0.60, 4.6262377012433537, 0.66089110017762196},
    {5, 0.90, 0.76544323839171999, 0.19703442659704065},
};

constexpr double kHiguchiDim = 2.1181525441952821;   // k_max = 6
constexpr double kBkDim = 3.7930832579120962;        // k_max = 6
constexpr double kPursuitDim = 2.1188703670003798;   // k_max = 6, alpha = 0.25

}  // namespace

TEST_SUITE("estimators") {

TEST_CASE("higuchi kernel matches the independent oracle") {
  const std::vector<double> x = testutil::oracle_series();
  for (const auto& o : kHiguchiOracle) {
    CHECK(detail::higuchi_mean_length(x, o.k) == doctest::Approx(o.value).epsilon(1e-13));
    CHECK(reference::higuchi_mean_length(x, o.k) == doctest::Approx(o.value).epsilon(1e-13));
  }
}

TEST_CASE("bk kernel matches the independent oracle") {
  const std::vector<double> x = testutil::oracle_series();
  for (const auto& o : kBkOracle) {
    CHECK(detail::bk_length(x, o.k) == doctest::Approx(o.value).epsilon(1e-13));
    CHECK(reference::bk_length(x, o.k) == doctest::Approx(o.value).epsilon(1e-13));
  }
}

TEST_CASE("pursuit kernel matches the independent oracle in both normalizations") {
  const std::vector<double> x = testutil::oracle_series();
  for (const auto& o : kPursuitOracle) {
    CHECK(detail::pursuit_mean_length(x, o.k, o.alpha) ==
          doctest::Approx(o.weighted).epsilon(1e-13));
    CHECK(detail::pursuit_mean_length(x, o.k, o.alpha, true) ==
          doctest::Approx(o.literal).epsilon(1e-13));
    CHECK(reference::pursuit_mean_length(x, o.k, o.alpha) ==
          doctest::Approx(o.weighted).epsilon(1e-13));
    CHECK(reference::pursuit_mean_length(x, o.k, o.alpha, true) ==
          doctest::Approx(o.literal).epsilon(1e-13));
  }
}

TEST_CASE("fitted dimensions match the independent oracle") {
  const TimeSeries x(testutil::oracle_series());
  EstimatorConfig cfg;
  cfg.k_max = 6;
  CHECK(estimate_dimension(x, Method::higuchi, cfg).dimension ==
        doctest::Approx(kHiguchiDim).epsilon(1e-12));
  CHECK(estimate_dimension(x, Method::bk, cfg).dimension ==
        doctest::Approx(kBkDim).epsilon(1e-12));
  cfg.alpha = 0.25;
  CHECK(estimate_dimension(x, Method::pursuit, cfg).dimension ==
        doctest::Approx(kPursuitDim).epsilon(1e-12));
}

TEST_CASE("alternating unit series: closed-form lengths") {
  // x = 0,1,0,1: at k = 1 every increment is 1, so <L(1)> = N - 1 = 3.
  const std::vector<double> x{0.0, 1.0, 0.0, 1.0};
  CHECK(detail::higuchi_mean_length(x, 1) == 3.0);
  CHECK(detail::pursuit_mean_length(x, 1, 0.5) == 3.0);
  CHECK(detail::pursuit_mean_length(x, 1, 0.5, true) == 1.0);  // divided by M = 3
  CHECK(reference::higuchi_mean_length(x, 1) == 3.0);
}

TEST_CASE("bk block-mean example") {
  // blocks of 2: means 1, 2, 4; L = (|2-1| + |4-2|) / 2.
  const std::vector<double> x{1.0, 1.0, 2.0, 2.0, 4.0, 4.0};
  CHECK(detail::bk_length(x, 2) == 1.5);
  CHECK(reference::bk_length(x, 2) == 1.5);
}

TEST_CASE("ramp has dimension exactly 1 for higuchi and pursuit") {
  std::vector<double> ramp(256);
  for (std::size_t i = 0; i < ramp.size(); ++i) ramp[i] = static_cast<double>(i + 1);
  const TimeSeries x(ramp);
  EstimatorConfig cfg;
  cfg.k_max = 8;
  CHECK(std::fabs(estimate_dimension(x, Method::higuchi, cfg).dimension - 1.0) <= 1e-12);
  cfg.alpha = 0.35;
  CHECK(std::fabs(estimate_dimension(x, Method::pursuit, cfg).dimension - 1.0) <= 1e-12);
}

TEST_CASE("ramp bk dimension approaches 1 at small k_max") {
  // Block means of a ramp step by exactly k, but J - 1 jumps instead of J
  // bias the fit; the bias vanishes as k_max/N -> 0.
  std::vector<double> ramp(4096);
  for (std::size_t i = 0; i < ramp.size(); ++i) ramp[i] = static_cast<double>(i + 1);
  EstimatorConfig cfg;
  cfg.k_max = 16;
  const double d = estimate_dimension(TimeSeries(ramp), Method::bk, cfg).dimension;
  CHECK(std::fabs(d - 1.0) < 0.02);
}

TEST_CASE("pursuit with alpha 0 reduces to higuchi") {
  const std::vector<double> x = testutil::random_series(101, 1024);
  EstimatorConfig cfg;
  cfg.k_max = 32;
  const LengthProfile h = higuchi_profile(x, cfg);
  cfg.alpha = 0.0;
  const LengthProfile p = pursuit_profile(x, cfg);
  REQUIRE(h.entries.size() == p.entries.size());
  for (std::size_t i = 0; i < h.entries.size(); ++i) {
    CHECK(h.entries[i].k == p.entries[i].k);
    CHECK(testutil::rel_diff(h.entries[i].length, p.entries[i].length) <= 1e-12);
  }
}

TEST_CASE("optimized kernels agree with the serial reference on random input") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    for (std::size_t n : {16u, 33u, 64u}) {
      const std::vector<double> x = testutil::random_series(seed, n);
      const int k_top = static_cast<int>(std::min<std::size_t>(8, n - 1));
      for (int k = 1; k <= k_top; ++k) {
        CHECK(testutil::rel_diff(detail::higuchi_mean_length(x, k),
                                 reference::higuchi_mean_length(x, k)) <= 1e-10);
        CHECK(testutil::rel_diff(detail::bk_length(x, k), reference::bk_length(x, k)) <= 1e-10);
        for (double alpha : {0.0, 0.3, 0.9}) {
          CHECK(testutil::rel_diff(detail::pursuit_mean_length(x, k, alpha),
                                   reference::pursuit_mean_length(x, k, alpha)) <= 1e-10);
          CHECK(testutil::rel_diff(detail::pursuit_mean_length(x, k, alpha, true),
                                   reference::pursuit_mean_length(x, k, alpha, true)) <= 1e-10);
        }
      }
    }
  }
}

TEST_CASE("optimized profiles agree with reference profiles") {
  const std::vector<double> x = testutil::random_walk(7, 64);
  EstimatorConfig cfg;
  cfg.k_max = 8;
  const LengthProfile a = higuchi_profile(x, cfg);
  const LengthProfile b = reference::higuchi_profile(x, cfg);
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].k == b.entries[i].k);
    CHECK(testutil::rel_diff(a.entries[i].length, b.entries[i].length) <= 1e-10);
  }
  cfg.alpha = 0.4;
  const LengthProfile c = pursuit_profile(x, cfg);
  const LengthProfile d = reference::pursuit_profile(x, cfg);
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    CHECK(testutil::rel_diff(c.entries[i].length, d.entries[i].length) <= 1e-10);
  }
}

TEST_CASE("parallel profile is deterministic and matches the reference at scale") {
  const std::vector<double> x = testutil::random_walk(23, 32768);
  EstimatorConfig cfg;
  cfg.k_max = 128;  // large enough to take the parallel path
  const LengthProfile a = higuchi_profile(x, cfg);
  const LengthProfile b = higuchi_profile(x, cfg);
  REQUIRE(a.entries.size() == 128);
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].length == b.entries[i].length);  // bitwise repeatable
  }
  const LengthProfile r = reference::higuchi_profile(x, cfg);
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(testutil::rel_diff(a.entries[i].length, r.entries[i].length) <= 1e-10);
  }
}

TEST_CASE("fitted dimension is invariant under scaling and offset") {
  const std::vector<double> x = testutil::random_walk(5, 512);
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = 3.5 * x[i] - 7.0;
  EstimatorConfig cfg;
  cfg.k_max = 16;
  for (Method m : {Method::higuchi, Method::bk, Method::pursuit}) {
    EstimatorConfig c = cfg;
    if (m == Method::pursuit) c.alpha = 0.2;
    const double dx = estimate_dimension(TimeSeries(x), m, c).dimension;
    const double dy = estimate_dimension(TimeSeries(y), m, c).dimension;
    CHECK(std::fabs(dx - dy) < 1e-9);
  }
}

TEST_CASE("larger alpha emphasizes recent increments") {
  // Increments grow with time (d_i = i), so any weighting tilted toward the
  // newest increments must raise the weighted mean length at k = 1.
  std::vector<double> x(40);
  for (std::size_t j = 1; j < x.size(); ++j) {
    x[j] = x[j - 1] + static_cast<double>(j);
  }
  const double plain = detail::higuchi_mean_length(x, 1);
  double prev = plain;
  for (double alpha : {0.2, 0.5, 0.8}) {
    const double w = detail::pursuit_mean_length(x, 1, alpha);
    CHECK(w > prev);
    prev = w;
  }
}

TEST_CASE("schedules") {
  CHECK(detail::schedule_ks(KSchedule::all_integers, 5) == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(detail::schedule_ks(KSchedule::powers_of_two, 20) == std::vector<int>{1, 2, 4, 8, 16});
  const std::vector<double> x = testutil::random_walk(9, 256);
  EstimatorConfig cfg;
  cfg.k_max = 20;
  cfg.schedule = KSchedule::powers_of_two;
  CHECK(estimate_dimension(x, Method::higuchi, cfg).n_points == 5);
}

TEST_CASE("configuration validation") {
  const std::vector<double> x = testutil::random_series(3, 128);
  EstimatorConfig cfg;
  cfg.k_max = 1;
  CHECK_THROWS_AS(higuchi_profile(x, cfg), ConfigError);
  cfg.k_max = 64;  // 4 * 64 > 128
  CHECK_THROWS_AS(higuchi_profile(x, cfg), ConfigError);
  cfg.k_max = 32;
  cfg.alpha = 1.0;
  CHECK_THROWS_AS(pursuit_profile(x, cfg), ConfigError);
  cfg.alpha = -0.1;
  CHECK_THROWS_AS(pursuit_profile(x, cfg), ConfigError);
  cfg.alpha = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(pursuit_profile(x, cfg), ConfigError);
}

TEST_CASE("constant series is degenerate at scale 1") {
  const std::vector<double> x(64, 5.0);
  EstimatorConfig cfg;
  cfg.k_max = 8;
  for (Method m : {Method::higuchi, Method::bk, Method::pursuit}) {
    EstimatorConfig c = cfg;
    if (m == Method::pursuit) c.alpha = 0.5;
    try {
      estimate_dimension(std::span<const double>(x), m, c);
      FAIL("expected DegenerateDataError");
    } catch (const DegenerateDataError& e) {
      CHECK(e.scale() == 1);
    }
  }
}

TEST_CASE("method names round-trip") {
  CHECK(method_from_name("higuchi") == Method::higuchi);
  CHECK(method_from_name("bk") == Method::bk);
  CHECK(method_from_name("pursuit") == Method::pursuit);
  CHECK(method_name(Method::bk) == std::string("bk"));
  CHECK_THROWS_AS(method_from_name("katz"), ConfigError);
}

TEST_CASE("motion path smoke estimate lands near the theoretical dimension") {
  const TimeSeries path = generate_fbm({0.5, 4096, 7});
  EstimatorConfig cfg;
  cfg.k_max = 64;
  const DimensionEstimate est = estimate_dimension(path, Method::higuchi, cfg);
  CHECK(est.dimension > 1.3);
  CHECK(est.dimension < 1.7);
  CHECK(est.r_squared > 0.95);
  CHECK(est.n_points == 64);
}

}  // TEST_SUITE("estimators")
