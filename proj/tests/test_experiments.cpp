#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "fracdim/csv.hpp"
#include "fracdim/experiments.hpp"
#include "helpers.hpp"

using namespace fracdim;

namespace {

StaticExperimentSpec small_static() {
  StaticExperimentSpec spec;
  spec.lengths = {512};
  spec.trials = 3;
  spec.base_seed = 77;
  spec.est_cfg.k_max = 32;  // 4 * 32 <= 512
  return spec;
}

TrackingExperimentSpec small_tracking() {
  TrackingExperimentSpec spec;
  spec.half_length = 1024;
  spec.window = 256;
  spec.trials = 2;
  spec.stride = 8;
  spec.base_seed = 5;
  spec.est_cfg.k_max = 32;  // 4 * 32 <= 256
  spec.conv_hold = 16;      // effective hold = 2 at stride 8
  return spec;
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name)
      : path((std::filesystem::temp_directory_path() / name).string()) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_SUITE("experiments") {

TEST_CASE("static run produces one summarized cell per length and method") {
  const StaticReport report = run_static(small_static());
  REQUIRE(report.cells.size() == 3);
  REQUIRE(report.trial_seeds == std::vector<std::uint64_t>{77, 78, 79});
  for (const StaticCell& c : report.cells) {
    CHECK(c.length == 512);
    CHECK(c.ok_count == 3);
    CHECK_FALSE(c.partial());
    CHECK(c.stats.trials == 3);
    CHECK(std::isfinite(c.stats.mean));
    CHECK(c.stats.std_dev >= 0.0);
    REQUIRE(c.trial_values.size() == 3);
    for (const auto& v : c.trial_values) CHECK(v.has_value());
  }
  CHECK(report.cell(512, Method::bk).method == Method::bk);
  CHECK_THROWS_AS(report.cell(1024, Method::bk), ConfigError);
}

TEST_CASE("static trials share one path per seed across methods") {
  // With alpha pinned to 0 the pursuit estimator degenerates to higuchi, so
  // matched seeds must reproduce higuchi's values trial by trial.
  StaticExperimentSpec spec = small_static();
  spec.pursuit_alpha = 0.0;
  const StaticReport report = run_static(spec);
  const StaticCell& h = report.cell(512, Method::higuchi);
  const StaticCell& p = report.cell(512, Method::pursuit);
  for (std::size_t t = 0; t < 3; ++t) {
    REQUIRE(h.trial_values[t].has_value());
    REQUIRE(p.trial_values[t].has_value());
    CHECK(testutil::rel_diff(*h.trial_values[t], *p.trial_values[t]) <= 1e-12);
  }
}

TEST_CASE("static run is deterministic") {
  const StaticReport a = run_static(small_static());
  const StaticReport b = run_static(small_static());
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    CHECK(a.cells[i].trial_values == b.cells[i].trial_values);
  }
}

TEST_CASE("static estimates sit near the theoretical dimension") {
  StaticExperimentSpec spec;
  spec.lengths = {4096};
  spec.trials = 8;
  spec.base_seed = 3;
  spec.est_cfg.k_max = 64;
  const StaticReport report = run_static(spec);
  for (Method m : {Method::higuchi, Method::pursuit}) {
    const double mean = report.cell(4096, m).stats.mean;
    CHECK(mean > 1.4);
    CHECK(mean < 1.6);
  }
}

TEST_CASE("static spec validation") {
  StaticExperimentSpec spec = small_static();
  spec.trials = 0;
  CHECK_THROWS_AS(run_static(spec), ConfigError);
  spec = small_static();
  spec.lengths = {};
  CHECK_THROWS_AS(run_static(spec), ConfigError);
  spec = small_static();
  spec.lengths = {64};  // below 4 * k_max
  CHECK_THROWS_AS(run_static(spec), ConfigError);
  spec = small_static();
  spec.pursuit_alpha = 1.5;
  CHECK_THROWS_AS(run_static(spec), ConfigError);
}

TEST_CASE("default tracking alphas") {
  const std::vector<double> a = default_tracking_alphas(256);
  REQUIRE(a.size() == 4);
  CHECK(a[0] == 1.0 / 256.0);
  CHECK(a[1] == 2.0 / 256.0);
  CHECK(a[2] == 10.0 / (3.0 * 256.0));
  CHECK(a[3] == 4.0 / 256.0);
}

TEST_CASE("tracking run lays out six labeled traces") {
  const TrackingReport report = run_tracking(small_tracking());
  // series length 2 * 1024 - 1, window 256, stride 8
  const std::size_t steps = (2 * 1024 - 1 - 256) / 8 + 1;
  REQUIRE(report.window_starts.size() == steps);
  CHECK(report.window_starts.front() == 1);
  CHECK(report.window_starts.back() == 1 + static_cast<std::int64_t>(steps - 1) * 8);
  REQUIRE(report.traces.size() == 6);
  CHECK(report.traces[0].label == "higuchi");
  CHECK(report.traces[1].label == "bk");
  CHECK(report.traces[2].label == "pursuit_a1");
  CHECK(report.traces[5].label == "pursuit_a4");
  CHECK(report.trace("pursuit_a3").alpha == 10.0 / (3.0 * 256.0));
  CHECK_FALSE(report.trace("higuchi").alpha.has_value());
  CHECK_THROWS_AS(report.trace("nope"), ConfigError);
  for (const TraceSummary& t : report.traces) {
    REQUIRE(t.mean.size() == steps);
    REQUIRE(t.counts.size() == steps);
    REQUIRE(t.per_trial_convergence.size() == 2);
    CHECK(t.final_quarter_std >= 0.0);
    for (int c : t.counts) {
      CHECK(c >= 0);
      CHECK(c <= 2);
    }
  }
  CHECK(report.trial_seeds == std::vector<std::uint64_t>{5, 7});  // masters step by 2
}

TEST_CASE("tracking run is deterministic") {
  const TrackingReport a = run_tracking(small_tracking());
  const TrackingReport b = run_tracking(small_tracking());
  for (std::size_t t = 0; t < a.traces.size(); ++t) {
    CHECK(a.traces[t].mean == b.traces[t].mean);
    CHECK(a.traces[t].convergence_step == b.traces[t].convergence_step);
  }
}

TEST_CASE("tracking spec validation") {
  TrackingExperimentSpec spec = small_tracking();
  spec.window = 4096;  // exceeds 2 * half - 1
  CHECK_THROWS_AS(run_tracking(spec), ConfigError);
  spec = small_tracking();
  spec.alphas = {0.5, 1.0};
  CHECK_THROWS_AS(run_tracking(spec), ConfigError);
  spec = small_tracking();
  spec.trials = 0;
  CHECK_THROWS_AS(run_tracking(spec), ConfigError);
}

TEST_CASE("series csv round-trips bit-exactly") {
  TempFile f("fracdim_test_series.csv");
  std::vector<double> vals = testutil::random_series(31, 64);
  vals[0] = -0.0;
  vals[1] = 1e-300;
  vals[2] = 12345.678901234567;
  vals[3] = -9.87654321e120;
  const TimeSeries original(vals);
  csv::write_series(f.path, original, {"manifest: {}"});
  const TimeSeries back = csv::read_series(f.path);
  REQUIRE(back.size() == original.size());
  for (std::int64_t i = 0; i < back.size(); ++i) {
    CHECK(back[i] == original[i]);
    if (i == 0) CHECK(std::signbit(back[0]));
  }
  const std::string text = testutil::slurp(f.path);
  CHECK(text.find("# manifest: {}") != std::string::npos);
  CHECK(text.find("index,value\n1,-0\n") != std::string::npos);
}

TEST_CASE("series csv rejects malformed input") {
  TempFile f("fracdim_test_bad.csv");
  {
    std::FILE* out = std::fopen(f.path.c_str(), "w");
    REQUIRE(out != nullptr);
    std::fputs("index,value\n1,abc\n", out);
    std::fclose(out);
  }
  CHECK_THROWS_AS(csv::read_series(f.path), ParseError);
  {
    std::FILE* out = std::fopen(f.path.c_str(), "w");
    REQUIRE(out != nullptr);
    std::fputs("time,value\n1,2.0\n", out);
    std::fclose(out);
  }
  CHECK_THROWS_AS(csv::read_series(f.path), ParseError);
  CHECK_THROWS_AS(csv::read_series("/nonexistent/fracdim.csv"), IoError);
}

TEST_CASE("report writers emit the pinned headers and deterministic bytes") {
  const StaticReport sr = run_static(small_static());
  const TrackingReport tr = run_tracking(small_tracking());

  TempFile t1("fracdim_test_table.csv");
  csv::write_static_report(t1.path, sr);
  const std::string table = testutil::slurp(t1.path);
  CHECK(table.find("length,method,mean,std_dev,std_err,trials\n") != std::string::npos);
  CHECK(table.find("512,higuchi,") != std::string::npos);
  CHECK(table.find("512,bk,") != std::string::npos);
  CHECK(table.find("512,pursuit,") != std::string::npos);
  csv::write_static_report(t1.path, sr);
  CHECK(testutil::slurp(t1.path) == table);  // no timestamps, no drift

  TempFile t2("fracdim_test_fig.csv");
  csv::write_tracking_report(t2.path, tr);
  const std::string fig = testutil::slurp(t2.path);
  CHECK(fig.find("step,higuchi,bk,pursuit_a1,pursuit_a2,pursuit_a3,pursuit_a4\n") !=
        std::string::npos);
  CHECK(fig.find("\n1,") != std::string::npos);

  TempFile t3("fracdim_test_conv.csv");
  csv::write_tracking_convergence(t3.path, tr);
  const std::string conv = testutil::slurp(t3.path);
  CHECK(conv.find("series,convergence_step,final_quarter_std\n") != std::string::npos);
  CHECK(conv.find("pursuit_a4,") != std::string::npos);

  TempFile t4("fracdim_test_trial.csv");
  csv::write_tracking_trial_convergence(t4.path, tr);
  CHECK(testutil::slurp(t4.path).find("trial,series,convergence_step\n") != std::string::npos);

  TempFile t5("fracdim_test_long.csv");
  csv::write_tracking_long(t5.path, tr);
  CHECK(testutil::slurp(t5.path).find("step,series_label,value\n") != std::string::npos);

  TempFile t6("fracdim_test_static_long.csv");
  csv::write_static_long(t6.path, sr);
  CHECK(testutil::slurp(t6.path).find("length,series_label,value\n") != std::string::npos);
}

TEST_CASE("trace csv marks gaps with empty fields") {
  std::vector<double> x = testutil::random_walk(4, 64);
  for (std::size_t i = 16; i < 32; ++i) x[i] = 2.0;
  TrackingConfig cfg;
  cfg.window = 16;
  cfg.stride = 1;
  cfg.est_cfg.k_max = 4;
  const TrackingTrace trace = track(TimeSeries(x), cfg);
  TempFile f("fracdim_test_trace.csv");
  csv::write_trace(f.path, trace, {"manifest: {}"});
  const std::string text = testutil::slurp(f.path);
  CHECK(text.find("step,window_start,dimension\n") != std::string::npos);
  CHECK(text.find("\n17,17,\n") != std::string::npos);  // the degenerate window
}

TEST_CASE("format_double survives a parse round trip") {
  for (double v : {0.1, -1.0 / 3.0, 6.02214076e23, 1e-300, 0.0}) {
    const std::string s = csv::format_double(v);
    CHECK(std::stod(s) == v);
  }
}

}  // TEST_SUITE("experiments")
