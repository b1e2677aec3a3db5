// Command-line frontend: generate sample paths, estimate dimensions, run
// window tracking, and drive the two bundled experiments. Every file-writing
// run leaves a JSON manifest next to its outputs; --from-manifest replays a
// manifest and reproduces the data files byte-for-byte (timestamps live only
// in the sidecar, never in data files).

#include <omp.h>

#include <CLI11.hpp>
#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "fracdim/csv.hpp"
#include "fracdim/estimators.hpp"
#include "fracdim/experiments.hpp"
#include "fracdim/fbm.hpp"
#include "fracdim/tracking.hpp"

namespace {

constexpr const char* kToolVersion = "0.1.0";

using nlohmann::json;

namespace exit_code {
constexpr int ok = 0;
constexpr int unexpected = 1;
constexpr int config = 2;
constexpr int parse = 3;
constexpr int degenerate = 4;
constexpr int io = 5;
}  // namespace exit_code

// ---------------------------------------------------------------------------
// small helpers

std::string iso_utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json make_manifest(const std::string& subcommand, const json& params, std::uint64_t base_seed) {
  json m;
  m["tool"] = "fracdim";
  m["version"] = kToolVersion;
  m["subcommand"] = subcommand;
  m["base_seed"] = base_seed;
  m["params"] = params;
  return m;
}

std::string manifest_echo(const json& manifest) { return "manifest: " + manifest.dump(); }

void write_manifest_sidecar(const std::string& data_path, const json& manifest) {
  json full = manifest;
  full["created_at"] = iso_utc_now();
  const std::string path = data_path + ".manifest.json";
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw fracdim::IoError("cannot open '" + path + "' for writing");
  out << full.dump(2) << "\n";
  out.flush();
  if (!out) throw fracdim::IoError("failed writing '" + path + "'");
}

// "n", "0.5n", "0.3n", "0.25n" resolve to 1/(coeff*n); a bare number x
// resolves to 1/x.
double resolve_alpha_inv(const std::string& expr, std::int64_t n) {
  if (expr.empty()) throw fracdim::ConfigError("--alpha-inv must not be empty");
  double denom = 0.0;
  if (expr.back() == 'n' || expr.back() == 'N') {
    const std::string stem = expr.substr(0, expr.size() - 1);
    double coeff = 1.0;
    if (!stem.empty()) {
      char* end = nullptr;
      coeff = std::strtod(stem.c_str(), &end);
      if (end == stem.c_str() || *end != '\0') {
        throw fracdim::ConfigError("bad --alpha-inv expression '" + expr + "'");
      }
    }
    if (!(coeff > 0.0)) {
      throw fracdim::ConfigError("--alpha-inv coefficient must be positive in '" + expr + "'");
    }
    denom = coeff * static_cast<double>(n);
  } else {
    char* end = nullptr;
    denom = std::strtod(expr.c_str(), &end);
    if (end == expr.c_str() || *end != '\0') {
      throw fracdim::ConfigError("bad --alpha-inv expression '" + expr + "'");
    }
  }
  if (!(denom > 0.0)) throw fracdim::ConfigError("--alpha-inv must resolve to a positive value");
  const double alpha = 1.0 / denom;
  if (!(alpha >= 0.0) || !(alpha < 1.0)) {
    throw fracdim::ConfigError("--alpha-inv '" + expr + "' resolves to alpha = " +
                               std::to_string(alpha) + ", outside [0, 1)");
  }
  return alpha;
}

fracdim::KSchedule schedule_from_name(const std::string& name) {
  if (name == "all") return fracdim::KSchedule::all_integers;
  if (name == "pow2") return fracdim::KSchedule::powers_of_two;
  throw fracdim::ConfigError("unknown schedule '" + name + "' (expected all or pow2)");
}

fracdim::FgnMethod generator_from_name(const std::string& name) {
  if (name == "auto") return fracdim::FgnMethod::auto_select;
  if (name == "circulant") return fracdim::FgnMethod::circulant;
  if (name == "recursive") return fracdim::FgnMethod::recursive;
  throw fracdim::ConfigError("unknown generator '" + name +
                             "' (expected auto, circulant, or recursive)");
}

// ---------------------------------------------------------------------------
// fbm

struct FbmParams {
  double hurst = 0.5;
  std::int64_t n = 1024;
  std::uint64_t seed = 0;
  std::string generator = "auto";
  std::string out;
};

json to_json(const FbmParams& p) {
  return json{{"hurst", p.hurst}, {"n", p.n},   {"seed", p.seed},
              {"generator", p.generator}, {"out", p.out}};
}

FbmParams fbm_from_json(const json& j) {
  FbmParams p;
  p.hurst = j.at("hurst").get<double>();
  p.n = j.at("n").get<std::int64_t>();
  p.seed = j.at("seed").get<std::uint64_t>();
  p.generator = j.value("generator", "auto");
  p.out = j.at("out").get<std::string>();
  return p;
}

void run_fbm(const FbmParams& p) {
  const fracdim::TimeSeries series =
      fracdim::generate_fbm({p.hurst, p.n, p.seed}, generator_from_name(p.generator));
  const json manifest = make_manifest("fbm", to_json(p), p.seed);
  fracdim::csv::write_series(p.out, series, {manifest_echo(manifest)});
  write_manifest_sidecar(p.out, manifest);
}

// ---------------------------------------------------------------------------
// estimate

struct EstimateParams {
  std::string in;
  std::string method;
  int k_max = 64;
  std::string schedule = "all";
  std::optional<double> alpha{};
  std::optional<std::string> alpha_inv{};
  bool profile = false;
  bool literal_norm = false;
};

// estimate prints to stdout and leaves no files, so it never writes a
// manifest; replay support still accepts a hand-written one.
EstimateParams estimate_from_json(const json& j) {
  EstimateParams p;
  p.in = j.at("in").get<std::string>();
  p.method = j.at("method").get<std::string>();
  p.k_max = j.value("k_max", 64);
  p.schedule = j.value("schedule", "all");
  if (j.contains("alpha") && !j["alpha"].is_null()) p.alpha = j["alpha"].get<double>();
  if (j.contains("alpha_inv") && !j["alpha_inv"].is_null())
    p.alpha_inv = j["alpha_inv"].get<std::string>();
  p.profile = j.value("profile", false);
  p.literal_norm = j.value("literal_norm", false);
  return p;
}

void run_estimate(const EstimateParams& p) {
  const fracdim::Method method = fracdim::method_from_name(p.method);
  const fracdim::TimeSeries series = fracdim::csv::read_series(p.in);

  fracdim::EstimatorConfig cfg;
  cfg.k_max = p.k_max;
  cfg.schedule = schedule_from_name(p.schedule);
  cfg.pursuit_literal_norm = p.literal_norm;
  if (method == fracdim::Method::pursuit) {
    if (p.alpha && p.alpha_inv) {
      throw fracdim::ConfigError("--alpha and --alpha-inv are mutually exclusive");
    }
    if (p.alpha) {
      cfg.alpha = *p.alpha;
    } else if (p.alpha_inv) {
      cfg.alpha = resolve_alpha_inv(*p.alpha_inv, series.size());
    } else {
      throw fracdim::ConfigError("method pursuit requires --alpha or --alpha-inv");
    }
  }

  const fracdim::DimensionEstimate est = fracdim::estimate_dimension(series, method, cfg);
  std::cout << "method: " << fracdim::method_name(method) << "\n";
  if (method == fracdim::Method::pursuit) {
    std::cout << "alpha: " << fracdim::csv::format_double(cfg.alpha) << "\n";
  }
  std::cout << "dimension: " << fracdim::csv::format_double(est.dimension) << "\n";
  std::cout << "r_squared: " << fracdim::csv::format_double(est.r_squared) << "\n";
  std::cout << "n_points: " << est.n_points << "\n";
  if (!est.within_planar_range()) {
    std::cerr << "fracdim: warning: dimension " << est.dimension
              << " lies outside [1, 2], the valid range for a planar curve\n";
  }
  if (p.profile) {
    const fracdim::LengthProfile profile = [&] {
      switch (method) {
        case fracdim::Method::higuchi: return fracdim::higuchi_profile(series, cfg);
        case fracdim::Method::bk: return fracdim::bk_profile(series, cfg);
        default: return fracdim::pursuit_profile(series, cfg);
      }
    }();
    std::cout << "\nk,length\n";
    for (const auto& e : profile.entries) {
      std::cout << e.k << ',' << fracdim::csv::format_double(e.length) << "\n";
    }
  }
}

// ---------------------------------------------------------------------------
// track

struct TrackParams {
  std::string in;
  int window = 4096;
  int stride = 1;
  std::string method;
  int k_max = 64;
  std::string schedule = "all";
  std::optional<double> alpha{};
  std::optional<std::string> alpha_inv{};
  std::string alignment = "start";
  std::string out;
};

json to_json(const TrackParams& p) {
  json j{{"in", p.in},       {"window", p.window},       {"stride", p.stride},
         {"method", p.method}, {"k_max", p.k_max},       {"schedule", p.schedule},
         {"alignment", p.alignment}, {"out", p.out}};
  if (p.alpha) j["alpha"] = *p.alpha;
  if (p.alpha_inv) j["alpha_inv"] = *p.alpha_inv;
  return j;
}

TrackParams track_from_json(const json& j) {
  TrackParams p;
  p.in = j.at("in").get<std::string>();
  p.window = j.at("window").get<int>();
  p.stride = j.value("stride", 1);
  p.method = j.at("method").get<std::string>();
  p.k_max = j.value("k_max", 64);
  p.schedule = j.value("schedule", "all");
  if (j.contains("alpha") && !j["alpha"].is_null()) p.alpha = j["alpha"].get<double>();
  if (j.contains("alpha_inv") && !j["alpha_inv"].is_null())
    p.alpha_inv = j["alpha_inv"].get<std::string>();
  p.alignment = j.value("alignment", "start");
  p.out = j.at("out").get<std::string>();
  return p;
}

void run_track(const TrackParams& p) {
  const fracdim::TimeSeries series = fracdim::csv::read_series(p.in);

  fracdim::TrackingConfig cfg;
  cfg.window = p.window;
  cfg.stride = p.stride;
  cfg.method = fracdim::method_from_name(p.method);
  cfg.alignment = fracdim::alignment_from_name(p.alignment);
  cfg.est_cfg.k_max = p.k_max;
  cfg.est_cfg.schedule = schedule_from_name(p.schedule);
  if (cfg.method == fracdim::Method::pursuit) {
    if (p.alpha && p.alpha_inv) {
      throw fracdim::ConfigError("--alpha and --alpha-inv are mutually exclusive");
    }
    if (p.alpha) {
      cfg.est_cfg.alpha = *p.alpha;
    } else if (p.alpha_inv) {
      // alpha is set from the analysis-window size, not the series size
      cfg.est_cfg.alpha = resolve_alpha_inv(*p.alpha_inv, p.window);
    } else {
      throw fracdim::ConfigError("method pursuit requires --alpha or --alpha-inv");
    }
  }

  const fracdim::TrackingTrace trace = fracdim::track(series, cfg);
  json params = to_json(p);
  if (cfg.method == fracdim::Method::pursuit) params["alpha_resolved"] = cfg.est_cfg.alpha;
  const json manifest = make_manifest("track", params, 0);
  fracdim::csv::write_trace(p.out, trace, {manifest_echo(manifest)});
  write_manifest_sidecar(p.out, manifest);
}

// ---------------------------------------------------------------------------
// experiment

struct ExperimentParams {
  std::string name;  // table1 | figure1
  int trials = -1;   // -1: per-experiment default
  std::vector<std::int64_t> lengths{};
  double hurst = 0.5;
  double hurst_first = 0.7;
  std::int64_t half = 1 << 13;
  int window = 1 << 12;
  int stride = 1;
  int k_max = -1;
  std::uint64_t seed = 42;
  std::optional<double> alpha{};
  std::vector<std::string> alpha_invs{};
  double target = 1.5;
  double band = 0.05;
  int hold = 100;
  std::string out_dir;
  bool plot_data = false;
};

json to_json(const ExperimentParams& p) {
  json j{{"name", p.name},     {"trials", p.trials}, {"lengths", p.lengths},
         {"hurst", p.hurst},   {"hurst_first", p.hurst_first},
         {"half", p.half},     {"window", p.window}, {"stride", p.stride},
         {"k_max", p.k_max},   {"seed", p.seed},     {"alpha_invs", p.alpha_invs},
         {"target", p.target}, {"band", p.band},     {"hold", p.hold},
         {"out_dir", p.out_dir}, {"plot_data", p.plot_data}};
  if (p.alpha) j["alpha"] = *p.alpha;
  return j;
}

ExperimentParams experiment_from_json(const json& j) {
  ExperimentParams p;
  p.name = j.at("name").get<std::string>();
  p.trials = j.value("trials", -1);
  p.lengths = j.value("lengths", std::vector<std::int64_t>{});
  p.hurst = j.value("hurst", 0.5);
  p.hurst_first = j.value("hurst_first", 0.7);
  p.half = j.value("half", static_cast<std::int64_t>(1 << 13));
  p.window = j.value("window", 1 << 12);
  p.stride = j.value("stride", 1);
  p.k_max = j.value("k_max", -1);
  p.seed = j.value("seed", static_cast<std::uint64_t>(42));
  if (j.contains("alpha") && !j["alpha"].is_null()) p.alpha = j["alpha"].get<double>();
  p.alpha_invs = j.value("alpha_invs", std::vector<std::string>{});
  p.target = j.value("target", 1.5);
  p.band = j.value("band", 0.05);
  p.hold = j.value("hold", 100);
  p.out_dir = j.at("out_dir").get<std::string>();
  p.plot_data = j.value("plot_data", false);
  return p;
}

std::string join_path(const std::string& dir, const std::string& file) {
  return (std::filesystem::path(dir) / file).string();
}

void ensure_out_dir(const std::string& dir) {
  if (dir.empty()) throw fracdim::ConfigError("--out-dir is required");
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw fracdim::IoError("cannot create directory '" + dir + "': " + ec.message());
}

void run_experiment_table1(const ExperimentParams& p) {
  fracdim::StaticExperimentSpec spec;
  if (!p.lengths.empty()) spec.lengths = p.lengths;
  spec.hurst = p.hurst;
  spec.trials = p.trials > 0 ? p.trials : 100;
  spec.base_seed = p.seed;
  spec.est_cfg.k_max = p.k_max > 0 ? p.k_max : 128;
  spec.pursuit_alpha = p.alpha;  // unset: alpha = 1/length per cell

  const fracdim::StaticReport report = fracdim::run_static(spec);

  ExperimentParams resolved = p;
  resolved.trials = spec.trials;
  resolved.lengths = spec.lengths;
  resolved.k_max = spec.est_cfg.k_max;
  const json manifest = make_manifest("experiment", to_json(resolved), p.seed);

  const std::string data = join_path(p.out_dir, "table1.csv");
  fracdim::csv::write_static_report(data, report, {manifest_echo(manifest)});
  write_manifest_sidecar(data, manifest);
  if (p.plot_data) {
    fracdim::csv::write_static_long(join_path(p.out_dir, "table1_long.csv"), report,
                                    {manifest_echo(manifest)});
  }
  std::cout << "wrote " << data << "\n";
}

void run_experiment_figure1(const ExperimentParams& p) {
  fracdim::TrackingExperimentSpec spec;
  spec.half_length = p.half;
  spec.hurst_first = p.hurst_first;
  spec.hurst_second = p.hurst;
  spec.window = p.window;
  spec.trials = p.trials > 0 ? p.trials : 100;
  spec.stride = p.stride;
  spec.base_seed = p.seed;
  spec.est_cfg.k_max = p.k_max > 0 ? p.k_max : 64;
  spec.conv_target = p.target;
  spec.conv_band = p.band;
  spec.conv_hold = p.hold;
  for (const auto& expr : p.alpha_invs) {
    spec.alphas.push_back(resolve_alpha_inv(expr, p.window));
  }

  const fracdim::TrackingReport report = fracdim::run_tracking(spec);

  ExperimentParams resolved = p;
  resolved.trials = spec.trials;
  resolved.k_max = spec.est_cfg.k_max;
  if (resolved.alpha_invs.empty()) resolved.alpha_invs = {"n", "0.5n", "0.3n", "0.25n"};
  json params = to_json(resolved);
  params["alphas_resolved"] = report.spec.alphas;
  const json manifest = make_manifest("experiment", params, p.seed);

  const std::string data = join_path(p.out_dir, "figure1.csv");
  fracdim::csv::write_tracking_report(data, report, {manifest_echo(manifest)});
  write_manifest_sidecar(data, manifest);
  fracdim::csv::write_tracking_convergence(join_path(p.out_dir, "figure1_convergence.csv"),
                                           report, {manifest_echo(manifest)});
  fracdim::csv::write_tracking_trial_convergence(
      join_path(p.out_dir, "figure1_trial_convergence.csv"), report, {manifest_echo(manifest)});
  if (p.plot_data) {
    fracdim::csv::write_tracking_long(join_path(p.out_dir, "figure1_long.csv"), report,
                                      {manifest_echo(manifest)});
  }
  std::cout << "wrote " << data << "\n";
}

void run_experiment(const ExperimentParams& p) {
  ensure_out_dir(p.out_dir);
  if (p.name == "table1") {
    run_experiment_table1(p);
  } else if (p.name == "figure1") {
    run_experiment_figure1(p);
  } else {
    throw fracdim::ConfigError("unknown experiment '" + p.name +
                               "' (valid names: table1, figure1)");
  }
}

// ---------------------------------------------------------------------------
// manifest replay

void replay_manifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw fracdim::IoError("cannot open '" + path + "' for reading");
  json manifest;
  try {
    manifest = json::parse(in);
  } catch (const json::exception& e) {
    throw fracdim::ParseError("manifest '" + path + "': " + e.what());
  }
  try {
    if (manifest.value("tool", "") != "fracdim") {
      throw fracdim::ParseError("manifest '" + path + "' was not written by fracdim");
    }
    const std::string sub = manifest.at("subcommand").get<std::string>();
    const json& params = manifest.at("params");
    if (sub == "fbm") {
      run_fbm(fbm_from_json(params));
    } else if (sub == "estimate") {
      run_estimate(estimate_from_json(params));
    } else if (sub == "track") {
      run_track(track_from_json(params));
    } else if (sub == "experiment") {
      run_experiment(experiment_from_json(params));
    } else {
      throw fracdim::ParseError("manifest subcommand '" + sub + "' is not replayable");
    }
  } catch (const json::exception& e) {
    throw fracdim::ParseError("manifest '" + path + "': " + e.what());
  }
}

void apply_threads(std::optional<int> flag_threads) {
  std::optional<int> threads = flag_threads;
  if (!threads) {
    if (const char* env = std::getenv("FRACDIM_THREADS")) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (end == env || *end != '\0' || v < 1) {
        throw fracdim::ConfigError("FRACDIM_THREADS must be a positive integer, got '" +
                                   std::string(env) + "'");
      }
      threads = static_cast<int>(v);
    }
  }
  if (threads) {
    if (*threads < 1) throw fracdim::ConfigError("--threads must be at least 1");
    omp_set_num_threads(*threads);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"curve-length fractal dimension estimation for time series"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(0, 1);

  int threads = 0;
  CLI::Option* threads_opt =
      app.add_option("--threads", threads, "worker thread count (default: machine parallelism)");
  std::string manifest_path;
  app.add_option("--from-manifest", manifest_path, "replay a previous run from its manifest");

  FbmParams fbm;
  CLI::App* fbm_cmd = app.add_subcommand("fbm", "generate a fractional Brownian motion path");
  fbm_cmd->add_option("--hurst", fbm.hurst, "Hurst exponent, in (0, 1)")->required();
  fbm_cmd->add_option("--n", fbm.n, "number of samples (>= 2)")->required();
  fbm_cmd->add_option("--seed", fbm.seed, "64-bit seed")->required();
  fbm_cmd->add_option("--generator", fbm.generator, "auto | circulant | recursive");
  fbm_cmd->add_option("--out", fbm.out, "output series CSV")->required();

  EstimateParams est;
  CLI::App* est_cmd = app.add_subcommand("estimate", "estimate the fractal dimension of a series");
  est_cmd->add_option("--in", est.in, "input series CSV")->required();
  est_cmd->add_option("--method", est.method, "higuchi | bk | pursuit")->required();
  est_cmd->add_option("--kmax", est.k_max, "largest scale k (default 64)");
  est_cmd->add_option("--schedule", est.schedule, "k schedule: all | pow2");
  double est_alpha = -1.0;
  CLI::Option* est_alpha_opt =
      est_cmd->add_option("--alpha", est_alpha, "pursuit forgetting factor, in [0, 1)");
  std::string est_alpha_inv;
  CLI::Option* est_alpha_inv_opt = est_cmd->add_option(
      "--alpha-inv", est_alpha_inv, "pursuit alpha as a reciprocal: n, 0.5n, 0.3n, 0.25n, or a number");
  est_alpha_opt->excludes(est_alpha_inv_opt);
  est_cmd->add_flag("--profile", est.profile, "also print the (k, length) profile as CSV");
  est_cmd->add_flag("--literal-norm", est.literal_norm,
                    "use the alternate pursuit normalization (divides by the increment count)");

  TrackParams trk;
  CLI::App* trk_cmd = app.add_subcommand("track", "slide a window and estimate per position");
  trk_cmd->add_option("--in", trk.in, "input series CSV")->required();
  trk_cmd->add_option("--window", trk.window, "window length W")->required();
  trk_cmd->add_option("--stride", trk.stride, "window step (default 1)");
  trk_cmd->add_option("--method", trk.method, "higuchi | bk | pursuit")->required();
  trk_cmd->add_option("--kmax", trk.k_max, "largest scale k (default 64)");
  trk_cmd->add_option("--schedule", trk.schedule, "k schedule: all | pow2");
  double trk_alpha = -1.0;
  CLI::Option* trk_alpha_opt =
      trk_cmd->add_option("--alpha", trk_alpha, "pursuit forgetting factor, in [0, 1)");
  std::string trk_alpha_inv;
  CLI::Option* trk_alpha_inv_opt = trk_cmd->add_option(
      "--alpha-inv", trk_alpha_inv, "pursuit alpha as a reciprocal of the window size");
  trk_alpha_opt->excludes(trk_alpha_inv_opt);
  trk_cmd->add_option("--alignment", trk.alignment, "start | end | center");
  trk_cmd->add_option("--out", trk.out, "output trace CSV")->required();

  ExperimentParams exp;
  CLI::App* exp_cmd = app.add_subcommand("experiment", "run a bundled experiment");
  exp_cmd->add_option("name", exp.name, "table1 | figure1")->required();
  exp_cmd->add_option("--trials", exp.trials, "Monte-Carlo trials (default 100)");
  exp_cmd->add_option("--lengths", exp.lengths, "table1 series lengths")->delimiter(',');
  exp_cmd->add_option("--hurst", exp.hurst, "Hurst exponent (table1; figure1 second half)");
  exp_cmd->add_option("--hurst-first", exp.hurst_first, "figure1 first-half Hurst exponent");
  exp_cmd->add_option("--half", exp.half, "figure1 half length (default 8192)");
  exp_cmd->add_option("--window", exp.window, "figure1 analysis window (default 4096)");
  exp_cmd->add_option("--stride", exp.stride, "figure1 window step (default 1)");
  exp_cmd->add_option("--kmax", exp.k_max, "largest scale k (defaults: table1 128, figure1 64)");
  exp_cmd->add_option("--seed", exp.seed, "base seed");
  double exp_alpha = -1.0;
  CLI::Option* exp_alpha_opt = exp_cmd->add_option(
      "--alpha", exp_alpha, "fixed pursuit alpha for table1 (default: 1/length per cell)");
  exp_cmd->add_option("--alpha-inv", exp.alpha_invs,
                      "figure1 pursuit alphas as reciprocals of the window size "
                      "(default: n 0.5n 0.3n 0.25n)");
  exp_cmd->add_option("--target", exp.target, "figure1 convergence target (default 1.5)");
  exp_cmd->add_option("--band", exp.band, "figure1 convergence band (default 0.05)");
  exp_cmd->add_option("--hold", exp.hold, "figure1 convergence hold, stride-1 steps (default 100)");
  exp_cmd->add_option("--out-dir", exp.out_dir, "output directory")->required();
  exp_cmd->add_flag("--plot-data", exp.plot_data, "also write a long-format CSV for plotting");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? exit_code::ok : exit_code::config;
  }

  try {
    apply_threads(threads_opt->count() > 0 ? std::optional<int>(threads) : std::nullopt);

    if (!manifest_path.empty()) {
      if (app.get_subcommands().size() > 0) {
        throw fracdim::ConfigError("--from-manifest cannot be combined with a subcommand");
      }
      replay_manifest(manifest_path);
      return exit_code::ok;
    }

    if (app.got_subcommand(fbm_cmd)) {
      run_fbm(fbm);
    } else if (app.got_subcommand(est_cmd)) {
      if (est_alpha_opt->count() > 0) est.alpha = est_alpha;
      if (est_alpha_inv_opt->count() > 0) est.alpha_inv = est_alpha_inv;
      run_estimate(est);
    } else if (app.got_subcommand(trk_cmd)) {
      if (trk_alpha_opt->count() > 0) trk.alpha = trk_alpha;
      if (trk_alpha_inv_opt->count() > 0) trk.alpha_inv = trk_alpha_inv;
      run_track(trk);
    } else if (app.got_subcommand(exp_cmd)) {
      if (exp_alpha_opt->count() > 0) exp.alpha = exp_alpha;
      run_experiment(exp);
    } else {
      std::cerr << app.help();
      return exit_code::config;
    }
    return exit_code::ok;
  } catch (const fracdim::ConfigError& e) {
    std::cerr << "fracdim: config error: " << e.what() << "\n";
    return exit_code::config;
  } catch (const fracdim::ParseError& e) {
    std::cerr << "fracdim: parse error: " << e.what() << "\n";
    return exit_code::parse;
  } catch (const fracdim::DegenerateDataError& e) {
    std::cerr << "fracdim: degenerate data: " << e.what() << "\n";
    return exit_code::degenerate;
  } catch (const fracdim::IoError& e) {
    std::cerr << "fracdim: i/o error: " << e.what() << "\n";
    return exit_code::io;
  } catch (const std::exception& e) {
    std::cerr << "fracdim: error: " << e.what() << "\n";
    return exit_code::unexpected;
  }
}
