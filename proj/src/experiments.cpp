#include "fracdim/experiments.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>

#include "fracdim/fbm.hpp"

namespace fracdim {

const StaticCell& StaticReport::cell(std::int64_t length, Method method) const {
  for (const auto& c : cells) {
    if (c.length == length && c.method == method) return c;
  }
  throw ConfigError("no cell for length " + std::to_string(length) + ", method " +
                    method_name(method));
}

StaticReport run_static(const StaticExperimentSpec& spec) {
  if (spec.trials < 1) throw ConfigError("trials must be at least 1");
  if (spec.lengths.empty()) throw ConfigError("at least one length is required");
  if (spec.methods.empty()) throw ConfigError("at least one method is required");
  for (std::int64_t n : spec.lengths) {
    if (n < 4 * static_cast<std::int64_t>(spec.est_cfg.k_max)) {
      throw ConfigError("length " + std::to_string(n) + " is below 4*k_max = " +
                        std::to_string(4 * spec.est_cfg.k_max));
    }
  }
  if (spec.pursuit_alpha && (!(*spec.pursuit_alpha >= 0.0) || !(*spec.pursuit_alpha < 1.0))) {
    throw ConfigError("pursuit_alpha must lie in [0, 1), got " +
                      std::to_string(*spec.pursuit_alpha));
  }

  StaticReport report;
  report.spec = spec;
  report.trial_seeds.resize(static_cast<std::size_t>(spec.trials));
  for (int t = 0; t < spec.trials; ++t) {
    report.trial_seeds[static_cast<std::size_t>(t)] = spec.base_seed + static_cast<std::uint64_t>(t);
  }

  for (std::int64_t length : spec.lengths) {
    // One path per trial, shared by every method (matched seeds).
    std::vector<std::vector<std::optional<double>>> values(
        spec.methods.size(), std::vector<std::optional<double>>(static_cast<std::size_t>(spec.trials)));
    std::vector<std::vector<std::string>> errors(
        spec.methods.size(), std::vector<std::string>(static_cast<std::size_t>(spec.trials)));

    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) if (!omp_in_parallel())
    for (int t = 0; t < spec.trials; ++t) {
      try {
        const TimeSeries path =
            generate_fbm({spec.hurst, length, report.trial_seeds[static_cast<std::size_t>(t)]});
        for (std::size_t mi = 0; mi < spec.methods.size(); ++mi) {
          const Method method = spec.methods[mi];
          EstimatorConfig cfg = spec.est_cfg;
          if (method == Method::pursuit) {
            cfg.alpha = spec.pursuit_alpha.value_or(1.0 / static_cast<double>(length));
          }
          try {
            values[mi][static_cast<std::size_t>(t)] =
                estimate_dimension(path, method, cfg).dimension;
          } catch (const Error& e) {
            errors[mi][static_cast<std::size_t>(t)] = e.what();  // recorded, not skipped
          }
        }
      } catch (...) {
#pragma omp critical(fracdim_static_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);

    for (std::size_t mi = 0; mi < spec.methods.size(); ++mi) {
      StaticCell cell;
      cell.length = length;
      cell.method = spec.methods[mi];
      cell.trial_values = std::move(values[mi]);
      cell.trial_errors = std::move(errors[mi]);

      std::vector<double> ok;
      ok.reserve(cell.trial_values.size());
      for (const auto& v : cell.trial_values) {
        if (v) ok.push_back(*v);
      }
      cell.ok_count = static_cast<int>(ok.size());
      if (!ok.empty()) cell.stats = summarize(ok);
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

std::vector<double> default_tracking_alphas(int window) {
  const double n = static_cast<double>(window);
  return {1.0 / n, 2.0 / n, 10.0 / (3.0 * n), 4.0 / n};
}

const TraceSummary& TrackingReport::trace(const std::string& label) const {
  for (const auto& t : traces) {
    if (t.label == label) return t;
  }
  throw ConfigError("no trace labeled '" + label + "'");
}

namespace {

double final_quarter_std(const std::vector<std::optional<double>>& mean) {
  const auto n = static_cast<std::int64_t>(mean.size());
  std::vector<double> tail;
  for (std::int64_t i = (3 * n) / 4; i < n; ++i) {
    if (mean[static_cast<std::size_t>(i)]) tail.push_back(*mean[static_cast<std::size_t>(i)]);
  }
  if (tail.size() < 2) return 0.0;
  return summarize(tail).std_dev;
}

}  // namespace

TrackingReport run_tracking(const TrackingExperimentSpec& spec) {
  if (spec.trials < 1) throw ConfigError("trials must be at least 1");
  if (spec.half_length < 2) throw ConfigError("half_length must be at least 2");
  if (spec.stride < 1) throw ConfigError("stride must be at least 1");
  const std::int64_t total_length = 2 * spec.half_length - 1;
  if (spec.window > total_length) {
    throw ConfigError("window " + std::to_string(spec.window) +
                      " exceeds the synthesized series length " + std::to_string(total_length));
  }
  std::vector<double> alphas =
      spec.alphas.empty() ? default_tracking_alphas(spec.window) : spec.alphas;
  for (double a : alphas) {
    if (!(a >= 0.0) || !(a < 1.0)) {
      throw ConfigError("alpha must lie in [0, 1), got " + std::to_string(a));
    }
  }

  TrackingReport report;
  report.spec = spec;
  report.spec.alphas = alphas;

  // Trace slots: higuchi, bk, then one pursuit per alpha.
  std::vector<TraceSummary> traces;
  {
    TraceSummary t;
    t.label = "higuchi";
    t.method = Method::higuchi;
    traces.push_back(t);
    t.label = "bk";
    t.method = Method::bk;
    traces.push_back(t);
    for (std::size_t ai = 0; ai < alphas.size(); ++ai) {
      t.label = "pursuit_a" + std::to_string(ai + 1);
      t.method = Method::pursuit;
      t.alpha = alphas[ai];
      traces.push_back(t);
    }
  }

  const std::int64_t n_steps = (total_length - spec.window) / spec.stride + 1;
  report.window_starts.resize(static_cast<std::size_t>(n_steps));
  for (std::int64_t s = 0; s < n_steps; ++s) {
    report.window_starts[static_cast<std::size_t>(s)] = 1 + s * spec.stride;
  }

  std::vector<std::vector<double>> sums(traces.size(),
                                        std::vector<double>(static_cast<std::size_t>(n_steps), 0.0));
  std::vector<std::vector<int>> counts(traces.size(),
                                       std::vector<int>(static_cast<std::size_t>(n_steps), 0));
  for (auto& t : traces) {
    t.per_trial_convergence.resize(static_cast<std::size_t>(spec.trials));
  }

  const int hold = std::max(1, spec.conv_hold / spec.stride);
  report.trial_seeds.resize(static_cast<std::size_t>(spec.trials));

  for (int trial = 0; trial < spec.trials; ++trial) {
    // Per-trial master seed; the two halves use (master, master + 1), so
    // masters advance by 2 to keep half-seeds disjoint across trials.
    const std::uint64_t master = spec.base_seed + 2 * static_cast<std::uint64_t>(trial);
    report.trial_seeds[static_cast<std::size_t>(trial)] = master;

    const TimeSeries first = generate_fbm({spec.hurst_first, spec.half_length, master});
    const TimeSeries second = generate_fbm({spec.hurst_second, spec.half_length, master + 1});
    const TimeSeries series = synthesize_switch_series(first, second);

    for (std::size_t ti = 0; ti < traces.size(); ++ti) {
      TrackingConfig tc;
      tc.window = spec.window;
      tc.stride = spec.stride;
      tc.method = traces[ti].method;
      tc.est_cfg = spec.est_cfg;
      if (traces[ti].alpha) tc.est_cfg.alpha = *traces[ti].alpha;
      tc.alignment = spec.alignment;

      const TrackingTrace trace = track(series, tc);
      for (std::size_t s = 0; s < trace.steps.size(); ++s) {
        if (trace.steps[s].dimension) {
          sums[ti][s] += *trace.steps[s].dimension;
          counts[ti][s] += 1;
        }
      }
      traces[ti].per_trial_convergence[static_cast<std::size_t>(trial)] =
          convergence_step(trace, spec.conv_target, spec.conv_band, hold);
    }
  }

  for (std::size_t ti = 0; ti < traces.size(); ++ti) {
    traces[ti].mean.resize(static_cast<std::size_t>(n_steps));
    traces[ti].counts = std::move(counts[ti]);
    for (std::size_t s = 0; s < static_cast<std::size_t>(n_steps); ++s) {
      if (traces[ti].counts[s] > 0) {
        traces[ti].mean[s] = sums[ti][s] / traces[ti].counts[s];
      }
    }
    traces[ti].convergence_step =
        convergence_step(std::span<const std::optional<double>>(traces[ti].mean),
                         spec.conv_target, spec.conv_band, hold);
    traces[ti].final_quarter_std = final_quarter_std(traces[ti].mean);
  }

  report.traces = std::move(traces);
  return report;
}

}  // namespace fracdim
