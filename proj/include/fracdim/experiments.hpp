#ifndef FRACDIM_EXPERIMENTS_HPP
#define FRACDIM_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fracdim/estimators.hpp"
#include "fracdim/tracking.hpp"

namespace fracdim {

// Static-accuracy experiment: Monte-Carlo estimates on motion paths with a
// known theoretical dimension, one summary per (length, method) cell.
struct StaticExperimentSpec {
  std::vector<std::int64_t> lengths{1 << 15, 1 << 16, 1 << 17};
  double hurst = 0.5;
  int trials = 100;
  std::vector<Method> methods{Method::higuchi, Method::bk, Method::pursuit};
  std::uint64_t base_seed = 42;
  EstimatorConfig est_cfg{.k_max = 128};
  // Pursuit forgetting factor; unset means alpha = 1/length per cell.
  std::optional<double> pursuit_alpha{};
};

struct StaticCell {
  std::int64_t length = 0;
  Method method = Method::higuchi;
  std::vector<std::optional<double>> trial_values;  // seed-indexed, nullopt = failed trial
  std::vector<std::string> trial_errors;            // parallel to trial_values, "" when ok
  SummaryStats stats{};                             // over successful trials only
  int ok_count = 0;

  bool partial() const noexcept {
    return ok_count != static_cast<int>(trial_values.size());
  }
};

struct StaticReport {
  StaticExperimentSpec spec;
  std::vector<std::uint64_t> trial_seeds;
  std::vector<StaticCell> cells;  // lengths outer, methods inner

  const StaticCell& cell(std::int64_t length, Method method) const;  // throws ConfigError
};

StaticReport run_static(const StaticExperimentSpec& spec);

// Tracking experiment: per trial, synthesize the switching series (two
// zero-anchored halves joined through a shared 0), slide a window across it
// with every configured method, and average the traces point-wise.
struct TrackingExperimentSpec {
  std::int64_t half_length = 1 << 13;
  double hurst_first = 0.7;   // first half, theoretical dimension 1.3
  double hurst_second = 0.5;  // second half, theoretical dimension 1.5
  int window = 1 << 12;
  // Pursuit forgetting factors; empty means the four defaults
  // {1/n, 2/n, 10/(3n), 4/n} with n = window.
  std::vector<double> alphas{};
  int trials = 100;
  int stride = 1;
  std::uint64_t base_seed = 42;
  EstimatorConfig est_cfg{.k_max = 64};
  Alignment alignment = Alignment::window_start;
  // Convergence diagnostic on the mean traces. conv_hold counts stride-1
  // steps; the effective hold is max(1, conv_hold / stride).
  double conv_target = 1.5;
  double conv_band = 0.05;
  int conv_hold = 100;
};

std::vector<double> default_tracking_alphas(int window);

struct TraceSummary {
  std::string label;  // "higuchi", "bk", "pursuit_a1", ...
  Method method = Method::higuchi;
  std::optional<double> alpha{};                // pursuit only
  std::vector<std::optional<double>> mean;      // per step; gap when no trial produced a value
  std::vector<int> counts;                      // trials contributing per step
  std::optional<int> convergence_step{};        // on the mean trace
  double final_quarter_std = 0.0;               // across the last quarter of mean steps
  std::vector<std::optional<int>> per_trial_convergence;
};

struct TrackingReport {
  TrackingExperimentSpec spec;
  std::vector<std::uint64_t> trial_seeds;   // per-trial master seeds
  std::vector<std::int64_t> window_starts;  // per step, 1-based
  std::vector<TraceSummary> traces;         // higuchi, bk, then pursuit per alpha

  const TraceSummary& trace(const std::string& label) const;  // throws ConfigError
};

TrackingReport run_tracking(const TrackingExperimentSpec& spec);

}  // namespace fracdim

#endif
