#ifndef FRACDIM_TRACKING_HPP
#define FRACDIM_TRACKING_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fracdim/estimators.hpp"

namespace fracdim {

// Which sample index a window's estimate is attributed to.
enum class Alignment { window_start, window_end, window_center };

const char* alignment_name(Alignment a) noexcept;
Alignment alignment_from_name(const std::string& name);  // throws ConfigError

struct TrackingConfig {
  int window = 4096;  // window length W, >= 16 and >= 4*est_cfg.k_max
  int stride = 1;
  Method method = Method::higuchi;
  EstimatorConfig est_cfg{};
  Alignment alignment = Alignment::window_start;
};

struct TraceStep {
  int step_index;              // 1-based
  std::int64_t window_start;   // 1-based sample index of the window's first sample
  std::optional<double> dimension;  // nullopt marks a degenerate-window gap
};

struct TrackingTrace {
  std::vector<TraceStep> steps;
  TrackingConfig config;  // echo

  // Sample index the step's estimate is attributed to, per config.alignment.
  std::int64_t attributed_index(const TraceStep& s) const noexcept;
};

// One estimate per window position: step s covers samples
// [1+(s-1)*stride, 1+(s-1)*stride + W - 1], s = 1..floor((N-W)/stride)+1.
// Degenerate windows become explicit gap entries, never dropped. Windows
// are evaluated in parallel; the trace is ordered by step regardless.
TrackingTrace track(const TimeSeries& x, const TrackingConfig& cfg);

// Smallest step index s such that the hold window s..s+hold-1 fits in the
// trace, every non-gap estimate in it lies within [target-band, target+band],
// and at least one non-gap estimate is present (an all-gap hold window never
// satisfies). nullopt if no such s exists.
std::optional<int> convergence_step(std::span<const std::optional<double>> values,
                                    double target, double band, int hold);
std::optional<int> convergence_step(const TrackingTrace& trace, double target, double band,
                                    int hold);

}  // namespace fracdim

#endif
