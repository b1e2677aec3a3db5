#include "fracdim/tracking.hpp"

#include <omp.h>

#include <cmath>
#include <exception>

namespace fracdim {

const char* alignment_name(Alignment a) noexcept {
  switch (a) {
    case Alignment::window_start: return "window_start";
    case Alignment::window_end: return "window_end";
    case Alignment::window_center: return "window_center";
  }
  return "?";
}

Alignment alignment_from_name(const std::string& name) {
  if (name == "window_start" || name == "start") return Alignment::window_start;
  if (name == "window_end" || name == "end") return Alignment::window_end;
  if (name == "window_center" || name == "center") return Alignment::window_center;
  throw ConfigError("unknown alignment '" + name + "' (expected start, end, or center)");
}

std::int64_t TrackingTrace::attributed_index(const TraceStep& s) const noexcept {
  switch (config.alignment) {
    case Alignment::window_start: return s.window_start;
    case Alignment::window_end: return s.window_start + config.window - 1;
    case Alignment::window_center: return s.window_start + config.window / 2;
  }
  return s.window_start;
}

TrackingTrace track(const TimeSeries& x, const TrackingConfig& cfg) {
  const std::int64_t n = x.size();
  if (cfg.window < 16) throw ConfigError("window must be at least 16");
  if (cfg.stride < 1) throw ConfigError("stride must be at least 1");
  if (cfg.window > n) {
    throw ConfigError("window " + std::to_string(cfg.window) + " exceeds series length " +
                      std::to_string(n));
  }
  if (cfg.window < 4 * cfg.est_cfg.k_max) {
    throw ConfigError("window must be at least 4*k_max (window = " + std::to_string(cfg.window) +
                      ", k_max = " + std::to_string(cfg.est_cfg.k_max) + ")");
  }

  const std::int64_t n_steps = (n - cfg.window) / cfg.stride + 1;
  TrackingTrace trace;
  trace.config = cfg;
  trace.steps.resize(static_cast<std::size_t>(n_steps));

  const std::span<const double> samples = x.samples();
  std::exception_ptr failure;

#pragma omp parallel for schedule(static) if (!omp_in_parallel())
  for (std::int64_t s = 0; s < n_steps; ++s) {
    const std::int64_t start0 = s * cfg.stride;
    std::optional<double> dim;
    try {
      const auto window = samples.subspan(static_cast<std::size_t>(start0),
                                          static_cast<std::size_t>(cfg.window));
      dim = estimate_dimension(window, cfg.method, cfg.est_cfg).dimension;
    } catch (const DegenerateDataError&) {
      dim = std::nullopt;  // recorded as a gap, never fabricated
    } catch (...) {
#pragma omp critical(fracdim_track_failure)
      if (!failure) failure = std::current_exception();
    }
    trace.steps[static_cast<std::size_t>(s)] =
        TraceStep{static_cast<int>(s + 1), start0 + 1, dim};
  }

  if (failure) std::rethrow_exception(failure);
  return trace;
}

std::optional<int> convergence_step(std::span<const std::optional<double>> values, double target,
                                    double band, int hold) {
  if (values.empty()) throw ConfigError("convergence_step requires a non-empty trace");
  if (!(band > 0.0)) throw ConfigError("convergence band must be positive");
  if (hold < 1) throw ConfigError("convergence hold must be at least 1");

  const auto n = static_cast<std::int64_t>(values.size());
  for (std::int64_t s = 0; s + hold <= n; ++s) {
    bool ok = true;
    int seen = 0;
    for (std::int64_t i = s; i < s + hold; ++i) {
      const auto& v = values[static_cast<std::size_t>(i)];
      if (!v) continue;  // gaps are skipped, but cannot satisfy the hold
      ++seen;
      if (std::abs(*v - target) > band) {
        ok = false;
        break;
      }
    }
    if (ok && seen > 0) return static_cast<int>(s + 1);
  }
  return std::nullopt;
}

std::optional<int> convergence_step(const TrackingTrace& trace, double target, double band,
                                    int hold) {
  std::vector<std::optional<double>> values;
  values.reserve(trace.steps.size());
  for (const auto& s : trace.steps) values.push_back(s.dimension);
  return convergence_step(std::span<const std::optional<double>>(values), target, band, hold);
}

}  // namespace fracdim
