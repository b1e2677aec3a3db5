#include "fracdim/series.hpp"

#include <cmath>

namespace fracdim {

TimeSeries::TimeSeries(std::vector<double> samples) : samples_(std::move(samples)) {
  if (samples_.empty()) throw ConfigError("time series must contain at least one sample");
  for (double v : samples_) {
    if (!std::isfinite(v)) throw ConfigError("time series samples must all be finite");
  }
}

TimeSeries synthesize_switch_series(const TimeSeries& first, const TimeSeries& second) {
  if (first.size() < 2 || second.size() < 2) {
    throw ConfigError("switch synthesis needs at least 2 samples in each half");
  }
  if (first[0] != 0.0) {
    throw ConfigError("switch synthesis requires the first half to start at exactly 0");
  }
  if (second[0] != 0.0) {
    throw ConfigError("switch synthesis requires the second half to start at exactly 0");
  }

  // first's x(n1)..x(2), the shared 0, then second's x(2)..x(n2):
  // both halves meet at the one zero sample they have in common.
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(first.size() + second.size() - 1));
  for (std::int64_t i = first.size() - 1; i >= 1; --i) out.push_back(first[i]);
  out.push_back(0.0);
  for (std::int64_t i = 1; i < second.size(); ++i) out.push_back(second[i]);
  return TimeSeries(std::move(out));
}

DimensionEstimate loglog_fit(const LengthProfile& profile) {
  const auto& entries = profile.entries;
  const auto n = static_cast<std::int64_t>(entries.size());
  if (n < 2) {
    throw DegenerateDataError("log-log fit needs at least 2 profile entries, got " +
                              std::to_string(n));
  }

  std::vector<double> lk(entries.size()), ll(entries.size());
  for (std::int64_t i = 0; i < n; ++i) {
    const auto& e = entries[static_cast<std::size_t>(i)];
    if (!(e.length > 0.0)) {
      throw DegenerateDataError(
          "log-log fit requires positive lengths; <L(" + std::to_string(e.k) + ")> = " +
              std::to_string(e.length),
          e.k);
    }
    lk[static_cast<std::size_t>(i)] = std::log(static_cast<double>(e.k));
    ll[static_cast<std::size_t>(i)] = std::log(e.length);
  }

  double mt = 0.0, my = 0.0;
  for (std::int64_t i = 0; i < n; ++i) {
    mt += lk[static_cast<std::size_t>(i)];
    my += ll[static_cast<std::size_t>(i)];
  }
  mt /= static_cast<double>(n);
  my /= static_cast<double>(n);

  double stt = 0.0, sty = 0.0, syy = 0.0;
  for (std::int64_t i = 0; i < n; ++i) {
    const double dt = lk[static_cast<std::size_t>(i)] - mt;
    const double dy = ll[static_cast<std::size_t>(i)] - my;
    stt += dt * dt;
    sty += dt * dy;
    syy += dy * dy;
  }
  if (stt == 0.0) {
    throw DegenerateDataError("log-log fit requires at least two distinct scales");
  }

  const double slope = sty / stt;
  DimensionEstimate est;
  est.dimension = -slope;
  est.intercept = my - slope * mt;
  // syy == 0 means every length is equal: the zero-slope line fits exactly.
  est.r_squared = syy == 0.0 ? 1.0 : (sty * sty) / (stt * syy);
  est.n_points = static_cast<int>(n);
  return est;
}

SummaryStats summarize(std::span<const double> values) {
  if (values.empty()) throw ConfigError("summarize requires at least one value");
  for (double v : values) {
    if (!std::isfinite(v)) throw ConfigError("summarize requires finite values");
  }

  const auto n = static_cast<std::int64_t>(values.size());
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(n);

  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);

  SummaryStats s;
  s.mean = mean;
  s.std_dev = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;
  s.std_err = s.std_dev / std::sqrt(static_cast<double>(n));
  s.trials = static_cast<int>(n);
  return s;
}

}  // namespace fracdim
