#ifndef FRACDIM_SERIES_HPP
#define FRACDIM_SERIES_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "fracdim/errors.hpp"

namespace fracdim {

// Uniformly sampled real-valued sequence. Samples must be finite; formulas
// throughout this library are documented with 1-based indices x(1)..x(N)
// while storage is the usual 0-based vector.
class TimeSeries {
public:
  explicit TimeSeries(std::vector<double> samples);

  std::int64_t size() const noexcept { return static_cast<std::int64_t>(samples_.size()); }
  double operator[](std::int64_t i) const noexcept { return samples_[static_cast<std::size_t>(i)]; }
  std::span<const double> samples() const noexcept { return samples_; }

  friend bool operator==(const TimeSeries&, const TimeSeries&) = default;

private:
  std::vector<double> samples_;
};

struct ProfileEntry {
  int k;          // scale (discrete time interval)
  double length;  // averaged curve length <L(k)> at that scale

  friend bool operator==(const ProfileEntry&, const ProfileEntry&) = default;
};

// (k, <L(k)>) pairs produced by an estimator, k strictly increasing,
// lengths strictly positive (estimators reject degenerate scales upstream).
struct LengthProfile {
  std::vector<ProfileEntry> entries;
};

// Result of the log-log regression. dimension = -slope of the OLS line
// through (ln k, ln <L(k)>); intercept is the fitted log-length at ln k = 0.
struct DimensionEstimate {
  double dimension = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  int n_points = 0;

  // A planar curve's dimension lives in [1, 2]; callers should surface a
  // quality warning (not an error) when this is false.
  bool within_planar_range() const noexcept { return dimension >= 1.0 && dimension <= 2.0; }
};

struct SummaryStats {
  double mean = 0.0;
  double std_dev = 0.0;  // sample standard deviation, n-1 denominator
  double std_err = 0.0;  // std_dev / sqrt(trials)
  int trials = 0;
};

// Joins two zero-anchored paths into one series whose dimension switches
// mid-way: first's samples x(2..n) reversed, a single shared 0, then
// second's x(2..n). Output length is n1 + n2 - 1 and output(n1) = 0.
TimeSeries synthesize_switch_series(const TimeSeries& first, const TimeSeries& second);

// Ordinary least squares of ln(length) on ln(k). Needs >= 2 entries with
// positive lengths and at least two distinct scales.
DimensionEstimate loglog_fit(const LengthProfile& profile);

SummaryStats summarize(std::span<const double> values);

}  // namespace fracdim

#endif
