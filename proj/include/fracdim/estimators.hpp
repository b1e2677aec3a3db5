#ifndef FRACDIM_ESTIMATORS_HPP
#define FRACDIM_ESTIMATORS_HPP

#include <span>
#include <string>
#include <vector>

#include "fracdim/series.hpp"

namespace fracdim {

enum class Method { higuchi, bk, pursuit };

enum class KSchedule { all_integers, powers_of_two };

const char* method_name(Method m) noexcept;
Method method_from_name(const std::string& name);  // throws ConfigError

// Shared estimator knobs. k_max must satisfy 4*k_max <= N for the series
// under analysis; alpha (pursuit only) lies in [0,1), 0 meaning unweighted.
// pursuit_literal_norm switches the pursuit estimator to the alternative
// normalization that divides each subsequence length by its increment
// count; it is off by default (see pursuit_profile).
struct EstimatorConfig {
  int k_max = 64;
  double alpha = 0.0;
  KSchedule schedule = KSchedule::all_integers;
  bool pursuit_literal_norm = false;
};

// Curve-length profile via Higuchi's construction: for each scale k and
// offset m = 1..k, with M = floor((N-m)/k),
//   L_m(k) = [sum_{i=1..M} |x(m+ik) - x(m+(i-1)k)|] * (N-1)/(M*k) / k
// and <L(k)> = (1/k) * sum_m L_m(k).
LengthProfile higuchi_profile(std::span<const double> x, const EstimatorConfig& cfg = {});

// Burlaga-Klein profile: partition into J = floor(N/k) blocks of length k,
// take block means, L_BK(k) = sum_{j=1..J-1} |mean_{j+1} - mean_j| / k.
LengthProfile bk_profile(std::span<const double> x, const EstimatorConfig& cfg = {});

// Exponentially weighted variant of Higuchi: the plain mean of absolute
// increments is replaced by a weighted mean with weights w_i =
// (1-alpha)^((M-i)*k) — each increment is discounted by its age in samples,
// so the newest increment weighs 1 at every scale and the forgetting
// horizon (~1/alpha samples) is scale-independent:
//   L_m(k) = [sum_i w_i |x(m+ik) - x(m+(i-1)k)| / sum_i w_i] * (N-1)/k^2.
// alpha = 0 reduces to higuchi_profile. With cfg.pursuit_literal_norm the
// result is additionally divided by M per subsequence (auditable alternate
// normalization; it shifts fitted dimensions by roughly one and is not the
// default for that reason).
LengthProfile pursuit_profile(std::span<const double> x, const EstimatorConfig& cfg);

DimensionEstimate estimate_dimension(std::span<const double> x, Method method,
                                     const EstimatorConfig& cfg = {});

inline LengthProfile higuchi_profile(const TimeSeries& x, const EstimatorConfig& cfg = {}) {
  return higuchi_profile(x.samples(), cfg);
}
inline LengthProfile bk_profile(const TimeSeries& x, const EstimatorConfig& cfg = {}) {
  return bk_profile(x.samples(), cfg);
}
inline LengthProfile pursuit_profile(const TimeSeries& x, const EstimatorConfig& cfg) {
  return pursuit_profile(x.samples(), cfg);
}
inline DimensionEstimate estimate_dimension(const TimeSeries& x, Method method,
                                            const EstimatorConfig& cfg = {}) {
  return estimate_dimension(x.samples(), method, cfg);
}

namespace detail {

// Single-scale kernels behind the profiles. No precondition checks beyond
// what the arithmetic needs (callers guarantee k >= 1 and N > k).
double higuchi_mean_length(std::span<const double> x, int k);
double bk_length(std::span<const double> x, int k);
double pursuit_mean_length(std::span<const double> x, int k, double alpha,
                           bool literal_norm = false);

std::vector<int> schedule_ks(KSchedule schedule, int k_max);

}  // namespace detail

}  // namespace fracdim

#endif
