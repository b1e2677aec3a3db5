#include "fracdim/estimators.hpp"

#include <omp.h>

#include <cmath>
#include <cstdint>

namespace fracdim {

const char* method_name(Method m) noexcept {
  switch (m) {
    case Method::higuchi: return "higuchi";
    case Method::bk: return "bk";
    case Method::pursuit: return "pursuit";
  }
  return "?";
}

Method method_from_name(const std::string& name) {
  if (name == "higuchi") return Method::higuchi;
  if (name == "bk") return Method::bk;
  if (name == "pursuit") return Method::pursuit;
  throw ConfigError("unknown method '" + name + "' (expected higuchi, bk, or pursuit)");
}

namespace detail {

std::vector<int> schedule_ks(KSchedule schedule, int k_max) {
  std::vector<int> ks;
  if (schedule == KSchedule::all_integers) {
    ks.reserve(static_cast<std::size_t>(k_max));
    for (int k = 1; k <= k_max; ++k) ks.push_back(k);
  } else {
    for (int k = 1; k <= k_max; k *= 2) ks.push_back(k);
  }
  return ks;
}

double higuchi_mean_length(std::span<const double> x, int k) {
  const auto n = static_cast<std::int64_t>(x.size());
  const double norm = static_cast<double>(n - 1);
  const double* p = x.data();

  double total = 0.0;
  for (std::int64_t m0 = 0; m0 < k; ++m0) {  // m = m0 + 1
    const std::int64_t inc_count = (n - 1 - m0) / k;
    double sum = 0.0;
    for (std::int64_t j = m0 + k; j < n; j += k) sum += std::abs(p[j] - p[j - k]);
    // L_m(k) = sum * (N-1) / (M*k) / k
    total += sum * norm / (static_cast<double>(inc_count) * k * k);
  }
  return total / k;
}

double bk_length(std::span<const double> x, int k) {
  const auto n = static_cast<std::int64_t>(x.size());
  const std::int64_t blocks = n / k;
  const double* p = x.data();

  double sum = 0.0;
  double prev_mean = 0.0;
  for (std::int64_t j = 0; j < blocks; ++j) {
    double s = 0.0;
    const double* b = p + j * k;
    for (int i = 0; i < k; ++i) s += b[i];
    const double mean = s / k;
    if (j > 0) sum += std::abs(mean - prev_mean);
    prev_mean = mean;
  }
  return sum / k;
}

double pursuit_mean_length(std::span<const double> x, int k, double alpha, bool literal_norm) {
  const auto n = static_cast<std::int64_t>(x.size());
  const double norm = static_cast<double>(n - 1);
  // Weights forget by age in samples, so adjacent scale-k increments (k
  // samples apart) differ by (1-alpha)^k regardless of scale.
  const double decay = std::pow(1.0 - alpha, static_cast<double>(k));
  const double* p = x.data();

  double total = 0.0;
  for (std::int64_t m0 = 0; m0 < k; ++m0) {
    const std::int64_t inc_count = (n - 1 - m0) / k;
    // Walk from the newest increment (weight 1) backwards, multiplying by
    // the decay per step; underflow to 0 for very old increments is fine.
    double w = 1.0, wsum = 0.0, wdsum = 0.0;
    for (std::int64_t j = m0 + inc_count * k; j > m0; j -= k) {
      wdsum += w * std::abs(p[j] - p[j - k]);
      wsum += w;
      w *= decay;
    }
    double len = (wdsum / wsum) * norm / (static_cast<double>(k) * k);
    if (literal_norm) len /= static_cast<double>(inc_count);
    total += len;
  }
  return total / k;
}

}  // namespace detail

namespace {

void validate_config(std::span<const double> x, const EstimatorConfig& cfg) {
  const auto n = static_cast<std::int64_t>(x.size());
  if (n < 2) throw ConfigError("estimator input needs at least 2 samples");
  if (cfg.k_max < 2) throw ConfigError("k_max must be at least 2");
  if (static_cast<std::int64_t>(cfg.k_max) * 4 > n) {
    throw ConfigError("k_max = " + std::to_string(cfg.k_max) +
                      " too large for series of length " + std::to_string(n) +
                      " (need 4*k_max <= N)");
  }
  if (!(cfg.alpha >= 0.0) || !(cfg.alpha < 1.0)) {
    throw ConfigError("alpha must lie in [0, 1), got " + std::to_string(cfg.alpha));
  }
}

template <typename LengthAtScale>
LengthProfile profile_over_schedule(std::span<const double> x, const EstimatorConfig& cfg,
                                    LengthAtScale&& length_at) {
  validate_config(x, cfg);
  const std::vector<int> ks = detail::schedule_ks(cfg.schedule, cfg.k_max);
  const auto nk = static_cast<std::int64_t>(ks.size());
  std::vector<double> lengths(ks.size());

  const std::int64_t work = static_cast<std::int64_t>(x.size()) * nk;
#pragma omp parallel for schedule(static) if (work > (1 << 18) && !omp_in_parallel())
  for (std::int64_t i = 0; i < nk; ++i) {
    lengths[static_cast<std::size_t>(i)] = length_at(x, ks[static_cast<std::size_t>(i)]);
  }

  LengthProfile profile;
  profile.entries.reserve(ks.size());
  for (std::int64_t i = 0; i < nk; ++i) {
    const int k = ks[static_cast<std::size_t>(i)];
    const double len = lengths[static_cast<std::size_t>(i)];
    if (!(len > 0.0)) {
      throw DegenerateDataError(
          "degenerate series: <L(" + std::to_string(k) + ")> = " + std::to_string(len), k);
    }
    profile.entries.push_back({k, len});
  }
  return profile;
}

}  // namespace

LengthProfile higuchi_profile(std::span<const double> x, const EstimatorConfig& cfg) {
  return profile_over_schedule(x, cfg, [](std::span<const double> s, int k) {
    return detail::higuchi_mean_length(s, k);
  });
}

LengthProfile bk_profile(std::span<const double> x, const EstimatorConfig& cfg) {
  return profile_over_schedule(
      x, cfg, [](std::span<const double> s, int k) { return detail::bk_length(s, k); });
}

LengthProfile pursuit_profile(std::span<const double> x, const EstimatorConfig& cfg) {
  return profile_over_schedule(x, cfg, [&cfg](std::span<const double> s, int k) {
    return detail::pursuit_mean_length(s, k, cfg.alpha, cfg.pursuit_literal_norm);
  });
}

DimensionEstimate estimate_dimension(std::span<const double> x, Method method,
                                     const EstimatorConfig& cfg) {
  switch (method) {
    case Method::higuchi: return loglog_fit(higuchi_profile(x, cfg));
    case Method::bk: return loglog_fit(bk_profile(x, cfg));
    case Method::pursuit: return loglog_fit(pursuit_profile(x, cfg));
  }
  throw ConfigError("unknown estimation method");
}

}  // namespace fracdim
