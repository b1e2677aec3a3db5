#include "fracdim/reference.hpp"

#include <cmath>
#include <cstdint>

namespace fracdim::reference {

namespace {

// 1-based access, matching the published index convention x(1)..x(N).
inline double x1(std::span<const double> x, std::int64_t i) {
  return x[static_cast<std::size_t>(i - 1)];
}

}  // namespace

double higuchi_mean_length(std::span<const double> x, int k) {
  const auto N = static_cast<std::int64_t>(x.size());
  double acc = 0.0;
  for (std::int64_t m = 1; m <= k; ++m) {
    const std::int64_t M = (N - m) / k;
    double sum = 0.0;
    for (std::int64_t i = 1; i <= M; ++i) {
      sum += std::abs(x1(x, m + i * k) - x1(x, m + (i - 1) * k));
    }
    const double L = sum * static_cast<double>(N - 1) /
                     (static_cast<double>(M) * static_cast<double>(k)) /
                     static_cast<double>(k);
    acc += L;
  }
  return acc / static_cast<double>(k);
}

double bk_length(std::span<const double> x, int k) {
  const auto N = static_cast<std::int64_t>(x.size());
  const std::int64_t J = N / k;
  double sum = 0.0;
  for (std::int64_t j = 1; j <= J - 1; ++j) {
    double a = 0.0, b = 0.0;
    for (std::int64_t t = 1; t <= k; ++t) {
      a += x1(x, (j - 1) * k + t);
      b += x1(x, j * k + t);
    }
    sum += std::abs(b / k - a / k);
  }
  return sum / static_cast<double>(k);
}

double pursuit_mean_length(std::span<const double> x, int k, double alpha, bool literal_norm) {
  const auto N = static_cast<std::int64_t>(x.size());
  double acc = 0.0;
  for (std::int64_t m = 1; m <= k; ++m) {
    const std::int64_t M = (N - m) / k;
    // Weight each increment by (1-alpha) raised to its age in samples.
    double A = 0.0;
    for (std::int64_t i = 1; i <= M; ++i) {
      A += std::pow(1.0 - alpha, static_cast<double>((M - i) * k));
    }
    double weighted = 0.0;
    for (std::int64_t i = 1; i <= M; ++i) {
      weighted += std::pow(1.0 - alpha, static_cast<double>((M - i) * k)) *
                  std::abs(x1(x, m + i * k) - x1(x, m + (i - 1) * k));
    }
    double L;
    if (literal_norm) {
      L = weighted * static_cast<double>(N - 1) /
          (static_cast<double>(M) * static_cast<double>(k) * A) / static_cast<double>(k);
    } else {
      L = (weighted / A) * static_cast<double>(N - 1) / static_cast<double>(k) /
          static_cast<double>(k);
    }
    acc += L;
  }
  return acc / static_cast<double>(k);
}

namespace {

template <typename LengthAtScale>
LengthProfile profile_serial(std::span<const double> x, const EstimatorConfig& cfg,
                             LengthAtScale&& length_at) {
  LengthProfile profile;
  for (int k : detail::schedule_ks(cfg.schedule, cfg.k_max)) {
    profile.entries.push_back({k, length_at(x, k)});
  }
  return profile;
}

}  // namespace

LengthProfile higuchi_profile(std::span<const double> x, const EstimatorConfig& cfg) {
  return profile_serial(x, cfg,
                        [](std::span<const double> s, int k) { return higuchi_mean_length(s, k); });
}

LengthProfile bk_profile(std::span<const double> x, const EstimatorConfig& cfg) {
  return profile_serial(x, cfg, [](std::span<const double> s, int k) { return bk_length(s, k); });
}

LengthProfile pursuit_profile(std::span<const double> x, const EstimatorConfig& cfg) {
  return profile_serial(x, cfg, [&cfg](std::span<const double> s, int k) {
    return pursuit_mean_length(s, k, cfg.alpha, cfg.pursuit_literal_norm);
  });
}

}  // namespace fracdim::reference
