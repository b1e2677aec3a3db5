#ifndef FRACDIM_TEST_HELPERS_HPP
#define FRACDIM_TEST_HELPERS_HPP

#include <cmath>
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace testutil {

// Deterministic noise for property tests (values in [-1, 1]).
inline std::vector<double> random_series(std::uint64_t seed, std::size_t n) {
  std::mt19937_64 rng(seed);
  std::vector<double> x(n);
  for (auto& v : x) {
    v = 2.0 * (static_cast<double>(rng() >> 11) * 0x1p-53) - 1.0;
  }
  return x;
}

inline std::vector<double> random_walk(std::uint64_t seed, std::size_t n) {
  std::vector<double> x = random_series(seed, n);
  for (std::size_t i = 1; i < n; ++i) x[i] += x[i - 1];
  return x;
}

inline double rel_diff(double a, double b) {
  const double scale = std::max({std::fabs(a), std::fabs(b), 1e-300});
  return std::fabs(a - b) / scale;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Hand-typed 24-sample series shared with the independently computed oracle
// values frozen into the estimator tests.
inline std::vector<double> oracle_series() {
  return {0.31, -1.20, 0.45,  2.10, -0.77, 0.05,  1.65, -0.33,
          0.92, -2.41, 1.13,  0.27, -0.88, 1.74,  -0.19, 0.63,
          -1.05, 0.41, 2.33, -0.56, 0.08,  -1.62, 0.97, 0.22};
}

}  // namespace testutil

#endif
