#include "fracdim/fbm.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <iostream>
#include <mutex>
#include <numbers>
#include <random>
#include <vector>

namespace fracdim {

double fgn_autocovariance(double hurst, std::int64_t lag) {
  if (lag < 0) lag = -lag;
  if (lag == 0) return 1.0;
  const double h2 = 2.0 * hurst;
  const double t = static_cast<double>(lag);
  return 0.5 * (std::pow(t + 1.0, h2) - 2.0 * std::pow(t, h2) + std::pow(t - 1.0, h2));
}

namespace {

// Deterministic standard-normal stream: Box-Muller over the fully specified
// mt19937_64 engine. std::normal_distribution is implementation-defined, so
// it cannot back the identical-(H,n,seed)-identical-path contract.
class GaussianSampler {
public:
  explicit GaussianSampler(std::uint64_t seed) : eng_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = unit_open(eng_());  // (0, 1]
    const double u2 = unit_open(eng_());
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

private:
  static double unit_open(std::uint64_t x) {
    return (static_cast<double>(x >> 11) + 1.0) * 0x1p-53;
  }

  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// FFTW's planner mutates global state; executing distinct plans is safe.
std::mutex fftw_planner_mutex;

struct FftwBuffer {
  fftw_complex* data = nullptr;
  explicit FftwBuffer(std::int64_t n) {
    data = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * static_cast<std::size_t>(n)));
    if (!data) throw std::bad_alloc();
  }
  ~FftwBuffer() { fftw_free(data); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
};

// Circulant-embedding spectral synthesis of m unit-variance increments.
// The covariance row of size 2(m-1) is diagonalized by the DFT; when all
// eigenvalues are nonnegative the synthesized sequence has exactly the
// requested autocovariance. Returns false (leaving out empty) when the
// embedding is not nonnegative definite.
bool fgn_circulant(double hurst, std::int64_t m, std::uint64_t seed, std::vector<double>& out) {
  const std::int64_t M = 2 * (m - 1);

  FftwBuffer in(M), freq(M);
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex);
    plan = fftw_plan_dft_1d(static_cast<int>(M), in.data, freq.data, FFTW_FORWARD, FFTW_ESTIMATE);
  }

  // Eigenvalues: DFT of [gamma(0), .., gamma(m-1), gamma(m-2), .., gamma(1)].
  for (std::int64_t l = 0; l < M; ++l) {
    const std::int64_t lag = l <= m - 1 ? l : M - l;
    in.data[l][0] = fgn_autocovariance(hurst, lag);
    in.data[l][1] = 0.0;
  }
  fftw_execute(plan);

  std::vector<double> eig(static_cast<std::size_t>(M));
  double eig_max = 0.0, eig_min = 0.0;
  for (std::int64_t j = 0; j < M; ++j) {
    eig[static_cast<std::size_t>(j)] = freq.data[j][0];
    eig_max = std::max(eig_max, eig[static_cast<std::size_t>(j)]);
    eig_min = std::min(eig_min, eig[static_cast<std::size_t>(j)]);
  }
  if (eig_min < -1e-10 * std::max(1.0, eig_max)) {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex);
    fftw_destroy_plan(plan);
    return false;
  }
  for (double& e : eig) e = std::max(e, 0.0);

  // Hermitian spectral coefficients; the forward DFT of this vector is a
  // real stationary Gaussian sequence with the gamma autocovariance.
  GaussianSampler normals(seed);
  const double mm = static_cast<double>(M);
  in.data[0][0] = std::sqrt(eig[0] / mm) * normals.next();
  in.data[0][1] = 0.0;
  for (std::int64_t j = 1; j < m - 1; ++j) {
    const double s = std::sqrt(eig[static_cast<std::size_t>(j)] / (2.0 * mm));
    const double re = s * normals.next();
    const double im = s * normals.next();
    in.data[j][0] = re;
    in.data[j][1] = im;
    in.data[M - j][0] = re;
    in.data[M - j][1] = -im;
  }
  in.data[m - 1][0] = std::sqrt(eig[static_cast<std::size_t>(m - 1)] / mm) * normals.next();
  in.data[m - 1][1] = 0.0;

  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex);
    fftw_destroy_plan(plan);
  }

  out.resize(static_cast<std::size_t>(m));
  for (std::int64_t t = 0; t < m; ++t) out[static_cast<std::size_t>(t)] = freq.data[t][0];
  return true;
}

// Exact conditional sampling via the Durbin-Levinson recursion, O(m^2).
std::vector<double> fgn_recursive(double hurst, std::int64_t m, std::uint64_t seed) {
  std::vector<double> gamma(static_cast<std::size_t>(m));
  for (std::int64_t t = 0; t < m; ++t) {
    gamma[static_cast<std::size_t>(t)] = fgn_autocovariance(hurst, t);
  }

  GaussianSampler normals(seed);
  std::vector<double> e(static_cast<std::size_t>(m));
  std::vector<double> phi(static_cast<std::size_t>(m), 0.0);       // phi[t][j], current row
  std::vector<double> phi_prev(static_cast<std::size_t>(m), 0.0);  // previous row

  double v = gamma[0];
  e[0] = std::sqrt(v) * normals.next();

  for (std::int64_t t = 1; t < m; ++t) {
    double num = gamma[static_cast<std::size_t>(t)];
    for (std::int64_t j = 1; j < t; ++j) {
      num -= phi_prev[static_cast<std::size_t>(j)] * gamma[static_cast<std::size_t>(t - j)];
    }
    const double kappa = num / v;

    for (std::int64_t j = 1; j < t; ++j) {
      phi[static_cast<std::size_t>(j)] = phi_prev[static_cast<std::size_t>(j)] -
                                         kappa * phi_prev[static_cast<std::size_t>(t - j)];
    }
    phi[static_cast<std::size_t>(t)] = kappa;
    v *= (1.0 - kappa * kappa);
    v = std::max(v, 0.0);

    double mean = 0.0;
    for (std::int64_t j = 1; j <= t; ++j) {
      mean += phi[static_cast<std::size_t>(j)] * e[static_cast<std::size_t>(t - j)];
    }
    e[static_cast<std::size_t>(t)] = mean + std::sqrt(v) * normals.next();

    std::copy(phi.begin(), phi.begin() + static_cast<std::ptrdiff_t>(t) + 1, phi_prev.begin());
  }
  return e;
}

void validate_spec(const FbmSpec& spec) {
  if (!(spec.hurst > 0.0) || !(spec.hurst < 1.0)) {
    throw ConfigError("hurst must lie strictly in (0, 1), got " + std::to_string(spec.hurst));
  }
  if (spec.length < 2) {
    throw ConfigError("fbm length must be at least 2, got " + std::to_string(spec.length));
  }
}

}  // namespace

TimeSeries generate_fgn(const FbmSpec& spec, FgnMethod method) {
  validate_spec(spec);
  const std::int64_t m = spec.length - 1;

  std::vector<double> increments;
  if (m == 1) {
    // One increment: gamma(0) = 1, a single standard normal.
    GaussianSampler normals(spec.seed);
    increments.push_back(normals.next());
  } else if (method == FgnMethod::recursive) {
    increments = fgn_recursive(spec.hurst, m, spec.seed);
  } else {
    if (!fgn_circulant(spec.hurst, m, spec.seed, increments)) {
      if (method == FgnMethod::circulant) {
        throw ConfigError("circulant embedding is not nonnegative definite for hurst = " +
                          std::to_string(spec.hurst) + ", length = " +
                          std::to_string(spec.length));
      }
      std::cerr << "fracdim: circulant embedding not nonnegative definite (hurst = "
                << spec.hurst << ", length = " << spec.length
                << "); using the exact recursive generator\n";
      increments = fgn_recursive(spec.hurst, m, spec.seed);
    }
  }
  return TimeSeries(std::move(increments));
}

TimeSeries generate_fbm(const FbmSpec& spec, FgnMethod method) {
  const TimeSeries fgn = generate_fgn(spec, method);
  std::vector<double> path;
  path.reserve(static_cast<std::size_t>(spec.length));
  path.push_back(0.0);
  double acc = 0.0;
  for (double inc : fgn.samples()) {
    acc += inc;
    path.push_back(acc);
  }
  return TimeSeries(std::move(path));
}

}  // namespace fracdim
