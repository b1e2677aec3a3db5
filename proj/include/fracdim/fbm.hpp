#ifndef FRACDIM_FBM_HPP
#define FRACDIM_FBM_HPP

#include <cstdint>

#include "fracdim/series.hpp"

namespace fracdim {

// Fractional Brownian motion request. theoretical_dimension() = 2 - H, the
// standard graph-dimension relation (D = 1.5 at H = 0.5, D = 1.3 at H = 0.7).
// Identical (hurst, length, seed) always yields an identical path.
struct FbmSpec {
  double hurst = 0.5;
  std::int64_t length = 2;
  std::uint64_t seed = 0;

  double theoretical_dimension() const noexcept { return 2.0 - hurst; }
};

enum class FgnMethod {
  auto_select,  // circulant embedding, exact recursive fallback
  circulant,    // spectral synthesis, O(n log n); throws if the embedding fails
  recursive     // Durbin-Levinson conditional sampling, exact, O(n^2)
};

// Autocovariance of unit-variance fractional Gaussian noise:
//   gamma(tau) = 0.5 * (|tau+1|^{2H} - 2|tau|^{2H} + |tau-1|^{2H}).
double fgn_autocovariance(double hurst, std::int64_t lag);

// length-1 fractional Gaussian noise increments, zero mean, unit variance.
// Circulant-embedding synthesis is exact in distribution when the embedding
// is nonnegative definite; otherwise the generator falls back to the exact
// recursive method and emits a one-line diagnostic on stderr.
TimeSeries generate_fgn(const FbmSpec& spec, FgnMethod method = FgnMethod::auto_select);

// Cumulative sum of generate_fgn prefixed with 0: length samples, path
// anchored at 0 (as synthesize_switch_series requires).
TimeSeries generate_fbm(const FbmSpec& spec, FgnMethod method = FgnMethod::auto_select);

}  // namespace fracdim

#endif
