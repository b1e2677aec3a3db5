#ifndef FRACDIM_REFERENCE_HPP
#define FRACDIM_REFERENCE_HPP

#include <span>

#include "fracdim/estimators.hpp"

namespace fracdim::reference {

// Serial baseline implementations, kept deliberately naive: literal
// triple loops over (k, m, i), 1-based index arithmetic, per-element pow
// for the pursuit weights, block means recomputed from scratch. They share
// no computation with the optimized kernels and exist as the verification
// baseline for tests and as the serial side of the benchmark target.
// No validation, no parallelism; callers supply sane (x, k).

double higuchi_mean_length(std::span<const double> x, int k);
double bk_length(std::span<const double> x, int k);
double pursuit_mean_length(std::span<const double> x, int k, double alpha,
                           bool literal_norm = false);

LengthProfile higuchi_profile(std::span<const double> x, const EstimatorConfig& cfg);
LengthProfile bk_profile(std::span<const double> x, const EstimatorConfig& cfg);
LengthProfile pursuit_profile(std::span<const double> x, const EstimatorConfig& cfg);

}  // namespace fracdim::reference

#endif
