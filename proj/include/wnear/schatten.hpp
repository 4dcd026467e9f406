#pragma once

// Schatten-q norm of the operator with symbol F, estimated from the truncated
// spectrum (q >= 2 only).

#include <vector>

#include "wnear/spectral.hpp"

namespace wnear {

struct SchattenEstimate {
  double q = 2.0;
  double value = 0.0;        // (sum over N+ and N- of |mu|^q)^(1/q)
  double error_bound = 0.0;  // sqrt(2pi) eps ||F||
  double hs_norm = 0.0;      // sqrt(2pi) ||F||
};

/// Throws Error("schatten", "invalid_argument") for q < 2 or eps outside [0, 1).
SchattenEstimate schatten_estimate(const Spectrum& S, double q, double epsilon, double norm_F);

struct EigenInterval {
  double eigenvalue = 0.0;
  double lo = 0.0;
  double hi = 0.0;
};

/// Positive mu: [mu, max(mu + b, 2b)]; negative mu: [min(mu - b, -2b), mu];
/// b = sqrt(2pi) eps ||F||. Kernel eigenvalues are skipped.
std::vector<EigenInterval> eigenvalue_bounds_schatten(const Spectrum& S, double epsilon, double norm_F);

}  // namespace wnear
