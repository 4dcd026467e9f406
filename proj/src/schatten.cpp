#include "wnear/schatten.hpp"

#include <algorithm>
#include <cmath>

#include "wnear/constants.hpp"
#include "wnear/error.hpp"

namespace wnear {
namespace {

void check_epsilon(double epsilon) {
  if (!(epsilon >= 0.0 && epsilon < 1.0))
    throw Error("schatten", "invalid_argument", "epsilon must lie in [0, 1)");
}

}  // namespace

SchattenEstimate schatten_estimate(const Spectrum& S, double q, double epsilon, double norm_F) {
  if (!(q >= 2.0)) throw Error("schatten", "invalid_argument", "Schatten exponent must be >= 2");
  check_epsilon(epsilon);
  SchattenEstimate e;
  e.q = q;
  e.error_bound = kTwoPiPowHalfD * epsilon * norm_F;
  e.hs_norm = kTwoPiPowHalfD * norm_F;

  double largest = 0.0;
  for (std::size_t j = 0; j < S.size(); ++j)
    if (!S.is_kernel(j)) largest = std::max(largest, std::abs(S.eigenvalues[j]));
  if (largest == 0.0) return e;
  // Scaled by the largest |mu| so that large q cannot overflow.
  double sum = 0.0;
  for (std::size_t j = 0; j < S.size(); ++j)
    if (!S.is_kernel(j)) sum += std::pow(std::abs(S.eigenvalues[j]) / largest, q);
  e.value = largest * std::pow(sum, 1.0 / q);
  return e;
}

std::vector<EigenInterval> eigenvalue_bounds_schatten(const Spectrum& S, double epsilon, double norm_F) {
  check_epsilon(epsilon);
  const double b = kTwoPiPowHalfD * epsilon * norm_F;
  std::vector<EigenInterval> out;
  for (std::size_t j = 0; j < S.size(); ++j) {
    if (S.is_kernel(j)) continue;
    const double mu = S.eigenvalues[j];
    if (mu > 0.0)
      out.push_back({mu, mu, std::max(mu + b, 2.0 * b)});
    else
      out.push_back({mu, std::min(mu - b, -2.0 * b), mu});
  }
  return out;
}

}  // namespace wnear
