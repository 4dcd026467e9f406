#include "wnear/basis.hpp"

#include <cmath>
#include <numbers>

namespace wnear {

double laguerre(std::size_t n, std::size_t alpha, double x) {
  const double a = static_cast<double>(alpha);
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 1.0 + a - x;
  for (std::size_t j = 1; j < n; ++j) {
    const double jj = static_cast<double>(j);
    const double next = ((2.0 * jj + 1.0 + a - x) * cur - (jj + a) * prev) / (jj + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre_sum(std::size_t n, std::size_t alpha, double x) {
  // sum_k (alpha+n)...(alpha+k+1) / ((n-k)! k!) (-x)^k
  long double total = 0.0L;
  for (std::size_t k = 0; k <= n; ++k) {
    long double term = 1.0L;
    for (std::size_t i = alpha + k + 1; i <= alpha + n; ++i) term *= static_cast<long double>(i);
    for (std::size_t i = 2; i <= n - k; ++i) term /= static_cast<long double>(i);
    for (std::size_t i = 2; i <= k; ++i) term /= static_cast<long double>(i);
    term *= std::pow(-static_cast<long double>(x), static_cast<long double>(k));
    total += term;
  }
  return static_cast<double>(total);
}

double hermite_fn(std::size_t n, double x) {
  const double e0 = std::exp(-0.5 * x * x) / std::sqrt(std::sqrt(std::numbers::pi));
  if (n == 0) return e0;
  double prev = e0;
  double cur = std::sqrt(2.0) * x * e0;
  for (std::size_t j = 1; j < n; ++j) {
    const double jj = static_cast<double>(j);
    const double next = x * std::sqrt(2.0 / (jj + 1.0)) * cur - std::sqrt(jj / (jj + 1.0)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

cplx cross_wigner(BasisIndex idx, PhasePoint z) {
  const bool swapped = idx.n < idx.m;
  const std::size_t hi = swapped ? idx.m : idx.n;
  const std::size_t lo = swapped ? idx.n : idx.m;
  const std::size_t d = hi - lo;

  const double r2 = z.norm_sq();
  if (d > 0 && r2 == 0.0) return {0.0, 0.0};

  double log_mag = 0.5 * (std::lgamma(static_cast<double>(lo) + 1.0) -
                          std::lgamma(static_cast<double>(hi) + 1.0)) -
                   r2;
  cplx phase_pow{1.0, 0.0};
  if (d > 0) {
    log_mag += 0.5 * static_cast<double>(d) * std::log(2.0 * r2);
    const double r = std::sqrt(r2);
    const cplx phase{z.x / r, -z.k / r};
    for (std::size_t i = 0; i < d; ++i) phase_pow *= phase;
  }
  const double mag = std::exp(log_mag);
  if (mag == 0.0) return {0.0, 0.0};
  const double sign = (lo % 2 == 0) ? 1.0 : -1.0;
  const double radial = sign / std::numbers::pi * mag * laguerre(lo, d, 2.0 * r2);
  const cplx value = radial * phase_pow;
  return swapped ? std::conj(value) : value;
}

double damped_laguerre(std::size_t n, double u) {
  // Same recurrence as laguerre(), started from e^(-u/2) so nothing overflows.
  double prev = std::exp(-0.5 * u);
  if (n == 0 || prev == 0.0) return n == 0 ? prev : 0.0;
  double cur = (1.0 - u) * prev;
  for (std::size_t j = 1; j < n; ++j) {
    const double jj = static_cast<double>(j);
    const double next = ((2.0 * jj + 1.0 - u) * cur - jj * prev) / (jj + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double radial_basis_fn(std::size_t n, double rho) {
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign / std::numbers::pi * damped_laguerre(n, 2.0 * rho * rho);
}

}  // namespace wnear
