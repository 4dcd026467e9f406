#pragma once

// Hermite functions, generalized Laguerre polynomials and the cross-Wigner
// functions W(e_n, e_m) of the Hermite basis. Point-wise reference
// implementations; the batched data-parallel versions live in kernels.hpp.

#include <complex>
#include <cstddef>

namespace wnear {

using cplx = std::complex<double>;

/// Phase-space point z = (x, k).
struct PhasePoint {
  double x = 0.0;
  double k = 0.0;

  double norm_sq() const noexcept { return x * x + k * k; }
};

/// Index pair (n, m) of W(e_n, e_m).
struct BasisIndex {
  std::size_t n = 0;
  std::size_t m = 0;
};

/// Generalized Laguerre polynomial L_n^alpha(x) by the three-term recurrence.
double laguerre(std::size_t n, std::size_t alpha, double x);

/// Explicit finite-sum form of L_n^alpha(x). Slow and cancellation-prone for
/// large x; kept as an independent cross-check of laguerre().
double laguerre_sum(std::size_t n, std::size_t alpha, double x);

/// Orthonormal Hermite function e_n(x) = h_n(x) / (2^n n! sqrt(pi))^(1/2),
/// evaluated with the normalized recurrence (no overflow for large n).
double hermite_fn(std::size_t n, double x);

/// Cross-Wigner function W(e_n, e_m)(z).
///
/// For n >= m:
///   ((-1)^m / pi) sqrt(m!/n!) (sqrt(2)(x - ik))^(n-m) L_m^(n-m)(2|z|^2) e^(-|z|^2)
/// and W(e_m, e_n) = conj(W(e_n, e_m)). The factorial ratio, |z|^(n-m) and the
/// Gaussian are combined in log space; the phase (x - ik)/|z| is raised to the
/// integer power by repeated multiplication.
cplx cross_wigner(BasisIndex idx, PhasePoint z);

/// e^(-u/2) L_n^0(u); bounded by 1 in magnitude and safe for large u.
double damped_laguerre(std::size_t n, double u);

/// Radial profile F_n(rho) = ((-1)^n / pi) L_n^0(2 rho^2) e^(-rho^2), which is
/// W(e_n, e_n)(z) at |z| = rho.
double radial_basis_fn(std::size_t n, double rho);

}  // namespace wnear
