#pragma once

// Dense Hermitian eigendecomposition (cyclic complex Jacobi) and spectrum
// bookkeeping.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wnear/coefficients.hpp"

namespace wnear {

struct Spectrum {
  std::vector<double> eigenvalues;               // descending
  std::vector<std::vector<cplx>> eigenvectors;  // eigenvectors[j] pairs with eigenvalues[j]
  std::size_t n_plus = 0, n_kernel = 0, n_minus = 0;
  double kernel_tol = 0.0;
  std::size_t sweeps = 0;

  std::size_t size() const { return eigenvalues.size(); }
  bool is_kernel(std::size_t j) const;
};

inline constexpr std::size_t kMaxJacobiSweeps = 50;

/// Eigendecomposition of a Hermitian matrix given row-major. Only the lower
/// triangle is read; the upper one is assumed to be its conjugate.
/// Throws ConvergenceError after 50 sweeps.
Spectrum hermitian_eig(std::size_t n, std::span<const cplx> a);
Spectrum hermitian_eig(const CoefficientMatrix& M);

struct EigenPair {
  double mu = 0.0;
  std::vector<cplx> v;
};

/// Top positive eigenpair, or nullopt when there is no positive eigenvalue.
std::optional<EigenPair> largest_eigenpair(const Spectrum& S);

/// m_j = min(|mu_j|, |mu_k - mu_j| over mu_k != mu_j), eigenvalues closer than
/// 1e-10 counted as equal. Throws for kernel-classified j.
double spectral_gap(const Spectrum& S, std::size_t j);

/// Most negative eigenvalue, or 0 when there is none.
double lowest_negative(const Spectrum& S);

struct MonotonicityReport {
  std::vector<std::size_t> orders;
  std::vector<double> mu_plus;   // largest eigenvalue at each order (0 if none)
  std::vector<double> mu_minus;  // most negative eigenvalue (0 if none)
  std::vector<std::string> violations;
  bool ok = true;
};

inline constexpr double kMonotonicitySlack = 1e-9;

/// Top and bottom eigenvalues over the leading blocks of one expansion.
MonotonicityReport monotonicity_check(const SymbolSpec& F, const std::vector<std::size_t>& orders,
                                      std::size_t q = kDefaultQuadrature);

}  // namespace wnear
