#pragma once

// Symbols that depend only on rho(z) = ((z - z0) . A (z - z0))^(1/2). They are
// diagonal in the basis F_n(rho(z)) with eigenvalues
//   mu_n = 4 pi (-1)^n int_0^inf G(rho) L_n(2 rho^2) e^(-rho^2) rho d rho,
// so the closest Wigner function can be found exactly.

#include <cstddef>
#include <functional>
#include <vector>

#include "wnear/grid.hpp"
#include "wnear/optimizer.hpp"
#include "wnear/symbol.hpp"

namespace wnear {

struct RadialSymbol {
  std::function<double(double)> G;
  Mat2 A;
  PhasePoint z0;
};

/// Radial view of a gaussian or radial_profile SymbolSpec.
RadialSymbol radial_from(const SymbolSpec& F);

/// det A = 1 form: B = A / sqrt(det A) and G~(r) = G(det(A)^(1/4) r).
/// Validates symmetry and positive definiteness.
RadialSymbol normalize_metric(const RadialSymbol& sym);

double radial_eigenvalue(const RadialSymbol& sym, std::size_t n, std::size_t q = 32);

/// (2 pi N / (1 + alpha)) ((1 - alpha) / (1 + alpha))^n
double gaussian_eigenvalue_closed_form(double amplitude, double alpha, std::size_t n);

/// ||F|| = sqrt(2 pi int G~^2 rho d rho) in the det A = 1 form.
double radial_norm(const RadialSymbol& sym);

struct RadialSearch {
  std::size_t k_star = 0;
  double mu_star = 0.0;
  std::vector<double> mu;   // mu_0 ... mu_last scanned
  double norm_F = 0.0;
  double tail = 0.0;        // ||F - F^(last)||
  bool certified = false;
};

inline constexpr std::size_t kDefaultRadialCap = 10000;

/// Scans mu_0, mu_1, ... and stops once ||F - F^(k)|| <= mu_K / sqrt(2 pi),
/// mu_K the largest positive eigenvalue so far; then no later |mu_l| can
/// reach mu_K. The test is made at every positive eigenvalue and, once one
/// exists, at every later index as well.
/// Throws Error("radial", "no_positive_eigenvalue") when F = 0 or when the
/// Parseval tail falls below 1e-7 ||F|| with no positive eigenvalue seen, and
/// ConvergenceError when n_cap indices are not enough.
RadialSearch largest_radial_eigenvalue(const RadialSymbol& sym, std::size_t q = 32,
                                       std::size_t n_cap = kDefaultRadialCap);

/// S = A^(1/2) for symmetric positive definite A with det A = 1, so that
/// A = S^T S and S is symplectic.
Mat2 williamson_factor(const Mat2& A);

/// Closed form of the minimizer: W psi0(z) = mu_K F_K(rho(z)) with the
/// det A = 1 metric.
struct RadialDescriptor {
  std::size_t K = 0;
  double mu_K = 0.0;
  Mat2 A;
  PhasePoint z0;

  double operator()(PhasePoint z) const;
};

struct RadialMinimizer {
  MinimizerResult result;  // c0 = sqrt(mu_K) e_K in the frame z -> S(z - z0)
  RadialDescriptor descriptor;
  RadialSearch search;
};

RadialMinimizer radial_minimizer(const RadialSymbol& sym, std::size_t q = 32,
                                 std::size_t n_cap = kDefaultRadialCap);

PhaseGrid evaluate_descriptor(const RadialDescriptor& d, const GridSpec& spec);

}  // namespace wnear
