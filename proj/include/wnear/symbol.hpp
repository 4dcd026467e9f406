#pragma once

// Real phase-space functions F the library can expand: closed-form Gaussian
// and radial families, Wigner-approximation snapshots, and sampled grids.

#include <functional>
#include <span>
#include <string>
#include <variant>

#include "wnear/basis.hpp"
#include "wnear/dispersion.hpp"
#include "wnear/grid.hpp"
#include "wnear/state.hpp"

namespace wnear {

/// 2x2 real matrix, row-major.
struct Mat2 {
  double xx = 1.0, xk = 0.0, kx = 0.0, kk = 1.0;

  double det() const { return xx * kk - xk * kx; }
  double trace() const { return xx + kk; }
  /// z . A z
  double quad(PhasePoint z) const { return z.x * (xx * z.x + xk * z.k) + z.k * (kx * z.x + kk * z.k); }
  /// Smallest eigenvalue (symmetric input).
  double min_eigenvalue() const;
  bool is_symmetric(double tol = 1e-12) const;
  bool is_positive_definite() const { return xx > 0.0 && det() > 0.0; }
};

/// F(z) = amplitude * exp(-alpha (z - z0) . A (z - z0)).
struct GaussianSymbol {
  double amplitude = 1.0;
  double alpha = 1.0;
  Mat2 A;
  PhasePoint z0;
};

/// F(z) = G(rho(z)), rho(z)^2 = (z - z0) . A (z - z0).
struct RadialProfileSymbol {
  std::function<double(double)> G;
  Mat2 A;
  PhasePoint z0;
  std::string label = "radial_profile";
};

/// F(x, k) = exp(2 t omega_I(k)) W psi0(x - nu(k) t, k).
struct SnapshotSymbol {
  StateVector initial;
  DispersionRelation dispersion;
  double t = 0.0;
};

/// Bilinear interpolant of the samples, zero outside.
struct GridSymbol {
  PhaseGrid grid;
};

using SymbolSpec = std::variant<GaussianSymbol, RadialProfileSymbol, SnapshotSymbol, GridSymbol>;

std::string symbol_kind(const SymbolSpec& F);

/// Checks the type invariants (finite parameters, A symmetric positive
/// definite, t >= 0, complete grid). Throws Error("symbol", ...).
void validate(const SymbolSpec& F);

double evaluate(const SymbolSpec& F, PhasePoint z);

/// out[p] = F(x[p], k[p]).
void evaluate_batch(const SymbolSpec& F, std::span<const double> x, std::span<const double> k,
                    std::span<double> out);

/// ||F||_{L^2(R^2)}. Gaussians in closed form, snapshots through phase-space
/// quadrature with a matched scale, radial profiles through the one-dimensional integral
/// 2 pi int G^2 rho d rho / sqrt(det A), grids exactly cell by cell.
double l2_norm(const SymbolSpec& F, std::size_t q = 64);

/// W e0 = (1/pi) e^(-|z|^2), written as a Gaussian.
GaussianSymbol we0_symbol();

}  // namespace wnear
