#pragma once

// Wigner approximation of a pulse in a dispersive medium,
//   W_a psi(x, k, t) = e^(2 t omega_I(k)) W psi0(x - nu(k) t, k),
// its exact-representability test and the cubic-dispersion worked example.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "wnear/coefficients.hpp"
#include "wnear/dispersion.hpp"
#include "wnear/optimizer.hpp"
#include "wnear/state.hpp"
#include "wnear/symbol.hpp"

namespace wnear {

double wigner_approx_value(const StateVector& initial, const DispersionRelation& disp, double t,
                           PhasePoint z);

struct Representability {
  bool representable = true;
  std::string reason;  // "", "omega_I_nonzero" or "nu_not_affine"
  double witness_k = 0.0;
  double witness_value = 0.0;  // omega_I(k) or the relative second divided difference
};

/// True iff |omega_I| < 1e-12 on the sample and nu has relative second divided
/// differences below 1e-10. Needs at least 3 distinct sample points.
Representability is_exactly_representable(const DispersionRelation& disp,
                                          std::span<const double> ks);

struct RepresentabilityDiagnostic {
  std::size_t N = 0;
  double min_eigenvalue = 0.0;
  double negative_mass = 0.0;  // sum of squared negative eigenvalues
  std::size_t n_negative = 0;
  double tolerance = 0.0;      // 1e-10 max(1, |lambda_max|)
  /// A negative eigenvalue beyond tolerance: the truncated symbol is not a
  /// Wigner function. No conclusion is drawn otherwise.
  bool nonrepresentable = false;
};

RepresentabilityDiagnostic representability_diagnostic(const SymbolSpec& F, std::size_t N,
                                                       std::size_t q = kDefaultQuadrature);

/// psi0 = e0, omega = k^3 / 3 (omega_I = 0, nu = k^2).
SnapshotSymbol cubic_snapshot(double t);

struct CubicSeries {
  double f00, f01, f11;
  double lambda1, lambda_minus1;
  double psi0, psi1;
  double eigenvalue_bound, M1, eigenvector_bound, wigner_bound;
};

/// Small-t expansions of the worked example.
CubicSeries cubic_series(double t);

struct CubicExampleReport {
  double t = 0.0;
  std::size_t N = 2;
  cplx F2[2][2];
  double lambda1 = 0.0, lambda_minus1 = 0.0;
  /// 1/2 (tr +- sqrt((a - d)^2 + 4 |b|^2)) of the computed 2x2 block.
  double lambda1_closed = 0.0, lambda_minus1_closed = 0.0;
  std::vector<cplx> psi12;  // unit top eigenvector, phase-canonical
  double epsilon = 0.0;
  double norm_F = 0.0;
  ErrorBudget bounds;
  double lambda1_N = 0.0;       // top eigenvalue of the order-N block
  double lambda_minus1_N = 0.0;
  CubicSeries series;
};

/// 0 < t <= 0.2. Entries, spectrum and bounds refer to the 2x2 truncation;
/// lambda1_N / lambda_minus1_N to the order-N block (N >= 2).
CubicExampleReport cubic_example_report(double t, std::size_t N = 2,
                                        std::size_t q = kDefaultQuadrature);

}  // namespace wnear
