#pragma once

// Closest Wigner function to F from the truncated spectrum, and the error
// estimates that come with it (d = 1 throughout).

#include <cstddef>
#include <optional>

#include "wnear/coefficients.hpp"
#include "wnear/grid.hpp"
#include "wnear/spectral.hpp"
#include "wnear/state.hpp"

namespace wnear {

struct ErrorBudget {
  double eigenvalue_bound = 0.0;  // 2 (2pi)^(1/2) eps ||F||
  double gap_m1 = 0.0;
  double gap_M1 = 0.0;            // m1 - 4 (2pi) eps ||F||; may be negative when not valid
  std::optional<double> eigenvector_bound;
  std::optional<double> wigner_bound;
  /// eps < m1 / (4 (2pi) ||F||)
  bool valid = false;
};

struct MinimizerResult {
  double lambda_max = 0.0;
  StateVector c0;               // sqrt(lambda_max) times the unit top eigenvector
  double min_distance = 0.0;    // sqrt(||F||^2 - lambda_max^2 / (2pi))
  double epsilon = 0.0;         // achieved relative truncation error
  std::size_t N = 0;
  ErrorBudget bounds;
  bool is_zero = false;
  bool degenerate = false;
  double norm_F = 0.0;
  std::size_t quadrature_order = 0;
};

double eigenvalue_error_bound(double epsilon, double norm_F);

struct EigenvectorBound {
  double M1 = 0.0;
  std::optional<double> bound;  // nullopt when the validity condition fails
  bool valid = false;
};

EigenvectorBound eigenvector_distance_bound(double epsilon, double norm_F, double m1);

/// 4 eps ||F|| [1 + 3 sqrt(l1) sqrt(l1 + 2 sqrt(2pi) eps ||F||) / (2 M1)]
///   + 18 sqrt(2pi) eps^2 ||F||^2 / M1^2
double wigner_distance_bound(double epsilon, double norm_F, double lambda1, double M1);

/// All bounds for the top eigenvalue of S.
ErrorBudget error_budget(const Spectrum& S, double epsilon, double norm_F);

/// Multiplies v by a unit phase so that its first entry above 1e-12 max|v|
/// becomes real and positive.
void canonicalize_phase(std::vector<cplx>& v);

/// Minimizer from an already assembled expansion.
MinimizerResult minimizer_from(const CoefficientMatrix& M, const Spectrum& S);

/// select_order -> hermitian_eig -> largest_eigenpair.
MinimizerResult closest_wigner(const SymbolSpec& F, double epsilon_target,
                               std::size_t q = kDefaultQuadrature,
                               std::size_t N_max = kDefaultMaxOrder);

/// Samples W psi0 on the grid. Throws Error("optimizer", "imaginary_residue")
/// if the synthesized imaginary part exceeds 1e-10.
PhaseGrid evaluate_minimizer(const MinimizerResult& result, const GridSpec& spec);

}  // namespace wnear
