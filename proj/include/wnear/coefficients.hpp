#pragma once

// Expansion of F in the cross-Wigner basis:
//   F = sum_{n,m} f_{n,m} W(e_n, e_m),   f_{n,m} = 2 pi <F, W(e_n, e_m)>.

#include <cstddef>
#include <vector>

#include "wnear/basis.hpp"
#include "wnear/symbol.hpp"

namespace wnear {

struct CoefficientMatrix {
  std::size_t order = 0;
  std::vector<cplx> entries;  // row-major, order x order
  double norm_F = 0.0;
  double partial_norm_sq = 0.0;  // sum |f_{n,m}|^2
  std::size_t quadrature_order = 0;
  /// max |f[n][m] - conj(f[m][n])| before symmetrization.
  double symmetry_defect = 0.0;

  cplx operator()(std::size_t n, std::size_t m) const { return entries[n * order + m]; }
  /// Leading N x N block with its own partial_norm_sq.
  CoefficientMatrix leading_block(std::size_t N) const;
};

inline constexpr std::size_t kDefaultQuadrature = 64;
inline constexpr std::size_t kDefaultMaxOrder = 256;

/// Gauss-Hermite order actually used for an N x N expansion: the basis
/// functions up to index N - 1 need at least N + 32 nodes per axis.
std::size_t effective_quadrature(std::size_t N, std::size_t q);

/// Gauss-Hermite scale used for F (see integrate_phase_space): 1/sqrt(1 + alpha
/// lambda_min(A)) for Gaussians, 1 otherwise.
double quadrature_scale(const SymbolSpec& F);

/// Single coefficient by direct quadrature of F conj(W(e_n, e_m)), point-wise
/// basis evaluation. Independent of the batched kernel path. Grid symbols are
/// integrated cell by cell (2 x 2 Gauss-Legendre) instead of Gauss-Hermite.
cplx compute_coefficient(const SymbolSpec& F, BasisIndex idx, std::size_t q = kDefaultQuadrature);

/// All N^2 coefficients. F is sampled once on the quadrature nodes (as for
/// compute_coefficient) and projected with the batched kernel; the lower triangle is computed and
/// the upper triangle filled by conjugation, which is exact for real F.
CoefficientMatrix build_matrix(const SymbolSpec& F, std::size_t N,
                               std::size_t q = kDefaultQuadrature);

/// ||F - F^(N)|| / ||F|| from Parseval. Throws if norm_F == 0.
double truncation_error(const CoefficientMatrix& M);

struct OrderSelection {
  std::size_t N = 0;
  CoefficientMatrix matrix;
  double epsilon = 0.0;
};

/// Smallest N <= N_max with truncation_error < epsilon: N doubles until the
/// target is met, then bisection over leading blocks of the last matrix.
/// Throws ConvergenceError (best epsilon attached) when N_max is not enough.
OrderSelection select_order(const SymbolSpec& F, double epsilon,
                            std::size_t N_max = kDefaultMaxOrder,
                            std::size_t q = kDefaultQuadrature);

}  // namespace wnear
