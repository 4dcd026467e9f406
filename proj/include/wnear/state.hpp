#pragma once

// A signal psi = sum_n c_n e_n in the Hermite basis and its Wigner function
//   W psi(z) = sum_{n,m} c_n conj(c_m) W(e_n, e_m)(z).

#include <span>
#include <vector>

#include "wnear/basis.hpp"

namespace wnear {

struct StateVector {
  std::vector<cplx> coeffs;

  double norm_sq() const;
  std::size_t size() const { return coeffs.size(); }
};

/// Outer product c c^H, row-major, as consumed by kernels::synthesize.
std::vector<cplx> density_matrix(const StateVector& psi);

/// Point-wise reference evaluation through cross_wigner.
double wigner_of_state(const StateVector& psi, PhasePoint z);

/// Batched evaluation (kernel path). Writes the real part; the imaginary part
/// of a Wigner function is zero up to rounding and is discarded.
void wigner_of_state(const StateVector& psi, std::span<const double> x,
                     std::span<const double> k, std::span<double> out);

}  // namespace wnear
