#include "wnear/state.hpp"

#include <complex>

#include "wnear/kernels.hpp"

namespace wnear {

double StateVector::norm_sq() const {
  double s = 0.0;
  for (const cplx& c : coeffs) s += std::norm(c);
  return s;
}

std::vector<cplx> density_matrix(const StateVector& psi) {
  const std::size_t n = psi.size();
  std::vector<cplx> rho(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) rho[a * n + b] = psi.coeffs[a] * std::conj(psi.coeffs[b]);
  return rho;
}

double wigner_of_state(const StateVector& psi, PhasePoint z) {
  const std::size_t n = psi.size();
  double total = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    total += std::norm(psi.coeffs[a]) * cross_wigner({a, a}, z).real();
    for (std::size_t b = 0; b < a; ++b)
      total += 2.0 * (psi.coeffs[a] * std::conj(psi.coeffs[b]) * cross_wigner({a, b}, z)).real();
  }
  return total;
}

void wigner_of_state(const StateVector& psi, std::span<const double> x,
                     std::span<const double> k, std::span<double> out) {
  std::vector<double> im(x.size());
  const std::vector<cplx> rho = density_matrix(psi);
  kernels::synthesize(x, k, psi.size(), rho, out, im);
}

}  // namespace wnear
