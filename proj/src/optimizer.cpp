#include "wnear/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "wnear/constants.hpp"
#include "wnear/error.hpp"
#include "wnear/kernels.hpp"

namespace wnear {

double eigenvalue_error_bound(double epsilon, double norm_F) {
  return 2.0 * kTwoPiPowHalfD * epsilon * norm_F;
}

EigenvectorBound eigenvector_distance_bound(double epsilon, double norm_F, double m1) {
  EigenvectorBound r;
  r.M1 = m1 - 4.0 * kTwoPiPowD * epsilon * norm_F;
  // Written as a product so that norm_F = 0 does not divide by zero.
  r.valid = epsilon * 4.0 * kTwoPiPowD * norm_F < m1;
  if (r.valid) r.bound = 3.0 * kTwoPiPowHalfD * epsilon * norm_F / r.M1;
  return r;
}

double wigner_distance_bound(double epsilon, double norm_F, double lambda1, double M1) {
  if (!(M1 > 0.0)) throw Error("optimizer", "invalid_argument", "M1 must be positive");
  const double e = epsilon * norm_F;
  const double l1 = std::max(0.0, lambda1);
  return 4.0 * e * (1.0 + 3.0 * std::sqrt(l1) * std::sqrt(l1 + 2.0 * kTwoPiPowHalfD * e) / (2.0 * M1)) +
         18.0 * kTwoPiPowHalfD * e * e / (M1 * M1);
}

ErrorBudget error_budget(const Spectrum& S, double epsilon, double norm_F) {
  ErrorBudget b;
  b.eigenvalue_bound = eigenvalue_error_bound(epsilon, norm_F);
  if (S.n_plus == 0) return b;
  b.gap_m1 = spectral_gap(S, 0);
  const EigenvectorBound ev = eigenvector_distance_bound(epsilon, norm_F, b.gap_m1);
  b.gap_M1 = ev.M1;
  b.valid = ev.valid;
  b.eigenvector_bound = ev.bound;
  if (ev.valid) b.wigner_bound = wigner_distance_bound(epsilon, norm_F, S.eigenvalues.front(), ev.M1);
  return b;
}

void canonicalize_phase(std::vector<cplx>& v) {
  double largest = 0.0;
  for (const cplx& c : v) largest = std::max(largest, std::abs(c));
  if (largest == 0.0) return;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double a = std::abs(v[i]);
    if (a > 1e-12 * largest) {
      const cplx rot = std::conj(v[i]) / a;
      for (cplx& c : v) c *= rot;
      v[i] = {a, 0.0};
      return;
    }
  }
}

MinimizerResult minimizer_from(const CoefficientMatrix& M, const Spectrum& S) {
  MinimizerResult r;
  r.N = M.order;
  r.norm_F = M.norm_F;
  r.quadrature_order = M.quadrature_order;
  r.epsilon = M.norm_F > 0.0 ? truncation_error(M) : 0.0;
  r.bounds = error_budget(S, r.epsilon, M.norm_F);

  const auto top = largest_eigenpair(S);
  if (!top) {
    r.is_zero = true;
    r.min_distance = M.norm_F;
    r.c0.coeffs.assign(M.order, cplx{});
    return r;
  }
  r.lambda_max = top->mu;
  std::vector<cplx> v = top->v;
  canonicalize_phase(v);
  const double s = std::sqrt(top->mu);
  for (cplx& c : v) c *= s;
  r.c0.coeffs = std::move(v);
  r.min_distance = std::sqrt(std::max(0.0, M.norm_F * M.norm_F - top->mu * top->mu / kTwoPiPowD));
  const double tol = 1e-10 * std::max(1.0, std::abs(top->mu));
  r.degenerate = S.size() > 1 && S.eigenvalues[1] >= top->mu - tol;
  return r;
}

MinimizerResult closest_wigner(const SymbolSpec& F, double epsilon_target, std::size_t q,
                               std::size_t N_max) {
  validate(F);
  const double norm = l2_norm(F, q);
  if (norm == 0.0) {
    MinimizerResult r;
    r.is_zero = true;
    r.N = 1;
    r.c0.coeffs.assign(1, cplx{});
    return r;
  }
  const OrderSelection sel = select_order(F, epsilon_target, N_max, q);
  const Spectrum S = hermitian_eig(sel.matrix);
  return minimizer_from(sel.matrix, S);
}

PhaseGrid evaluate_minimizer(const MinimizerResult& result, const GridSpec& spec) {
  spec.validate();
  PhaseGrid g{spec, std::vector<double>(spec.size(), 0.0), {}};
  if (result.is_zero) return g;
  std::vector<double> x(spec.size()), k(spec.size()), im(spec.size());
  for (std::size_t i = 0; i < spec.nx; ++i)
    for (std::size_t j = 0; j < spec.nk; ++j) {
      x[i * spec.nk + j] = spec.x_at(i);
      k[i * spec.nk + j] = spec.k_at(j);
    }
  const std::vector<cplx> rho = density_matrix(result.c0);
  kernels::synthesize(x, k, result.c0.size(), rho, g.values, im);
  for (double v : im)
    if (std::abs(v) > 1e-10)
      throw Error("optimizer", "imaginary_residue", "minimizer Wigner function has an imaginary part");
  return g;
}

}  // namespace wnear
