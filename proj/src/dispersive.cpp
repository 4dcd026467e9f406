#include "wnear/dispersive.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wnear/constants.hpp"
#include "wnear/error.hpp"
#include "wnear/spectral.hpp"

namespace wnear {

double wigner_approx_value(const StateVector& initial, const DispersionRelation& disp, double t,
                           PhasePoint z) {
  if (!(t >= 0.0)) throw Error("dispersive", "invalid_argument", "t must be >= 0");
  const double e = 2.0 * t * disp.omega_I(z.k);
  const double shift = disp.nu(z.k) * t;
  if (!std::isfinite(e) || !std::isfinite(shift))
    throw Error("dispersive", "non_finite", "non-finite exponent in the Wigner approximation");
  return std::exp(e) * wigner_of_state(initial, {z.x - shift, z.k});
}

Representability is_exactly_representable(const DispersionRelation& disp, std::span<const double> sample) {
  std::vector<double> ks(sample.begin(), sample.end());
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  if (ks.size() < 3)
    throw Error("dispersive", "invalid_argument", "need at least 3 distinct sample points");

  Representability r;
  for (double k : ks) {
    const double wi = disp.omega_I(k);
    if (!(std::abs(wi) < 1e-12)) {
      r.representable = false;
      r.reason = "omega_I_nonzero";
      r.witness_k = k;
      r.witness_value = wi;
      return r;
    }
  }
  std::vector<double> nu(ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i) nu[i] = disp.nu(ks[i]);
  for (std::size_t i = 0; i + 2 < ks.size(); ++i) {
    const double d1 = (nu[i + 1] - nu[i]) / (ks[i + 1] - ks[i]);
    const double d2 = (nu[i + 2] - nu[i + 1]) / (ks[i + 2] - ks[i + 1]);
    const double span = ks[i + 2] - ks[i];
    const double dd = (d2 - d1) / span;
    // Relative to the size of nu on the triple, so the test is unit-free.
    const double scale = std::max({1e-300, std::abs(nu[i]), std::abs(nu[i + 1]), std::abs(nu[i + 2])});
    const double rel = std::abs(dd) * span * span / scale;
    if (!(rel < 1e-10)) {
      r.representable = false;
      r.reason = "nu_not_affine";
      r.witness_k = ks[i + 1];
      r.witness_value = rel;
      return r;
    }
  }
  return r;
}

RepresentabilityDiagnostic representability_diagnostic(const SymbolSpec& F, std::size_t N, std::size_t q) {
  const auto* snap = std::get_if<SnapshotSymbol>(&F);
  if (!snap) throw Error("dispersive", "invalid_argument", "diagnostic expects a wigner_approx_snapshot");
  const CoefficientMatrix M = build_matrix(F, N, q);
  const Spectrum S = hermitian_eig(M);
  RepresentabilityDiagnostic d;
  d.N = N;
  const double top = S.eigenvalues.front();
  d.tolerance = 1e-10 * std::max(1.0, std::abs(top));
  d.min_eigenvalue = S.eigenvalues.back();
  for (double mu : S.eigenvalues) {
    if (mu < 0.0) d.negative_mass += mu * mu;
    if (mu < -d.tolerance) ++d.n_negative;
  }
  d.nonrepresentable = d.n_negative > 0;
  return d;
}

SnapshotSymbol cubic_snapshot(double t) {
  SnapshotSymbol s;
  s.initial.coeffs = {cplx{1.0, 0.0}};
  s.dispersion = DispersionRelation::from_polynomials(Polynomial{{0.0, 0.0, 0.0, 1.0 / 3.0}});
  s.t = t;
  return s;
}

CubicSeries cubic_series(double t) {
  const double sqrt2 = std::sqrt(2.0);
  const double sqrtpi = std::sqrt(std::numbers::pi);
  CubicSeries c;
  c.f00 = 1.0 - 3.0 * t * t / 32.0;
  c.f01 = sqrt2 * t / 8.0;
  c.f11 = -3.0 * t * t / 32.0;
  c.lambda1 = 1.0 - t * t / 16.0;
  c.lambda_minus1 = -t * t / 4.0;
  c.psi0 = 1.0 - t * t / 32.0;
  c.psi1 = t / (4.0 * sqrt2);
  c.eigenvalue_bound = t / sqrt2;
  c.M1 = 0.5 * (1.0 - 4.0 * sqrt2 * t - 3.0 * t * t / 16.0);
  c.eigenvector_bound = 3.0 / sqrt2 * t * (1.0 + 2.0 * sqrtpi * t);
  c.wigner_bound = 4.0 * t / sqrtpi * (1.0 + 9.0 * t / sqrt2);
  return c;
}

CubicExampleReport cubic_example_report(double t, std::size_t N, std::size_t q) {
  if (!(t > 0.0 && t <= 0.2)) throw Error("dispersive", "invalid_argument", "t must lie in (0, 0.2]");
  if (N < 2) throw Error("dispersive", "invalid_argument", "N must be >= 2");
  const SymbolSpec F = cubic_snapshot(t);
  const CoefficientMatrix M = build_matrix(F, N, q);
  const CoefficientMatrix M2 = M.leading_block(2);
  const Spectrum S2 = hermitian_eig(M2);

  CubicExampleReport r;
  r.t = t;
  r.N = N;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) r.F2[a][b] = M2(a, b);
  r.lambda1 = S2.eigenvalues[0];
  r.lambda_minus1 = S2.eigenvalues[1];

  const double a = M2(0, 0).real(), d = M2(1, 1).real();
  const double disc = std::sqrt((a - d) * (a - d) + 4.0 * std::norm(M2(1, 0)));
  r.lambda1_closed = 0.5 * (a + d + disc);
  r.lambda_minus1_closed = 0.5 * (a + d - disc);

  r.psi12 = S2.eigenvectors[0];
  canonicalize_phase(r.psi12);
  r.norm_F = M2.norm_F;
  r.epsilon = truncation_error(M2);
  r.bounds = error_budget(S2, r.epsilon, r.norm_F);

  const Spectrum SN = N == 2 ? S2 : hermitian_eig(M);
  r.lambda1_N = SN.eigenvalues.front();
  r.lambda_minus1_N = SN.eigenvalues.back();
  r.series = cubic_series(t);
  return r;
}

}  // namespace wnear
