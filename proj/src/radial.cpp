#include "wnear/radial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wnear/constants.hpp"
#include "wnear/error.hpp"
#include "wnear/quadrature.hpp"

namespace wnear {
namespace {

void check_metric(const Mat2& A) {
  if (!A.is_symmetric()) throw Error("radial", "invalid_argument", "A must be symmetric");
  if (!A.is_positive_definite()) throw Error("radial", "invalid_argument", "A must be positive definite");
}

}  // namespace

RadialSymbol radial_from(const SymbolSpec& F) {
  if (const auto* g = std::get_if<GaussianSymbol>(&F)) {
    const double amp = g->amplitude, alpha = g->alpha;
    return {[amp, alpha](double r) { return amp * std::exp(-alpha * r * r); }, g->A, g->z0};
  }
  if (const auto* r = std::get_if<RadialProfileSymbol>(&F)) return {r->G, r->A, r->z0};
  throw Error("radial", "invalid_argument", "symbol '" + symbol_kind(F) + "' is not radial");
}

RadialSymbol normalize_metric(const RadialSymbol& sym) {
  if (!sym.G) throw Error("radial", "invalid_argument", "radial profile G is empty");
  check_metric(sym.A);
  const double det = sym.A.det();
  if (std::abs(det - 1.0) < 1e-10) return sym;
  const double root = std::sqrt(det);
  const double s = std::sqrt(root);
  RadialSymbol out;
  out.A = {sym.A.xx / root, sym.A.xk / root, sym.A.kx / root, sym.A.kk / root};
  out.z0 = sym.z0;
  out.G = [G = sym.G, s](double r) { return G(s * r); };
  return out;
}

double radial_eigenvalue(const RadialSymbol& sym, std::size_t n, std::size_t q) {
  const RadialSymbol s = normalize_metric(sym);
  const double I = integrate_halfline(
      [&](double rho) { return s.G(rho) * damped_laguerre(n, 2.0 * rho * rho) * rho; }, q);
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return 4.0 * std::numbers::pi * sign * I;
}

double gaussian_eigenvalue_closed_form(double amplitude, double alpha, std::size_t n) {
  if (!(alpha > 0.0)) throw Error("radial", "invalid_argument", "alpha must be positive");
  return 2.0 * std::numbers::pi * amplitude / (1.0 + alpha) *
         std::pow((1.0 - alpha) / (1.0 + alpha), static_cast<double>(n));
}

double radial_norm(const RadialSymbol& sym) {
  const RadialSymbol s = normalize_metric(sym);
  const double I = integrate_halfline([&](double rho) {
    const double v = s.G(rho);
    return v * v * rho;
  });
  return std::sqrt(std::max(0.0, 2.0 * std::numbers::pi * I));
}

RadialSearch largest_radial_eigenvalue(const RadialSymbol& sym, std::size_t q, std::size_t n_cap) {
  const RadialSymbol s = normalize_metric(sym);
  RadialSearch r;
  r.norm_F = radial_norm(s);
  if (r.norm_F == 0.0)
    throw Error("radial", "no_positive_eigenvalue", "F is identically zero; the minimizer is 0");
  const double nf2 = r.norm_F * r.norm_F;
  const double positive_tol = 1e-12 * kTwoPiPowHalfD * r.norm_F;

  double captured = 0.0;  // sum mu_n^2 / (2 pi)
  bool have_positive = false;
  for (std::size_t n = 0; n < n_cap; ++n) {
    const double mu = radial_eigenvalue(s, n, q);
    r.mu.push_back(mu);
    captured += mu * mu / kTwoPiPowD;
    r.tail = std::sqrt(std::max(0.0, nf2 - captured));
    if (mu > positive_tol && mu > r.mu_star) {
      r.mu_star = mu;
      r.k_star = n;
      have_positive = true;
    }
    if (have_positive) {
      if (r.tail <= r.mu_star / kTwoPiPowHalfD) {
        r.certified = true;
        return r;
      }
    } else if (r.tail <= 1e-7 * r.norm_F) {
      throw Error("radial", "no_positive_eigenvalue",
                  "no positive eigenvalue up to n = " + std::to_string(n) +
                      " and the remaining Parseval tail is negligible; the minimizer is 0");
    }
  }
  if (!have_positive)
    throw Error("radial", "no_positive_eigenvalue",
                "no positive eigenvalue found below n_cap = " + std::to_string(n_cap));
  throw ConvergenceError("radial", "largest eigenvalue not certified within n_cap = " + std::to_string(n_cap),
                         r.mu_star);
}

Mat2 williamson_factor(const Mat2& A) {
  check_metric(A);
  if (std::abs(A.det() - 1.0) >= 1e-10) throw Error("radial", "invalid_argument", "det A must be 1");
  // For 2x2 SPD with det 1: sqrt(A) = (A + I) / sqrt(tr A + 2).
  const double d = std::sqrt(A.trace() + 2.0);
  const double off = 0.5 * (A.xk + A.kx) / d;
  return {(A.xx + 1.0) / d, off, off, (A.kk + 1.0) / d};
}

double RadialDescriptor::operator()(PhasePoint z) const {
  const PhasePoint w{z.x - z0.x, z.k - z0.k};
  return mu_K * radial_basis_fn(K, std::sqrt(std::max(0.0, A.quad(w))));
}

RadialMinimizer radial_minimizer(const RadialSymbol& sym, std::size_t q, std::size_t n_cap) {
  const RadialSymbol s = normalize_metric(sym);
  RadialMinimizer out;
  out.search = largest_radial_eigenvalue(s, q, n_cap);
  const RadialSearch& r = out.search;
  out.descriptor = {r.k_star, r.mu_star, s.A, s.z0};

  MinimizerResult& m = out.result;
  m.lambda_max = r.mu_star;
  m.N = r.k_star + 1;
  m.c0.coeffs.assign(m.N, cplx{});
  m.c0.coeffs[r.k_star] = std::sqrt(r.mu_star);
  m.norm_F = r.norm_F;
  m.min_distance = std::sqrt(std::max(0.0, r.norm_F * r.norm_F - r.mu_star * r.mu_star / kTwoPiPowD));
  m.epsilon = r.tail / r.norm_F;
  const double tol = 1e-10 * std::max(1.0, r.mu_star);
  for (std::size_t n = 0; n < r.mu.size(); ++n)
    if (n != r.k_star && r.mu[n] >= r.mu_star - tol) m.degenerate = true;
  return out;
}

PhaseGrid evaluate_descriptor(const RadialDescriptor& d, const GridSpec& spec) {
  return sample_grid(spec, d);
}

}  // namespace wnear
