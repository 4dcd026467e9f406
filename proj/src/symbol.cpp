#include "wnear/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "wnear/error.hpp"
#include "wnear/quadrature.hpp"

namespace wnear {

double Mat2::min_eigenvalue() const {
  const double m = 0.5 * trace();
  const double r = std::sqrt(std::max(0.0, 0.25 * (xx - kk) * (xx - kk) + xk * kx));
  return m - r;
}

bool Mat2::is_symmetric(double tol) const {
  return std::abs(xk - kx) <= tol * std::max({1.0, std::abs(xx), std::abs(kk), std::abs(xk)});
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void invalid(const std::string& message) {
  throw Error("symbol", "invalid_argument", message);
}

bool finite(PhasePoint z) { return std::isfinite(z.x) && std::isfinite(z.k); }

void check_metric(const Mat2& A) {
  if (!std::isfinite(A.xx) || !std::isfinite(A.xk) || !std::isfinite(A.kx) || !std::isfinite(A.kk))
    invalid("A has non-finite entries");
  if (!A.is_symmetric()) invalid("A must be symmetric");
  if (!A.is_positive_definite()) invalid("A must be positive definite");
}

PhasePoint minus(PhasePoint a, PhasePoint b) { return {a.x - b.x, a.k - b.k}; }

double snapshot_factor(const SnapshotSymbol& s, double k) {
  const double e = 2.0 * s.t * s.dispersion.omega_I(k);
  if (!std::isfinite(e)) throw Error("dispersive", "non_finite", "non-finite damping exponent");
  return std::exp(e);
}

double snapshot_shift(const SnapshotSymbol& s, double k) {
  const double v = s.dispersion.nu(k);
  if (!std::isfinite(v)) throw Error("dispersive", "non_finite", "non-finite group velocity");
  return v * s.t;
}

// Exact integral of the squared bilinear interpolant: two Gauss-Legendre
// points per axis integrate a biquadratic exactly.
double grid_norm_sq(const PhaseGrid& g) {
  const GridSpec& s = g.spec;
  const double hx = (s.x_max - s.x_min) / static_cast<double>(s.nx - 1);
  const double hk = (s.k_max - s.k_min) / static_cast<double>(s.nk - 1);
  const double a = 0.5 - 0.5 / std::sqrt(3.0);
  const double b = 0.5 + 0.5 / std::sqrt(3.0);
  const double t[2] = {a, b};
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < s.nx; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j + 1 < s.nk; ++j) {
      const double f00 = g.at(i, j), f01 = g.at(i, j + 1);
      const double f10 = g.at(i + 1, j), f11 = g.at(i + 1, j + 1);
      double cell = 0.0;
      for (double tx : t)
        for (double tk : t) {
          const double v = (1 - tx) * ((1 - tk) * f00 + tk * f01) + tx * ((1 - tk) * f10 + tk * f11);
          cell += v * v;
        }
      row += 0.25 * cell;
    }
    total += row;
  }
  return total * hx * hk;
}

}  // namespace

std::string symbol_kind(const SymbolSpec& F) {
  return std::visit(overloaded{
                        [](const GaussianSymbol&) { return std::string("gaussian"); },
                        [](const RadialProfileSymbol&) { return std::string("radial_profile"); },
                        [](const SnapshotSymbol&) { return std::string("wigner_approx_snapshot"); },
                        [](const GridSymbol&) { return std::string("grid"); },
                    },
                    F);
}

void validate(const SymbolSpec& F) {
  std::visit(overloaded{
                 [](const GaussianSymbol& g) {
                   if (!std::isfinite(g.amplitude) || g.amplitude < 0.0)
                     invalid("gaussian amplitude must be finite and non-negative");
                   if (!std::isfinite(g.alpha) || g.alpha <= 0.0) invalid("gaussian alpha must be positive");
                   check_metric(g.A);
                   if (!finite(g.z0)) invalid("z0 must be finite");
                 },
                 [](const RadialProfileSymbol& r) {
                   if (!r.G) invalid("radial profile G is empty");
                   check_metric(r.A);
                   if (!finite(r.z0)) invalid("z0 must be finite");
                 },
                 [](const SnapshotSymbol& s) {
                   if (!std::isfinite(s.t) || s.t < 0.0) invalid("snapshot time must be finite and >= 0");
                   if (s.initial.size() == 0) invalid("initial state is empty");
                   for (const cplx& c : s.initial.coeffs)
                     if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
                       invalid("initial state has non-finite coefficients");
                   if (!s.dispersion.omega_I || !s.dispersion.nu) invalid("dispersion relation is incomplete");
                 },
                 [](const GridSymbol& g) {
                   g.grid.spec.validate();
                   if (g.grid.values.size() != g.grid.spec.size()) invalid("grid values length != nx*nk");
                   for (double v : g.grid.values)
                     if (!std::isfinite(v)) invalid("grid has non-finite values");
                 },
             },
             F);
}

double evaluate(const SymbolSpec& F, PhasePoint z) {
  return std::visit(
      overloaded{
          [&](const GaussianSymbol& g) { return g.amplitude * std::exp(-g.alpha * g.A.quad(minus(z, g.z0))); },
          [&](const RadialProfileSymbol& r) { return r.G(std::sqrt(std::max(0.0, r.A.quad(minus(z, r.z0))))); },
          [&](const SnapshotSymbol& s) {
            return snapshot_factor(s, z.k) * wigner_of_state(s.initial, {z.x - snapshot_shift(s, z.k), z.k});
          },
          [&](const GridSymbol& g) { return g.grid.interpolate(z); },
      },
      F);
}

void evaluate_batch(const SymbolSpec& F, std::span<const double> x, std::span<const double> k,
                    std::span<double> out) {
  if (x.size() != k.size() || x.size() != out.size())
    throw Error("symbol", "invalid_argument", "mismatched array lengths");
  if (const auto* s = std::get_if<SnapshotSymbol>(&F)) {
    std::vector<double> shifted(x.size());
    for (std::size_t p = 0; p < x.size(); ++p) shifted[p] = x[p] - snapshot_shift(*s, k[p]);
    wigner_of_state(s->initial, shifted, k, out);
    for (std::size_t p = 0; p < x.size(); ++p) out[p] *= snapshot_factor(*s, k[p]);
    return;
  }
  for (std::size_t p = 0; p < x.size(); ++p) out[p] = evaluate(F, {x[p], k[p]});
}

double l2_norm(const SymbolSpec& F, std::size_t q) {
  validate(F);
  return std::visit(
      overloaded{
          [&](const GaussianSymbol& g) {
            // Closed form. Quadrature would add its own rounding to ||F||^2,
            // which already sets a ~1e-7 floor under the Parseval error.
            return std::abs(g.amplitude) * std::sqrt(std::numbers::pi / (2.0 * g.alpha * std::sqrt(g.A.det())));
          },
          [&](const RadialProfileSymbol& r) {
            const double I = integrate_halfline([&](double rho) {
              const double v = r.G(rho);
              return v * v * rho;
            });
            return std::sqrt(std::max(0.0, 2.0 * std::numbers::pi * I / std::sqrt(r.A.det())));
          },
          [&](const SnapshotSymbol& s) {
            // The shift x -> x - nu(k) t preserves area, so only the damping
            // factor and W psi0 enter; W psi0^2 is a polynomial times
            // e^(-2|z|^2), integrated exactly at scale 1/sqrt(2).
            const std::size_t qq = std::min<std::size_t>(kMaxQuadratureOrder,
                                                          std::max<std::size_t>(q, 2 * s.initial.size() + 16));
            const cplx v = integrate_phase_space(
                [&](PhasePoint z) {
                  const double w = wigner_of_state(s.initial, z);
                  const double f = snapshot_factor(s, z.k);
                  return cplx(f * f * w * w, 0.0);
                },
                qq, 1.0 / std::sqrt(2.0));
            return std::sqrt(std::max(0.0, v.real()));
          },
          [&](const GridSymbol& g) { return std::sqrt(std::max(0.0, grid_norm_sq(g.grid))); },
      },
      F);
}

GaussianSymbol we0_symbol() {
  GaussianSymbol g;
  g.amplitude = 1.0 / std::numbers::pi;
  g.alpha = 1.0;
  return g;
}

}  // namespace wnear
