#pragma once

// Gauss rules and the phase-space / half-line integrators built on them.

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "wnear/basis.hpp"

namespace wnear {

enum class RuleKind { gauss_hermite, gauss_legendre_halfline };

struct QuadratureRule {
  RuleKind kind = RuleKind::gauss_hermite;
  std::vector<double> nodes;    // strictly increasing
  std::vector<double> weights;  // positive

  /// Gauss-Hermite only: weights[i] * exp(nodes[i]^2). Stays representable at
  /// q = 512 where the plain weights underflow.
  std::vector<double> scaled_weights;

  std::size_t size() const noexcept { return nodes.size(); }
};

inline constexpr std::size_t kMaxQuadratureOrder = 512;

/// q-point rule for the weight e^(-x^2), 1 <= q <= 512. Nodes are eigenvalues
/// of the Jacobi matrix (bisection on Sturm counts), polished by one Newton
/// step on e_q. Cached per q; the returned reference stays valid.
const QuadratureRule& gauss_hermite_rule(std::size_t q);

/// q-point Gauss-Legendre rule mapped to [0, pi/2] (the variable u of the
/// substitution rho = tan u).
const QuadratureRule& gauss_legendre_rule(std::size_t q);

/// Tensor-product Gauss-Hermite approximation of the integral of f over R^2.
/// f is sampled at (s x_i, s x_j) and multiplied by the scaled weights, i.e.
/// the e^(-x^2 - k^2) weight is divided back out. `scale` s > 0 adapts the
/// rule to integrands decaying like e^(-|z|^2 / s^2).
/// Throws Error("quadrature", "non_finite") on a non-finite sample.
cplx integrate_phase_space(const std::function<cplx(PhasePoint)>& f, std::size_t q,
                           double scale = 1.0);

/// Integral of g over (0, inf) via rho = tan(u) and Gauss-Legendre in u,
/// starting at q points and doubling until two estimates agree to 1e-12
/// relative to max(|I|, int |g|). Throws ConvergenceError past q = 512.
double integrate_halfline(const std::function<double(double)>& g, std::size_t q = 32);

}  // namespace wnear
