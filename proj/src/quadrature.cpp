#include "wnear/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "wnear/error.hpp"

namespace wnear {
namespace {

// Number of eigenvalues below x of the Gauss-Hermite Jacobi matrix (zero
// diagonal, off-diagonal sqrt(j/2)).
std::size_t sturm_count(std::size_t q, double x) {
  std::size_t count = 0;
  double d = -x;
  if (d < 0.0) ++count;
  for (std::size_t j = 1; j < q; ++j) {
    if (d == 0.0) d = 1e-300;
    d = -x - (0.5 * static_cast<double>(j)) / d;
    if (d < 0.0) ++count;
  }
  return count;
}

// e_q(x) and e_{q-1}(x) by the normalized recurrence, plus sum_{j<q} e_j(x)^2.
struct HermiteEval {
  double eq, eq1, sum_sq;
};

HermiteEval hermite_tail(std::size_t q, double x) {
  double prev = 0.0;
  double cur = std::exp(-0.5 * x * x) / std::sqrt(std::sqrt(std::numbers::pi));
  double sum_sq = 0.0;
  for (std::size_t j = 0; j < q; ++j) {
    sum_sq += cur * cur;
    const double jj = static_cast<double>(j);
    const double next = x * std::sqrt(2.0 / (jj + 1.0)) * cur - std::sqrt(jj / (jj + 1.0)) * prev;
    prev = cur;
    cur = next;
  }
  return {cur, prev, sum_sq};
}

std::unique_ptr<QuadratureRule> build_hermite(std::size_t q) {
  auto rule = std::make_unique<QuadratureRule>();
  rule->kind = RuleKind::gauss_hermite;
  rule->nodes.resize(q);
  rule->weights.resize(q);
  rule->scaled_weights.resize(q);

  // Gershgorin: every eigenvalue lies in [-r, r].
  const double r = 2.0 * std::sqrt(0.5 * static_cast<double>(q)) + 1.0;
  for (std::size_t i = 0; i < q; ++i) {
    double lo = -r;
    double hi = r;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
      const double mid = 0.5 * (lo + hi);
      if (sturm_count(q, mid) > i)
        hi = mid;
      else
        lo = mid;
    }
    double x = 0.5 * (lo + hi);
    const HermiteEval h = hermite_tail(q, x);
    const double deriv = std::sqrt(2.0 * static_cast<double>(q)) * h.eq1 - x * h.eq;
    if (deriv != 0.0) {
      const double step = h.eq / deriv;
      if (std::abs(step) < hi - lo + 1e-12) x -= step;
    }
    rule->nodes[i] = x;
  }
  for (std::size_t i = 0; i < q / 2; ++i) {
    const double a = 0.5 * (rule->nodes[q - 1 - i] - rule->nodes[i]);
    rule->nodes[i] = -a;
    rule->nodes[q - 1 - i] = a;
  }
  if (q % 2 == 1) rule->nodes[q / 2] = 0.0;

  for (std::size_t i = 0; i < q; ++i) {
    const double x = rule->nodes[i];
    const double sw = 1.0 / hermite_tail(q, x).sum_sq;
    rule->scaled_weights[i] = sw;
    rule->weights[i] = sw * std::exp(-x * x);
  }
  for (std::size_t i = 0; i < q / 2; ++i) {
    const double a = 0.5 * (rule->scaled_weights[i] + rule->scaled_weights[q - 1 - i]);
    rule->scaled_weights[i] = rule->scaled_weights[q - 1 - i] = a;
    const double b = 0.5 * (rule->weights[i] + rule->weights[q - 1 - i]);
    rule->weights[i] = rule->weights[q - 1 - i] = b;
  }
  return rule;
}

std::unique_ptr<QuadratureRule> build_legendre(std::size_t q) {
  auto rule = std::make_unique<QuadratureRule>();
  rule->kind = RuleKind::gauss_legendre_halfline;
  rule->nodes.resize(q);
  rule->weights.resize(q);
  const double half = 0.25 * std::numbers::pi;  // maps [-1, 1] onto [0, pi/2]
  for (std::size_t i = 0; i < (q + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(q) + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t j = 2; j <= q; ++j) {
        const double jj = static_cast<double>(j);
        const double p2 = ((2.0 * jj - 1.0) * x * p1 - (jj - 1.0) * p0) / jj;
        p0 = p1;
        p1 = p2;
      }
      if (q == 1) {
        p1 = x;
        p0 = 1.0;
      }
      dp = static_cast<double>(q) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // x descends with i; store ascending in u.
    rule->nodes[q - 1 - i] = half * (1.0 + x);
    rule->nodes[i] = half * (1.0 - x);
    rule->weights[q - 1 - i] = half * w;
    rule->weights[i] = half * w;
  }
  return rule;
}

template <class Build>
const QuadratureRule& cached(std::map<std::size_t, std::unique_ptr<QuadratureRule>>& cache,
                             std::mutex& mu, std::size_t q, Build build) {
  if (q < 1 || q > kMaxQuadratureOrder)
    throw Error("quadrature", "invalid_argument",
                "quadrature order must be in [1, 512], got " + std::to_string(q));
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[q];
  if (!slot) slot = build(q);
  return *slot;
}

}  // namespace

const QuadratureRule& gauss_hermite_rule(std::size_t q) {
  static std::map<std::size_t, std::unique_ptr<QuadratureRule>> cache;
  static std::mutex mu;
  return cached(cache, mu, q, build_hermite);
}

const QuadratureRule& gauss_legendre_rule(std::size_t q) {
  static std::map<std::size_t, std::unique_ptr<QuadratureRule>> cache;
  static std::mutex mu;
  return cached(cache, mu, q, build_legendre);
}

cplx integrate_phase_space(const std::function<cplx(PhasePoint)>& f, std::size_t q,
                           double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw Error("quadrature", "invalid_argument", "scale must be positive");
  const QuadratureRule& rule = gauss_hermite_rule(q);
  cplx total{0.0, 0.0};
  for (std::size_t i = 0; i < q; ++i) {
    cplx row{0.0, 0.0};
    for (std::size_t j = 0; j < q; ++j) {
      const cplx v = f({scale * rule.nodes[i], scale * rule.nodes[j]});
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw Error("quadrature", "non_finite", "integrand is not finite at a quadrature node");
      row += rule.scaled_weights[j] * v;
    }
    total += rule.scaled_weights[i] * row;
  }
  return total * (scale * scale);
}

double integrate_halfline(const std::function<double(double)>& g, std::size_t q) {
  if (q < 1) q = 1;
  auto estimate = [&](std::size_t n, double& abs_total) {
    const QuadratureRule& rule = gauss_legendre_rule(n);
    double total = 0.0;
    abs_total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double u = rule.nodes[i];
      const double c = std::cos(u);
      const double v = g(std::tan(u)) / (c * c);
      if (!std::isfinite(v))
        throw Error("quadrature", "non_finite", "half-line integrand is not finite");
      total += rule.weights[i] * v;
      abs_total += rule.weights[i] * std::abs(v);
    }
    return total;
  };
  double abs_prev = 0.0;
  double prev = estimate(std::min(q, kMaxQuadratureOrder), abs_prev);
  double best_diff = INFINITY;
  for (std::size_t n = 2 * std::min(q, kMaxQuadratureOrder); n <= kMaxQuadratureOrder; n *= 2) {
    double abs_cur = 0.0;
    const double cur = estimate(n, abs_cur);
    const double diff = std::abs(cur - prev);
    if (diff <= 1e-12 * std::max(std::abs(cur), abs_cur)) return cur;
    best_diff = std::min(best_diff, diff);
    prev = cur;
  }
  throw ConvergenceError("quadrature", "half-line integral did not converge with 512 nodes",
                         best_diff);
}

}  // namespace wnear
