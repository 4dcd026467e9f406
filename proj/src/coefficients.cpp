#include "wnear/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "wnear/basis.hpp"
#include "wnear/constants.hpp"
#include "wnear/error.hpp"
#include "wnear/kernels.hpp"
#include "wnear/parallel.hpp"
#include "wnear/quadrature.hpp"

namespace wnear {
namespace {

// Points per projection task. Fixed, so the summation order (and the result)
// does not depend on the number of threads.
constexpr std::size_t kChunk = 2048;

// Cap on the number of projection tasks; each holds an N x N accumulator.
constexpr std::size_t kMaxTasks = 64;

double sum_norm_sq(const std::vector<cplx>& v) {
  double s = 0.0;
  for (const cplx& c : v) s += std::norm(c);
  return s;
}

// Quadrature nodes for F, generated on demand (a 2048^2 grid has 16M of them).
// Closed-form symbols use the scaled tensor Gauss-Hermite rule. Grid symbols
// use 2 x 2 Gauss-Legendre points per cell: the interpolant is bilinear there,
// and this is the rule grid_norm_sq uses, so Parseval compares like with like.
class NodeSet {
 public:
  NodeSet(const SymbolSpec& F, std::size_t qq) {
    if (const auto* g = std::get_if<GridSymbol>(&F)) {
      const GridSpec& sp = g->grid.spec;
      grid_ = &sp;
      hx_ = (sp.x_max - sp.x_min) / static_cast<double>(sp.nx - 1);
      hk_ = (sp.k_max - sp.k_min) / static_cast<double>(sp.nk - 1);
      count_ = 4 * (sp.nx - 1) * (sp.nk - 1);
    } else {
      rule_ = &gauss_hermite_rule(qq);
      qq_ = qq;
      s_ = quadrature_scale(F);
      count_ = qq * qq;
    }
  }

  std::size_t size() const noexcept { return count_; }

  // Weights exclude F and include the (2 pi)^d of the coefficient definition.
  void fill(std::size_t lo, std::size_t n, double* x, double* k, double* w) const {
    if (grid_) {
      const double t[2] = {0.5 - 0.5 / std::sqrt(3.0), 0.5 + 0.5 / std::sqrt(3.0)};
      const double wc = kTwoPiPowD * 0.25 * hx_ * hk_;
      for (std::size_t p = 0; p < n; ++p) {
        const std::size_t g = lo + p, cell = g / 4, sub = g % 4;
        const std::size_t ci = cell / (grid_->nk - 1), cj = cell % (grid_->nk - 1);
        x[p] = grid_->x_min + (static_cast<double>(ci) + t[sub / 2]) * hx_;
        k[p] = grid_->k_min + (static_cast<double>(cj) + t[sub % 2]) * hk_;
        w[p] = wc;
      }
      return;
    }
    for (std::size_t p = 0; p < n; ++p) {
      const std::size_t g = lo + p, i = g / qq_, j = g % qq_;
      x[p] = s_ * rule_->nodes[i];
      k[p] = s_ * rule_->nodes[j];
      w[p] = kTwoPiPowD * s_ * s_ * rule_->scaled_weights[i] * rule_->scaled_weights[j];
    }
  }

 private:
  std::size_t count_ = 0;
  const QuadratureRule* rule_ = nullptr;
  std::size_t qq_ = 0;
  double s_ = 1.0;
  const GridSpec* grid_ = nullptr;
  double hx_ = 0.0, hk_ = 0.0;
};

void weigh_by_symbol(const SymbolSpec& F, std::span<const double> x, std::span<const double> k,
                     std::span<double> w) {
  std::vector<double> v(w.size());
  evaluate_batch(F, x, k, v);
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (!std::isfinite(v[p])) throw Error("quadrature", "non_finite", "symbol is not finite at a quadrature node");
    w[p] *= v[p];
  }
}

}  // namespace

CoefficientMatrix CoefficientMatrix::leading_block(std::size_t N) const {
  if (N == 0 || N > order) throw Error("coefficients", "invalid_argument", "block size out of range");
  CoefficientMatrix b;
  b.order = N;
  b.entries.resize(N * N);
  for (std::size_t n = 0; n < N; ++n)
    for (std::size_t m = 0; m < N; ++m) b.entries[n * N + m] = entries[n * order + m];
  b.norm_F = norm_F;
  b.partial_norm_sq = sum_norm_sq(b.entries);
  b.quadrature_order = quadrature_order;
  b.symmetry_defect = symmetry_defect;
  return b;
}

std::size_t effective_quadrature(std::size_t N, std::size_t q) {
  return std::min(kMaxQuadratureOrder, std::max(q, N + 32));
}

double quadrature_scale(const SymbolSpec& F) {
  // F W(e_n, e_m) carries e^(-(1 + alpha lambda_min)|z|^2) in the widest
  // direction; matching the rule to it leaves a polynomial (times a decaying
  // or entire factor) instead of a narrow Gaussian the rule cannot resolve.
  if (const auto* g = std::get_if<GaussianSymbol>(&F)) return 1.0 / std::sqrt(1.0 + g->alpha * g->A.min_eigenvalue());
  return 1.0;
}

cplx compute_coefficient(const SymbolSpec& F, BasisIndex idx, std::size_t q) {
  validate(F);
  const NodeSet nodes(F, effective_quadrature(std::max(idx.n, idx.m) + 1, q));
  std::vector<double> x(kChunk), k(kChunk), w(kChunk);
  cplx total{};
  for (std::size_t lo = 0; lo < nodes.size(); lo += kChunk) {
    const std::size_t n = std::min(kChunk, nodes.size() - lo);
    nodes.fill(lo, n, x.data(), k.data(), w.data());
    weigh_by_symbol(F, {x.data(), n}, {k.data(), n}, {w.data(), n});
    for (std::size_t p = 0; p < n; ++p) total += w[p] * std::conj(cross_wigner(idx, {x[p], k[p]}));
  }
  return total;
}

CoefficientMatrix build_matrix(const SymbolSpec& F, std::size_t N, std::size_t q) {
  if (N < 1) throw Error("coefficients", "invalid_argument", "order N must be >= 1");
  validate(F);
  const std::size_t qq = effective_quadrature(N, q);
  const NodeSet nodes(F, qq);

  // The chunk size depends only on the node count, never on the thread count.
  const std::size_t count = nodes.size();
  const std::size_t chunk = std::max(kChunk, (count + kMaxTasks - 1) / kMaxTasks);
  const std::size_t tasks = (count + chunk - 1) / chunk;
  std::vector<std::vector<cplx>> partial(tasks);
  parallel_for(tasks, [&](std::size_t t) {
    const std::size_t lo = t * chunk;
    const std::size_t n = std::min(chunk, count - lo);
    std::vector<double> x(n), k(n), w(n);
    nodes.fill(lo, n, x.data(), k.data(), w.data());
    weigh_by_symbol(F, x, k, w);
    partial[t].assign(N * N, cplx{});
    kernels::project(x, k, w, N, partial[t]);
  });

  CoefficientMatrix M;
  M.order = N;
  M.quadrature_order = qq;
  M.entries.assign(N * N, cplx{});
  for (const auto& part : partial)
    for (std::size_t i = 0; i < N * N; ++i) M.entries[i] += part[i];
  for (std::size_t n = 0; n < N; ++n) {
    M.entries[n * N + n] = {M.entries[n * N + n].real(), 0.0};
    for (std::size_t m = 0; m < n; ++m) M.entries[m * N + n] = std::conj(M.entries[n * N + m]);
  }
  M.symmetry_defect = 0.0;
  M.partial_norm_sq = sum_norm_sq(M.entries);
  M.norm_F = l2_norm(F, q);
  return M;
}

double truncation_error(const CoefficientMatrix& M) {
  if (!(M.norm_F > 0.0))
    throw Error("coefficients", "zero_norm", "truncation error undefined for ||F|| = 0");
  const double nf2 = M.norm_F * M.norm_F;
  const double rest = std::max(0.0, nf2 - M.partial_norm_sq / kTwoPiPowD);
  return std::sqrt(rest) / M.norm_F;
}

OrderSelection select_order(const SymbolSpec& F, double epsilon, std::size_t N_max, std::size_t q) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw Error("coefficients", "invalid_argument", "epsilon must lie in (0, 1)");
  if (N_max < 1) throw Error("coefficients", "invalid_argument", "N_max must be >= 1");

  std::size_t N = 1;
  std::size_t below = 0;  // largest order known to miss the target
  double best = 1.0;
  for (;;) {
    CoefficientMatrix M = build_matrix(F, N, q);
    const double eps = truncation_error(M);
    best = std::min(best, eps);
    if (eps < epsilon) {
      std::size_t lo = below, hi = N;  // lo fails (or 0), hi passes
      while (hi - lo > 1) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (truncation_error(M.leading_block(mid)) < epsilon)
          hi = mid;
        else
          lo = mid;
      }
      CoefficientMatrix block = hi == N ? std::move(M) : M.leading_block(hi);
      const double e = truncation_error(block);
      return {hi, std::move(block), e};
    }
    if (N >= N_max) break;
    below = N;
    N = std::min(2 * N, N_max);
  }
  throw ConvergenceError("coefficients",
                         "truncation error did not reach epsilon within N_max = " + std::to_string(N_max),
                         best);
}

}  // namespace wnear
