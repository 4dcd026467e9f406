#include "wnear/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

#include "wnear/error.hpp"

namespace wnear {

bool Spectrum::is_kernel(std::size_t j) const { return std::abs(eigenvalues.at(j)) <= kernel_tol; }

Spectrum hermitian_eig(std::size_t n, std::span<const cplx> in) {
  if (in.size() != n * n) throw Error("spectral", "invalid_argument", "matrix must have n^2 entries");
  std::vector<cplx> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i * n + i] = {in[i * n + i].real(), 0.0};
    for (std::size_t j = 0; j < i; ++j) {
      a[i * n + j] = in[i * n + j];
      a[j * n + i] = std::conj(in[i * n + j]);
    }
  }
  std::vector<cplx> v(n * n, cplx{});
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  double frob = 0.0;
  for (const cplx& c : a) frob += std::norm(c);
  frob = std::sqrt(frob);

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) s += 2.0 * std::norm(a[i * n + j]);
    return std::sqrt(s);
  };

  std::size_t sweeps = 0;
  while (off_norm() > 1e-14 * frob) {
    if (sweeps == kMaxJacobiSweeps)
      throw ConvergenceError("spectral", "Jacobi eigensolver did not converge in 50 sweeps", off_norm());
    ++sweeps;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx b = a[p * n + q];
        const double g = std::abs(b);
        if (g == 0.0) continue;
        const cplx ph = b / g;  // e^{i phi}
        const double app = a[p * n + p].real();
        const double aqq = a[q * n + q].real();
        const double theta = (aqq - app) / (2.0 * g);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx phc = std::conj(ph);

        // A <- A J with J = [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
        for (std::size_t i = 0; i < n; ++i) {
          const cplx aip = a[i * n + p], aiq = a[i * n + q];
          a[i * n + p] = c * aip - s * phc * aiq;
          a[i * n + q] = s * aip + c * phc * aiq;
        }
        // A <- J^H A
        for (std::size_t j = 0; j < n; ++j) {
          const cplx apj = a[p * n + j], aqj = a[q * n + j];
          a[p * n + j] = c * apj - s * ph * aqj;
          a[q * n + j] = s * apj + c * ph * aqj;
        }
        a[p * n + q] = a[q * n + p] = 0.0;
        a[p * n + p] = app - t * g;
        a[q * n + q] = aqq + t * g;
        for (std::size_t i = 0; i < n; ++i) {
          const cplx vip = v[i * n + p], viq = v[i * n + q];
          v[i * n + p] = c * vip - s * phc * viq;
          v[i * n + q] = s * vip + c * phc * viq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a[i * n + i].real() > a[j * n + j].real();
  });

  Spectrum S;
  S.sweeps = sweeps;
  S.eigenvalues.resize(n);
  S.eigenvectors.assign(n, std::vector<cplx>(n));
  double largest = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t col = order[r];
    S.eigenvalues[r] = a[col * n + col].real();
    largest = std::max(largest, std::abs(S.eigenvalues[r]));
    for (std::size_t i = 0; i < n; ++i) S.eigenvectors[r][i] = v[i * n + col];
  }
  S.kernel_tol = 1e-12 * std::max(1.0, largest);
  for (double mu : S.eigenvalues) {
    if (mu > S.kernel_tol)
      ++S.n_plus;
    else if (mu < -S.kernel_tol)
      ++S.n_minus;
    else
      ++S.n_kernel;
  }
  return S;
}

Spectrum hermitian_eig(const CoefficientMatrix& M) { return hermitian_eig(M.order, M.entries); }

std::optional<EigenPair> largest_eigenpair(const Spectrum& S) {
  if (S.n_plus == 0) return std::nullopt;
  return EigenPair{S.eigenvalues.front(), S.eigenvectors.front()};
}

double spectral_gap(const Spectrum& S, std::size_t j) {
  if (j >= S.size()) throw Error("spectral", "invalid_argument", "eigenvalue index out of range");
  if (S.is_kernel(j)) throw Error("spectral", "kernel_eigenvalue", "spectral gap of a kernel eigenvalue");
  const double mu = S.eigenvalues[j];
  double m = std::abs(mu);
  for (double other : S.eigenvalues) {
    const double d = std::abs(other - mu);
    if (d > 1e-10) m = std::min(m, d);
  }
  return m;
}

double lowest_negative(const Spectrum& S) {
  if (S.n_minus == 0) return 0.0;
  return S.eigenvalues.back();
}

MonotonicityReport monotonicity_check(const SymbolSpec& F, const std::vector<std::size_t>& orders,
                                      std::size_t q) {
  if (orders.empty()) throw Error("spectral", "invalid_argument", "no orders given");
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] < 1 || (i > 0 && orders[i] <= orders[i - 1]))
      throw Error("spectral", "invalid_argument", "orders must be positive and increasing");
  }
  const CoefficientMatrix full = build_matrix(F, orders.back(), q);
  MonotonicityReport r;
  r.orders = orders;
  for (std::size_t N : orders) {
    const Spectrum S = hermitian_eig(full.leading_block(N));
    r.mu_plus.push_back(S.n_plus > 0 ? S.eigenvalues.front() : 0.0);
    r.mu_minus.push_back(lowest_negative(S));
  }
  for (std::size_t i = 1; i < orders.size(); ++i) {
    if (r.mu_plus[i] < r.mu_plus[i - 1] - kMonotonicitySlack)
      r.violations.push_back("mu_1 decreased from N=" + std::to_string(orders[i - 1]) +
                             " to N=" + std::to_string(orders[i]));
    if (r.mu_minus[i] > r.mu_minus[i - 1] + kMonotonicitySlack)
      r.violations.push_back("mu_-1 increased from N=" + std::to_string(orders[i - 1]) +
                             " to N=" + std::to_string(orders[i]));
  }
  r.ok = r.violations.empty();
  return r;
}

}  // namespace wnear
