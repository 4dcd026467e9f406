#include <cmath>
#include <random>

#include "doctest.h"
#include "wnear/coefficients.hpp"
#include "wnear/constants.hpp"
#include "wnear/dispersive.hpp"
#include "wnear/error.hpp"
#include "wnear/parallel.hpp"
#include "wnear/radial.hpp"

using namespace wnear;

namespace {

// F = W psi for psi = sum c_n e_n (a snapshot at t = 0) has f_{n,m} = c_n conj(c_m).
SnapshotSymbol state_symbol(const std::vector<cplx>& c) {
  SnapshotSymbol s;
  s.initial.coeffs = c;
  s.dispersion = DispersionRelation::from_polynomials(Polynomial{{0.0, 0.0, 0.5}});
  s.t = 0.0;
  return s;
}

GaussianSymbol skewed_gaussian() { return GaussianSymbol{0.8, 1.3, Mat2{1.4, 0.3, 0.3, 0.9}, {0.4, -0.25}}; }

}  // namespace

TEST_CASE("we0 expands to the single coefficient f_00 = 1") {
  const CoefficientMatrix M = build_matrix(we0_symbol(), 6);
  for (std::size_t n = 0; n < 6; ++n)
    for (std::size_t m = 0; m < 6; ++m) CHECK(std::abs(M(n, m) - (n == 0 && m == 0 ? 1.0 : 0.0)) < 1e-13);
  CHECK(truncation_error(M) < 1e-7);
}

TEST_CASE("the Wigner function of a finite state expands to c c^H") {
  const std::vector<cplx> c = {{0.6, 0.0}, {0.2, -0.5}, {0.0, 0.3}, {-0.4, 0.1}};
  const CoefficientMatrix M = build_matrix(state_symbol(c), 7);
  for (std::size_t n = 0; n < 7; ++n)
    for (std::size_t m = 0; m < 7; ++m) {
      const cplx expect = (n < 4 && m < 4) ? c[n] * std::conj(c[m]) : cplx{};
      CHECK(std::abs(M(n, m) - expect) < 1e-12);
    }
}

TEST_CASE("centred Gaussian: diagonal matrix with the closed-form eigenvalues") {
  for (double alpha : {0.5, 2.0, 3.0}) {
    const CoefficientMatrix M = build_matrix(GaussianSymbol{1.0, alpha, {}, {}}, 12);
    for (std::size_t n = 0; n < 12; ++n)
      for (std::size_t m = 0; m < 12; ++m) {
        const double expect = n == m ? gaussian_eigenvalue_closed_form(1.0, alpha, n) : 0.0;
        CHECK(std::abs(M(n, m) - expect) < 1e-12);
      }
  }
}

TEST_CASE("batched matrix agrees with the point-wise coefficient route") {
  const GaussianSymbol F = skewed_gaussian();
  const CoefficientMatrix M = build_matrix(F, 8);
  for (std::size_t n = 0; n < 8; ++n)
    for (std::size_t m = 0; m < 8; ++m) {
      const cplx direct = compute_coefficient(F, {n, m});
      CHECK(std::abs(M(n, m) - direct) < 1e-12);
    }
}

TEST_CASE("Hermitian structure and Parseval") {
  const GaussianSymbol F = skewed_gaussian();
  const CoefficientMatrix M = build_matrix(F, 24);
  for (std::size_t n = 0; n < 24; ++n) {
    CHECK(M(n, n).imag() == 0.0);
    for (std::size_t m = 0; m < n; ++m) CHECK(M(n, m) == std::conj(M(m, n)));
  }
  CHECK(M.norm_F == doctest::Approx(l2_norm(F)));
  CHECK(M.partial_norm_sq / kTwoPiPowD <= M.norm_F * M.norm_F * (1 + 1e-12));
  double prev = 1.0;
  for (std::size_t N = 1; N <= 24; ++N) {
    const double e = truncation_error(M.leading_block(N));
    CHECK(e <= prev + 1e-12);
    prev = e;
  }
  CHECK(prev < 1e-6);
}

TEST_CASE("leading block is the top-left corner") {
  const CoefficientMatrix M = build_matrix(skewed_gaussian(), 6);
  const CoefficientMatrix B = M.leading_block(3);
  CHECK(B.order == 3);
  for (std::size_t n = 0; n < 3; ++n)
    for (std::size_t m = 0; m < 3; ++m) CHECK(B(n, m) == M(n, m));
  CHECK(B.norm_F == M.norm_F);
  CHECK(B.partial_norm_sq <= M.partial_norm_sq);
}

TEST_CASE("a smaller expansion is the leading block of a larger one") {
  const SymbolSpec symbols[] = {skewed_gaussian(), GaussianSymbol{1.0, 3.0, {}, {}}, cubic_snapshot(0.1)};
  for (const SymbolSpec& F : symbols) {
    const CoefficientMatrix big = build_matrix(F, 40);
    for (std::size_t N : {2u, 7u, 16u}) {
      const CoefficientMatrix small = build_matrix(F, N);
      for (std::size_t n = 0; n < N; ++n)
        for (std::size_t m = 0; m < N; ++m) CHECK(std::abs(small(n, m) - big(n, m)) < 1e-12);
    }
  }
}

TEST_CASE("order selection returns the smallest sufficient N") {
  const GaussianSymbol F = skewed_gaussian();
  for (double eps : {1e-2, 1e-4, 1e-7}) {
    const OrderSelection sel = select_order(F, eps);
    CHECK(sel.epsilon < eps);
    CHECK(sel.N == sel.matrix.order);
    if (sel.N > 1) {
      const CoefficientMatrix big = build_matrix(F, sel.N);
      CHECK(truncation_error(big.leading_block(sel.N - 1)) >= eps);
    }
  }
}

TEST_CASE("order selection reports the best epsilon when N_max is too small") {
  const GaussianSymbol far{1.0, 1.0, {}, {3.0, 2.0}};
  try {
    select_order(far, 1e-10, 4);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.best() > 1e-10);
    CHECK(e.best() < 1.0);
    CHECK(e.module() == "coefficients");
  }
}

TEST_CASE("zero symbol has no relative truncation error") {
  const CoefficientMatrix M = build_matrix(GaussianSymbol{0.0, 1.0, {}, {}}, 3);
  CHECK(M.norm_F == 0.0);
  CHECK_THROWS_AS(truncation_error(M), Error);
}

TEST_CASE("effective quadrature order grows with N and is capped") {
  CHECK(effective_quadrature(4, 64) == 64);
  CHECK(effective_quadrature(100, 64) == 132);
  CHECK(effective_quadrature(600, 64) == 512);
}

TEST_CASE("coefficients do not depend on the thread count") {
  const GaussianSymbol F = skewed_gaussian();
  set_thread_count(1);
  const CoefficientMatrix a = build_matrix(F, 20, 96);
  set_thread_count(4);
  const CoefficientMatrix b = build_matrix(F, 20, 96);
  set_thread_count(0);
  CHECK(a.entries == b.entries);
  CHECK(a.partial_norm_sq == b.partial_norm_sq);
}

TEST_CASE("cubic snapshot: low-order coefficients follow the small-t series") {
  for (double t : {0.02, 0.05, 0.1}) {
    const CoefficientMatrix M = build_matrix(cubic_snapshot(t), 2);
    const CubicSeries s = cubic_series(t);
    CHECK(std::abs(M(0, 0).real() - s.f00) <= 5 * t * t * t);
    CHECK(std::abs(std::abs(M(0, 1)) - s.f01) <= 5 * t * t * t);
    CHECK(std::abs(M(1, 1).real() - s.f11) <= 5 * t * t * t);
  }
}
