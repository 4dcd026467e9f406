#include <cmath>

#include "doctest.h"
#include "wnear/constants.hpp"
#include "wnear/dispersive.hpp"
#include "wnear/error.hpp"
#include "wnear/symbol.hpp"

using namespace wnear;

TEST_CASE("Mat2 helpers") {
  const Mat2 A{2.0, 0.5, 0.5, 1.0};
  CHECK(A.det() == doctest::Approx(1.75));
  CHECK(A.trace() == 3.0);
  CHECK(A.quad({1.0, 2.0}) == doctest::Approx(2.0 + 2.0 + 4.0));
  CHECK(A.min_eigenvalue() == doctest::Approx(1.5 - std::sqrt(0.5)));
  CHECK(A.is_symmetric());
  CHECK(A.is_positive_definite());
  CHECK_FALSE((Mat2{1.0, 0.2, 0.1, 1.0}.is_symmetric()));
  CHECK_FALSE((Mat2{1.0, 2.0, 2.0, 1.0}.is_positive_definite()));
}

TEST_CASE("we0 builtin is (1/pi) e^(-|z|^2)") {
  const SymbolSpec F = we0_symbol();
  CHECK(symbol_kind(F) == "gaussian");
  CHECK(evaluate(F, {0.3, -0.4}) == doctest::Approx(std::exp(-0.25) / kPi));
  CHECK(l2_norm(F) == doctest::Approx(1.0 / std::sqrt(2 * kPi)).epsilon(1e-14));
}

TEST_CASE("Gaussian norm: N^2 pi / (2 alpha sqrt(det A))") {
  for (double alpha : {0.5, 1.0, 3.0}) {
    const GaussianSymbol g{1.7, alpha, Mat2{2.0, 0.3, 0.3, 0.8}, {0.4, -1.0}};
    const double exact = std::sqrt(1.7 * 1.7 * kPi / (2 * alpha * std::sqrt(g.A.det())));
    CHECK(l2_norm(g) == doctest::Approx(exact).epsilon(1e-12));
  }
}

TEST_CASE("radial profile norm accounts for det A") {
  RadialProfileSymbol r;
  r.G = [](double rho) { return std::exp(-rho * rho); };
  r.A = Mat2{4.0, 0.0, 0.0, 1.0};
  // Same function as the Gaussian with alpha = 1 and this A.
  const GaussianSymbol g{1.0, 1.0, r.A, {}};
  CHECK(l2_norm(r) == doctest::Approx(l2_norm(g)).epsilon(1e-12));
  CHECK(evaluate(r, {0.5, 0.5}) == doctest::Approx(evaluate(g, {0.5, 0.5})));
}

TEST_CASE("snapshot norm: transport preserves the norm, damping does not") {
  SnapshotSymbol s = cubic_snapshot(0.3);
  CHECK(l2_norm(s) == doctest::Approx(1.0 / std::sqrt(2 * kPi)).epsilon(1e-12));

  // omega_I = -k^2/2 damps by e^(-t k^2); W e0 = e^(-x^2-k^2)/pi, so
  // ||F||^2 = (1/pi^2) int e^(-2x^2) e^(-2(1+t)k^2) = 1 / (2 pi sqrt(1 + t)).
  SnapshotSymbol d;
  d.initial.coeffs = {1.0};
  d.dispersion = DispersionRelation::from_polynomials(Polynomial{{0.0, 0.0, 0.0, 1.0 / 3.0}},
                                                      Polynomial{{0.0, 0.0, -0.5}});
  d.t = 0.4;
  CHECK(l2_norm(d) == doctest::Approx(std::sqrt(1.0 / (2 * kPi * std::sqrt(1.4)))).epsilon(1e-12));
}

TEST_CASE("snapshot evaluation: batched path equals point-wise path") {
  const SnapshotSymbol s = cubic_snapshot(0.7);
  std::vector<double> x = {-1.0, 0.0, 0.3, 2.2}, k = {0.5, -1.0, 0.0, 1.5}, out(4);
  evaluate_batch(s, x, k, out);
  for (std::size_t i = 0; i < 4; ++i) {
    const double expect = std::exp(-std::pow(x[i] - k[i] * k[i] * 0.7, 2) - k[i] * k[i]) / kPi;
    CHECK(out[i] == doctest::Approx(expect).epsilon(1e-13));
    CHECK(evaluate(s, {x[i], k[i]}) == doctest::Approx(expect).epsilon(1e-13));
  }
}

TEST_CASE("grid symbol norm is exact for the bilinear interpolant") {
  // A single bump: value 1 at the centre node of a 3x3 grid of spacing 1.
  GridSymbol gs;
  gs.grid = sample_grid(GridSpec{-1, 1, -1, 1, 3, 3}, [](PhasePoint z) { return (z.x == 0 && z.k == 0) ? 1.0 : 0.0; });
  // Tent function (1-|x|)(1-|k|): squared integral (2/3)^2.
  CHECK(l2_norm(gs) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("validation rejects malformed symbols") {
  CHECK_THROWS_AS(validate(GaussianSymbol{1.0, -1.0, {}, {}}), Error);
  CHECK_THROWS_AS(validate(GaussianSymbol{1.0, 1.0, Mat2{1, 0.5, 0.2, 1}, {}}), Error);
  CHECK_THROWS_AS(validate(GaussianSymbol{1.0, 1.0, Mat2{-1, 0, 0, -1}, {}}), Error);
  CHECK_THROWS_AS(validate(GaussianSymbol{1.0, 1.0, {}, {NAN, 0.0}}), Error);
  CHECK_THROWS_AS(validate(RadialProfileSymbol{}), Error);
  SnapshotSymbol s = cubic_snapshot(0.1);
  s.t = -1.0;
  CHECK_THROWS_AS(validate(s), Error);
  GridSymbol g;
  g.grid.values = {1.0};
  CHECK_THROWS_AS(validate(g), Error);
  CHECK_NOTHROW(validate(GaussianSymbol{1.0, 1.0, Mat2{2.0, 0.0, 0.0, 3.0}, {}}));  // det != 1 allowed
}

TEST_CASE("polynomial dispersion: derivative gives the group velocity") {
  const DispersionRelation d = DispersionRelation::from_polynomials(Polynomial{{1.0, 2.0, 0.0, 4.0}});
  CHECK(d.omega_R(2.0) == doctest::Approx(1 + 4 + 32));
  CHECK(d.nu(2.0) == doctest::Approx(2 + 48));
  CHECK(d.omega_I(5.0) == 0.0);
  CHECK(Polynomial{{1.0, 0.0, 0.0}}.degree() == 0);
  CHECK(Polynomial{}.degree() == -1);
}
