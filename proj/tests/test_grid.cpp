#include <cmath>
#include <sstream>

#include "doctest.h"
#include "wnear/error.hpp"
#include "wnear/grid.hpp"

using namespace wnear;

TEST_CASE("grid layout coordinates and validation") {
  GridSpec s{-1.0, 1.0, -2.0, 2.0, 5, 9};
  CHECK(s.x_at(0) == -1.0);
  CHECK(s.x_at(4) == 1.0);
  CHECK(s.x_at(2) == doctest::Approx(0.0));
  CHECK(s.k_at(8) == 2.0);
  CHECK(s.size() == 45);
  CHECK_NOTHROW(s.validate());
  CHECK_THROWS_AS((GridSpec{1.0, -1.0, 0.0, 1.0, 3, 3}.validate()), Error);
  CHECK_THROWS_AS((GridSpec{-1.0, 1.0, 0.0, 1.0, 1, 3}.validate()), Error);
  CHECK_THROWS_AS((GridSpec{-1.0, NAN, 0.0, 1.0, 3, 3}.validate()), Error);
}

TEST_CASE("bilinear interpolation reproduces affine functions and is zero outside") {
  const GridSpec s{-2.0, 2.0, -1.0, 3.0, 11, 17};
  const PhaseGrid g = sample_grid(s, [](PhasePoint z) { return 1.5 + 2.0 * z.x - 0.5 * z.k; });
  for (PhasePoint z : {PhasePoint{0.13, 0.77}, PhasePoint{-1.99, 2.9}, PhasePoint{2.0, 3.0}, PhasePoint{-2.0, -1.0}})
    CHECK(g.interpolate(z) == doctest::Approx(1.5 + 2.0 * z.x - 0.5 * z.k).epsilon(1e-13));
  CHECK(g.interpolate({2.01, 0.0}) == 0.0);
  CHECK(g.interpolate({0.0, -1.5}) == 0.0);
}

TEST_CASE("CSV round trip is exact") {
  const GridSpec s{-3.0, 3.0, -2.0, 2.0, 7, 5};
  const PhaseGrid g = sample_grid(s, [](PhasePoint z) { return std::exp(-z.norm_sq()) / 3.0 + 1e-300 * z.x; });
  std::stringstream ss;
  write_grid_csv(ss, g);
  const std::string text = ss.str();
  CHECK(text.rfind("x,k,value\n", 0) == 0);
  const PhaseGrid back = read_grid_csv(ss);
  CHECK(back.spec.nx == 7);
  CHECK(back.spec.nk == 5);
  CHECK(back.spec.x_min == -3.0);
  CHECK(back.spec.k_max == 2.0);
  REQUIRE(back.values.size() == g.values.size());
  for (std::size_t i = 0; i < g.values.size(); ++i) CHECK(back.values[i] == g.values[i]);
}

TEST_CASE("CSV rows are x-major then k") {
  const GridSpec s{0.0, 1.0, 0.0, 1.0, 2, 3};
  const PhaseGrid g = sample_grid(s, [](PhasePoint z) { return 10 * z.x + z.k; });
  std::stringstream ss;
  write_grid_csv(ss, g);
  std::string header, first, second, fourth;
  std::getline(ss, header);
  std::getline(ss, first);
  std::getline(ss, second);
  std::getline(ss, fourth);
  std::getline(ss, fourth);
  CHECK(first.rfind("0,0,", 0) == 0);
  CHECK(second.rfind("0,0.5,", 0) == 0);
  CHECK(fourth.rfind("1,0,", 0) == 0);
}

TEST_CASE("complex grids carry re and im columns") {
  const GridSpec s{0.0, 1.0, 0.0, 1.0, 2, 2};
  PhaseGrid g = sample_grid(s, [](PhasePoint z) { return z.x; });
  g.imag = {0.5, -0.5, 0.25, 0.0};
  std::stringstream ss;
  write_grid_csv(ss, g);
  CHECK(ss.str().rfind("x,k,re,im\n", 0) == 0);
  const PhaseGrid back = read_grid_csv(ss);
  CHECK(back.is_complex());
  CHECK(back.imag == g.imag);
}

TEST_CASE("malformed CSV is rejected") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_grid_csv(in);
  };
  CHECK_THROWS_AS(parse(""), Error);
  CHECK_THROWS_AS(parse("a,b,c\n0,0,1\n"), Error);
  CHECK_THROWS_AS(parse("x,k,value\n0,0,1\n0,1,1\n1,0,1\n"), Error);                      // incomplete
  CHECK_THROWS_AS(parse("x,k,value\n0,0,1\n0,1,1\n1,0,1\n1,1,zz\n"), Error);              // bad number
  CHECK_THROWS_AS(parse("x,k,value\n0,0,1\n0,1,1\n0,3,1\n1,0,1\n1,1,1\n1,3,1\n"), Error);  // non-uniform k
  CHECK_NOTHROW(parse("x,k,value\n1,1,4\n0,0,1\n1,0,3\n0,1,2\n"));                         // any row order
  const PhaseGrid g = parse("x,k,value\n1,1,4\n0,0,1\n1,0,3\n0,1,2\n");
  CHECK(g.at(0, 1) == 2.0);
  CHECK(g.at(1, 0) == 3.0);
}
