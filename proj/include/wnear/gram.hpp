#pragma once

#include <cstddef>

namespace wnear {

struct GramReport {
  std::size_t n_max = 0;
  std::size_t q = 0;
  std::size_t dimension = 0;  // (n_max + 1)^2
  double max_deviation = 0.0;  // max |G - I| entrywise
};

/// G[(n,m),(k,l)] = 2 pi <W(e_n,e_m), W(e_k,e_l)> for all indices <= n_max,
/// by tensor Gauss-Hermite quadrature at scale 1/sqrt(2) (the products are
/// polynomials times e^(-2|z|^2)). n_max <= 12.
GramReport gram_check(std::size_t n_max, std::size_t q);

}  // namespace wnear
