#include "wnear/gram.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "wnear/constants.hpp"
#include "wnear/error.hpp"
#include "wnear/kernels.hpp"
#include "wnear/parallel.hpp"
#include "wnear/quadrature.hpp"

namespace wnear {

GramReport gram_check(std::size_t n_max, std::size_t q) {
  if (n_max > 12) throw Error("gram", "invalid_argument", "n_max must be <= 12");
  const QuadratureRule& rule = gauss_hermite_rule(q);
  const double s = 1.0 / std::sqrt(2.0);
  const std::size_t order = n_max + 1;
  const std::size_t dim = order * order;
  const std::size_t count = q * q;

  std::vector<double> x(count), k(count), w(count);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      x[i * q + j] = s * rule.nodes[i];
      k[i * q + j] = s * rule.nodes[j];
      w[i * q + j] = s * s * rule.scaled_weights[i] * rule.scaled_weights[j];
    }
  std::vector<cplx> table(dim * count);
  kernels::tabulate(x, k, order, table);

  std::vector<double> row_max(dim, 0.0);
  parallel_for(dim, [&](std::size_t a) {
    const cplx* ta = table.data() + a * count;
    double worst = 0.0;
    for (std::size_t b = 0; b < dim; ++b) {
      const cplx* tb = table.data() + b * count;
      cplx g{};
      for (std::size_t p = 0; p < count; ++p) g += w[p] * ta[p] * std::conj(tb[p]);
      g *= kTwoPiPowD;
      worst = std::max(worst, std::abs(g - (a == b ? 1.0 : 0.0)));
    }
    row_max[a] = worst;
  });

  GramReport r;
  r.n_max = n_max;
  r.q = q;
  r.dimension = dim;
  r.max_deviation = *std::max_element(row_max.begin(), row_max.end());
  return r;
}

}  // namespace wnear
