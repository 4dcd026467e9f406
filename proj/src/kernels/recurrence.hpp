#pragma once

// Shared constants for the normalized Laguerre recurrence
//   l_{j+1} = ((2j + 1 + d - u) l_j - sqrt(j (j + d)) l_{j-1}) / sqrt((j + 1)(j + d + 1))
//   l_0^{d+1} = l_0^d * sqrt(u / (d + 1)),  l_0^0 = e^(-u/2).

#include <cmath>
#include <cstddef>
#include <vector>

namespace wnear::kernels::detail {

/// Points processed per block; state arrays for one block stay in L1.
inline constexpr std::size_t kBlock = 256;

struct RecurrenceTable {
  std::size_t order = 0;
  std::vector<std::size_t> offset;   // start of diagonal d in the packed arrays
  std::vector<double> inv_norm;      // 1 / sqrt((j+1)(j+d+1))
  std::vector<double> lag;           // sqrt(j (j+d))
  std::vector<double> shift;         // 2j + 1 + d
  std::vector<double> step;          // 1 / sqrt(d+1), indexed by d

  explicit RecurrenceTable(std::size_t n) : order(n), offset(n + 1, 0), step(n, 0.0) {
    std::size_t total = 0;
    for (std::size_t d = 0; d < n; ++d) {
      offset[d] = total;
      total += n - d;
    }
    offset[n] = total;
    inv_norm.resize(total);
    lag.resize(total);
    shift.resize(total);
    for (std::size_t d = 0; d < n; ++d) {
      step[d] = 1.0 / std::sqrt(static_cast<double>(d) + 1.0);
      for (std::size_t j = 0; j + d < n; ++j) {
        const double jj = static_cast<double>(j);
        const double dd = static_cast<double>(d);
        inv_norm[offset[d] + j] = 1.0 / std::sqrt((jj + 1.0) * (jj + dd + 1.0));
        lag[offset[d] + j] = std::sqrt(jj * (jj + dd));
        shift[offset[d] + j] = 2.0 * jj + 1.0 + dd;
      }
    }
  }
};

/// Per-point setup shared by all backends: u = 2|z|^2, sqrt(u), e^(-|z|^2) and
/// the unit phasor (x + ik)/|z| (1 at the origin).
struct PointState {
  double u, sqrt_u, l0, cos_t, sin_t;
};

inline PointState point_state(double x, double k) {
  const double r2 = x * x + k * k;
  PointState s{2.0 * r2, std::sqrt(2.0 * r2), std::exp(-r2), 1.0, 0.0};
  if (r2 > 0.0) {
    const double r = std::sqrt(r2);
    s.cos_t = x / r;
    s.sin_t = k / r;
  }
  return s;
}

}  // namespace wnear::kernels::detail
