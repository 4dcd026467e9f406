// Scalar reference kernels. The SIMD variants follow the same loop structure
// and must agree with these to rounding.

#include <algorithm>
#include <array>
#include <numbers>

#include "backends.hpp"
#include "recurrence.hpp"

namespace wnear::kernels::detail {
namespace {

struct BlockState {
  std::array<double, kBlock> u, sqrt_u, l0, cos_t, sin_t, ph_re, ph_im, prev, cur;
  std::size_t count = 0;

  void load(const double* x, const double* k, std::size_t n) {
    count = n;
    for (std::size_t p = 0; p < n; ++p) {
      const PointState s = point_state(x[p], k[p]);
      u[p] = s.u;
      sqrt_u[p] = s.sqrt_u;
      l0[p] = s.l0;
      cos_t[p] = s.cos_t;
      sin_t[p] = s.sin_t;
      ph_re[p] = 1.0;
      ph_im[p] = 0.0;
    }
  }

  void start_diagonal() {
    for (std::size_t p = 0; p < count; ++p) {
      prev[p] = 0.0;
      cur[p] = l0[p];
    }
  }

  void advance(double shift, double lag, double inv_norm) {
    for (std::size_t p = 0; p < count; ++p) {
      const double next = ((shift - u[p]) * cur[p] - lag * prev[p]) * inv_norm;
      prev[p] = cur[p];
      cur[p] = next;
    }
  }

  void next_diagonal(double step) {
    for (std::size_t p = 0; p < count; ++p) {
      l0[p] *= sqrt_u[p] * step;
      const double re = ph_re[p] * cos_t[p] - ph_im[p] * sin_t[p];
      const double im = ph_re[p] * sin_t[p] + ph_im[p] * cos_t[p];
      ph_re[p] = re;
      ph_im[p] = im;
    }
  }
};

void project_scalar(const double* x, const double* k, const double* weight, std::size_t count,
                    std::size_t order, cplx* acc) {
  if (order == 0) return;
  const RecurrenceTable table(order);
  BlockState st;
  std::array<double, kBlock> w{};
  for (std::size_t base = 0; base < count; base += kBlock) {
    const std::size_t n = std::min(kBlock, count - base);
    st.load(x + base, k + base, n);
    for (std::size_t p = 0; p < n; ++p) w[p] = weight[base + p] / std::numbers::pi;
    for (std::size_t d = 0; d < order; ++d) {
      st.start_diagonal();
      const std::size_t off = table.offset[d];
      for (std::size_t j = 0; j + d < order; ++j) {
        double sum_re = 0.0;
        double sum_im = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
          const double v = w[p] * st.cur[p];
          sum_re += v * st.ph_re[p];
          sum_im += v * st.ph_im[p];
        }
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        acc[(j + d) * order + j] += cplx(sign * sum_re, sign * sum_im);
        if (j + d + 1 < order) st.advance(table.shift[off + j], table.lag[off + j], table.inv_norm[off + j]);
      }
      st.next_diagonal(table.step[d]);
    }
  }
}

void synthesize_scalar(const double* x, const double* k, std::size_t count, std::size_t order,
                       const cplx* coeffs, double* out_re, double* out_im) {
  std::fill(out_re, out_re + count, 0.0);
  std::fill(out_im, out_im + count, 0.0);
  if (order == 0) return;
  const RecurrenceTable table(order);
  BlockState st;
  for (std::size_t base = 0; base < count; base += kBlock) {
    const std::size_t n = std::min(kBlock, count - base);
    st.load(x + base, k + base, n);
    double* ore = out_re + base;
    double* oim = out_im + base;
    for (std::size_t d = 0; d < order; ++d) {
      st.start_diagonal();
      const std::size_t off = table.offset[d];
      for (std::size_t j = 0; j + d < order; ++j) {
        // a = G[j+d][j] multiplies e^(-i d theta), b = G[j][j+d] multiplies e^(+i d theta).
        const cplx a = coeffs[(j + d) * order + j];
        double ca, cb, cc, cd;
        if (d == 0) {
          ca = a.real();
          cb = 0.0;
          cc = a.imag();
          cd = 0.0;
        } else {
          const cplx b = coeffs[j * order + j + d];
          ca = a.real() + b.real();
          cb = a.imag() - b.imag();
          cc = a.imag() + b.imag();
          cd = b.real() - a.real();
        }
        const double sign = ((j % 2 == 0) ? 1.0 : -1.0) / std::numbers::pi;
        for (std::size_t p = 0; p < n; ++p) {
          const double s = sign * st.cur[p];
          ore[p] += s * (ca * st.ph_re[p] + cb * st.ph_im[p]);
          oim[p] += s * (cc * st.ph_re[p] + cd * st.ph_im[p]);
        }
        if (j + d + 1 < order) st.advance(table.shift[off + j], table.lag[off + j], table.inv_norm[off + j]);
      }
      st.next_diagonal(table.step[d]);
    }
  }
}

void tabulate_scalar(const double* x, const double* k, std::size_t count, std::size_t order,
                     cplx* out) {
  if (order == 0) return;
  const RecurrenceTable table(order);
  BlockState st;
  for (std::size_t base = 0; base < count; base += kBlock) {
    const std::size_t n = std::min(kBlock, count - base);
    st.load(x + base, k + base, n);
    for (std::size_t d = 0; d < order; ++d) {
      st.start_diagonal();
      const std::size_t off = table.offset[d];
      for (std::size_t j = 0; j + d < order; ++j) {
        const double sign = ((j % 2 == 0) ? 1.0 : -1.0) / std::numbers::pi;
        cplx* lower = out + ((j + d) * order + j) * count + base;
        cplx* upper = out + (j * order + j + d) * count + base;
        for (std::size_t p = 0; p < n; ++p) {
          const double s = sign * st.cur[p];
          lower[p] = cplx(s * st.ph_re[p], -s * st.ph_im[p]);
          if (d > 0) upper[p] = cplx(s * st.ph_re[p], s * st.ph_im[p]);
        }
        if (j + d + 1 < order) st.advance(table.shift[off + j], table.lag[off + j], table.inv_norm[off + j]);
      }
      st.next_diagonal(table.step[d]);
    }
  }
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{Backend::scalar, &project_scalar, &synthesize_scalar,
                                 &tabulate_scalar};
  return table;
}

}  // namespace wnear::kernels::detail
