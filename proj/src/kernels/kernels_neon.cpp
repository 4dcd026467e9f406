// NEON (AArch64, float64x2) kernels. Built only on aarch64 targets.

#if defined(WNEAR_HAVE_NEON)

#include <arm_neon.h>

#include <algorithm>
#include <numbers>

#include "backends.hpp"
#include "recurrence.hpp"

namespace wnear::kernels::detail {
namespace {

constexpr std::size_t kLanes = 2;

struct BlockState {
  alignas(16) double u[kBlock];
  alignas(16) double sqrt_u[kBlock];
  alignas(16) double l0[kBlock];
  alignas(16) double cos_t[kBlock];
  alignas(16) double sin_t[kBlock];
  alignas(16) double ph_re[kBlock];
  alignas(16) double ph_im[kBlock];
  alignas(16) double prev[kBlock];
  alignas(16) double cur[kBlock];
  std::size_t count = 0;
  std::size_t padded = 0;

  void load(const double* x, const double* k, std::size_t n) {
    count = n;
    padded = (n + kLanes - 1) / kLanes * kLanes;
    for (std::size_t p = 0; p < padded; ++p) {
      const PointState s = p < n ? point_state(x[p], k[p]) : point_state(0.0, 0.0);
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
    const float64x2_t zero = vdupq_n_f64(0.0);
    for (std::size_t p = 0; p < padded; p += kLanes) {
      vst1q_f64(prev + p, zero);
      vst1q_f64(cur + p, vld1q_f64(l0 + p));
    }
  }

  void advance(double shift, double lag, double inv_norm) {
    const float64x2_t vs = vdupq_n_f64(shift);
    const float64x2_t vl = vdupq_n_f64(lag);
    const float64x2_t vn = vdupq_n_f64(inv_norm);
    for (std::size_t p = 0; p < padded; p += kLanes) {
      const float64x2_t c = vld1q_f64(cur + p);
      const float64x2_t pr = vld1q_f64(prev + p);
      const float64x2_t a = vsubq_f64(vs, vld1q_f64(u + p));
      const float64x2_t next = vmulq_f64(vfmsq_f64(vmulq_f64(a, c), vl, pr), vn);
      vst1q_f64(prev + p, c);
      vst1q_f64(cur + p, next);
    }
  }

  void next_diagonal(double step) {
    const float64x2_t vstep = vdupq_n_f64(step);
    for (std::size_t p = 0; p < padded; p += kLanes) {
      vst1q_f64(l0 + p, vmulq_f64(vld1q_f64(l0 + p), vmulq_f64(vld1q_f64(sqrt_u + p), vstep)));
      const float64x2_t re = vld1q_f64(ph_re + p);
      const float64x2_t im = vld1q_f64(ph_im + p);
      const float64x2_t c = vld1q_f64(cos_t + p);
      const float64x2_t s = vld1q_f64(sin_t + p);
      vst1q_f64(ph_re + p, vfmsq_f64(vmulq_f64(re, c), im, s));
      vst1q_f64(ph_im + p, vfmaq_f64(vmulq_f64(im, c), re, s));
    }
  }
};

void project_neon(const double* x, const double* k, const double* weight, std::size_t count,
                  std::size_t order, cplx* acc) {
  if (order == 0) return;
  const RecurrenceTable table(order);
  BlockState st;
  alignas(16) double w[kBlock];
  for (std::size_t base = 0; base < count; base += kBlock) {
    const std::size_t n = std::min(kBlock, count - base);
    st.load(x + base, k + base, n);
    for (std::size_t p = 0; p < st.padded; ++p)
      w[p] = p < n ? weight[base + p] / std::numbers::pi : 0.0;
    for (std::size_t d = 0; d < order; ++d) {
      st.start_diagonal();
      const std::size_t off = table.offset[d];
      for (std::size_t j = 0; j + d < order; ++j) {
        float64x2_t sum_re = vdupq_n_f64(0.0);
        float64x2_t sum_im = vdupq_n_f64(0.0);
        for (std::size_t p = 0; p < st.padded; p += kLanes) {
          const float64x2_t v = vmulq_f64(vld1q_f64(w + p), vld1q_f64(st.cur + p));
          sum_re = vfmaq_f64(sum_re, v, vld1q_f64(st.ph_re + p));
          sum_im = vfmaq_f64(sum_im, v, vld1q_f64(st.ph_im + p));
        }
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        acc[(j + d) * order + j] += cplx(sign * (vgetq_lane_f64(sum_re, 0) + vgetq_lane_f64(sum_re, 1)),
                                         sign * (vgetq_lane_f64(sum_im, 0) + vgetq_lane_f64(sum_im, 1)));
        if (j + d + 1 < order) st.advance(table.shift[off + j], table.lag[off + j], table.inv_norm[off + j]);
      }
      st.next_diagonal(table.step[d]);
    }
  }
}

void synthesize_neon(const double* x, const double* k, std::size_t count, std::size_t order,
                     const cplx* coeffs, double* out_re, double* out_im) {
  std::fill(out_re, out_re + count, 0.0);
  std::fill(out_im, out_im + count, 0.0);
  if (order == 0) return;
  const RecurrenceTable table(order);
  BlockState st;
  alignas(16) double ore[kBlock];
  alignas(16) double oim[kBlock];
  for (std::size_t base = 0; base < count; base += kBlock) {
    const std::size_t n = std::min(kBlock, count - base);
    st.load(x + base, k + base, n);
    std::fill(ore, ore + st.padded, 0.0);
    std::fill(oim, oim + st.padded, 0.0);
    for (std::size_t d = 0; d < order; ++d) {
      st.start_diagonal();
      const std::size_t off = table.offset[d];
      for (std::size_t j = 0; j + d < order; ++j) {
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
        const float64x2_t va = vdupq_n_f64(ca), vb = vdupq_n_f64(cb);
        const float64x2_t vc = vdupq_n_f64(cc), vd = vdupq_n_f64(cd);
        const float64x2_t sign = vdupq_n_f64(((j % 2 == 0) ? 1.0 : -1.0) / std::numbers::pi);
        for (std::size_t p = 0; p < st.padded; p += kLanes) {
          const float64x2_t s = vmulq_f64(sign, vld1q_f64(st.cur + p));
          const float64x2_t pre = vld1q_f64(st.ph_re + p);
          const float64x2_t pim = vld1q_f64(st.ph_im + p);
          const float64x2_t tre = vfmaq_f64(vmulq_f64(vb, pim), va, pre);
          const float64x2_t tim = vfmaq_f64(vmulq_f64(vd, pim), vc, pre);
          vst1q_f64(ore + p, vfmaq_f64(vld1q_f64(ore + p), s, tre));
          vst1q_f64(oim + p, vfmaq_f64(vld1q_f64(oim + p), s, tim));
        }
        if (j + d + 1 < order) st.advance(table.shift[off + j], table.lag[off + j], table.inv_norm[off + j]);
      }
      st.next_diagonal(table.step[d]);
    }
    std::copy(ore, ore + n, out_re + base);
    std::copy(oim, oim + n, out_im + base);
  }
}

void tabulate_neon(const double* x, const double* k, std::size_t count, std::size_t order,
                   cplx* out) {
  if (order == 0) return;
  const RecurrenceTable table(order);
  BlockState st;
  alignas(16) double sre[kBlock];
  alignas(16) double sim[kBlock];
  for (std::size_t base = 0; base < count; base += kBlock) {
    const std::size_t n = std::min(kBlock, count - base);
    st.load(x + base, k + base, n);
    for (std::size_t d = 0; d < order; ++d) {
      st.start_diagonal();
      const std::size_t off = table.offset[d];
      for (std::size_t j = 0; j + d < order; ++j) {
        const float64x2_t sign = vdupq_n_f64(((j % 2 == 0) ? 1.0 : -1.0) / std::numbers::pi);
        for (std::size_t p = 0; p < st.padded; p += kLanes) {
          const float64x2_t s = vmulq_f64(sign, vld1q_f64(st.cur + p));
          vst1q_f64(sre + p, vmulq_f64(s, vld1q_f64(st.ph_re + p)));
          vst1q_f64(sim + p, vmulq_f64(s, vld1q_f64(st.ph_im + p)));
        }
        cplx* lower = out + ((j + d) * order + j) * count + base;
        cplx* upper = out + (j * order + j + d) * count + base;
        for (std::size_t p = 0; p < n; ++p) {
          lower[p] = cplx(sre[p], -sim[p]);
          if (d > 0) upper[p] = cplx(sre[p], sim[p]);
        }
        if (j + d + 1 < order) st.advance(table.shift[off + j], table.lag[off + j], table.inv_norm[off + j]);
      }
      st.next_diagonal(table.step[d]);
    }
  }
}

}  // namespace

const KernelTable& neon_table() {
  static const KernelTable table{Backend::neon, &project_neon, &synthesize_neon, &tabulate_neon};
  return table;
}

}  // namespace wnear::kernels::detail

#endif  // WNEAR_HAVE_NEON
