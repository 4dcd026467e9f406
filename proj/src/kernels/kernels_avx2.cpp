// AVX2/FMA kernels. Only the functions below carry the avx2/fma target, so
// shared inline code from headers stays baseline; reached through the
// dispatcher after a runtime CPU check.

#include <immintrin.h>

#include <algorithm>
#include <numbers>

#include "backends.hpp"
#include "recurrence.hpp"

namespace wnear::kernels::detail {
namespace {

constexpr std::size_t kLanes = 4;

#define WNEAR_AVX2 __attribute__((target("avx2,fma")))

struct alignas(32) BlockState {
  alignas(32) double u[kBlock];
  alignas(32) double sqrt_u[kBlock];
  alignas(32) double l0[kBlock];
  alignas(32) double cos_t[kBlock];
  alignas(32) double sin_t[kBlock];
  alignas(32) double ph_re[kBlock];
  alignas(32) double ph_im[kBlock];
  alignas(32) double prev[kBlock];
  alignas(32) double cur[kBlock];
  std::size_t count = 0;   // real points
  std::size_t padded = 0;  // multiple of kLanes

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

  WNEAR_AVX2 void start_diagonal() {
    const __m256d zero = _mm256_setzero_pd();
    for (std::size_t p = 0; p < padded; p += kLanes) {
      _mm256_store_pd(prev + p, zero);
      _mm256_store_pd(cur + p, _mm256_load_pd(l0 + p));
    }
  }

  WNEAR_AVX2 void advance(double shift, double lag, double inv_norm) {
    const __m256d vs = _mm256_set1_pd(shift);
    const __m256d vl = _mm256_set1_pd(lag);
    const __m256d vn = _mm256_set1_pd(inv_norm);
    for (std::size_t p = 0; p < padded; p += kLanes) {
      const __m256d c = _mm256_load_pd(cur + p);
      const __m256d pr = _mm256_load_pd(prev + p);
      const __m256d a = _mm256_sub_pd(vs, _mm256_load_pd(u + p));
      const __m256d next = _mm256_mul_pd(_mm256_fmsub_pd(a, c, _mm256_mul_pd(vl, pr)), vn);
      _mm256_store_pd(prev + p, c);
      _mm256_store_pd(cur + p, next);
    }
  }

  WNEAR_AVX2 void next_diagonal(double step) {
    const __m256d vstep = _mm256_set1_pd(step);
    for (std::size_t p = 0; p < padded; p += kLanes) {
      _mm256_store_pd(l0 + p, _mm256_mul_pd(_mm256_load_pd(l0 + p),
                _mm256_mul_pd(_mm256_load_pd(sqrt_u + p), vstep)));
      const __m256d re = _mm256_load_pd(ph_re + p);
      const __m256d im = _mm256_load_pd(ph_im + p);
      const __m256d c = _mm256_load_pd(cos_t + p);
      const __m256d s = _mm256_load_pd(sin_t + p);
      _mm256_store_pd(ph_re + p, _mm256_fmsub_pd(re, c, _mm256_mul_pd(im, s)));
      _mm256_store_pd(ph_im + p, _mm256_fmadd_pd(re, s, _mm256_mul_pd(im, c)));
    }
  }
};

WNEAR_AVX2 inline double reduce_lanes(__m256d v) {
  alignas(32) double t[kLanes];
  _mm256_store_pd(t, v);
  return (t[0] + t[1]) + (t[2] + t[3]);
}

WNEAR_AVX2 void project_avx2(const double* x, const double* k,
                const double* weight, std::size_t count,
                std::size_t order, cplx* acc) {
  if (order == 0) return;
  const RecurrenceTable table(order);
  BlockState st;
  alignas(32) double w[kBlock];
  for (std::size_t base = 0; base < count; base += kBlock) {
    const std::size_t n = std::min(kBlock, count - base);
    st.load(x + base, k + base, n);
    for (std::size_t p = 0; p < st.padded; ++p)
      w[p] = p < n ? weight[base + p] / std::numbers::pi : 0.0;
    for (std::size_t d = 0; d < order; ++d) {
      st.start_diagonal();
      const std::size_t off = table.offset[d];
      for (std::size_t j = 0; j + d < order; ++j) {
        __m256d sum_re = _mm256_setzero_pd();
        __m256d sum_im = _mm256_setzero_pd();
        for (std::size_t p = 0; p < st.padded; p += kLanes) {
          const __m256d v = _mm256_mul_pd(_mm256_load_pd(w + p), _mm256_load_pd(st.cur + p));
          sum_re = _mm256_fmadd_pd(v, _mm256_load_pd(st.ph_re + p), sum_re);
          sum_im = _mm256_fmadd_pd(v, _mm256_load_pd(st.ph_im + p), sum_im);
        }
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        acc[(j + d) * order + j] += cplx(sign * reduce_lanes(sum_re), sign * reduce_lanes(sum_im));
        if (j + d + 1 < order) st.advance(table.shift[off + j], table.lag[off + j], table.inv_norm[off + j]);
      }
      st.next_diagonal(table.step[d]);
    }
  }
}

WNEAR_AVX2 void synthesize_avx2(const double* x, const double* k,
                std::size_t count, std::size_t order,
                const cplx* coeffs, double* out_re,
                double* out_im) {
  std::fill(out_re, out_re + count, 0.0);
  std::fill(out_im, out_im + count, 0.0);
  if (order == 0) return;
  const RecurrenceTable table(order);
  BlockState st;
  alignas(32) double ore[kBlock];
  alignas(32) double oim[kBlock];
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
        const __m256d va = _mm256_set1_pd(ca), vb = _mm256_set1_pd(cb);
        const __m256d vc = _mm256_set1_pd(cc), vd = _mm256_set1_pd(cd);
        const __m256d sign = _mm256_set1_pd(((j % 2 == 0) ? 1.0 : -1.0) / std::numbers::pi);
        for (std::size_t p = 0; p < st.padded; p += kLanes) {
          const __m256d s = _mm256_mul_pd(sign, _mm256_load_pd(st.cur + p));
          const __m256d pre = _mm256_load_pd(st.ph_re + p);
          const __m256d pim = _mm256_load_pd(st.ph_im + p);
          const __m256d tre = _mm256_fmadd_pd(va, pre, _mm256_mul_pd(vb, pim));
          const __m256d tim = _mm256_fmadd_pd(vc, pre, _mm256_mul_pd(vd, pim));
          _mm256_store_pd(ore + p, _mm256_fmadd_pd(s, tre, _mm256_load_pd(ore + p)));
          _mm256_store_pd(oim + p, _mm256_fmadd_pd(s, tim, _mm256_load_pd(oim + p)));
        }
        if (j + d + 1 < order) st.advance(table.shift[off + j], table.lag[off + j], table.inv_norm[off + j]);
      }
      st.next_diagonal(table.step[d]);
    }
    std::copy(ore, ore + n, out_re + base);
    std::copy(oim, oim + n, out_im + base);
  }
}

WNEAR_AVX2 void tabulate_avx2(const double* x, const double* k,
                std::size_t count, std::size_t order,
                cplx* out) {
  if (order == 0) return;
  const RecurrenceTable table(order);
  BlockState st;
  alignas(32) double sre[kBlock];
  alignas(32) double sim[kBlock];
  for (std::size_t base = 0; base < count; base += kBlock) {
    const std::size_t n = std::min(kBlock, count - base);
    st.load(x + base, k + base, n);
    for (std::size_t d = 0; d < order; ++d) {
      st.start_diagonal();
      const std::size_t off = table.offset[d];
      for (std::size_t j = 0; j + d < order; ++j) {
        const __m256d sign = _mm256_set1_pd(((j % 2 == 0) ? 1.0 : -1.0) / std::numbers::pi);
        for (std::size_t p = 0; p < st.padded; p += kLanes) {
          const __m256d s = _mm256_mul_pd(sign, _mm256_load_pd(st.cur + p));
          _mm256_store_pd(sre + p, _mm256_mul_pd(s, _mm256_load_pd(st.ph_re + p)));
          _mm256_store_pd(sim + p, _mm256_mul_pd(s, _mm256_load_pd(st.ph_im + p)));
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

const KernelTable& avx2_table() {
  static const KernelTable table{Backend::avx2, &project_avx2, &synthesize_avx2, &tabulate_avx2};
  return table;
}

}  // namespace wnear::kernels::detail
