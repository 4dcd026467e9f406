#pragma once

// Batched evaluation of the cross-Wigner basis over many phase-space points.
//
// All three kernels walk the normalized Laguerre functions
//   l_j^d(u) = sqrt(j!/(j+d)!) u^(d/2) e^(-u/2) L_j^d(u),   u = 2|z|^2,
// which satisfy |l_j^d| <= 1, so W(e_{j+d}, e_j)(z) = ((-1)^j/pi) l_j^d(u) e^(-i d theta)
// can be produced for every (n, m) < order without overflow. The loop order is
// (d, j) outer, points inner, so the inner loop is a straight data-parallel
// sweep. Each kernel has a scalar reference version and SIMD variants that are
// selected at runtime; results agree to rounding.

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

namespace wnear::kernels {

using cplx = std::complex<double>;

enum class Backend { scalar, avx2, neon };

std::string_view backend_name(Backend backend);
std::optional<Backend> parse_backend(std::string_view name);

/// True when the backend was compiled in and the running CPU supports it.
bool backend_available(Backend backend);

/// Backend used by the dispatching entry points. Defaults to the best
/// available one; the WNEAR_KERNEL environment variable (scalar|avx2|neon)
/// overrides the default at first use.
Backend active_backend();

/// Throws wnear::Error if the backend is unavailable.
void set_active_backend(Backend backend);

/// acc[n*order + m] += sum_p weight[p] * conj(W(e_n, e_m)(z_p)) for n >= m.
/// Entries with n < m are left untouched.
using ProjectFn = void (*)(const double* x, const double* k, const double* weight,
                           std::size_t count, std::size_t order, cplx* acc);

/// out[p] = sum_{n,m < order} coeffs[n*order + m] * W(e_n, e_m)(z_p), split into
/// real and imaginary parts.
using SynthesizeFn = void (*)(const double* x, const double* k, std::size_t count,
                              std::size_t order, const cplx* coeffs, double* out_re,
                              double* out_im);

/// table[(n*order + m)*count + p] = W(e_n, e_m)(z_p) for all n, m < order.
using TabulateFn = void (*)(const double* x, const double* k, std::size_t count,
                            std::size_t order, cplx* table);

struct KernelTable {
  Backend backend;
  ProjectFn project;
  SynthesizeFn synthesize;
  TabulateFn tabulate;
};

/// Kernel table of a specific backend. Throws wnear::Error if unavailable.
const KernelTable& kernel_table(Backend backend);

// Dispatching entry points (active backend).

void project(std::span<const double> x, std::span<const double> k,
             std::span<const double> weight, std::size_t order, std::span<cplx> acc);

void synthesize(std::span<const double> x, std::span<const double> k, std::size_t order,
                std::span<const cplx> coeffs, std::span<double> out_re,
                std::span<double> out_im);

void tabulate(std::span<const double> x, std::span<const double> k, std::size_t order,
              std::span<cplx> table);

}  // namespace wnear::kernels
