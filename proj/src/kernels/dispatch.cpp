#include <atomic>
#include <cstdlib>
#include <string>

#include "backends.hpp"
#include "wnear/error.hpp"

namespace wnear::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(WNEAR_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend default_backend() {
  if (const char* env = std::getenv("WNEAR_KERNEL")) {
    if (auto b = parse_backend(env); b && backend_available(*b)) return *b;
  }
  if (backend_available(Backend::avx2)) return Backend::avx2;
  if (backend_available(Backend::neon)) return Backend::neon;
  return Backend::scalar;
}

std::atomic<Backend>& active() {
  static std::atomic<Backend> backend{default_backend()};
  return backend;
}

void check_sizes(std::size_t x, std::size_t k, std::size_t other, const char* what) {
  if (x != k || x != other)
    throw Error("kernels", "invalid_argument", std::string("mismatched array lengths in ") + what);
}

}  // namespace

std::string_view backend_name(Backend backend) {
  switch (backend) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
  }
  return "unknown";
}

std::optional<Backend> parse_backend(std::string_view name) {
  if (name == "scalar") return Backend::scalar;
  if (name == "avx2") return Backend::avx2;
  if (name == "neon") return Backend::neon;
  return std::nullopt;
}

bool backend_available(Backend backend) {
  switch (backend) {
    case Backend::scalar: return true;
    case Backend::avx2: return cpu_has_avx2();
    case Backend::neon:
#if defined(WNEAR_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Backend active_backend() { return active().load(); }

void set_active_backend(Backend backend) {
  if (!backend_available(backend))
    throw Error("kernels", "unavailable",
                "kernel backend '" + std::string(backend_name(backend)) + "' is not available");
  active().store(backend);
}

const KernelTable& kernel_table(Backend backend) {
  if (!backend_available(backend))
    throw Error("kernels", "unavailable",
                "kernel backend '" + std::string(backend_name(backend)) + "' is not available");
  switch (backend) {
#if defined(WNEAR_HAVE_AVX2)
    case Backend::avx2: return detail::avx2_table();
#endif
#if defined(WNEAR_HAVE_NEON)
    case Backend::neon: return detail::neon_table();
#endif
    default: return detail::scalar_table();
  }
}

void project(std::span<const double> x, std::span<const double> k,
             std::span<const double> weight, std::size_t order, std::span<cplx> acc) {
  check_sizes(x.size(), k.size(), weight.size(), "project");
  if (acc.size() < order * order)
    throw Error("kernels", "invalid_argument", "accumulator smaller than order^2");
  kernel_table(active_backend()).project(x.data(), k.data(), weight.data(), x.size(), order,
                                         acc.data());
}

void synthesize(std::span<const double> x, std::span<const double> k, std::size_t order,
                std::span<const cplx> coeffs, std::span<double> out_re,
                std::span<double> out_im) {
  check_sizes(x.size(), k.size(), out_re.size(), "synthesize");
  check_sizes(x.size(), k.size(), out_im.size(), "synthesize");
  if (coeffs.size() < order * order)
    throw Error("kernels", "invalid_argument", "coefficient matrix smaller than order^2");
  kernel_table(active_backend()).synthesize(x.data(), k.data(), x.size(), order, coeffs.data(),
                                            out_re.data(), out_im.data());
}

void tabulate(std::span<const double> x, std::span<const double> k, std::size_t order,
              std::span<cplx> table) {
  check_sizes(x.size(), k.size(), k.size(), "tabulate");
  if (table.size() < order * order * x.size())
    throw Error("kernels", "invalid_argument", "table smaller than order^2 * count");
  kernel_table(active_backend()).tabulate(x.data(), k.data(), x.size(), order, table.data());
}

}  // namespace wnear::kernels
