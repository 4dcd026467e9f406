#pragma once

#include "wnear/kernels.hpp"

namespace wnear::kernels::detail {

const KernelTable& scalar_table();

#if defined(WNEAR_HAVE_AVX2)
const KernelTable& avx2_table();
#endif

#if defined(WNEAR_HAVE_NEON)
const KernelTable& neon_table();
#endif

}  // namespace wnear::kernels::detail
