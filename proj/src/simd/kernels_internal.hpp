#pragma once

#include "mstdep/simd.hpp"

namespace mstdep::simd::detail {

const Kernels& scalar_kernels() noexcept;

#if defined(MSTDEP_WITH_AVX2)
const Kernels& avx2_kernels() noexcept;
#endif

}  // namespace mstdep::simd::detail
