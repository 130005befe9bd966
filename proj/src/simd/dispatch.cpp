#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string_view>

#include "kernels_internal.hpp"

namespace mstdep::simd {

const char* to_string(Backend b) noexcept {
  switch (b) {
    case Backend::kScalar: return "scalar";
    case Backend::kAvx2: return "avx2";
  }
  return "unknown";
}

bool available(Backend b) noexcept {
  switch (b) {
    case Backend::kScalar: return true;
    case Backend::kAvx2:
#if defined(MSTDEP_WITH_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

namespace {

Backend initial_backend() {
  if (const char* env = std::getenv("MSTDEP_SIMD")) {
    const std::string_view want(env);
    if (want == "scalar") return Backend::kScalar;
    if (want == "avx2" && available(Backend::kAvx2)) return Backend::kAvx2;
  }
  return available(Backend::kAvx2) ? Backend::kAvx2 : Backend::kScalar;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{initial_backend()};
  return backend;
}

}  // namespace

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (!available(b)) throw std::runtime_error(std::string("SIMD backend not available: ") + to_string(b));
  current().store(b, std::memory_order_relaxed);
}

const Kernels& kernels(Backend b) {
  switch (b) {
    case Backend::kScalar: return detail::scalar_kernels();
    case Backend::kAvx2:
#if defined(MSTDEP_WITH_AVX2)
      if (available(b)) return detail::avx2_kernels();
#endif
      break;
  }
  throw std::runtime_error(std::string("SIMD backend not available: ") + to_string(b));
}

}  // namespace mstdep::simd
