#pragma once

// Data-parallel inner loops shared by the spanning-tree and clustering code.
//
// Every kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant selected at runtime. Variants are required to be bit-identical to
// the scalar reference (no fused multiply-add, same operation order, same
// tie-breaking), so the choice of backend never changes a result.
//
// The backend is picked on first use: the MSTDEP_SIMD environment variable
// ("scalar" or "avx2") wins if set and available, otherwise the widest
// backend the CPU supports.

#include <cstddef>
#include <cstdint>
#include <span>

namespace mstdep::simd {

enum class Backend { kScalar, kAvx2 };

const char* to_string(Backend b) noexcept;

struct Kernels {
  /// One step of dense Prim over the m points not yet in the tree, stored
  /// compacted: coordinates x/y, tentative squared distance key, tree
  /// neighbour parent and original point id. Relaxes every key against the
  /// new tree vertex (px, py) with id `from` (strictly smaller distance wins)
  /// and returns the position of the smallest key, lowest id on ties.
  std::size_t (*prim_relax_argmin)(const double* x, const double* y, double* key,
                                   std::uint32_t* parent, const std::uint32_t* id,
                                   std::size_t m, double px, double py, std::uint32_t from);

  /// For every point i, the index of the nearest center (lowest index on
  /// ties) and the squared distance to it. Requires at least one center.
  void (*nearest_center)(const double* px, const double* py, std::size_t n, const double* cx,
                         const double* cy, std::size_t k, std::uint32_t* out_index,
                         double* out_d2);

  /// d2min[i] = min(d2min[i], |p_i - c|^2).
  void (*min_sq_distance_update)(const double* px, const double* py, std::size_t n, double cx,
                                 double cy, double* d2min);
};

bool available(Backend b) noexcept;
Backend active_backend();

/// Force a backend; throws std::runtime_error if it is not available.
void set_backend(Backend b);

const Kernels& kernels(Backend b);
inline const Kernels& kernels() { return kernels(active_backend()); }

/// Restores the previous backend on scope exit.
class ScopedBackend {
 public:
  explicit ScopedBackend(Backend b) : previous_(active_backend()) { set_backend(b); }
  ~ScopedBackend() { set_backend(previous_); }
  ScopedBackend(const ScopedBackend&) = delete;
  ScopedBackend& operator=(const ScopedBackend&) = delete;

 private:
  Backend previous_;
};

}  // namespace mstdep::simd
