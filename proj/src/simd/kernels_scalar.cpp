// Scalar reference kernels. The vector variants must match these exactly.

#include <limits>

#include "kernels_internal.hpp"

namespace mstdep::simd::detail {
namespace {

std::size_t prim_relax_argmin(const double* x, const double* y, double* key,
                              std::uint32_t* parent, const std::uint32_t* id, std::size_t m,
                              double px, double py, std::uint32_t from) {
  std::size_t best_pos = 0;
  double best_key = std::numeric_limits<double>::infinity();
  std::uint32_t best_id = std::numeric_limits<std::uint32_t>::max();
  for (std::size_t i = 0; i < m; ++i) {
    const double dx = x[i] - px;
    const double dy = y[i] - py;
    const double d2 = dx * dx + dy * dy;
    if (d2 < key[i]) {
      key[i] = d2;
      parent[i] = from;
    }
    if (key[i] < best_key || (key[i] == best_key && id[i] < best_id)) {
      best_key = key[i];
      best_id = id[i];
      best_pos = i;
    }
  }
  return best_pos;
}

void nearest_center(const double* px, const double* py, std::size_t n, const double* cx,
                    const double* cy, std::size_t k, std::uint32_t* out_index, double* out_d2) {
  for (std::size_t i = 0; i < n; ++i) {
    double best = std::numeric_limits<double>::infinity();
    std::uint32_t best_c = 0;
    for (std::size_t c = 0; c < k; ++c) {
      const double dx = px[i] - cx[c];
      const double dy = py[i] - cy[c];
      const double d2 = dx * dx + dy * dy;
      if (d2 < best) {
        best = d2;
        best_c = static_cast<std::uint32_t>(c);
      }
    }
    out_index[i] = best_c;
    out_d2[i] = best;
  }
}

void min_sq_distance_update(const double* px, const double* py, std::size_t n, double cx,
                            double cy, double* d2min) {
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = px[i] - cx;
    const double dy = py[i] - cy;
    const double d2 = dx * dx + dy * dy;
    if (d2 < d2min[i]) d2min[i] = d2;
  }
}

constexpr Kernels kScalar{&prim_relax_argmin, &nearest_center, &min_sq_distance_update};

}  // namespace

const Kernels& scalar_kernels() noexcept { return kScalar; }

}  // namespace mstdep::simd::detail
