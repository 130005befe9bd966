// AVX2 variants. Built with -mavx2 -mno-fma: products and sums are rounded
// separately, exactly as in the scalar reference.

#include <immintrin.h>

#include <limits>

#include "kernels_internal.hpp"

namespace mstdep::simd::detail {
namespace {

inline __m256d load_ids(const std::uint32_t* p) {
  return _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(p)));
}

std::size_t prim_relax_argmin(const double* x, const double* y, double* key,
                              std::uint32_t* parent, const std::uint32_t* id, std::size_t m,
                              double px, double py, std::uint32_t from) {
  const __m256d vpx = _mm256_set1_pd(px);
  const __m256d vpy = _mm256_set1_pd(py);
  const __m256d step = _mm256_set1_pd(4.0);
  __m256d best_key = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  __m256d best_id = _mm256_set1_pd(4294967296.0);
  __m256d best_pos = _mm256_setzero_pd();
  __m256d pos = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);

  std::size_t i = 0;
  for (; i + 4 <= m; i += 4) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(x + i), vpx);
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(y + i), vpy);
    const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
    __m256d k = _mm256_loadu_pd(key + i);
    const __m256d closer = _mm256_cmp_pd(d2, k, _CMP_LT_OQ);
    const int mask = _mm256_movemask_pd(closer);
    if (mask) {
      k = _mm256_blendv_pd(k, d2, closer);
      _mm256_storeu_pd(key + i, k);
      for (int lane = 0; lane < 4; ++lane)
        if (mask & (1 << lane)) parent[i + lane] = from;
    }
    const __m256d ids = load_ids(id + i);
    const __m256d better = _mm256_or_pd(
        _mm256_cmp_pd(k, best_key, _CMP_LT_OQ),
        _mm256_and_pd(_mm256_cmp_pd(k, best_key, _CMP_EQ_OQ), _mm256_cmp_pd(ids, best_id, _CMP_LT_OQ)));
    best_key = _mm256_blendv_pd(best_key, k, better);
    best_id = _mm256_blendv_pd(best_id, ids, better);
    best_pos = _mm256_blendv_pd(best_pos, pos, better);
    pos = _mm256_add_pd(pos, step);
  }

  alignas(32) double lane_key[4], lane_id[4], lane_pos[4];
  _mm256_store_pd(lane_key, best_key);
  _mm256_store_pd(lane_id, best_id);
  _mm256_store_pd(lane_pos, best_pos);
  double bk = lane_key[0], bi = lane_id[0];
  std::size_t bp = static_cast<std::size_t>(lane_pos[0]);
  for (int lane = 1; lane < 4; ++lane) {
    if (lane_key[lane] < bk || (lane_key[lane] == bk && lane_id[lane] < bi)) {
      bk = lane_key[lane];
      bi = lane_id[lane];
      bp = static_cast<std::size_t>(lane_pos[lane]);
    }
  }
  for (; i < m; ++i) {
    const double dx = x[i] - px;
    const double dy = y[i] - py;
    const double d2 = dx * dx + dy * dy;
    if (d2 < key[i]) {
      key[i] = d2;
      parent[i] = from;
    }
    const double di = static_cast<double>(id[i]);
    if (key[i] < bk || (key[i] == bk && di < bi)) {
      bk = key[i];
      bi = di;
      bp = i;
    }
  }
  return bp;
}

void nearest_center(const double* px, const double* py, std::size_t n, const double* cx,
                    const double* cy, std::size_t k, std::uint32_t* out_index, double* out_d2) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(px + i);
    const __m256d y = _mm256_loadu_pd(py + i);
    __m256d best = _mm256_set1_pd(std::numeric_limits<double>::infinity());
    __m256d best_c = _mm256_setzero_pd();
    for (std::size_t c = 0; c < k; ++c) {
      const __m256d dx = _mm256_sub_pd(x, _mm256_set1_pd(cx[c]));
      const __m256d dy = _mm256_sub_pd(y, _mm256_set1_pd(cy[c]));
      const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
      const __m256d closer = _mm256_cmp_pd(d2, best, _CMP_LT_OQ);
      best = _mm256_blendv_pd(best, d2, closer);
      best_c = _mm256_blendv_pd(best_c, _mm256_set1_pd(static_cast<double>(c)), closer);
    }
    _mm256_storeu_pd(out_d2 + i, best);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(out_index + i), _mm256_cvtpd_epi32(best_c));
  }
  for (; i < n; ++i) {
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
  const __m256d vcx = _mm256_set1_pd(cx);
  const __m256d vcy = _mm256_set1_pd(cy);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(px + i), vcx);
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(py + i), vcy);
    const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
    const __m256d cur = _mm256_loadu_pd(d2min + i);
    _mm256_storeu_pd(d2min + i, _mm256_blendv_pd(cur, d2, _mm256_cmp_pd(d2, cur, _CMP_LT_OQ)));
  }
  for (; i < n; ++i) {
    const double dx = px[i] - cx;
    const double dy = py[i] - cy;
    const double d2 = dx * dx + dy * dy;
    if (d2 < d2min[i]) d2min[i] = d2;
  }
}

constexpr Kernels kAvx2{&prim_relax_argmin, &nearest_center, &min_sq_distance_update};

}  // namespace

const Kernels& avx2_kernels() noexcept { return kAvx2; }

}  // namespace mstdep::simd::detail
