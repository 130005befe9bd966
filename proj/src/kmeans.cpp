#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "mstdep/clustering.hpp"
#include "mstdep/random.hpp"
#include "mstdep/simd.hpp"

namespace mstdep {

std::vector<std::vector<std::uint32_t>> Clustering::members() const {
  std::vector<std::vector<std::uint32_t>> out(k);
  for (std::size_t i = 0; i < assignments.size(); ++i) out[assignments[i]].push_back(static_cast<std::uint32_t>(i));
  return out;
}

namespace {

void check_k(std::size_t k, std::size_t n, const char* who) {
  if (k < 1 || k > n)
    throw std::invalid_argument(std::string(who) + ": k must lie in [1, N], got k = " + std::to_string(k) +
                                " with N = " + std::to_string(n));
}

PointSet cluster_means(const PointSet& points, std::span<const std::uint32_t> assign, std::size_t k,
                       std::vector<std::size_t>& sizes) {
  std::vector<double> sx(k, 0.0), sy(k, 0.0);
  sizes.assign(k, 0);
  const auto xs = points.xs(), ys = points.ys();
  for (std::size_t i = 0; i < assign.size(); ++i) {
    sx[assign[i]] += xs[i];
    sy[assign[i]] += ys[i];
    ++sizes[assign[i]];
  }
  for (std::size_t c = 0; c < k; ++c) {
    const auto n = static_cast<double>(sizes[c]);
    sx[c] /= n;
    sy[c] /= n;
  }
  return PointSet(std::move(sx), std::move(sy));
}

double sum(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

// Nearest-center assignment; clusters left empty take the point farthest from
// its center among clusters that can spare one.
void assign_points(const PointSet& points, PointSet& centers, std::vector<std::uint32_t>& assign,
                   std::vector<double>& d2) {
  const std::size_t n = points.size(), k = centers.size();
  nearest_centers(points, centers, assign, d2);
  std::vector<std::size_t> sizes(k, 0);
  for (auto a : assign) ++sizes[a];
  for (std::size_t c = 0; c < k; ++c) {
    if (sizes[c] != 0) continue;
    std::size_t far = n;
    for (std::size_t i = 0; i < n; ++i)
      if (sizes[assign[i]] > 1 && (far == n || d2[i] > d2[far])) far = i;
    --sizes[assign[far]];
    assign[far] = static_cast<std::uint32_t>(c);
    ++sizes[c];
    d2[far] = 0.0;
    std::vector<double> cx(centers.xs().begin(), centers.xs().end());
    std::vector<double> cy(centers.ys().begin(), centers.ys().end());
    cx[c] = points.xs()[far];
    cy[c] = points.ys()[far];
    centers = PointSet(std::move(cx), std::move(cy));
  }
}

}  // namespace

PointSet kmeanspp_centers(const PointSet& points, std::size_t k, std::uint64_t seed) {
  const std::size_t n = points.size();
  check_k(k, n, "kmeanspp_centers");
  Rng rng(seed);
  const auto xs = points.xs(), ys = points.ys();
  const auto& kern = simd::kernels();

  std::vector<char> chosen(n, 0);
  std::vector<double> d2(n, std::numeric_limits<double>::infinity());
  PointSet centers;
  centers.reserve(k);
  std::size_t pick = static_cast<std::size_t>(rng.below(n));
  for (std::size_t c = 0;; ++c) {
    chosen[pick] = 1;
    centers.push_back(points[pick]);
    if (c + 1 == k) break;
    kern.min_sq_distance_update(xs.data(), ys.data(), n, xs[pick], ys[pick], d2.data());
    const double total = sum(d2);
    if (total > 0.0) {
      const double target = rng.uniform() * total;
      double acc = 0.0;
      pick = n;
      for (std::size_t i = 0; i < n; ++i) {
        acc += d2[i];
        if (d2[i] > 0.0 && acc > target) {
          pick = i;
          break;
        }
      }
      if (pick == n)  // rounding left the target past the last positive weight
        for (std::size_t i = n; i-- > 0;)
          if (d2[i] > 0.0) {
            pick = i;
            break;
          }
    } else {
      // Every point coincides with a center; take an unused index.
      std::size_t remaining = rng.below(n - c - 1);
      for (pick = 0; pick < n; ++pick)
        if (!chosen[pick] && remaining-- == 0) break;
    }
  }
  return centers;
}

Clustering lloyd(const PointSet& points, PointSet centers, std::size_t max_iters, KMeansTrace* trace) {
  const std::size_t n = points.size(), k = centers.size();
  check_k(k, n, "lloyd");
  if (max_iters < 1) throw std::invalid_argument("lloyd: max_iters must be positive");

  std::vector<std::uint32_t> assign(n), next(n);
  std::vector<double> d2(n);
  std::vector<std::size_t> sizes;
  assign_points(points, centers, assign, d2);
  if (trace) trace->wcss.push_back(sum(d2));

  std::size_t iter = 0;
  while (iter < max_iters) {
    ++iter;
    centers = cluster_means(points, assign, k, sizes);
    if (trace) {
      double w = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        w += squared_distance(points.xs()[i], points.ys()[i], centers.xs()[assign[i]], centers.ys()[assign[i]]);
      trace->wcss.push_back(w);
    }
    assign_points(points, centers, next, d2);
    if (trace) trace->wcss.push_back(sum(d2));
    if (next == assign) break;
    assign.swap(next);
  }

  Clustering out;
  out.k = k;
  out.centers = cluster_means(points, assign, k, sizes);
  out.weights.resize(k);
  for (std::size_t c = 0; c < k; ++c) out.weights[c] = static_cast<double>(sizes[c]) / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i)
    out.wcss += squared_distance(points.xs()[i], points.ys()[i], out.centers.xs()[assign[i]],
                                 out.centers.ys()[assign[i]]);
  out.assignments = std::move(assign);
  if (trace) trace->iterations = iter;
  return out;
}

Clustering kmeans(const PointSet& points, const KMeansOptions& options, KMeansTrace* trace) {
  check_k(options.k, points.size(), "kmeans");
  if (options.restarts < 1) throw std::invalid_argument("kmeans: restarts must be positive");
  Clustering best;
  double best_wcss = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < options.restarts; ++r) {
    const std::uint64_t run_seed = derive_seed(options.seed, {0x6b6d65616e73ULL, r});
    auto result = lloyd(points, kmeanspp_centers(points, options.k, run_seed), options.max_iters,
                        r == 0 ? trace : nullptr);
    if (trace) trace->restart_wcss.push_back(result.wcss);
    if (result.wcss < best_wcss) {
      best_wcss = result.wcss;
      best = std::move(result);
    }
  }
  return best;
}

}  // namespace mstdep
