#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mstdep/points.hpp"

namespace mstdep {

/// Hard partition of N points into k non-empty clusters.
struct Clustering {
  std::vector<std::uint32_t> assignments;  // cluster index per point
  PointSet centers;                        // mean of each cluster
  std::vector<double> weights;             // cluster size / N
  std::size_t k = 0;
  double wcss = 0.0;  // within-cluster sum of squared distances to the centers

  /// Point indices of every cluster, each list in increasing order.
  std::vector<std::vector<std::uint32_t>> members() const;
};

struct KMeansOptions {
  std::size_t k = 2;
  std::size_t restarts = 10;
  std::size_t max_iters = 100;
  std::uint64_t seed = 0;
};

/// Optional diagnostics from a Lloyd run.
struct KMeansTrace {
  std::vector<double> wcss;  // after every assignment and every update step
  std::size_t iterations = 0;
  std::vector<double> restart_wcss;  // final wcss of each restart (kmeans only)
};

/// K-means with k-means++ seeding. Runs `restarts` independent Lloyd
/// iterations and returns the partition with the smallest wcss (first restart
/// wins ties). Lloyd stops when the assignment no longer changes or after
/// max_iters update steps. A cluster that becomes empty is reseeded at the
/// point farthest from its current center.
Clustering kmeans(const PointSet& points, const KMeansOptions& options, KMeansTrace* trace = nullptr);

/// A single Lloyd run from the given initial centers.
Clustering lloyd(const PointSet& points, PointSet initial_centers, std::size_t max_iters,
                 KMeansTrace* trace = nullptr);

/// k-means++ seeding: first center uniform, then proportional to the squared
/// distance to the nearest chosen center.
PointSet kmeanspp_centers(const PointSet& points, std::size_t k, std::uint64_t seed);

/// Divisive PCA clustering: starting from one cell, repeatedly bisect the cell
/// with the largest sum of squared deviations through its centroid,
/// perpendicular to its principal axis, until there are k cells. Ties go to
/// the earlier cell. Deterministic.
Clustering pca_cluster(const PointSet& points, std::size_t k);

/// Nearest center for every point (lowest index on ties). Uses a uniform grid
/// over the centers when there are many of them, and the brute-force SIMD
/// kernel otherwise; both give identical results.
void nearest_centers(const PointSet& points, const PointSet& centers, std::span<std::uint32_t> index,
                     std::span<double> d2);
void nearest_centers_bruteforce(const PointSet& points, const PointSet& centers,
                                std::span<std::uint32_t> index, std::span<double> d2);
void nearest_centers_grid(const PointSet& points, const PointSet& centers, std::span<std::uint32_t> index,
                          std::span<double> d2);

inline constexpr std::size_t kGridMinCenters = 48;

}  // namespace mstdep
