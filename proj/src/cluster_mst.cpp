#include <cmath>
#include <stdexcept>
#include <string>

#include "mstdep/approx_mst.hpp"
#include "mstdep/clustering.hpp"
#include "mstdep/random.hpp"

namespace mstdep {

double harmonic_weight(double wi, double wj, std::size_t k) {
  return 2.0 * static_cast<double>(k) / (1.0 / wi + 1.0 / wj);
}

ApproxResult cluster_mst(const PointSet& points, std::size_t k, ClusterAlgorithm algorithm, bool weighted,
                         std::uint64_t seed, const MethodParams& params) {
  const std::size_t n = points.size();
  if (k < 2 || k > n)
    throw std::invalid_argument("cluster_mst: k must lie in [2, N], got k = " + std::to_string(k) +
                                " with N = " + std::to_string(n));
  const Clustering clusters =
      algorithm == ClusterAlgorithm::kKMeans
          ? kmeans(points, {k, params.restarts, params.max_iters, derive_seed(seed, {0x636c7573ULL})})
          : pca_cluster(points, k);

  ApproxResult r;
  r.method = algorithm == ClusterAlgorithm::kKMeans
                 ? (weighted ? Method::kClusterKMeansWeighted : Method::kClusterKMeans)
                 : (weighted ? Method::kClusterPcaWeighted : Method::kClusterPca);
  r.n_points = n;
  r.n_effective = k;
  r.clusters = k;
  r.subsets = n / k;
  r.seed = seed;
  r.gamma = params.gamma;

  if (!weighted) {
    r.length = mst_prim(clusters.centers, params.gamma).gamma_length();
    return r;
  }
  // Minimize the reweighted objective sum W_ij |e_ij| directly.
  const auto& c = clusters.centers;
  const auto& w = clusters.weights;
  const auto edges = mst_dense(k, [&](std::size_t i, std::size_t j) {
    return harmonic_weight(w[i], w[j], k) * c.distance(i, j);
  });
  r.length = gamma_length(edges, params.gamma);
  return r;
}

}  // namespace mstdep
