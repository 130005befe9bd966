#include <cmath>
#include <stdexcept>

#include "mstdep/approx_mst.hpp"
#include "mstdep/random.hpp"

namespace mstdep {

const char* to_string(Method m) noexcept {
  switch (m) {
    case Method::kExact: return "exact";
    case Method::kSamplingRandom: return "sampling-random";
    case Method::kSamplingStratified: return "sampling-stratified";
    case Method::kClusterKMeans: return "cluster-kmeans";
    case Method::kClusterKMeansWeighted: return "cluster-kmeans-weighted";
    case Method::kClusterPca: return "cluster-pca";
    case Method::kClusterPcaWeighted: return "cluster-pca-weighted";
    case Method::kFmst: return "fmst";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view tag) noexcept {
  for (auto m : {Method::kExact, Method::kSamplingRandom, Method::kSamplingStratified, Method::kClusterKMeans,
                 Method::kClusterKMeansWeighted, Method::kClusterPca, Method::kClusterPcaWeighted, Method::kFmst})
    if (tag == to_string(m)) return m;
  return std::nullopt;
}

double approx_h_star(const ApproxResult& r) {
  if (r.method == Method::kSamplingRandom || r.method == Method::kSamplingStratified) return r.subset_mean;
  return std::log(r.length / std::pow(static_cast<double>(r.n_effective), r.gamma.alpha()));
}

ApproxResult approximate(const PointSet& points, Method method, std::uint64_t seed, const MethodParams& params) {
  const std::size_t n = points.size();
  auto cluster_count = [&] {
    if (params.subsets < 1) throw std::invalid_argument("subset count K must be positive");
    return std::max<std::size_t>(n / params.subsets, 2);
  };
  switch (method) {
    case Method::kExact: {
      const auto tree = mst_prim(points, params.gamma);
      ApproxResult r;
      r.method = Method::kExact;
      r.length = tree.gamma_length();
      r.n_points = r.n_effective = n;
      r.seed = seed;
      r.gamma = params.gamma;
      return r;
    }
    case Method::kSamplingRandom: return sampling_mst(points, params.subsets, Strata::kRandom, seed, params);
    case Method::kSamplingStratified: return sampling_mst(points, params.subsets, Strata::kKMeans, seed, params);
    case Method::kClusterKMeans:
      return cluster_mst(points, cluster_count(), ClusterAlgorithm::kKMeans, false, seed, params);
    case Method::kClusterKMeansWeighted:
      return cluster_mst(points, cluster_count(), ClusterAlgorithm::kKMeans, true, seed, params);
    case Method::kClusterPca: return cluster_mst(points, cluster_count(), ClusterAlgorithm::kPca, false, seed, params);
    case Method::kClusterPcaWeighted:
      return cluster_mst(points, cluster_count(), ClusterAlgorithm::kPca, true, seed, params);
    case Method::kFmst: return fmst(points, seed, params);
  }
  throw std::invalid_argument("unknown method");
}

double approx_error(const ApproxResult& approx, const SpanningTree& exact, std::size_t n_points, double alpha) {
  if (approx.n_points != n_points || exact.n_points() != n_points)
    throw std::invalid_argument("approx_error: approximation and exact tree were built on different point sets");
  const double exact_h = std::log(exact.gamma_length() / std::pow(static_cast<double>(n_points), alpha));
  return std::abs(approx_h_star(approx) - exact_h);
}

}  // namespace mstdep
