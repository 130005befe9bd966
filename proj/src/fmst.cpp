#include <cmath>
#include <limits>
#include <stdexcept>

#include "mstdep/approx_mst.hpp"
#include "mstdep/clustering.hpp"
#include "mstdep/random.hpp"

namespace mstdep {
namespace {

struct StageEdges {
  std::vector<Edge> edges;       // intra-cluster trees plus connecting edges
  std::vector<Edge> connecting;  // one per edge of the MST on the centers
};

// Exact MST inside every cluster, joined along the MST of the cluster centers
// by the shortest edge between each pair of adjacent clusters.
StageEdges stage_edges(const PointSet& points, const Clustering& clustering) {
  StageEdges out;
  const auto members = clustering.members();
  std::vector<PointSet> parts;
  parts.reserve(members.size());
  for (const auto& m : members) {
    std::vector<std::size_t> idx(m.begin(), m.end());
    parts.push_back(points.subset(idx));
  }

  for (std::size_t c = 0; c < members.size(); ++c) {
    if (members[c].size() < 2) continue;
    const auto tree = mst_prim(parts[c]);
    for (const auto& e : tree.edges())
      out.edges.push_back({members[c][e.i], members[c][e.j], e.weight});
  }

  if (members.size() < 2) return out;
  std::vector<std::uint32_t> nearest;
  std::vector<double> d2;
  const auto center_tree = mst_prim(clustering.centers);
  for (const auto& link : center_tree.edges()) {
    const auto& a = parts[link.i];
    const auto& b = parts[link.j];
    nearest.resize(a.size());
    d2.resize(a.size());
    nearest_centers_bruteforce(a, b, nearest, d2);
    std::size_t best = 0;
    for (std::size_t p = 1; p < a.size(); ++p)
      if (d2[p] < d2[best]) best = p;
    const Edge e{members[link.i][best], members[link.j][nearest[best]], std::sqrt(d2[best])};
    out.edges.push_back(e);
    out.connecting.push_back(e);
  }
  return out;
}

}  // namespace

SpanningTree fmst_tree(const PointSet& points, std::uint64_t seed, const MethodParams& params) {
  const std::size_t n = points.size();
  if (n < 4) throw std::invalid_argument("fmst: need at least four points");
  const auto k = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));

  const KMeansOptions opts{k, params.restarts, params.max_iters, derive_seed(seed, {0x666d7374ULL})};
  const auto first = stage_edges(points, kmeans(points, opts));

  PointSet midpoints;
  midpoints.reserve(first.connecting.size());
  for (const auto& e : first.connecting) {
    const Point2 p = points[e.i], q = points[e.j];
    midpoints.push_back({0.5 * (p.x + q.x), 0.5 * (p.y + q.y)});
  }
  const auto second = stage_edges(points, lloyd(points, std::move(midpoints), params.max_iters));

  std::vector<Edge> merged = first.edges;
  merged.insert(merged.end(), second.edges.begin(), second.edges.end());
  return mst_from_edges(n, std::move(merged), params.gamma);
}

ApproxResult fmst(const PointSet& points, std::uint64_t seed, const MethodParams& params) {
  const auto tree = fmst_tree(points, seed, params);
  ApproxResult r;
  r.method = Method::kFmst;
  r.length = tree.gamma_length();
  r.n_points = r.n_effective = points.size();
  r.clusters = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(points.size()))));
  r.seed = seed;
  r.gamma = params.gamma;
  return r;
}

}  // namespace mstdep
