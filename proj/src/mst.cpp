#include "mstdep/mst.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "mstdep/simd.hpp"

namespace mstdep {

GammaParam::GammaParam(double gamma) : gamma_(gamma) {
  if (!(gamma > 0.0 && gamma < kDimension))
    throw std::invalid_argument("gamma must lie in (0, 2) for planar data, got " + std::to_string(gamma));
}

namespace {

void canonicalize(std::vector<Edge>& edges) {
  for (auto& e : edges)
    if (e.i > e.j) std::swap(e.i, e.j);
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.i != b.i ? a.i < b.i : a.j < b.j; });
}

bool by_weight_then_index(const Edge& a, const Edge& b) {
  if (a.weight != b.weight) return a.weight < b.weight;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

void require_points(const PointSet& points, const char* who) {
  if (points.size() < 2) throw std::invalid_argument(std::string(who) + ": need at least two points");
  if (points.size() > std::numeric_limits<std::int32_t>::max())
    throw std::invalid_argument(std::string(who) + ": too many points");
}

}  // namespace

double gamma_length(std::span<const Edge> edges, GammaParam gamma) {
  double sum = 0.0;
  if (gamma.gamma() == 1.0) {
    for (const auto& e : edges) sum += e.weight;
  } else {
    for (const auto& e : edges) sum += std::pow(e.weight, gamma.gamma());
  }
  return sum;
}

double gamma_length(const SpanningTree& tree, GammaParam gamma) { return gamma_length(tree.edges(), gamma); }

SpanningTree::SpanningTree(std::size_t n_points, std::vector<Edge> edges, GammaParam gamma)
    : n_points_(n_points), edges_(std::move(edges)), gamma_(gamma) {
  canonicalize(edges_);
  gamma_length_ = mstdep::gamma_length(edges_, gamma_);
}

bool SpanningTree::is_spanning_tree() const {
  if (n_points_ == 0 || edges_.size() + 1 != n_points_) return false;
  DisjointSets sets(n_points_);
  for (const auto& e : edges_) {
    if (e.i >= n_points_ || e.j >= n_points_) return false;
    if (!sets.unite(e.i, e.j)) return false;
  }
  return true;
}

SpanningTree mst_prim(const PointSet& points, GammaParam gamma) {
  require_points(points, "mst_prim");
  const std::size_t n = points.size();
  const auto& kern = simd::kernels();

  // Points outside the tree, compacted; removal swaps with the last slot.
  std::vector<double> x(points.xs().begin() + 1, points.xs().end());
  std::vector<double> y(points.ys().begin() + 1, points.ys().end());
  std::vector<double> key(n - 1, std::numeric_limits<double>::infinity());
  std::vector<std::uint32_t> parent(n - 1, 0);
  std::vector<std::uint32_t> id(n - 1);
  std::iota(id.begin(), id.end(), std::uint32_t{1});

  std::vector<Edge> edges;
  edges.reserve(n - 1);
  double px = points.xs()[0], py = points.ys()[0];
  std::uint32_t from = 0;
  for (std::size_t m = n - 1; m > 0; --m) {
    const std::size_t b = kern.prim_relax_argmin(x.data(), y.data(), key.data(), parent.data(), id.data(),
                                                 m, px, py, from);
    edges.push_back({parent[b], id[b], std::sqrt(key[b])});
    px = x[b];
    py = y[b];
    from = id[b];
    const std::size_t last = m - 1;
    x[b] = x[last];
    y[b] = y[last];
    key[b] = key[last];
    parent[b] = parent[last];
    id[b] = id[last];
  }
  return SpanningTree(n, std::move(edges), gamma);
}

SpanningTree mst_kruskal(const PointSet& points, GammaParam gamma) {
  require_points(points, "mst_kruskal");
  const std::size_t n = points.size();
  std::vector<Edge> all;
  all.reserve(n * (n - 1) / 2);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) all.push_back({i, j, points.distance(i, j)});
  std::sort(all.begin(), all.end(), by_weight_then_index);

  DisjointSets sets(n);
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (const auto& e : all) {
    if (sets.unite(e.i, e.j)) {
      edges.push_back(e);
      if (edges.size() + 1 == n) break;
    }
  }
  return SpanningTree(n, std::move(edges), gamma);
}

SpanningTree mst_from_edges(std::size_t n_points, std::vector<Edge> candidates, GammaParam gamma) {
  for (auto& e : candidates)
    if (e.i > e.j) std::swap(e.i, e.j);
  std::sort(candidates.begin(), candidates.end(), by_weight_then_index);
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  DisjointSets sets(n_points);
  std::vector<Edge> edges;
  edges.reserve(n_points ? n_points - 1 : 0);
  for (const auto& e : candidates) {
    if (e.i >= n_points || e.j >= n_points) throw std::out_of_range("mst_from_edges: vertex out of range");
    if (sets.unite(e.i, e.j)) edges.push_back(e);
  }
  if (edges.size() + 1 != n_points)
    throw std::invalid_argument("mst_from_edges: candidate edges do not span all points");
  return SpanningTree(n_points, std::move(edges), gamma);
}

std::vector<Edge> mst_dense(std::size_t n, const std::function<double(std::size_t, std::size_t)>& weight) {
  std::vector<Edge> edges;
  if (n < 2) return edges;
  edges.reserve(n - 1);
  std::vector<double> key(n, std::numeric_limits<double>::infinity());
  std::vector<std::uint32_t> parent(n, 0);
  std::vector<char> in_tree(n, 0);
  std::size_t current = 0;
  in_tree[0] = 1;
  for (std::size_t step = 1; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (in_tree[v]) continue;
      const double w = weight(current, v);
      if (w < key[v]) {
        key[v] = w;
        parent[v] = static_cast<std::uint32_t>(current);
      }
      if (best == n || key[v] < key[best]) best = v;
    }
    edges.push_back({parent[best], static_cast<std::uint32_t>(best), key[best]});
    in_tree[best] = 1;
    current = best;
  }
  return edges;
}

}  // namespace mstdep
