#pragma once

// Exact minimum spanning trees over the complete Euclidean graph of a planar
// point set, and the length functional L_gamma = sum over edges of |e|^gamma.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <vector>

#include "mstdep/points.hpp"

namespace mstdep {

struct Edge {
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  double weight = 0.0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Exponent of the length functional for planar data. gamma in (0, 2);
/// the matching Renyi order is alpha = (2 - gamma)/2.
class GammaParam {
 public:
  static constexpr double kDimension = 2.0;

  constexpr GammaParam() = default;
  explicit GammaParam(double gamma);

  constexpr double gamma() const noexcept { return gamma_; }
  constexpr double alpha() const noexcept { return (kDimension - gamma_) / kDimension; }

  friend constexpr bool operator==(GammaParam, GammaParam) = default;

 private:
  double gamma_ = 1.0;
};

/// A spanning tree on points 0..n-1. Edges are stored with i < j, sorted by
/// (i, j), so two trees with the same edge set compare equal and report the
/// same length bit for bit.
class SpanningTree {
 public:
  SpanningTree() = default;
  SpanningTree(std::size_t n_points, std::vector<Edge> edges, GammaParam gamma = {});

  std::size_t n_points() const noexcept { return n_points_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  GammaParam gamma() const noexcept { return gamma_; }

  /// sum of weight^gamma for the tree's gamma.
  double gamma_length() const noexcept { return gamma_length_; }

  /// True if the edges form a connected acyclic graph over all n points.
  bool is_spanning_tree() const;

 private:
  std::size_t n_points_ = 0;
  std::vector<Edge> edges_;
  GammaParam gamma_;
  double gamma_length_ = 0.0;
};

double gamma_length(const SpanningTree& tree, GammaParam gamma);
double gamma_length(std::span<const Edge> edges, GammaParam gamma);

/// Dense Prim, O(N^2) time and O(N) memory. The distance scan runs in the
/// vectorized kernel of the active SIMD backend.
SpanningTree mst_prim(const PointSet& points, GammaParam gamma = {});

/// Kruskal over all N(N-1)/2 edges sorted by (weight, i, j). O(N^2) memory;
/// intended as a cross-check for moderate N.
SpanningTree mst_kruskal(const PointSet& points, GammaParam gamma = {});

/// Exhaustive minimum over all N^(N-2) labelled spanning trees, enumerated
/// by Pruefer sequence. Requires 2 <= N <= 8.
SpanningTree brute_force_mst(const PointSet& points, GammaParam gamma = {});

inline constexpr std::size_t kBruteForceMaxPoints = 8;

/// Kruskal restricted to the given candidate edges (duplicates allowed).
/// Throws std::invalid_argument if the candidates do not connect all points.
SpanningTree mst_from_edges(std::size_t n_points, std::vector<Edge> candidates, GammaParam gamma = {});

/// Dense Prim on an arbitrary symmetric weight function over n vertices.
std::vector<Edge> mst_dense(std::size_t n, const std::function<double(std::size_t, std::size_t)>& weight);

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t v) noexcept {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  bool unite(std::size_t a, std::size_t b) noexcept {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace mstdep
