#include <limits>
#include <stdexcept>

#include "mstdep/mst.hpp"

namespace mstdep {
namespace {

// Decode a Pruefer sequence over n labels into the n-1 tree edges.
void decode_pruefer(const std::vector<std::uint32_t>& seq, std::size_t n, std::vector<Edge>& out) {
  std::vector<std::uint32_t> degree(n, 1);
  for (auto v : seq) ++degree[v];
  out.clear();
  for (auto v : seq) {
    for (std::uint32_t leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1) {
        out.push_back({leaf, v, 0.0});
        --degree[leaf];
        --degree[v];
        break;
      }
    }
  }
  std::uint32_t u = 0, w = 0;
  bool first = true;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (degree[v] == 1) {
      (first ? u : w) = v;
      first = false;
    }
  }
  out.push_back({u, w, 0.0});
}

}  // namespace

SpanningTree brute_force_mst(const PointSet& points, GammaParam gamma) {
  const std::size_t n = points.size();
  if (n < 2) throw std::invalid_argument("brute_force_mst: need at least two points");
  if (n > kBruteForceMaxPoints)
    throw std::invalid_argument("brute_force_mst: at most " + std::to_string(kBruteForceMaxPoints) +
                                " points, got " + std::to_string(n));
  if (n == 2) return SpanningTree(2, {{0, 1, points.distance(0, 1)}}, gamma);

  std::vector<std::uint32_t> seq(n - 2, 0);
  std::vector<Edge> edges, best;
  double best_len = std::numeric_limits<double>::infinity();
  while (true) {
    decode_pruefer(seq, n, edges);
    for (auto& e : edges) e.weight = points.distance(e.i, e.j);
    const double len = gamma_length(edges, gamma);
    if (len < best_len) {
      best_len = len;
      best = edges;
    }
    // Next sequence in lexicographic order over {0..n-1}^(n-2).
    std::size_t pos = 0;
    while (pos < seq.size() && ++seq[pos] == n) seq[pos++] = 0;
    if (pos == seq.size()) break;
  }
  return SpanningTree(n, std::move(best), gamma);
}

}  // namespace mstdep
