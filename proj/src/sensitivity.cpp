#include "mstdep/sensitivity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "mstdep/parallel.hpp"
#include "mstdep/random.hpp"

namespace mstdep {

Dataset prepare_ranks(const Dataset& raw, std::uint64_t seed, double sigma) {
  auto ranked = rank_transform(raw, derive_seed(seed, {0x72616e6bULL}));
  if (has_ties(raw)) ranked = jitter(ranked, sigma, derive_seed(seed, {0x6a6974ULL}));
  return ranked;
}

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t d) {
  if (i > j) std::swap(i, j);
  if (i == j || j >= d) throw std::out_of_range("pair_index: invalid pair");
  // pairs before row i: sum_{r<i} (d-1-r)
  return i * (2 * d - i - 1) / 2 + (j - i - 1);
}

const PairStat& DependencyMatrix::at(std::size_t i, std::size_t j) const {
  return pairs.at(pair_index(i, j, variables.size()));
}

DependencyMatrix pairwise_matrix(std::span<const Dataset> replicates, Method method, const MethodParams& params,
                                 std::uint64_t seed, std::size_t threads) {
  if (replicates.empty()) throw std::invalid_argument("pairwise_matrix: no datasets");
  const auto& first = replicates.front();
  const std::size_t d = first.n_columns();
  if (d < 2) throw std::invalid_argument("pairwise_matrix: need at least two columns, got " + std::to_string(d));
  for (const auto& rep : replicates) {
    if (rep.transform() != Transform::kRank)
      throw std::invalid_argument("pairwise_matrix: datasets must be rank transformed");
    if (rep.n_points() != first.n_points() || rep.names() != first.names())
      throw std::invalid_argument("pairwise_matrix: replicates differ in size or columns");
  }

  DependencyMatrix m;
  m.variables = first.names();
  m.n_points = first.n_points();
  m.replicates = replicates.size();
  m.method = method;
  m.params = params;
  m.seed = seed;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      PairStat p;
      p.i = i;
      p.j = j;
      p.values.assign(replicates.size(), 0.0);
      m.pairs.push_back(std::move(p));
    }

  const std::size_t n_pairs = m.pairs.size();
  parallel_for(n_pairs * replicates.size(), threads, [&](std::size_t job) {
    const std::size_t rep = job / n_pairs, pi = job % n_pairs;
    auto& p = m.pairs[pi];
    const auto pair = project_pair(replicates[rep], p.i, p.j);
    p.values[rep] = h_star(pair, method, params, derive_seed(seed, {rep, pi})).h_star;
  });

  for (auto& p : m.pairs) {
    double s = 0.0;
    for (double v : p.values) s += v;
    p.mean = s / static_cast<double>(p.values.size());
    p.min = *std::min_element(p.values.begin(), p.values.end());
    p.max = *std::max_element(p.values.begin(), p.values.end());
  }
  return m;
}

std::vector<RankedInput> rank_inputs(const DependencyMatrix& matrix, std::size_t output_col) {
  const std::size_t d = matrix.variables.size();
  if (output_col >= d)
    throw std::out_of_range("rank_inputs: output column " + std::to_string(output_col) + " out of range");
  std::vector<RankedInput> out;
  for (std::size_t c = 0; c < d; ++c)
    if (c != output_col) out.push_back({c, matrix.variables[c], matrix.at(c, output_col).mean});
  std::stable_sort(out.begin(), out.end(), [](const RankedInput& a, const RankedInput& b) {
    return a.h_star < b.h_star;
  });
  return out;
}

SobolIndices ishigami_sobol(double a, double b) {
  constexpr double pi = std::numbers::pi;
  const double pi4 = std::pow(pi, 4), pi8 = std::pow(pi, 8);
  const double dx = b * pi4 / 5.0 + b * b * pi8 / 50.0 + 0.5;
  const double dy = a * a / 8.0;
  const double dxz = 8.0 * b * b * pi8 / 225.0;
  const double d = a * a / 8.0 + b * pi4 / 5.0 + b * b * pi8 / 18.0 + 0.5;
  SobolIndices s;
  s.first_order = {dx / d, dy / d, 0.0, 0.0};
  s.total = {(dx + dxz) / d, dy / d, dxz / d, 0.0};
  return s;
}

}  // namespace mstdep
