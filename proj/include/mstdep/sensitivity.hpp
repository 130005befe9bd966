#pragma once

// Pairwise dependency matrices over the columns of a dataset, input ranking
// against an output column, and reports with independence verdicts.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mstdep/approx_mst.hpp"
#include "mstdep/dataset.hpp"
#include "mstdep/entropy.hpp"

namespace mstdep {

/// Rank transform a raw dataset; if any column has ties the ranks are then
/// jittered with sigma = 1e-6 (order preserving).
Dataset prepare_ranks(const Dataset& raw, std::uint64_t seed, double sigma = kDefaultJitterSigma);

struct PairStat {
  std::size_t i = 0, j = 0;  // i < j
  double mean = 0.0, min = 0.0, max = 0.0;
  std::vector<double> values;  // one per replicate
};

struct DependencyMatrix {
  std::vector<std::string> variables;
  std::vector<PairStat> pairs;  // (0,1), (0,2), ..., (1,2), ...
  std::size_t n_points = 0;
  std::size_t replicates = 0;
  Method method = Method::kExact;
  MethodParams params;
  std::uint64_t seed = 0;

  /// Pair (i, j) in either orientation; throws std::out_of_range.
  const PairStat& at(std::size_t i, std::size_t j) const;
};

/// Position of pair (i, j), i < j, in lexicographic order over d variables.
std::size_t pair_index(std::size_t i, std::size_t j, std::size_t d);

/// h* for every unordered column pair of every replicate. Replicates must be
/// rank transformed and share N and column names. The seed of cell
/// (replicate, pair) is derived from (seed, replicate, pair index), so the
/// result does not depend on `threads`.
DependencyMatrix pairwise_matrix(std::span<const Dataset> replicates, Method method, const MethodParams& params,
                                 std::uint64_t seed, std::size_t threads = 1);

struct RankedInput {
  std::size_t column = 0;
  std::string name;
  double h_star = 0.0;
};

/// Inputs ordered from strongest to weakest dependence on `output_col`
/// (ascending mean h*, ties by column index).
std::vector<RankedInput> rank_inputs(const DependencyMatrix& matrix, std::size_t output_col);

/// Variance-based indices of the classic Ishigami model with inputs x, y, z
/// and an inert u, all uniform.
struct SobolIndices {
  std::array<double, 4> first_order{};  // x, y, z, u
  std::array<double, 4> total{};
};

SobolIndices ishigami_sobol(double a, double b);

struct PairVerdict {
  std::size_t index = 0;  // 1-based, lexicographic
  std::size_t i = 0, j = 0;
  double mean = 0.0, min = 0.0, max = 0.0;
  std::optional<bool> dependent;
  std::optional<double> threshold;
};

struct Report {
  std::vector<std::string> variables;
  std::vector<PairVerdict> pairs;
  std::vector<RankedInput> ranking;
  std::optional<std::size_t> output_col;
  std::size_t n_points = 0;
  std::size_t replicates = 0;
  Method method = Method::kExact;
  MethodParams params;
  std::uint64_t seed = 0;
  std::optional<double> eta;
  std::optional<std::size_t> reference_r;
  std::string caveat;
};

inline constexpr const char* kInteractionCaveat =
    "pairwise dependencies do not reveal interaction effects between inputs";

/// Throws std::invalid_argument if the reference was built for another N or
/// method.
Report make_report(const DependencyMatrix& matrix, std::optional<std::size_t> output_col,
                   const ReferenceLevel* reference, double eta = kDefaultEta);

std::string report_to_json(const Report& report);
Report report_from_json(const std::string& text);
std::string report_to_table(const Report& report);

}  // namespace mstdep
