#pragma once

// Cheaper substitutes for the exact MST length on large point sets.
//
//  * sampling: split the points into K subsets, one exact MST per subset, and
//    average the per-subset dependency values log(L_s / n_s^alpha);
//  * cluster: one MST over k cluster centers, optionally with edge lengths
//    scaled by the harmonic weight W_ij = 2k / (1/w_i + 1/w_j);
//  * fmst: two-stage K-means based spanning tree (divide and conquer, then a
//    refinement pass seeded at the midpoints of the inter-cluster edges), whose
//    merged edge set is reduced to its MST.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mstdep/mst.hpp"
#include "mstdep/points.hpp"

namespace mstdep {

enum class Method {
  kExact,
  kSamplingRandom,
  kSamplingStratified,
  kClusterKMeans,
  kClusterKMeansWeighted,
  kClusterPca,
  kClusterPcaWeighted,
  kFmst,
};

const char* to_string(Method m) noexcept;
std::optional<Method> parse_method(std::string_view tag) noexcept;

/// The seven approximations, in the order used by comparison tables.
inline constexpr Method kApproximateMethods[] = {
    Method::kFmst,          Method::kSamplingRandom,        Method::kSamplingStratified, Method::kClusterKMeans,
    Method::kClusterKMeansWeighted, Method::kClusterPca,    Method::kClusterPcaWeighted,
};

inline constexpr std::size_t kDefaultSubsets = 10;

struct MethodParams {
  std::size_t subsets = kDefaultSubsets;  // K; cluster methods use k = N / K centers
  std::size_t restarts = 10;              // K-means restarts
  std::size_t max_iters = 100;            // Lloyd iterations per run
  GammaParam gamma;

  friend bool operator==(const MethodParams&, const MethodParams&) = default;
};

enum class Strata { kRandom, kKMeans };
enum class ClusterAlgorithm { kKMeans, kPca };

struct ApproxResult {
  Method method = Method::kExact;
  double length = 0.0;            // L_gamma of the tree; mean over subsets for sampling
  std::size_t n_points = 0;       // size of the input point set
  std::size_t n_effective = 0;    // points per tree: N, subset size, or cluster count
  std::vector<double> per_subset;          // h_s = log(L_s / n_s^alpha), sampling only
  std::vector<double> subset_lengths;      // L_s, sampling only
  double subset_mean = 0.0;       // mean of per_subset
  double subset_variance = 0.0;   // sample variance of per_subset (0 for K = 1)
  std::size_t subsets = 0;        // K
  std::size_t clusters = 0;       // k
  std::uint64_t seed = 0;
  GammaParam gamma;
};

/// Dependency value log(L / n^alpha) implied by an approximation. Sampling
/// methods return the mean of the per-subset values.
double approx_h_star(const ApproxResult& result);

ApproxResult sampling_mst(const PointSet& points, std::size_t subsets, Strata strata, std::uint64_t seed,
                          const MethodParams& params = {});

ApproxResult cluster_mst(const PointSet& points, std::size_t k, ClusterAlgorithm algorithm, bool weighted,
                         std::uint64_t seed, const MethodParams& params = {});

/// Harmonic edge factor for clusters holding fractions wi and wj of the data.
double harmonic_weight(double wi, double wj, std::size_t k);

/// The approximate spanning tree itself (N - 1 edges over the input points).
SpanningTree fmst_tree(const PointSet& points, std::uint64_t seed, const MethodParams& params = {});

ApproxResult fmst(const PointSet& points, std::uint64_t seed, const MethodParams& params = {});

/// Dispatch on `method`; kExact yields the exact tree's length.
ApproxResult approximate(const PointSet& points, Method method, std::uint64_t seed, const MethodParams& params = {});

/// |h*(approx) - h*(exact)| with h* = log(L / N^alpha) for the exact tree.
double approx_error(const ApproxResult& approx, const SpanningTree& exact, std::size_t n_points, double alpha);

}  // namespace mstdep
