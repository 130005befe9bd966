#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mstdep/approx_mst.hpp"
#include "mstdep/clustering.hpp"
#include "mstdep/random.hpp"

namespace mstdep {

ApproxResult sampling_mst(const PointSet& points, std::size_t subsets, Strata strata, std::uint64_t seed,
                          const MethodParams& params) {
  const std::size_t n = points.size();
  if (subsets < 1) throw std::invalid_argument("sampling_mst: K must be positive");
  if (n / subsets < 2)
    throw std::invalid_argument("sampling_mst: subsets of N/K = " + std::to_string(n / subsets) +
                                " points are too small for a spanning tree");

  // Order in which points are dealt round-robin to the subsets.
  std::vector<std::uint32_t> deal;
  deal.reserve(n);
  Rng rng(derive_seed(seed, {0x73616d70ULL}));
  if (strata == Strata::kRandom) {
    deal.resize(n);
    std::iota(deal.begin(), deal.end(), std::uint32_t{0});
    rng.shuffle(std::span(deal));
  } else {
    const KMeansOptions opts{n / subsets, params.restarts, params.max_iters, derive_seed(seed, {0x737472ULL})};
    for (auto& members : kmeans(points, opts).members()) {
      rng.shuffle(std::span(members));
      deal.insert(deal.end(), members.begin(), members.end());
    }
  }

  std::vector<std::vector<std::size_t>> groups(subsets);
  for (std::size_t i = 0; i < n; ++i) groups[i % subsets].push_back(deal[i]);

  ApproxResult r;
  r.method = strata == Strata::kRandom ? Method::kSamplingRandom : Method::kSamplingStratified;
  r.n_points = n;
  r.n_effective = n / subsets;
  r.subsets = subsets;
  r.clusters = strata == Strata::kKMeans ? n / subsets : 0;
  r.seed = seed;
  r.gamma = params.gamma;
  const double alpha = params.gamma.alpha();
  for (auto& g : groups) {
    std::sort(g.begin(), g.end());
    const auto tree = mst_prim(points.subset(g), params.gamma);
    const double len = tree.gamma_length();
    r.subset_lengths.push_back(len);
    r.per_subset.push_back(std::log(len / std::pow(static_cast<double>(g.size()), alpha)));
  }
  const auto k = static_cast<double>(subsets);
  r.length = std::accumulate(r.subset_lengths.begin(), r.subset_lengths.end(), 0.0) / k;
  r.subset_mean = std::accumulate(r.per_subset.begin(), r.per_subset.end(), 0.0) / k;
  if (subsets > 1) {
    double ss = 0.0;
    for (double h : r.per_subset) ss += (h - r.subset_mean) * (h - r.subset_mean);
    r.subset_variance = ss / (k - 1.0);
  }
  return r;
}

}  // namespace mstdep
