#include "mstdep/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mstdep/dataset.hpp"
#include "mstdep/parallel.hpp"
#include "mstdep/random.hpp"

namespace mstdep {

DependencyEstimate h_star_points(const PointSet& points, Method method, const MethodParams& params,
                                 std::uint64_t seed) {
  if (points.size() < 2) throw std::invalid_argument("h_star: need at least two points");
  const auto approx = approximate(points, method, seed, params);
  DependencyEstimate est;
  est.h_star = approx_h_star(approx);
  est.n_points = points.size();
  est.alpha = params.gamma.alpha();
  est.gamma = params.gamma.gamma();
  est.method = method;
  est.length = approx.length;
  est.n_effective = approx.n_effective;
  est.subset_variance = approx.subset_variance;
  return est;
}

DependencyEstimate h_star(const PointPair& pair, Method method, const MethodParams& params, std::uint64_t seed) {
  if (!pair.rank_transformed)
    throw std::invalid_argument("h_star: the point pair must be rank transformed first");
  return h_star_points(pair.points, method, params, seed);
}

double h_hat(const DependencyEstimate& estimate, double beta) {
  if (!(beta > 0.0)) throw std::invalid_argument("h_hat: beta must be positive");
  return (estimate.h_star - std::log(beta)) / (1.0 - estimate.alpha);
}

double ReferenceLevel::quantile(double eta) const {
  if (samples.empty()) throw std::logic_error("ReferenceLevel::quantile: no samples");
  if (!(eta > 0.0 && eta < 1.0)) throw std::invalid_argument("quantile level must lie in (0, 1)");
  const auto rank = static_cast<std::size_t>(std::ceil(eta * static_cast<double>(samples.size())));
  return samples[std::clamp<std::size_t>(rank, 1, samples.size()) - 1];
}

ReferenceLevel build_reference(std::size_t n_points, std::size_t repetitions, Method method, std::uint64_t seed,
                               const MethodParams& params, std::size_t threads) {
  if (repetitions < kMinReferenceRepetitions)
    throw std::invalid_argument("build_reference: need at least " + std::to_string(kMinReferenceRepetitions) +
                                " repetitions, got " + std::to_string(repetitions));
  if (n_points < 2) throw std::invalid_argument("build_reference: need at least two points");

  ReferenceLevel ref;
  ref.n_points = n_points;
  ref.method = method;
  ref.params = params;
  ref.repetitions = repetitions;
  ref.seed = seed;
  ref.samples.resize(repetitions);
  parallel_for(repetitions, threads, [&](std::size_t rep) {
    Rng rng(derive_seed(seed, {0x726566ULL, rep}));
    std::vector<double> a(n_points), b(n_points);
    for (auto& v : a) v = rng.uniform();
    for (auto& v : b) v = rng.uniform();
    const Dataset raw({{"a", std::move(a)}, {"b", std::move(b)}});
    const auto ranked = rank_transform(raw, rng());
    ref.samples[rep] = h_star(project_pair(ranked, 0, 1), method, params, rng()).h_star;
  });
  std::sort(ref.samples.begin(), ref.samples.end());
  return ref;
}

IndependenceVerdict independence_test(const DependencyEstimate& estimate, const ReferenceLevel& reference,
                                      double eta) {
  if (!(eta > 0.0 && eta < 0.5)) throw std::invalid_argument("independence_test: eta must lie in (0, 0.5)");
  if (estimate.n_points != reference.n_points)
    throw std::invalid_argument("independence_test: estimate has N = " + std::to_string(estimate.n_points) +
                                " but the reference was built for N = " + std::to_string(reference.n_points));
  if (estimate.method != reference.method)
    throw std::invalid_argument(std::string("independence_test: estimate uses ") + to_string(estimate.method) +
                                " but the reference was built with " + to_string(reference.method));
  IndependenceVerdict v;
  v.threshold = reference.quantile(eta);
  v.reject = estimate.h_star <= v.threshold;
  return v;
}

}  // namespace mstdep
