#pragma once

// The MST dependency quantifier h* = log(L_gamma / N^alpha) on rank-transformed
// pairs, its affine link to the Renyi entropy estimate, the independence
// reference level, and closed-form Renyi entropies used as validation oracles.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mstdep/approx_mst.hpp"
#include "mstdep/points.hpp"

namespace mstdep {

struct DependencyEstimate {
  double h_star = 0.0;
  std::size_t n_points = 0;
  double alpha = 0.5;
  double gamma = 1.0;
  Method method = Method::kExact;
  double length = 0.0;          // L_gamma (mean subset length for sampling methods)
  std::size_t n_effective = 0;  // points in each tree
  double subset_variance = 0.0;
};

/// h* of a rank-transformed pair with the chosen MST method. Lower values mean
/// stronger dependence. Throws std::invalid_argument if the pair is not rank
/// transformed.
DependencyEstimate h_star(const PointPair& pair, Method method = Method::kExact, const MethodParams& params = {},
                          std::uint64_t seed = 0);

/// Same, on bare points that the caller guarantees to be rank transformed.
DependencyEstimate h_star_points(const PointSet& points, Method method, const MethodParams& params, std::uint64_t seed);

/// Renyi entropy estimate (h* - log beta) / (1 - alpha) for a caller-supplied
/// constant beta > 0.
double h_hat(const DependencyEstimate& estimate, double beta);

/// Empirical distribution of h* for independent data of size N.
struct ReferenceLevel {
  std::vector<double> samples;  // ascending
  std::size_t n_points = 0;
  Method method = Method::kExact;
  MethodParams params;
  std::size_t repetitions = 0;
  std::uint64_t seed = 0;

  /// Lower empirical quantile: the ceil(eta * r)-th smallest sample.
  double quantile(double eta) const;
};

inline constexpr std::size_t kMinReferenceRepetitions = 20;
inline constexpr double kDefaultEta = 0.05;

/// r datasets of two independent uniform columns, each rank transformed and
/// scored with h*. Repetitions run on `threads` workers; the result does not
/// depend on the thread count.
ReferenceLevel build_reference(std::size_t n_points, std::size_t repetitions, Method method, std::uint64_t seed,
                               const MethodParams& params = {}, std::size_t threads = 1);

struct IndependenceVerdict {
  bool reject = false;  // true: dependence detected
  double threshold = 0.0;
};

/// Reject independence iff h* <= the eta-quantile of the reference.
IndependenceVerdict independence_test(const DependencyEstimate& estimate, const ReferenceLevel& reference,
                                      double eta = kDefaultEta);

// Reference files ----------------------------------------------------------

void save_reference(const ReferenceLevel& reference, const std::filesystem::path& path);
ReferenceLevel load_reference(const std::filesystem::path& path);
std::string reference_to_json(const ReferenceLevel& reference);
ReferenceLevel reference_from_json(const std::string& text);

/// On-disk cache of reference levels keyed by (N, method, params, r, seed).
class ReferenceCache {
 public:
  explicit ReferenceCache(std::filesystem::path directory);

  /// MSTDEP_CACHE_DIR, else $XDG_CACHE_HOME/mstdep, else $HOME/.cache/mstdep.
  static std::filesystem::path default_directory();

  std::filesystem::path path_for(std::size_t n_points, std::size_t repetitions, Method method,
                                 std::uint64_t seed, const MethodParams& params) const;

  ReferenceLevel get_or_build(std::size_t n_points, std::size_t repetitions, Method method, std::uint64_t seed,
                              const MethodParams& params = {}, std::size_t threads = 1);

  const std::filesystem::path& directory() const noexcept { return directory_; }

 private:
  std::filesystem::path directory_;
};

// Closed-form Renyi entropies (natural log) --------------------------------

/// Uniform density on the unit square: 0 for every alpha.
double renyi_uniform(double alpha);

/// Bivariate standard normal with correlation rho:
/// log(2 pi) + log(1 - rho^2)/2 - log(alpha)/(1 - alpha).
double renyi_normal(double rho, double alpha);

/// Constant density on a region of area 1 - A: log(1 - A), for every alpha.
double renyi_shape(double excluded_area, double alpha);

struct AnalyticDistribution {
  enum class Kind { kUniform, kNormal, kShape } kind = Kind::kUniform;
  double parameter = 0.0;  // rho for kNormal, A for kShape
};

double renyi_analytic(const AnalyticDistribution& dist, double alpha);

/// Table of renyi_normal(rho, alpha): result[i][j] for rho_grid[i], alpha_grid[j].
std::vector<std::vector<double>> alpha_sweep_normal(std::span<const double> rho_grid,
                                                    std::span<const double> alpha_grid);

}  // namespace mstdep
