#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mstdep/entropy.hpp"

namespace mstdep {
namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("Renyi order alpha must lie in (0, 1)");
}

}  // namespace

double renyi_uniform(double alpha) {
  check_alpha(alpha);
  return 0.0;
}

double renyi_normal(double rho, double alpha) {
  check_alpha(alpha);
  if (!(std::abs(rho) < 1.0)) throw std::invalid_argument("correlation must satisfy |rho| < 1");
  return std::log(2.0 * std::numbers::pi) + 0.5 * std::log1p(-rho * rho) - std::log(alpha) / (1.0 - alpha);
}

double renyi_shape(double excluded_area, double alpha) {
  check_alpha(alpha);
  if (!(excluded_area >= 0.0 && excluded_area < 1.0)) throw std::invalid_argument("area A must lie in [0, 1)");
  return std::log1p(-excluded_area);
}

double renyi_analytic(const AnalyticDistribution& dist, double alpha) {
  switch (dist.kind) {
    case AnalyticDistribution::Kind::kUniform: return renyi_uniform(alpha);
    case AnalyticDistribution::Kind::kNormal: return renyi_normal(dist.parameter, alpha);
    case AnalyticDistribution::Kind::kShape: return renyi_shape(dist.parameter, alpha);
  }
  throw std::invalid_argument("unknown distribution");
}

std::vector<std::vector<double>> alpha_sweep_normal(std::span<const double> rho_grid,
                                                    std::span<const double> alpha_grid) {
  std::vector<std::vector<double>> table;
  table.reserve(rho_grid.size());
  for (double rho : rho_grid) {
    auto& row = table.emplace_back();
    row.reserve(alpha_grid.size());
    for (double alpha : alpha_grid) row.push_back(renyi_normal(rho, alpha));
  }
  return table;
}

}  // namespace mstdep
