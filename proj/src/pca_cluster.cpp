#include <cmath>
#include <stdexcept>
#include <string>

#include "mstdep/clustering.hpp"

namespace mstdep {
namespace {

struct Cell {
  std::vector<std::uint32_t> members;
  double mx = 0.0, my = 0.0;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;  // scatter about the centroid

  double sse() const { return sxx + syy; }
};

Cell make_cell(const PointSet& points, std::vector<std::uint32_t> members) {
  Cell cell;
  cell.members = std::move(members);
  const auto xs = points.xs(), ys = points.ys();
  for (auto i : cell.members) {
    cell.mx += xs[i];
    cell.my += ys[i];
  }
  const auto n = static_cast<double>(cell.members.size());
  cell.mx /= n;
  cell.my /= n;
  for (auto i : cell.members) {
    const double dx = xs[i] - cell.mx, dy = ys[i] - cell.my;
    cell.sxx += dx * dx;
    cell.sxy += dx * dy;
    cell.syy += dy * dy;
  }
  return cell;
}

// Unit-free direction of the largest eigenvalue of [[sxx, sxy], [sxy, syy]].
Point2 principal_axis(const Cell& c) {
  const double half_diff = 0.5 * (c.sxx - c.syy);
  const double lambda = 0.5 * (c.sxx + c.syy) + std::hypot(half_diff, c.sxy);
  if (c.sxy != 0.0) return {lambda - c.syy, c.sxy};
  return c.sxx >= c.syy ? Point2{1.0, 0.0} : Point2{0.0, 1.0};
}

}  // namespace

Clustering pca_cluster(const PointSet& points, std::size_t k) {
  const std::size_t n = points.size();
  if (k < 1 || k > n)
    throw std::invalid_argument("pca_cluster: k must lie in [1, N], got k = " + std::to_string(k) +
                                " with N = " + std::to_string(n));
  std::vector<std::uint32_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<std::uint32_t>(i);
  std::vector<Cell> cells;
  cells.reserve(k);
  cells.push_back(make_cell(points, std::move(all)));

  const auto xs = points.xs(), ys = points.ys();
  while (cells.size() < k) {
    std::size_t pick = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].members.size() < 2) continue;
      if (pick == cells.size() || cells[c].sse() > cells[pick].sse()) pick = c;
    }
    Cell& cell = cells[pick];
    const Point2 axis = principal_axis(cell);
    std::vector<std::uint32_t> lower, upper;
    for (auto i : cell.members) {
      const double t = (xs[i] - cell.mx) * axis.x + (ys[i] - cell.my) * axis.y;
      (t < 0.0 ? lower : upper).push_back(i);
    }
    if (lower.empty() || upper.empty()) {
      // Coincident points: no direction separates them.
      const auto& m = cell.members;
      const auto half = static_cast<std::ptrdiff_t>(m.size() / 2);
      lower.assign(m.begin(), m.begin() + half);
      upper.assign(m.begin() + half, m.end());
    }
    cells[pick] = make_cell(points, std::move(lower));
    cells.push_back(make_cell(points, std::move(upper)));
  }

  Clustering out;
  out.k = k;
  out.assignments.assign(n, 0);
  std::vector<double> cx(k), cy(k);
  out.weights.resize(k);
  for (std::size_t c = 0; c < k; ++c) {
    for (auto i : cells[c].members) out.assignments[i] = static_cast<std::uint32_t>(c);
    cx[c] = cells[c].mx;
    cy[c] = cells[c].my;
    out.weights[c] = static_cast<double>(cells[c].members.size()) / static_cast<double>(n);
    out.wcss += cells[c].sse();
  }
  out.centers = PointSet(std::move(cx), std::move(cy));
  return out;
}

}  // namespace mstdep
