// Nearest-center queries. The grid path returns exactly what the brute-force
// kernel returns: same squared-distance arithmetic, lowest index among equal
// distances, and pruning only when every unvisited center is provably farther.

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mstdep/clustering.hpp"
#include "mstdep/simd.hpp"

namespace mstdep {
namespace {

void check_sizes(const PointSet& points, const PointSet& centers, std::span<std::uint32_t> index,
                 std::span<double> d2) {
  if (centers.empty()) throw std::invalid_argument("nearest_centers: no centers");
  if (index.size() != points.size() || d2.size() != points.size())
    throw std::invalid_argument("nearest_centers: output size mismatch");
}

class CenterGrid {
 public:
  explicit CenterGrid(const PointSet& centers) : centers_(centers) {
    const auto xs = centers.xs(), ys = centers.ys();
    const auto [xlo, xhi] = std::minmax_element(xs.begin(), xs.end());
    const auto [ylo, yhi] = std::minmax_element(ys.begin(), ys.end());
    x0_ = *xlo;
    y0_ = *ylo;
    const double ex = *xhi - *xlo, ey = *yhi - *ylo;
    side_ = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::sqrt(centers.size() / 2.0))));
    wx_ = ex > 0.0 ? ex / static_cast<double>(side_) : 1.0;
    wy_ = ey > 0.0 ? ey / static_cast<double>(side_) : 1.0;
    slack_ = 1e-9 * (std::max(ex, ey) + 1.0);

    start_.assign(side_ * side_ + 1, 0);
    std::vector<std::size_t> cell_of(centers.size());
    for (std::size_t c = 0; c < centers.size(); ++c) {
      cell_of[c] = cell_index(cell_coord(xs[c], x0_, wx_), cell_coord(ys[c], y0_, wy_));
      ++start_[cell_of[c] + 1];
    }
    for (std::size_t i = 1; i < start_.size(); ++i) start_[i] += start_[i - 1];
    items_.resize(centers.size());
    auto fill = start_;
    for (std::size_t c = 0; c < centers.size(); ++c) items_[fill[cell_of[c]]++] = static_cast<std::uint32_t>(c);
  }

  void query(double px, double py, std::uint32_t& best_index, double& best_d2) const {
    const auto cx = static_cast<std::ptrdiff_t>(cell_coord(px, x0_, wx_));
    const auto cy = static_cast<std::ptrdiff_t>(cell_coord(py, y0_, wy_));
    const auto side = static_cast<std::ptrdiff_t>(side_);
    best_d2 = std::numeric_limits<double>::infinity();
    best_index = std::numeric_limits<std::uint32_t>::max();
    const auto xs = centers_.xs(), ys = centers_.ys();

    auto visit = [&](std::ptrdiff_t gx, std::ptrdiff_t gy) {
      if (gx < 0 || gy < 0 || gx >= side || gy >= side) return;
      const std::size_t cell = cell_index(static_cast<std::size_t>(gx), static_cast<std::size_t>(gy));
      for (std::size_t p = start_[cell]; p < start_[cell + 1]; ++p) {
        const std::uint32_t c = items_[p];
        const double dx = px - xs[c];
        const double dy = py - ys[c];
        const double d2 = dx * dx + dy * dy;
        if (d2 < best_d2 || (d2 == best_d2 && c < best_index)) {
          best_d2 = d2;
          best_index = c;
        }
      }
    };

    for (std::ptrdiff_t r = 0;; ++r) {
      if (r == 0) {
        visit(cx, cy);
      } else {
        for (std::ptrdiff_t gx = cx - r; gx <= cx + r; ++gx) {
          visit(gx, cy - r);
          visit(gx, cy + r);
        }
        for (std::ptrdiff_t gy = cy - r + 1; gy <= cy + r - 1; ++gy) {
          visit(cx - r, gy);
          visit(cx + r, gy);
        }
      }
      // Distance from the query to the nearest cell outside the visited block.
      double bound = std::numeric_limits<double>::infinity();
      if (cx - r > 0) bound = std::min(bound, px - (x0_ + static_cast<double>(cx - r) * wx_));
      if (cx + r + 1 < side) bound = std::min(bound, x0_ + static_cast<double>(cx + r + 1) * wx_ - px);
      if (cy - r > 0) bound = std::min(bound, py - (y0_ + static_cast<double>(cy - r) * wy_));
      if (cy + r + 1 < side) bound = std::min(bound, y0_ + static_cast<double>(cy + r + 1) * wy_ - py);
      if (bound == std::numeric_limits<double>::infinity()) return;
      bound -= slack_;
      if (bound > 0.0 && best_d2 < bound * bound) return;
    }
  }

 private:
  std::size_t cell_coord(double v, double origin, double width) const {
    const double t = std::floor((v - origin) / width);
    if (!(t > 0.0)) return 0;
    return std::min(static_cast<std::size_t>(t), side_ - 1);
  }
  std::size_t cell_index(std::size_t gx, std::size_t gy) const { return gy * side_ + gx; }

  const PointSet& centers_;
  double x0_ = 0.0, y0_ = 0.0, wx_ = 1.0, wy_ = 1.0, slack_ = 0.0;
  std::size_t side_ = 1;
  std::vector<std::size_t> start_;
  std::vector<std::uint32_t> items_;
};

}  // namespace

void nearest_centers_bruteforce(const PointSet& points, const PointSet& centers, std::span<std::uint32_t> index,
                                std::span<double> d2) {
  check_sizes(points, centers, index, d2);
  simd::kernels().nearest_center(points.xs().data(), points.ys().data(), points.size(), centers.xs().data(),
                                 centers.ys().data(), centers.size(), index.data(), d2.data());
}

void nearest_centers_grid(const PointSet& points, const PointSet& centers, std::span<std::uint32_t> index,
                          std::span<double> d2) {
  check_sizes(points, centers, index, d2);
  const CenterGrid grid(centers);
  const auto xs = points.xs(), ys = points.ys();
  for (std::size_t i = 0; i < points.size(); ++i) grid.query(xs[i], ys[i], index[i], d2[i]);
}

void nearest_centers(const PointSet& points, const PointSet& centers, std::span<std::uint32_t> index,
                     std::span<double> d2) {
  if (centers.size() >= kGridMinCenters)
    nearest_centers_grid(points, centers, index, d2);
  else
    nearest_centers_bruteforce(points, centers, index, d2);
}

}  // namespace mstdep
