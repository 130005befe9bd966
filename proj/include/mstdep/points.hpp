#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace mstdep {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point2&, const Point2&) = default;
};

inline double squared_distance(double ax, double ay, double bx, double by) noexcept {
  const double dx = ax - bx;
  const double dy = ay - by;
  return dx * dx + dy * dy;
}

/// Planar point set stored structure-of-arrays for the vector kernels.
class PointSet {
 public:
  PointSet() = default;
  PointSet(std::vector<double> xs, std::vector<double> ys) : x_(std::move(xs)), y_(std::move(ys)) {
    if (x_.size() != y_.size()) throw std::invalid_argument("PointSet: coordinate length mismatch");
  }

  static PointSet from_points(std::span<const Point2> pts) {
    PointSet s;
    s.reserve(pts.size());
    for (const auto& p : pts) s.push_back(p);
    return s;
  }

  std::size_t size() const noexcept { return x_.size(); }
  bool empty() const noexcept { return x_.empty(); }

  void reserve(std::size_t n) {
    x_.reserve(n);
    y_.reserve(n);
  }
  void push_back(Point2 p) {
    x_.push_back(p.x);
    y_.push_back(p.y);
  }

  Point2 operator[](std::size_t i) const noexcept { return {x_[i], y_[i]}; }

  std::span<const double> xs() const noexcept { return x_; }
  std::span<const double> ys() const noexcept { return y_; }

  /// Euclidean distance; symmetric bit-for-bit in (i, j).
  double distance(std::size_t i, std::size_t j) const noexcept {
    return std::sqrt(squared_distance(x_[i], y_[i], x_[j], y_[j]));
  }

  PointSet subset(std::span<const std::size_t> indices) const {
    PointSet s;
    s.reserve(indices.size());
    for (auto i : indices) s.push_back((*this)[i]);
    return s;
  }

 private:
  std::vector<double> x_;
  std::vector<double> y_;
};

/// Two columns of a dataset viewed as N planar points (d = 2).
struct PointPair {
  std::size_t col_a = 0;
  std::size_t col_b = 1;
  PointSet points;
  bool rank_transformed = false;
};

}  // namespace mstdep
