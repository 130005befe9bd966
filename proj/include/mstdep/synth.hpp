#pragma once

// Synthetic datasets: uniform and correlated normal pairs, uniform densities on
// shaped subregions of the unit square, and Ishigami test models.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "mstdep/dataset.hpp"

namespace mstdep {

/// d i.i.d. U[0,1) columns named x0..x(d-1).
Dataset gen_uniform(std::size_t n_points, std::size_t dims, std::uint64_t seed);

/// Bivariate standard normal with correlation rho, columns x and y.
Dataset gen_normal(std::size_t n_points, double rho, std::uint64_t seed);

enum class ShapeKind { kCorner, kLine };

/// Uniform density on a region of area 1 - A inside the unit square.
///  corner: the square minus the upper-right square of side sqrt(A), i.e.
///          x <= 1 - sqrt(A) or y <= 1 - sqrt(A);
///  line:   the band |x - y| <= 1 - sqrt(A) around the diagonal (two corner
///          triangles of area A/2 each removed).
/// Both keep the full range [0,1] of each coordinate reachable.
struct ShapeParam {
  double area = 0.0;  // A in [0, 1)
  ShapeKind kind = ShapeKind::kCorner;
};

bool in_shape(const ShapeParam& shape, double x, double y) noexcept;

struct ShapeSample {
  Dataset data;
  double hit_rate;  // accepted / proposed, estimates 1 - A
};

ShapeSample gen_shape_sampled(std::size_t n_points, const ShapeParam& shape, std::uint64_t seed);
Dataset gen_shape(std::size_t n_points, const ShapeParam& shape, std::uint64_t seed);

struct IshigamiParam {
  double a = 7.0;
  double b = 0.1;
};

/// Forms of the Ishigami model on inputs in [0,1], with X = -pi + 2 pi x and
/// likewise Y, Z.
///  kUnitZ:      (1 + b z^4) sin X + a sin^2 Y   (z unscaled in the quartic)
///  kClassic:    (1 + b Z^4) sin X + a sin^2 Y
///  kScaledSine: (a + b Z^4) sin X + a sin^2 Y
/// kUnitZ is the generator default: it is the form whose MST dependency values
/// match the published uniform-input benchmark.
enum class IshigamiVariant { kUnitZ, kClassic, kScaledSine };

const char* to_string(IshigamiVariant v) noexcept;
std::optional<IshigamiVariant> parse_ishigami_variant(std::string_view tag) noexcept;

double ishigami(double x, double y, double z, const IshigamiParam& param = {},
                IshigamiVariant variant = IshigamiVariant::kUnitZ);

/// Columns x, y, z, u ~ U[0,1) and I = ishigami(x, y, z); u is inert.
Dataset gen_ishigami_uniform(std::size_t n_points, std::uint64_t seed, const IshigamiParam& param = {},
                             IshigamiVariant variant = IshigamiVariant::kUnitZ);

/// Dependent inputs x ~ U(-2,2), y = x^2 + e1, z = x^3 + e2, u = x^4 + e3 with
/// e ~ N(0, 1/4), range normalized to [0,1], plus I on the normalized (x,y,z).
/// u depends on x but does not enter I.
Dataset gen_dependent(std::size_t n_points, std::uint64_t seed, const IshigamiParam& param = {},
                      IshigamiVariant variant = IshigamiVariant::kUnitZ);

/// The raw (unnormalized) inputs of gen_dependent for the same seed, without I.
Dataset gen_dependent_raw(std::size_t n_points, std::uint64_t seed);

}  // namespace mstdep
