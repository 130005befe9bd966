#include "mstdep/synth.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "mstdep/random.hpp"

namespace mstdep {
namespace {

void check_n(std::size_t n) {
  if (n < 2) throw std::invalid_argument("generators need N >= 2, got " + std::to_string(n));
}

constexpr std::uint64_t kStreamDependent = 0x646570ULL;

}  // namespace

Dataset gen_uniform(std::size_t n_points, std::size_t dims, std::uint64_t seed) {
  check_n(n_points);
  if (dims < 1) throw std::invalid_argument("gen_uniform: need at least one column");
  std::vector<Column> cols;
  for (std::size_t c = 0; c < dims; ++c) {
    Rng rng(derive_seed(seed, {0x756e69ULL, c}));
    Column col{"x" + std::to_string(c), std::vector<double>(n_points)};
    for (auto& v : col.values) v = rng.uniform();
    cols.push_back(std::move(col));
  }
  return Dataset(std::move(cols));
}

Dataset gen_normal(std::size_t n_points, double rho, std::uint64_t seed) {
  check_n(n_points);
  if (!(std::abs(rho) < 1.0)) throw std::invalid_argument("gen_normal: correlation must satisfy |rho| < 1");
  Rng rng(derive_seed(seed, {0x6e6f726dULL}));
  const double c = std::sqrt(1.0 - rho * rho);  // Cholesky factor [[1,0],[rho,c]]
  std::vector<double> xs(n_points), ys(n_points);
  for (std::size_t i = 0; i < n_points; ++i) {
    const double z1 = rng.normal(), z2 = rng.normal();
    xs[i] = z1;
    ys[i] = rho * z1 + c * z2;
  }
  return Dataset({{"x", std::move(xs)}, {"y", std::move(ys)}});
}

bool in_shape(const ShapeParam& shape, double x, double y) noexcept {
  if (x < 0.0 || x > 1.0 || y < 0.0 || y > 1.0) return false;
  const double t = 1.0 - std::sqrt(shape.area);
  switch (shape.kind) {
    case ShapeKind::kCorner: return x <= t || y <= t;
    case ShapeKind::kLine: return std::abs(x - y) <= t;
  }
  return false;
}

ShapeSample gen_shape_sampled(std::size_t n_points, const ShapeParam& shape, std::uint64_t seed) {
  check_n(n_points);
  if (!(shape.area >= 0.0 && shape.area < 1.0)) throw std::invalid_argument("gen_shape: area A must lie in [0, 1)");
  Rng rng(derive_seed(seed, {0x7368617065ULL}));
  std::vector<double> xs, ys;
  xs.reserve(n_points);
  ys.reserve(n_points);
  std::size_t proposed = 0;
  while (xs.size() < n_points) {
    const double x = rng.uniform(), y = rng.uniform();
    ++proposed;
    if (!in_shape(shape, x, y)) continue;
    xs.push_back(x);
    ys.push_back(y);
  }
  const double rate = static_cast<double>(n_points) / static_cast<double>(proposed);
  return {Dataset({{"x", std::move(xs)}, {"y", std::move(ys)}}), rate};
}

Dataset gen_shape(std::size_t n_points, const ShapeParam& shape, std::uint64_t seed) {
  return gen_shape_sampled(n_points, shape, seed).data;
}

const char* to_string(IshigamiVariant v) noexcept {
  switch (v) {
    case IshigamiVariant::kUnitZ: return "unit-z";
    case IshigamiVariant::kClassic: return "classic";
    case IshigamiVariant::kScaledSine: return "scaled-sine";
  }
  return "unknown";
}

std::optional<IshigamiVariant> parse_ishigami_variant(std::string_view tag) noexcept {
  for (auto v : {IshigamiVariant::kUnitZ, IshigamiVariant::kClassic, IshigamiVariant::kScaledSine})
    if (tag == to_string(v)) return v;
  return std::nullopt;
}

double ishigami(double x, double y, double z, const IshigamiParam& p, IshigamiVariant variant) {
  constexpr double pi = std::numbers::pi;
  const double X = -pi + 2.0 * pi * x, Y = -pi + 2.0 * pi * y, Z = -pi + 2.0 * pi * z;
  const double sy = std::sin(Y);
  switch (variant) {
    case IshigamiVariant::kUnitZ: return (1.0 + p.b * std::pow(z, 4)) * std::sin(X) + p.a * sy * sy;
    case IshigamiVariant::kClassic: return (1.0 + p.b * std::pow(Z, 4)) * std::sin(X) + p.a * sy * sy;
    case IshigamiVariant::kScaledSine: return (p.a + p.b * std::pow(Z, 4)) * std::sin(X) + p.a * sy * sy;
  }
  throw std::invalid_argument("unknown Ishigami variant");
}

namespace {

Dataset with_output(const Dataset& inputs, const IshigamiParam& param, IshigamiVariant variant) {
  const auto& c = inputs.columns();
  std::vector<double> out(inputs.n_points());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = ishigami(c[0].values[i], c[1].values[i], c[2].values[i], param, variant);
  auto cols = c;
  cols.push_back({"I", std::move(out)});
  return Dataset(std::move(cols), Transform::kRaw);
}

}  // namespace

Dataset gen_ishigami_uniform(std::size_t n_points, std::uint64_t seed, const IshigamiParam& param,
                             IshigamiVariant variant) {
  check_n(n_points);
  const char* names[] = {"x", "y", "z", "u"};
  std::vector<Column> cols;
  for (std::size_t c = 0; c < 4; ++c) {
    Rng rng(derive_seed(seed, {0x69736869ULL, c}));
    Column col{names[c], std::vector<double>(n_points)};
    for (auto& v : col.values) v = rng.uniform();
    cols.push_back(std::move(col));
  }
  return with_output(Dataset(std::move(cols)), param, variant);
}

Dataset gen_dependent_raw(std::size_t n_points, std::uint64_t seed) {
  check_n(n_points);
  Rng rng(derive_seed(seed, {kStreamDependent}));
  std::vector<double> x(n_points), y(n_points), z(n_points), u(n_points);
  for (std::size_t i = 0; i < n_points; ++i) {
    const double v = rng.uniform(-2.0, 2.0);
    x[i] = v;
    y[i] = v * v + 0.5 * rng.normal();
    z[i] = v * v * v + 0.5 * rng.normal();
    u[i] = v * v * v * v + 0.5 * rng.normal();
  }
  return Dataset({{"x", std::move(x)}, {"y", std::move(y)}, {"z", std::move(z)}, {"u", std::move(u)}});
}

Dataset gen_dependent(std::size_t n_points, std::uint64_t seed, const IshigamiParam& param, IshigamiVariant variant) {
  return with_output(range_normalize(gen_dependent_raw(n_points, seed)), param, variant);
}

}  // namespace mstdep
