#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "mstdep/synth.hpp"

using namespace mstdep;

namespace {

double mean(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double correlation(const std::vector<double>& a, const std::vector<double>& b) {
  const double ma = mean(a), mb = mean(b);
  double sab = 0, saa = 0, sbb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  return sab / std::sqrt(saa * sbb);
}

// Kolmogorov-Smirnov distance to a continuous CDF.
template <typename Cdf>
double ks(std::vector<double> v, Cdf cdf) {
  std::sort(v.begin(), v.end());
  const double n = static_cast<double>(v.size());
  double d = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double f = cdf(v[i]);
    d = std::max({d, f - i / n, (i + 1) / n - f});
  }
  return d;
}

std::vector<double> ranks(const std::vector<double>& v) {
  std::vector<std::size_t> idx(v.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return v[a] < v[b]; });
  std::vector<double> r(v.size());
  for (std::size_t k = 0; k < idx.size(); ++k) r[idx[k]] = static_cast<double>(k);
  return r;
}

}  // namespace

TEST(Uniform, MeansAndDeterminism) {
  const auto d = gen_uniform(1000, 2, 1);
  EXPECT_EQ(d.n_columns(), 2u);
  for (const auto& c : d.columns()) EXPECT_NEAR(mean(c.values), 0.5, 0.05);
  EXPECT_EQ(gen_uniform(1000, 2, 1).column(1).values, d.column(1).values);
  EXPECT_NE(gen_uniform(1000, 2, 2).column(1).values, d.column(1).values);
  EXPECT_THROW(gen_uniform(1, 2, 1), std::invalid_argument);
}

TEST(Uniform, KolmogorovSmirnovCalibration) {
  int pass = 0;
  const double crit = 1.628 / std::sqrt(1000.0);  // 1% level
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto d = gen_uniform(1000, 2, s);
    if (ks(d.column(0).values, [](double x) { return x; }) < crit) ++pass;
  }
  EXPECT_GE(pass, 95);
}

TEST(Normal, Correlation) {
  const auto d = gen_normal(10000, 0.95, 3);
  EXPECT_NEAR(correlation(d.column(0).values, d.column(1).values), 0.95, 0.01);
  const auto z = gen_normal(10000, 0.0, 4);
  EXPECT_NEAR(correlation(z.column(0).values, z.column(1).values), 0.0, 0.03);
  EXPECT_THROW(gen_normal(10, 1.0, 1), std::invalid_argument);
  EXPECT_THROW(gen_normal(10, -1.5, 1), std::invalid_argument);
}

TEST(Normal, StandardMarginals) {
  const auto d = gen_normal(5000, 0.7, 5);
  const double crit = 1.628 / std::sqrt(5000.0);
  auto phi = [](double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); };
  EXPECT_LT(ks(d.column(0).values, phi), crit);
  EXPECT_LT(ks(d.column(1).values, phi), crit);
}

TEST(Shape, RegionMembershipAndHitRate) {
  for (auto kind : {ShapeKind::kCorner, ShapeKind::kLine})
    for (double a : {0.0, 0.3, 0.8, 0.95}) {
      const ShapeParam sp{a, kind};
      const auto s = gen_shape_sampled(20000, sp, 7);
      const auto& xs = s.data.column(0).values;
      const auto& ys = s.data.column(1).values;
      for (std::size_t i = 0; i < xs.size(); ++i) ASSERT_TRUE(in_shape(sp, xs[i], ys[i]));
      EXPECT_NEAR(s.hit_rate, 1 - a, 0.02);
      // Full ranges stay reachable.
      EXPECT_LT(*std::min_element(xs.begin(), xs.end()), 0.02);
      EXPECT_GT(*std::max_element(xs.begin(), xs.end()), 0.98);
      EXPECT_LT(*std::min_element(ys.begin(), ys.end()), 0.02);
      EXPECT_GT(*std::max_element(ys.begin(), ys.end()), 0.98);
    }
}

TEST(Shape, PredicateGeometry) {
  const ShapeParam corner{0.25, ShapeKind::kCorner}, line{0.25, ShapeKind::kLine};
  EXPECT_TRUE(in_shape(corner, 0.4, 0.9));
  EXPECT_FALSE(in_shape(corner, 0.6, 0.6));
  EXPECT_TRUE(in_shape(line, 0.9, 0.5));
  EXPECT_FALSE(in_shape(line, 0.9, 0.3));
  EXPECT_THROW(gen_shape(10, {1.0, ShapeKind::kLine}, 1), std::invalid_argument);
  EXPECT_EQ(gen_shape(50, {0.0, ShapeKind::kCorner}, 3).n_points(), 50u);
}

TEST(Ishigami, Examples) {
  EXPECT_NEAR(ishigami(0.5, 0.5, 0.5), 0.0, 1e-12);
  EXPECT_NEAR(ishigami(0.5, 0.5, 0.5, {}, IshigamiVariant::kClassic), 0.0, 1e-12);
  EXPECT_NEAR(ishigami(0.75, 0.5, 0.5, {}, IshigamiVariant::kScaledSine), 7.0, 1e-12);
  EXPECT_NEAR(ishigami(0.75, 0.5, 0.5, {}, IshigamiVariant::kClassic), 1.0, 1e-12);
  EXPECT_NEAR(ishigami(0.75, 0.5, 0.5, {}, IshigamiVariant::kUnitZ), 1.0 + 0.1 * 0.0625, 1e-12);
  for (auto v : {IshigamiVariant::kUnitZ, IshigamiVariant::kClassic, IshigamiVariant::kScaledSine})
    for (double z : {0.0, 0.3, 1.0}) EXPECT_NEAR(ishigami(0.5, 0.75, z, {}, v), 7.0, 1e-12);
  EXPECT_EQ(parse_ishigami_variant("classic"), IshigamiVariant::kClassic);
  EXPECT_FALSE(parse_ishigami_variant("other").has_value());
}

TEST(Ishigami, UniformDatasetColumns) {
  const auto d = gen_ishigami_uniform(100, 2);
  EXPECT_EQ(d.names(), (std::vector<std::string>{"x", "y", "z", "u", "I"}));
  for (std::size_t i = 0; i < 100; ++i)
    EXPECT_EQ(d.column(4).values[i], ishigami(d.column(0).values[i], d.column(1).values[i], d.column(2).values[i]));
}

TEST(Dependent, Construction) {
  const auto raw = gen_dependent_raw(10000, 4);
  EXPECT_GT(correlation(raw.column(0).values, raw.column(2).values), 0.8);
  const auto d = gen_dependent(10000, 4);
  EXPECT_EQ(d.names(), (std::vector<std::string>{"x", "y", "z", "u", "I"}));
  for (std::size_t c = 0; c < 4; ++c) {
    const auto& v = d.column(c).values;
    EXPECT_EQ(*std::min_element(v.begin(), v.end()), 0.0);
    EXPECT_EQ(*std::max_element(v.begin(), v.end()), 1.0);
  }
  for (std::size_t i = 0; i < 100; ++i)
    EXPECT_EQ(d.column(4).values[i], ishigami(d.column(0).values[i], d.column(1).values[i], d.column(2).values[i]));
}

TEST(Dependent, ConfounderIndependentOfOutputGivenX) {
  // Given x, u varies only through its own noise u - x^4, which must carry no
  // information about I.
  const auto raw = gen_dependent_raw(10000, 6);
  const auto d = gen_dependent(10000, 6);
  std::vector<double> noise(raw.n_points());
  for (std::size_t i = 0; i < noise.size(); ++i)
    noise[i] = raw.column(3).values[i] - std::pow(raw.column(0).values[i], 4);
  EXPECT_NEAR(correlation(ranks(noise), ranks(d.column(4).values)), 0.0, 0.05);
  // Unconditionally u does carry information about I.
  EXPECT_GT(std::abs(correlation(ranks(d.column(3).values), ranks(d.column(4).values))), 0.1);
}
