#include <gtest/gtest.h>

#include <cstring>
#include <limits>
#include <vector>

#include "mstdep/approx_mst.hpp"
#include "mstdep/clustering.hpp"
#include "mstdep/mst.hpp"
#include "mstdep/random.hpp"
#include "mstdep/simd.hpp"

using namespace mstdep;
using simd::Backend;

namespace {

bool bits_equal(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

class SimdEquivalence : public ::testing::Test {
 protected:
  void SetUp() override {
    if (!simd::available(Backend::kAvx2)) GTEST_SKIP() << "AVX2 not available on this CPU";
  }
};

// Coordinates on a coarse lattice produce many exact distance ties.
std::vector<double> coords(std::size_t n, Rng& rng, bool lattice) {
  std::vector<double> v(n);
  for (auto& x : v) x = lattice ? static_cast<double>(rng.below(6)) / 5.0 : rng.uniform();
  return v;
}

}  // namespace

TEST(SimdDispatch, ScalarAlwaysAvailable) {
  EXPECT_TRUE(simd::available(Backend::kScalar));
  simd::ScopedBackend scope(Backend::kScalar);
  EXPECT_EQ(simd::active_backend(), Backend::kScalar);
}

TEST_F(SimdEquivalence, PrimRelaxArgmin) {
  const auto& s = simd::kernels(Backend::kScalar);
  const auto& v = simd::kernels(Backend::kAvx2);
  Rng rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = 1 + rng.below(70);
    const bool lattice = trial % 2 == 0;
    const auto x = coords(m, rng, lattice), y = coords(m, rng, lattice);
    std::vector<double> key(m);
    std::vector<std::uint32_t> parent(m), id(m);
    for (std::size_t i = 0; i < m; ++i) {
      key[i] = rng.below(4) == 0 ? std::numeric_limits<double>::infinity() : (lattice ? 0.04 * rng.below(10) : rng.uniform());
      parent[i] = static_cast<std::uint32_t>(rng.below(100));
      id[i] = static_cast<std::uint32_t>(rng.below(1000));
    }
    auto key2 = key;
    auto parent2 = parent;
    const double px = lattice ? 0.4 : rng.uniform(), py = lattice ? 0.6 : rng.uniform();
    const auto a = s.prim_relax_argmin(x.data(), y.data(), key.data(), parent.data(), id.data(), m, px, py, 7);
    const auto b = v.prim_relax_argmin(x.data(), y.data(), key2.data(), parent2.data(), id.data(), m, px, py, 7);
    ASSERT_EQ(a, b) << "trial " << trial;
    for (std::size_t i = 0; i < m; ++i) {
      ASSERT_TRUE(bits_equal(key[i], key2[i]));
      ASSERT_EQ(parent[i], parent2[i]);
    }
  }
}

TEST_F(SimdEquivalence, NearestCenter) {
  const auto& s = simd::kernels(Backend::kScalar);
  const auto& v = simd::kernels(Backend::kAvx2);
  Rng rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(40), k = 1 + rng.below(30);
    const bool lattice = trial % 2 == 1;
    const auto px = coords(n, rng, lattice), py = coords(n, rng, lattice);
    const auto cx = coords(k, rng, lattice), cy = coords(k, rng, lattice);
    std::vector<std::uint32_t> ia(n), ib(n);
    std::vector<double> da(n), db(n);
    s.nearest_center(px.data(), py.data(), n, cx.data(), cy.data(), k, ia.data(), da.data());
    v.nearest_center(px.data(), py.data(), n, cx.data(), cy.data(), k, ib.data(), db.data());
    ASSERT_EQ(ia, ib);
    for (std::size_t i = 0; i < n; ++i) ASSERT_TRUE(bits_equal(da[i], db[i]));
  }
}

TEST_F(SimdEquivalence, MinSqDistanceUpdate) {
  const auto& s = simd::kernels(Backend::kScalar);
  const auto& v = simd::kernels(Backend::kAvx2);
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng.below(50);
    const auto px = coords(n, rng, false), py = coords(n, rng, false);
    std::vector<double> a(n);
    for (auto& d : a) d = rng.below(3) == 0 ? std::numeric_limits<double>::infinity() : rng.uniform();
    auto b = a;
    s.min_sq_distance_update(px.data(), py.data(), n, 0.3, 0.7, a.data());
    v.min_sq_distance_update(px.data(), py.data(), n, 0.3, 0.7, b.data());
    for (std::size_t i = 0; i < n; ++i) ASSERT_TRUE(bits_equal(a[i], b[i]));
  }
}

TEST_F(SimdEquivalence, EndToEndResultsIdentical) {
  Rng rng(4);
  PointSet p;
  for (int i = 0; i < 3000; ++i) p.push_back({rng.uniform(), rng.uniform()});
  auto run = [&] {
    std::vector<double> out;
    out.push_back(mst_prim(p).gamma_length());
    out.push_back(kmeans(p, {55, 2, 100, 9}).wcss);
    out.push_back(approx_h_star(approximate(p, Method::kFmst, 5)));
    out.push_back(approx_h_star(approximate(p, Method::kSamplingStratified, 5)));
    return out;
  };
  std::vector<double> scalar, avx;
  {
    simd::ScopedBackend b(Backend::kScalar);
    scalar = run();
  }
  {
    simd::ScopedBackend b(Backend::kAvx2);
    avx = run();
  }
  ASSERT_EQ(scalar.size(), avx.size());
  for (std::size_t i = 0; i < scalar.size(); ++i) EXPECT_TRUE(bits_equal(scalar[i], avx[i])) << i;
}
