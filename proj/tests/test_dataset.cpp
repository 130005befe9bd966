#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <vector>

#include "mstdep/dataset.hpp"
#include "mstdep/random.hpp"

using namespace mstdep;

namespace {

std::vector<double> grid(std::size_t n) {
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
  return g;
}

std::vector<double> sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Dataset one_column(std::vector<double> v) { return Dataset({{"a", std::move(v)}}); }

}  // namespace

TEST(Csv, ParsesPlainRows) {
  const auto d = parse_csv("1,2\n3,4\n5,6\n", {',', false});
  EXPECT_EQ(d.n_points(), 3u);
  EXPECT_EQ(d.n_columns(), 2u);
  EXPECT_EQ(d.column(0).values, (std::vector<double>{1, 3, 5}));
  EXPECT_EQ(d.column(1).values, (std::vector<double>{2, 4, 6}));
  EXPECT_EQ(d.names(), (std::vector<std::string>{"c0", "c1"}));
  EXPECT_EQ(d.transform(), Transform::kRaw);
}

TEST(Csv, HeaderNames) {
  const auto d = parse_csv("x,y\n1,2\n3,4\n");
  EXPECT_EQ(d.names(), (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(d.n_points(), 2u);
  EXPECT_EQ(d.column_index("y"), 1u);
  EXPECT_THROW(d.column_index("z"), std::out_of_range);
}

TEST(Csv, OtherDelimiterAndWhitespace) {
  const auto d = parse_csv("a;b\n 1.5 ; -2e3\n+3;4\n", {';', true});
  EXPECT_EQ(d.column(0).values, (std::vector<double>{1.5, 3}));
  EXPECT_EQ(d.column(1).values, (std::vector<double>{-2000, 4}));
}

TEST(Csv, NanCellIsReportedWithPosition) {
  try {
    parse_csv("x,y\n1,2\n3,NaN\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.row(), 2u);
    EXPECT_EQ(e.column(), 1u);
  }
}

TEST(Csv, RejectsRaggedAndGarbage) {
  EXPECT_THROW(parse_csv("1,2\n3\n", {',', false}), ParseError);
  EXPECT_THROW(parse_csv("1,2\n3,abc\n", {',', false}), ParseError);
  EXPECT_THROW(parse_csv("1,2\n3,inf\n", {',', false}), ParseError);
  EXPECT_THROW(parse_csv("1,2\n", {',', false}), std::exception);  // N < 2
}

TEST(Csv, HeaderDetection) {
  EXPECT_TRUE(csv_looks_like_header("x,y\n1,2\n", ','));
  EXPECT_FALSE(csv_looks_like_header("1,2\n3,4\n", ','));
}

TEST(Csv, RoundTripIsLossless) {
  Rng rng(5);
  std::vector<double> a(20), b(20);
  for (auto& v : a) v = rng.normal() * 1e-3;
  for (auto& v : b) v = rng.uniform() * 1e6;
  const Dataset d({{"alpha", a}, {"beta", b}});
  const auto back = parse_csv(to_csv(d));
  EXPECT_EQ(back.names(), d.names());
  EXPECT_EQ(back.column(0).values, a);
  EXPECT_EQ(back.column(1).values, b);

  const auto path = std::filesystem::temp_directory_path() / "mstdep_test_roundtrip.csv";
  write_csv(d, path);
  EXPECT_EQ(load_csv(path).column(1).values, b);
  std::filesystem::remove(path);
  EXPECT_THROW(load_csv(path), std::exception);
}

TEST(DatasetType, ValidatesShape) {
  EXPECT_THROW(Dataset({}), std::invalid_argument);
  EXPECT_THROW(Dataset({{"a", {1.0}}}), std::invalid_argument);
  EXPECT_THROW(Dataset({{"a", {1.0, 2.0}}, {"b", {1.0, 2.0, 3.0}}}), std::invalid_argument);
  EXPECT_THROW(Dataset({{"a", {1.0, NAN}}}), std::invalid_argument);
}

TEST(RankTransform, OrderPreservingGrid) {
  const auto r = rank_transform(one_column({10, 30, 20}), 1);
  EXPECT_EQ(r.transform(), Transform::kRank);
  EXPECT_DOUBLE_EQ(r.column(0).values[0], 1.0 / 6);
  EXPECT_DOUBLE_EQ(r.column(0).values[1], 5.0 / 6);
  EXPECT_DOUBLE_EQ(r.column(0).values[2], 3.0 / 6);
}

TEST(RankTransform, TiesAreRandomWithinGroup) {
  int first_low = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto v = rank_transform(one_column({5, 5, 9}), seed).column(0).values;
    EXPECT_DOUBLE_EQ(v[2], 5.0 / 6);
    EXPECT_EQ(sorted({v[0], v[1]}), (std::vector<double>{1.0 / 6, 3.0 / 6}));
    if (v[0] < v[1]) ++first_low;
  }
  EXPECT_GT(first_low, 70);
  EXPECT_LT(first_low, 130);
}

TEST(RankTransform, SameSeedSameOutputOnTies) {
  const auto d = one_column({1, 1, 1, 2, 2, 3, 3, 3, 3});
  EXPECT_EQ(rank_transform(d, 9).column(0).values, rank_transform(d, 9).column(0).values);
}

TEST(RankTransform, MarginalsAreExactGrid) {
  Rng rng(17);
  std::vector<double> a(500), b(500);
  for (auto& v : a) v = std::floor(rng.uniform() * 20);  // heavy ties
  for (auto& v : b) v = rng.normal();
  const auto r = rank_transform(Dataset({{"a", a}, {"b", b}}), 3);
  for (const auto& col : r.columns()) EXPECT_EQ(sorted(col.values), grid(500));
}

TEST(RankTransform, InvariantUnderMonotoneMaps) {
  Rng rng(19);
  std::vector<double> a(300);
  for (auto& v : a) v = std::round(rng.uniform() * 50);
  std::vector<double> b(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) b[i] = std::exp(a[i] / 10.0) - 4.0;
  EXPECT_EQ(rank_transform(one_column(a), 77).column(0).values,
            rank_transform(one_column(b), 77).column(0).values);
}

TEST(RankTransform, RejectsPlainRankInput) {
  const auto r = rank_transform(one_column({1, 2, 3}), 1);
  EXPECT_THROW(rank_transform(r, 1), std::invalid_argument);
}

TEST(Ties, Detection) {
  EXPECT_TRUE(has_ties(one_column({1, 2, 1})));
  EXPECT_FALSE(has_ties(one_column({1, 2, 3})));
}

TEST(Jitter, ZeroSigmaIsIdentity) {
  const auto r = rank_transform(one_column({3, 1, 2, 2}), 4);
  EXPECT_EQ(jitter(r, 0.0, 1).column(0).values, r.column(0).values);
}

TEST(Jitter, RequiresTransformedData) {
  EXPECT_THROW(jitter(one_column({1, 2}), 1e-6, 1), std::invalid_argument);
  const auto r = rank_transform(one_column({1, 2}), 1);
  EXPECT_THROW(jitter(r, -1.0, 1), std::invalid_argument);
}

TEST(Jitter, SeparatesDuplicatePoints) {
  const auto d = range_normalize(Dataset({{"x", {0.0, 0.5, 0.5, 1.0}}, {"y", {0.0, 0.5, 0.5, 1.0}}}));
  const auto j = jitter(d, kDefaultJitterSigma, 8);
  EXPECT_TRUE(j.jittered());
  const double dx = j.column(0).values[1] - j.column(0).values[2];
  const double dy = j.column(1).values[1] - j.column(1).values[2];
  const double dist = std::hypot(dx, dy);
  EXPECT_GT(dist, 0.0);
  EXPECT_LT(dist, 1e-4);
}

TEST(Jitter, PreservesOrderAndRanks) {
  Rng rng(23);
  std::vector<double> a(2000);
  for (auto& v : a) v = std::floor(rng.uniform() * 100);
  const auto ranked = rank_transform(one_column(a), 5);
  // Large sigma forces many redraws.
  const auto j = jitter(ranked, 0.3 / 2000, 6);
  const auto& before = ranked.column(0).values;
  const auto& after = j.column(0).values;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = i + 1; k < std::min(a.size(), i + 50); ++k)
      if (before[i] < before[k]) {
        ASSERT_LT(after[i], after[k]);
      }
  EXPECT_EQ(rank_transform(j, 99).column(0).values, before);
}

TEST(RangeNormalize, Examples) {
  const auto r = range_normalize(one_column({2, 4, 6}));
  EXPECT_EQ(r.column(0).values, (std::vector<double>{0, 0.5, 1}));
  EXPECT_EQ(r.transform(), Transform::kRangeNormalized);
  EXPECT_EQ(range_normalize(one_column({0, 0.25, 1})).column(0).values, (std::vector<double>{0, 0.25, 1}));
  EXPECT_THROW(range_normalize(one_column({3, 3, 3})), std::invalid_argument);
}

TEST(ProjectPair, SelectsColumns) {
  const Dataset d({{"a", {1, 2}}, {"b", {3, 4}}, {"c", {5, 6}}});
  const auto p = project_pair(d, 0, 2);
  EXPECT_EQ(p.col_a, 0u);
  EXPECT_EQ(p.col_b, 2u);
  EXPECT_EQ(p.points[1], (Point2{2, 6}));
  EXPECT_FALSE(p.rank_transformed);
  EXPECT_THROW(project_pair(d, 1, 1), std::invalid_argument);
  EXPECT_THROW(project_pair(d, 0, 5), std::out_of_range);
  EXPECT_TRUE(project_pair(rank_transform(d, 1), 0, 1).rank_transformed);
}
