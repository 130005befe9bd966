#include "mstdep/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mstdep/random.hpp"

namespace mstdep {

const char* to_string(Transform t) noexcept {
  switch (t) {
    case Transform::kRaw: return "raw";
    case Transform::kRank: return "rank";
    case Transform::kRangeNormalized: return "range-normalized";
  }
  return "unknown";
}

Dataset::Dataset(std::vector<Column> columns, Transform transform, bool jittered)
    : columns_(std::move(columns)), transform_(transform), jittered_(jittered) {
  if (columns_.empty()) throw std::invalid_argument("Dataset: no columns");
  n_points_ = columns_.front().values.size();
  if (n_points_ < 2) throw std::invalid_argument("Dataset: need at least two rows");
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    const auto& col = columns_[c];
    if (col.values.size() != n_points_)
      throw std::invalid_argument("Dataset: column '" + col.name + "' has " +
                                  std::to_string(col.values.size()) + " values, expected " +
                                  std::to_string(n_points_));
    for (std::size_t i = 0; i < n_points_; ++i)
      if (!std::isfinite(col.values[i]))
        throw std::invalid_argument("Dataset: non-finite value in column '" + col.name +
                                    "' at row " + std::to_string(i));
  }
}

std::vector<std::string> Dataset::names() const {
  std::vector<std::string> out;
  out.reserve(columns_.size());
  for (const auto& c : columns_) out.push_back(c.name);
  return out;
}

std::size_t Dataset::column_index(const std::string& name) const {
  for (std::size_t c = 0; c < columns_.size(); ++c)
    if (columns_[c].name == name) return c;
  throw std::out_of_range("no column named '" + name + "'");
}

namespace {

std::vector<std::size_t> argsort(const std::vector<double>& v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  return order;
}

}  // namespace

Dataset rank_transform(const Dataset& data, std::uint64_t seed) {
  if (data.transform() == Transform::kRank && !data.jittered())
    throw std::invalid_argument("rank_transform: dataset is already rank transformed");
  const std::size_t n = data.n_points();
  const double dn = static_cast<double>(n);
  std::vector<Column> out;
  out.reserve(data.n_columns());
  for (std::size_t c = 0; c < data.n_columns(); ++c) {
    const auto& values = data.column(c).values;
    auto order = argsort(values);
    Rng rng(derive_seed(seed, {0x72616e6bULL, c}));
    for (std::size_t lo = 0; lo < n;) {
      std::size_t hi = lo + 1;
      while (hi < n && values[order[hi]] == values[order[lo]]) ++hi;
      if (hi - lo > 1) rng.shuffle(std::span(order).subspan(lo, hi - lo));
      lo = hi;
    }
    Column col{data.column(c).name, std::vector<double>(n)};
    for (std::size_t pos = 0; pos < n; ++pos)
      col.values[order[pos]] = (static_cast<double>(pos) + 0.5) / dn;
    out.push_back(std::move(col));
  }
  return Dataset(std::move(out), Transform::kRank);
}

bool has_ties(const Dataset& data) {
  for (const auto& col : data.columns()) {
    auto v = col.values;
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) return true;
  }
  return false;
}

Dataset jitter(const Dataset& data, double sigma, std::uint64_t seed) {
  if (data.transform() == Transform::kRaw)
    throw std::invalid_argument("jitter: dataset must be rank transformed or range normalized");
  if (!(sigma >= 0.0)) throw std::invalid_argument("jitter: sigma must be non-negative");
  if (sigma == 0.0) return data;

  const std::size_t n = data.n_points();
  std::vector<Column> out;
  out.reserve(data.n_columns());
  for (std::size_t c = 0; c < data.n_columns(); ++c) {
    const auto& orig = data.column(c).values;
    Rng rng(derive_seed(seed, {0x6a6974ULL, c}));
    std::vector<double> noisy(n);
    for (std::size_t i = 0; i < n; ++i) noisy[i] = orig[i] + sigma * rng.normal();

    // Groups of equal original values, in ascending order.
    const auto order = argsort(orig);
    std::vector<std::size_t> group_start;
    for (std::size_t pos = 0; pos < n; ++pos)
      if (pos == 0 || orig[order[pos]] != orig[order[pos - 1]]) group_start.push_back(pos);
    group_start.push_back(n);

    std::vector<double> scale(n, sigma);
    std::vector<unsigned> redraws(n, 0);
    auto redraw = [&](std::size_t i) {
      if (++redraws[i] % 16 == 0) scale[i] *= 0.5;
      noisy[i] = orig[i] + scale[i] * rng.normal();
    };
    for (bool clean = false; !clean;) {
      clean = true;
      for (std::size_t g = 0; g + 2 < group_start.size(); ++g) {
        double hi_prev = -HUGE_VAL;
        for (std::size_t p = group_start[g]; p < group_start[g + 1]; ++p)
          hi_prev = std::max(hi_prev, noisy[order[p]]);
        double lo_next = HUGE_VAL;
        for (std::size_t p = group_start[g + 1]; p < group_start[g + 2]; ++p)
          lo_next = std::min(lo_next, noisy[order[p]]);
        if (hi_prev < lo_next) continue;
        clean = false;
        for (std::size_t p = group_start[g]; p < group_start[g + 2]; ++p) redraw(order[p]);
      }
    }
    out.push_back(Column{data.column(c).name, std::move(noisy)});
  }
  return Dataset(std::move(out), data.transform(), true);
}

Dataset range_normalize(const Dataset& data) {
  std::vector<Column> out;
  out.reserve(data.n_columns());
  for (const auto& col : data.columns()) {
    const auto [lo, hi] = std::minmax_element(col.values.begin(), col.values.end());
    const double min = *lo, range = *hi - *lo;
    if (!(range > 0.0))
      throw std::invalid_argument("range_normalize: column '" + col.name + "' is constant");
    Column c{col.name, std::vector<double>(col.values.size())};
    for (std::size_t i = 0; i < col.values.size(); ++i) c.values[i] = (col.values[i] - min) / range;
    out.push_back(std::move(c));
  }
  return Dataset(std::move(out), Transform::kRangeNormalized);
}

PointPair project_pair(const Dataset& data, std::size_t col_a, std::size_t col_b) {
  const std::size_t d = data.n_columns();
  if (col_a >= d || col_b >= d)
    throw std::out_of_range("project_pair: column index out of range (d = " + std::to_string(d) + ")");
  if (col_a == col_b) throw std::invalid_argument("project_pair: columns must differ");
  return PointPair{col_a, col_b, PointSet(data.column(col_a).values, data.column(col_b).values),
                   data.transform() == Transform::kRank};
}

}  // namespace mstdep
