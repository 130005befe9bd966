#pragma once

// Column-oriented numeric tables and the marginal transforms applied before
// any spanning-tree computation.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "mstdep/points.hpp"

namespace mstdep {

enum class Transform { kRaw, kRank, kRangeNormalized };

const char* to_string(Transform t) noexcept;

struct Column {
  std::string name;
  std::vector<double> values;
};

/// Raised for malformed CSV input. Row and column are zero based; row counts
/// physical lines including the header.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t row, std::size_t column)
      : std::runtime_error(what), row_(row), column_(column) {}
  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

/// Immutable N x d table. All transforms return new datasets.
class Dataset {
 public:
  /// Throws std::invalid_argument unless there is at least one column, all
  /// columns have the same length N >= 2 and every value is finite.
  explicit Dataset(std::vector<Column> columns, Transform transform = Transform::kRaw,
                   bool jittered = false);

  std::size_t n_points() const noexcept { return n_points_; }
  std::size_t n_columns() const noexcept { return columns_.size(); }
  Transform transform() const noexcept { return transform_; }
  bool jittered() const noexcept { return jittered_; }

  const std::vector<Column>& columns() const noexcept { return columns_; }
  const Column& column(std::size_t i) const { return columns_.at(i); }
  std::vector<std::string> names() const;

  /// Index of the column called `name`, or throws std::out_of_range.
  std::size_t column_index(const std::string& name) const;

 private:
  std::vector<Column> columns_;
  std::size_t n_points_ = 0;
  Transform transform_ = Transform::kRaw;
  bool jittered_ = false;
};

struct CsvOptions {
  char delimiter = ',';
  bool has_header = true;
};

/// Parse CSV text; see load_csv.
Dataset parse_csv(const std::string& text, const CsvOptions& options = {});

/// Read a CSV file with one row per observation. Without a header the columns
/// are named c0..c(d-1).
Dataset load_csv(const std::filesystem::path& path, const CsvOptions& options = {});

/// True when the first non-empty line contains a field that is not a number.
bool csv_looks_like_header(const std::string& text, char delimiter);

void write_csv(const Dataset& data, const std::filesystem::path& path, char delimiter = ',');
std::string to_csv(const Dataset& data, char delimiter = ',');

/// Replace each column by its centered normalized ranks (i - 1/2)/N. Values
/// that compare equal are ordered uniformly at random, driven by `seed`, so
/// every output column is exactly a permutation of the grid.
Dataset rank_transform(const Dataset& data, std::uint64_t seed);

/// True if any column of `data` holds two equal values.
bool has_ties(const Dataset& data);

/// Add N(0, sigma^2) noise to every value of a transformed dataset. Noise that
/// would swap the order of two previously distinct values of a column is
/// redrawn, so re-ranking the result yields the same ranks.
Dataset jitter(const Dataset& data, double sigma, std::uint64_t seed);

inline constexpr double kDefaultJitterSigma = 1e-6;

/// Per column v -> (v - min)/(max - min). Throws std::invalid_argument on a
/// constant column.
Dataset range_normalize(const Dataset& data);

/// The 2-D projection onto columns (col_a, col_b).
PointPair project_pair(const Dataset& data, std::size_t col_a, std::size_t col_b);

}  // namespace mstdep
