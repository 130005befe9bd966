#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mstdep/approx_mst.hpp"

namespace mstdep::cli {

/// Entry point shared by the executable and the tests. args[0] is the program
/// name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

enum class BenchFamily { kUniform, kDependent };

struct BenchConfig {
  std::vector<Method> methods{std::begin(kApproximateMethods), std::end(kApproximateMethods)};
  std::vector<std::size_t> sizes{10000};
  std::size_t repetitions = 50;  // point sets per size; dependent: projections
  BenchFamily family = BenchFamily::kUniform;
  MethodParams params;
  std::uint64_t seed = 0;
  std::size_t exact_cap = 20000;
  std::size_t threads = 1;
};

struct BenchRow {
  Method method = Method::kExact;
  std::size_t n_points = 0;
  std::size_t repetitions = 0;
  double mean_h_star = 0.0;
  double mean_abs_error = 0.0;  // 0 for the exact rows
  double max_abs_error = 0.0;
  double mean_seconds = 0.0;
};

/// Accuracy of each method against the exact tree, one row per (size, method),
/// exact first. Dependent projections are the 6 pairs among x, y, z and I
/// of ceil(r / 6) dependent datasets.
std::vector<BenchRow> run_bench(const BenchConfig& config);

std::string bench_to_csv(const std::vector<BenchRow>& rows);
std::string bench_to_json(const std::vector<BenchRow>& rows);

}  // namespace mstdep::cli
