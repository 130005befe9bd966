#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "mstdep/dataset.hpp"
#include "mstdep/entropy.hpp"
#include "mstdep/parallel.hpp"
#include "mstdep/random.hpp"
#include "mstdep/sensitivity.hpp"
#include "mstdep/synth.hpp"

namespace mstdep::cli {
namespace {

namespace fs = std::filesystem;

// Streams "-" or an empty path to `out`; files are written through a temporary
// sibling so a failed run never leaves a partial artifact behind.
void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("failed writing to standard output");
    return;
  }
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".partial";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f << content;
    f.flush();
    if (!f) throw std::runtime_error("failed writing " + tmp.string());
  }
  fs::rename(tmp, target);
}

Method method_option(const std::string& tag) {
  if (auto m = parse_method(tag)) return *m;
  throw std::invalid_argument("unknown method '" + tag + "'");
}

std::vector<std::string> method_names(bool with_exact) {
  std::vector<std::string> names;
  if (with_exact) names.emplace_back(to_string(Method::kExact));
  for (auto m : kApproximateMethods) names.emplace_back(to_string(m));
  return names;
}

char delimiter_option(const std::string& d) {
  if (d == "\\t" || d == "tab") return '\t';
  if (d.size() != 1) throw std::invalid_argument("delimiter must be a single character");
  return d[0];
}

Dataset read_table(const std::string& path, char delim, const std::string& header) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  CsvOptions opts;
  opts.delimiter = delim;
  opts.has_header = header == "yes" || (header == "auto" && csv_looks_like_header(text, delim));
  try {
    return parse_csv(text, opts);
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

struct CommonMethod {
  std::string method = "exact";
  std::size_t subsets = kDefaultSubsets;
  std::size_t restarts = 10;
  std::size_t max_iters = 100;
  double gamma = 1.0;

  void add_to(CLI::App* app, std::string default_method = "exact") {
    method = std::move(default_method);
    app->add_option("--method", method, "MST method")->check(CLI::IsMember(method_names(true)))->capture_default_str();
    app->add_option("--K", subsets, "subsets K (cluster methods use N/K centers)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app->add_option("--restarts", restarts, "K-means restarts")->check(CLI::PositiveNumber)->capture_default_str();
    app->add_option("--max-iters", max_iters, "Lloyd iterations per restart")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app->add_option("--gamma", gamma, "edge exponent, in (0, 2)")->capture_default_str();
  }

  MethodParams params() const {
    MethodParams p;
    p.subsets = subsets;
    p.restarts = restarts;
    p.max_iters = max_iters;
    p.gamma = GammaParam(gamma);
    return p;
  }
};

// analyze ------------------------------------------------------------------

struct AnalyzeArgs {
  std::vector<std::string> inputs;
  std::string delimiter = ",";
  std::string header = "auto";
  CommonMethod method;
  std::uint64_t seed = kDefaultSeed;
  double eta = kDefaultEta;
  std::string reference;
  std::string output_col = "last";
  std::string out;
  std::string format = "json";
  std::size_t threads = 0;
};

std::optional<std::size_t> resolve_output_col(const std::string& spec, const std::vector<std::string>& names) {
  if (spec == "none") return std::nullopt;
  if (spec == "last") return names.size() - 1;
  for (std::size_t c = 0; c < names.size(); ++c)
    if (names[c] == spec) return c;
  std::size_t pos = 0;
  try {
    const auto idx = std::stoul(spec, &pos);
    if (pos == spec.size() && idx < names.size()) return idx;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("--output-col: no column '" + spec + "'");
}

void cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
  const char delim = delimiter_option(a.delimiter);
  std::vector<Dataset> ranked;
  for (std::size_t r = 0; r < a.inputs.size(); ++r) {
    const auto raw = read_table(a.inputs[r], delim, a.header);
    if (raw.n_columns() < 2)
      throw std::invalid_argument(a.inputs[r] + ": need at least two columns, found " +
                                  std::to_string(raw.n_columns()));
    ranked.push_back(prepare_ranks(raw, derive_seed(a.seed, {0x70726570ULL, r})));
  }
  const auto method = method_option(a.method.method);
  const auto params = a.method.params();
  const auto matrix = pairwise_matrix(ranked, method, params, derive_seed(a.seed, {0x6d6174ULL}), a.threads);

  std::optional<ReferenceLevel> ref;
  if (!a.reference.empty()) ref = load_reference(a.reference);
  const auto report =
      make_report(matrix, resolve_output_col(a.output_col, matrix.variables), ref ? &*ref : nullptr, a.eta);
  emit(a.out, a.format == "json" ? report_to_json(report) : report_to_table(report), out);
}

// gen ----------------------------------------------------------------------

struct GenArgs {
  std::string kind;
  std::size_t n = 1000;
  std::uint64_t seed = kDefaultSeed;
  double rho = 0.0;
  double area = 0.0;
  std::size_t dims = 2;
  std::string variant = "unit-z";
  double a = 7.0, b = 0.1;
  std::string out;
};

void cmd_gen(const GenArgs& g, std::ostream& out) {
  const auto variant = parse_ishigami_variant(g.variant);
  if (!variant) throw std::invalid_argument("unknown Ishigami variant '" + g.variant + "'");
  const IshigamiParam ip{g.a, g.b};
  std::optional<Dataset> data;
  if (g.kind == "uniform") data = gen_uniform(g.n, g.dims, g.seed);
  else if (g.kind == "normal") data = gen_normal(g.n, g.rho, g.seed);
  else if (g.kind == "corner") data = gen_shape(g.n, {g.area, ShapeKind::kCorner}, g.seed);
  else if (g.kind == "line") data = gen_shape(g.n, {g.area, ShapeKind::kLine}, g.seed);
  else if (g.kind == "ishigami") data = gen_ishigami_uniform(g.n, g.seed, ip, *variant);
  else if (g.kind == "dependent") data = gen_dependent(g.n, g.seed, ip, *variant);
  else throw std::invalid_argument("unknown generator '" + g.kind + "'");
  emit(g.out, to_csv(*data), out);
}

// reference ----------------------------------------------------------------

struct ReferenceArgs {
  std::size_t n = 1000;
  std::size_t r = 1000;
  CommonMethod method;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  std::string format = "json";
  bool use_cache = false;
  std::size_t threads = 0;
};

std::string reference_csv(const ReferenceLevel& ref) {
  std::ostringstream s;
  s.precision(17);
  s << "h_star,cdf\n";
  const auto r = static_cast<double>(ref.samples.size());
  for (std::size_t i = 0; i < ref.samples.size(); ++i) s << ref.samples[i] << ',' << (i + 1) / r << '\n';
  return s.str();
}

void cmd_reference(const ReferenceArgs& a, std::ostream& out) {
  if (a.r < kMinReferenceRepetitions)
    throw std::invalid_argument("--r must be at least " + std::to_string(kMinReferenceRepetitions));
  const auto method = method_option(a.method.method);
  const auto params = a.method.params();
  ReferenceLevel ref;
  if (a.use_cache) {
    ReferenceCache cache(ReferenceCache::default_directory());
    ref = cache.get_or_build(a.n, a.r, method, a.seed, params, a.threads);
  } else {
    ref = build_reference(a.n, a.r, method, a.seed, params, a.threads);
  }
  emit(a.out, a.format == "json" ? reference_to_json(ref) : reference_csv(ref), out);
}

// bench --------------------------------------------------------------------

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

struct BenchArgs {
  std::string methods = "all";
  std::string sizes = "10000";
  std::size_t r = 50;
  std::string family = "uniform";
  std::size_t subsets = kDefaultSubsets;
  std::size_t restarts = 10;
  std::uint64_t seed = kDefaultSeed;
  std::size_t exact_cap = 20000;
  std::string format = "csv";
  std::string out;
  std::size_t threads = 1;
};

void cmd_bench(const BenchArgs& a, std::ostream& out) {
  BenchConfig c;
  if (a.methods != "all") {
    c.methods.clear();
    for (const auto& tag : split_list(a.methods)) {
      const auto m = method_option(tag);
      if (m == Method::kExact) continue;  // always computed as the oracle
      c.methods.push_back(m);
    }
  }
  c.sizes.clear();
  for (const auto& n : split_list(a.sizes)) c.sizes.push_back(std::stoul(n));
  if (c.sizes.empty()) throw std::invalid_argument("--n: no sizes given");
  c.repetitions = a.r;
  c.family = a.family == "dependent" ? BenchFamily::kDependent : BenchFamily::kUniform;
  c.params.subsets = a.subsets;
  c.params.restarts = a.restarts;
  c.seed = a.seed;
  c.exact_cap = a.exact_cap;
  c.threads = a.threads;
  const auto rows = run_bench(c);
  emit(a.out, a.format == "json" ? bench_to_json(rows) : bench_to_csv(rows), out);
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& c) {
  if (c.repetitions < 1) throw std::invalid_argument("bench: need at least one repetition");
  using Clock = std::chrono::steady_clock;
  std::vector<BenchRow> rows;
  for (std::size_t n : c.sizes) {
    if (n > c.exact_cap)
      throw std::invalid_argument("bench: N = " + std::to_string(n) + " exceeds the exact-MST cap of " +
                                  std::to_string(c.exact_cap));
    // Point sets for this size.
    std::vector<PointPair> sets(c.repetitions);
    if (c.family == BenchFamily::kUniform) {
      parallel_for(c.repetitions, c.threads, [&](std::size_t s) {
        const auto raw = gen_uniform(n, 2, derive_seed(c.seed, {0x62756eULL, n, s}));
        sets[s] = project_pair(prepare_ranks(raw, derive_seed(c.seed, {0x627072ULL, n, s})), 0, 1);
      });
    } else {
      // Pairs among x, y, z and the output I (column 4); u is left out.
      constexpr std::size_t kPairs[6][2] = {{0, 1}, {0, 2}, {0, 4}, {1, 2}, {1, 4}, {2, 4}};
      const std::size_t n_data = (c.repetitions + 5) / 6;
      std::vector<Dataset> data;
      for (std::size_t k = 0; k < n_data; ++k)
        data.push_back(prepare_ranks(gen_dependent(n, derive_seed(c.seed, {0x626465ULL, n, k})),
                                     derive_seed(c.seed, {0x627072ULL, n, k})));
      for (std::size_t s = 0; s < c.repetitions; ++s)
        sets[s] = project_pair(data[s / 6], kPairs[s % 6][0], kPairs[s % 6][1]);
    }

    const std::size_t m = c.methods.size();
    std::vector<double> exact_h(c.repetitions), exact_t(c.repetitions);
    std::vector<double> h(c.repetitions * m), t(c.repetitions * m);
    parallel_for(c.repetitions, c.threads, [&](std::size_t s) {
      auto t0 = Clock::now();
      exact_h[s] = h_star(sets[s], Method::kExact, c.params).h_star;
      exact_t[s] = std::chrono::duration<double>(Clock::now() - t0).count();
      for (std::size_t k = 0; k < m; ++k) {
        t0 = Clock::now();
        h[s * m + k] =
            h_star(sets[s], c.methods[k], c.params, derive_seed(c.seed, {0x626d74ULL, n, s, k})).h_star;
        t[s * m + k] = std::chrono::duration<double>(Clock::now() - t0).count();
      }
    });

    const auto reps = static_cast<double>(c.repetitions);
    BenchRow ex{Method::kExact, n, c.repetitions};
    for (std::size_t s = 0; s < c.repetitions; ++s) {
      ex.mean_h_star += exact_h[s] / reps;
      ex.mean_seconds += exact_t[s] / reps;
    }
    rows.push_back(ex);
    for (std::size_t k = 0; k < m; ++k) {
      BenchRow row{c.methods[k], n, c.repetitions};
      for (std::size_t s = 0; s < c.repetitions; ++s) {
        const double err = std::abs(h[s * m + k] - exact_h[s]);
        row.mean_h_star += h[s * m + k] / reps;
        row.mean_abs_error += err / reps;
        row.max_abs_error = std::max(row.max_abs_error, err);
        row.mean_seconds += t[s * m + k] / reps;
      }
      rows.push_back(row);
    }
  }
  return rows;
}

std::string bench_to_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream s;
  s.precision(10);
  s << "method,n,r,mean_h_star,mean_abs_error,max_abs_error,mean_seconds\n";
  for (const auto& r : rows)
    s << to_string(r.method) << ',' << r.n_points << ',' << r.repetitions << ',' << r.mean_h_star << ','
      << r.mean_abs_error << ',' << r.max_abs_error << ',' << r.mean_seconds << '\n';
  return s.str();
}

std::string bench_to_json(const std::vector<BenchRow>& rows) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rows)
    arr.push_back({{"method", to_string(r.method)},
                   {"n", r.n_points},
                   {"r", r.repetitions},
                   {"mean_h_star", r.mean_h_star},
                   {"mean_abs_error", r.mean_abs_error},
                   {"max_abs_error", r.max_abs_error},
                   {"mean_seconds", r.mean_seconds}});
  return arr.dump(2) + "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank-based dependency analysis with minimum spanning trees", "mstdep"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "mstdep 1.0.0");

  AnalyzeArgs an;
  auto* analyze = app.add_subcommand("analyze", "pairwise h* matrix of a CSV table");
  analyze->add_option("--in", an.inputs, "CSV file; repeat for replicate datasets")->required()->check(CLI::ExistingFile);
  analyze->add_option("--delimiter", an.delimiter, "field separator")->capture_default_str();
  analyze->add_option("--header", an.header, "first line holds column names")
      ->check(CLI::IsMember({"auto", "yes", "no"}))
      ->capture_default_str();
  an.method.add_to(analyze);
  analyze->add_option("--seed", an.seed)->capture_default_str();
  analyze->add_option("--eta", an.eta, "independence test level")->capture_default_str();
  analyze->add_option("--reference", an.reference, "reference file from `mstdep reference`")
      ->check(CLI::ExistingFile);
  analyze->add_option("--output-col", an.output_col, "output column for the ranking: name, index, last or none")
      ->capture_default_str();
  analyze->add_option("--out", an.out, "report path (default stdout)");
  analyze->add_option("--format", an.format)->check(CLI::IsMember({"json", "table"}))->capture_default_str();
  analyze->add_option("--threads", an.threads, "worker threads (0 = all cores)")->capture_default_str();

  GenArgs gn;
  auto* gen = app.add_subcommand("gen", "write a synthetic dataset as CSV");
  gen->add_option("kind", gn.kind, "generator")
      ->required()
      ->check(CLI::IsMember({"uniform", "normal", "corner", "line", "ishigami", "dependent"}));
  gen->add_option("--n", gn.n, "number of points")->capture_default_str();
  gen->add_option("--seed", gn.seed)->capture_default_str();
  gen->add_option("--rho", gn.rho, "correlation (normal)")->capture_default_str();
  gen->add_option("--area", gn.area, "excluded area A (corner, line)")->capture_default_str();
  gen->add_option("--d", gn.dims, "columns (uniform)")->capture_default_str();
  gen->add_option("--variant", gn.variant, "Ishigami form")
      ->check(CLI::IsMember({"unit-z", "classic", "scaled-sine"}))
      ->capture_default_str();
  gen->add_option("--a", gn.a)->capture_default_str();
  gen->add_option("--b", gn.b)->capture_default_str();
  gen->add_option("--out", gn.out, "CSV path (default stdout)");

  ReferenceArgs rf;
  auto* reference = app.add_subcommand("reference", "h* distribution under independence");
  reference->add_option("--n", rf.n, "points per dataset")->capture_default_str();
  reference->add_option("--r", rf.r, "repetitions (>= 20)")->capture_default_str();
  rf.method.add_to(reference);
  reference->add_option("--seed", rf.seed)->capture_default_str();
  reference->add_option("--out", rf.out, "output path (default stdout)");
  reference->add_option("--format", rf.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  reference->add_flag("--cache", rf.use_cache, "reuse or fill the reference cache (MSTDEP_CACHE_DIR)");
  reference->add_option("--threads", rf.threads, "worker threads (0 = all cores)")->capture_default_str();

  BenchArgs bn;
  auto* bench = app.add_subcommand("bench", "approximation error against the exact MST");
  bench->add_option("--methods", bn.methods, "comma separated method list or 'all'")->capture_default_str();
  bench->add_option("--n", bn.sizes, "comma separated sizes")->capture_default_str();
  bench->add_option("--r", bn.r, "point sets per size")->capture_default_str();
  bench->add_option("--family", bn.family)->check(CLI::IsMember({"uniform", "dependent"}))->capture_default_str();
  bench->add_option("--K", bn.subsets)->check(CLI::PositiveNumber)->capture_default_str();
  bench->add_option("--restarts", bn.restarts)->check(CLI::PositiveNumber)->capture_default_str();
  bench->add_option("--seed", bn.seed)->capture_default_str();
  bench->add_option("--exact-cap", bn.exact_cap, "largest N for the exact oracle")->capture_default_str();
  bench->add_option("--format", bn.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  bench->add_option("--out", bn.out, "output path (default stdout)");
  bench->add_option("--threads", bn.threads, "worker threads (0 = all cores)")->capture_default_str();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*analyze) cmd_analyze(an, out);
    else if (*gen) cmd_gen(gn, out);
    else if (*reference) cmd_reference(rf, out);
    else if (*bench) cmd_bench(bn, out);
    return 0;
  } catch (const std::exception& e) {
    err << "mstdep: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace mstdep::cli
