#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "mstdep/dataset.hpp"
#include "mstdep/entropy.hpp"
#include "mstdep/sensitivity.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "mstdep");
  std::ostringstream out, err;
  const int code = mstdep::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mstdep_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, NoSubcommandIsUsageError) {
  const auto r = run({});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST_F(Cli, Help) {
  const auto r = run({"analyze", "--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("--method"), std::string::npos);
}

TEST_F(Cli, GenWritesCsv) {
  for (std::string kind : {"uniform", "normal", "corner", "line", "ishigami", "dependent"}) {
    const auto out = path(kind + ".csv");
    const auto r = run({"gen", kind, "--n", "50", "--rho", "0.3", "--area", "0.5", "--out", out});
    ASSERT_EQ(r.code, 0) << kind << ": " << r.err;
    const auto d = mstdep::load_csv(out);
    EXPECT_EQ(d.n_points(), 50u);
  }
  EXPECT_EQ(run({"gen", "normal", "--rho", "1.0"}).code, 1);
  EXPECT_EQ(run({"gen", "bogus"}).code, 2);
}

TEST_F(Cli, AnalyzeJsonAndTable) {
  const auto data = path("ish.csv");
  ASSERT_EQ(run({"gen", "ishigami", "--n", "400", "--out", data}).code, 0);
  const auto report = path("report.json");
  auto r = run({"analyze", "--in", data, "--method", "fmst", "--out", report});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rep = mstdep::report_from_json(slurp(report));
  EXPECT_EQ(rep.pairs.size(), 10u);
  EXPECT_EQ(rep.method, mstdep::Method::kFmst);
  EXPECT_EQ(rep.variables.back(), "I");
  EXPECT_EQ(rep.ranking.size(), 4u);

  r = run({"analyze", "--in", data, "--format", "table", "--output-col", "none"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("h*"), std::string::npos);
  EXPECT_EQ(r.out.find("importance"), std::string::npos);
}

TEST_F(Cli, AnalyzeWithReferenceAndReplicates) {
  const auto a = path("a.csv"), b = path("b.csv"), ref = path("ref.json");
  ASSERT_EQ(run({"gen", "ishigami", "--n", "300", "--seed", "1", "--out", a}).code, 0);
  ASSERT_EQ(run({"gen", "ishigami", "--n", "300", "--seed", "2", "--out", b}).code, 0);
  ASSERT_EQ(run({"reference", "--n", "300", "--r", "40", "--out", ref}).code, 0);
  const auto r = run({"analyze", "--in", a, "--in", b, "--reference", ref, "--eta", "0.05"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rep = mstdep::report_from_json(r.out);
  EXPECT_EQ(rep.replicates, 2u);
  ASSERT_TRUE(rep.eta.has_value());
  for (const auto& p : rep.pairs) EXPECT_TRUE(p.dependent.has_value());

  const auto wrong = path("ref200.json");
  ASSERT_EQ(run({"reference", "--n", "200", "--r", "20", "--out", wrong}).code, 0);
  EXPECT_EQ(run({"analyze", "--in", a, "--reference", wrong}).code, 1);
}

TEST_F(Cli, AnalyzeErrors) {
  const auto one = path("one.csv");
  std::ofstream(one) << "x\n1\n2\n3\n";
  auto r = run({"analyze", "--in", one});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("two columns"), std::string::npos);

  const auto bad = path("bad.csv");
  std::ofstream(bad) << "x,y\n1,2\n3,oops\n";
  r = run({"analyze", "--in", bad, "--out", path("never.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(fs::exists(path("never.json")));

  EXPECT_EQ(run({"analyze", "--in", path("missing.csv")}).code, 2);
  EXPECT_EQ(run({"analyze", "--in", bad, "--method", "nope"}).code, 2);
}

TEST_F(Cli, AnalyzeTiedInputIsJittered) {
  const auto tied = path("tied.csv");
  {
    std::ofstream f(tied);
    f << "a,b\n";
    for (int i = 0; i < 60; ++i) f << i % 5 << ',' << (i * 7) % 3 << '\n';
  }
  const auto r = run({"analyze", "--in", tied});
  ASSERT_EQ(r.code, 0) << r.err;
}

TEST_F(Cli, HeaderlessInput) {
  const auto f = path("plain.csv");
  std::ofstream(f) << "1;2\n3;5\n4;1\n";
  const auto r = run({"analyze", "--in", f, "--delimiter", ";", "--header", "no"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"c0\""), std::string::npos);
}

TEST_F(Cli, ReferenceIsByteIdenticalAndValidated) {
  const auto a = path("r1.json"), b = path("r2.json");
  ASSERT_EQ(run({"reference", "--n", "100", "--r", "30", "--seed", "4", "--out", a}).code, 0);
  ASSERT_EQ(run({"reference", "--n", "100", "--r", "30", "--seed", "4", "--out", b, "--threads", "3"}).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_EQ(mstdep::load_reference(a).repetitions, 30u);
  EXPECT_EQ(run({"reference", "--n", "100", "--r", "5"}).code, 1);
  const auto csv = run({"reference", "--n", "50", "--r", "20", "--format", "csv"});
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.rfind("h_star,cdf\n", 0), 0u);
}

TEST_F(Cli, ReferenceCache) {
  const auto cache = path("cache");
  ::setenv("MSTDEP_CACHE_DIR", cache.c_str(), 1);
  ASSERT_EQ(run({"reference", "--n", "40", "--r", "20", "--cache", "--out", path("x.json")}).code, 0);
  EXPECT_FALSE(fs::is_empty(cache));
}

TEST_F(Cli, Bench) {
  auto r = run({"bench", "--n", "200,400", "--r", "3", "--methods", "fmst,cluster-pca", "--restarts", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "method,n,r,mean_h_star,mean_abs_error,max_abs_error,mean_seconds");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 6);  // exact + 2 methods, two sizes

  r = run({"bench", "--n", "300", "--r", "6", "--family", "dependent", "--methods", "sampling-random", "--format",
           "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"sampling-random\""), std::string::npos);
  EXPECT_EQ(run({"bench", "--n", "30000", "--r", "1"}).code, 1);
}

TEST_F(Cli, AnalyzeDeterministic) {
  const auto data = path("d.csv");
  ASSERT_EQ(run({"gen", "dependent", "--n", "500", "--out", data}).code, 0);
  const auto a = run({"analyze", "--in", data, "--method", "sampling-stratified", "--seed", "9"});
  const auto b = run({"analyze", "--in", data, "--method", "sampling-stratified", "--seed", "9", "--threads", "3"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}
