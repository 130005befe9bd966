#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>

#include <json.hpp>

#include "mstdep/entropy.hpp"

namespace mstdep {
namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kFormat = "mstdep-reference";
constexpr int kVersion = 1;

Json params_json(const MethodParams& p) {
  return Json{{"subsets", p.subsets}, {"restarts", p.restarts}, {"max_iters", p.max_iters}, {"gamma", p.gamma.gamma()}};
}

MethodParams params_from(const Json& j) {
  MethodParams p;
  p.subsets = j.at("subsets").get<std::size_t>();
  p.restarts = j.at("restarts").get<std::size_t>();
  p.max_iters = j.at("max_iters").get<std::size_t>();
  p.gamma = GammaParam(j.at("gamma").get<double>());
  return p;
}

}  // namespace

std::string reference_to_json(const ReferenceLevel& ref) {
  Json j;
  j["format"] = kFormat;
  j["version"] = kVersion;
  j["n_points"] = ref.n_points;
  j["method"] = to_string(ref.method);
  j["r"] = ref.repetitions;
  j["seed"] = ref.seed;
  j["params"] = params_json(ref.params);
  j["samples"] = ref.samples;
  return j.dump(1) + "\n";
}

ReferenceLevel reference_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::runtime_error(std::string("reference file is not valid JSON: ") + e.what());
  }
  try {
    if (j.at("format").get<std::string>() != kFormat) throw std::runtime_error("not an mstdep reference file");
    if (j.at("version").get<int>() != kVersion)
      throw std::runtime_error("unsupported reference file version " + j.at("version").dump());
    ReferenceLevel ref;
    ref.n_points = j.at("n_points").get<std::size_t>();
    const auto tag = j.at("method").get<std::string>();
    const auto method = parse_method(tag);
    if (!method) throw std::runtime_error("unknown method '" + tag + "' in reference file");
    ref.method = *method;
    ref.repetitions = j.at("r").get<std::size_t>();
    ref.seed = j.at("seed").get<std::uint64_t>();
    ref.params = params_from(j.at("params"));
    ref.samples = j.at("samples").get<std::vector<double>>();
    if (ref.samples.size() != ref.repetitions)
      throw std::runtime_error("reference file holds " + std::to_string(ref.samples.size()) + " samples but r = " +
                               std::to_string(ref.repetitions));
    if (ref.repetitions < kMinReferenceRepetitions) throw std::runtime_error("reference file has r < 20");
    for (std::size_t i = 1; i < ref.samples.size(); ++i)
      if (ref.samples[i] < ref.samples[i - 1]) throw std::runtime_error("reference samples are not sorted");
    return ref;
  } catch (const Json::exception& e) {
    throw std::runtime_error(std::string("malformed reference file: ") + e.what());
  }
}

void save_reference(const ReferenceLevel& ref, const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  // Write to a sibling and rename so concurrent readers never see a partial file.
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << reference_to_json(ref);
    if (!out.flush()) throw std::runtime_error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

ReferenceLevel load_reference(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open reference file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return reference_from_json(buf.str());
}

ReferenceCache::ReferenceCache(std::filesystem::path directory) : directory_(std::move(directory)) {}

std::filesystem::path ReferenceCache::default_directory() {
  if (const char* dir = std::getenv("MSTDEP_CACHE_DIR"); dir && *dir) return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "mstdep";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "mstdep";
  return ".mstdep-cache";
}

std::filesystem::path ReferenceCache::path_for(std::size_t n_points, std::size_t repetitions, Method method,
                                               std::uint64_t seed, const MethodParams& params) const {
  std::ostringstream name;
  name << "ref_N" << n_points << "_r" << repetitions << "_" << to_string(method) << "_s" << seed;
  if (method != Method::kExact) name << "_K" << params.subsets << "_R" << params.restarts << "_I" << params.max_iters;
  if (params.gamma.gamma() != 1.0) name << "_g" << params.gamma.gamma();
  name << ".json";
  return directory_ / name.str();
}

ReferenceLevel ReferenceCache::get_or_build(std::size_t n_points, std::size_t repetitions, Method method,
                                            std::uint64_t seed, const MethodParams& params, std::size_t threads) {
  const auto path = path_for(n_points, repetitions, method, seed, params);
  std::error_code ec;
  if (std::filesystem::exists(path, ec)) {
    try {
      auto ref = load_reference(path);
      if (ref.n_points == n_points && ref.repetitions == repetitions && ref.method == method && ref.seed == seed &&
          (method == Method::kExact ? ref.params.gamma == params.gamma : ref.params == params))
        return ref;
    } catch (const std::exception&) {
      // Unreadable or stale entry: rebuild below.
    }
  }
  auto ref = build_reference(n_points, repetitions, method, seed, params, threads);
  save_reference(ref, path);
  return ref;
}

}  // namespace mstdep
