#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "mstdep/sensitivity.hpp"

namespace mstdep {
namespace {

using Json = nlohmann::ordered_json;

template <typename T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <typename T>
std::optional<T> get_opt(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

std::string fixed(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

Report make_report(const DependencyMatrix& matrix, std::optional<std::size_t> output_col,
                   const ReferenceLevel* reference, double eta) {
  Report r;
  r.variables = matrix.variables;
  r.n_points = matrix.n_points;
  r.replicates = matrix.replicates;
  r.method = matrix.method;
  r.params = matrix.params;
  r.seed = matrix.seed;
  r.caveat = kInteractionCaveat;
  std::optional<double> threshold;
  if (reference) {
    if (reference->n_points != matrix.n_points)
      throw std::invalid_argument("report: data has N = " + std::to_string(matrix.n_points) +
                                  " but the reference was built for N = " + std::to_string(reference->n_points));
    if (reference->method != matrix.method)
      throw std::invalid_argument(std::string("report: data analysed with ") + to_string(matrix.method) +
                                  " but the reference uses " + to_string(reference->method));
    if (!(eta > 0.0 && eta < 0.5)) throw std::invalid_argument("report: eta must lie in (0, 0.5)");
    threshold = reference->quantile(eta);
    r.eta = eta;
    r.reference_r = reference->repetitions;
  }
  for (std::size_t k = 0; k < matrix.pairs.size(); ++k) {
    const auto& p = matrix.pairs[k];
    PairVerdict v{k + 1, p.i, p.j, p.mean, p.min, p.max, std::nullopt, threshold};
    if (threshold) v.dependent = p.mean <= *threshold;
    r.pairs.push_back(v);
  }
  if (output_col) {
    r.output_col = output_col;
    r.ranking = rank_inputs(matrix, *output_col);
  }
  return r;
}

std::string report_to_json(const Report& r) {
  Json j;
  j["variables"] = r.variables;
  Json pairs = Json::array();
  for (const auto& p : r.pairs)
    pairs.push_back(Json{{"index", p.index},
                         {"i", r.variables.at(p.i)},
                         {"j", r.variables.at(p.j)},
                         {"h_star_mean", p.mean},
                         {"h_star_min", p.min},
                         {"h_star_max", p.max},
                         {"dependent", opt(p.dependent)},
                         {"threshold", opt(p.threshold)}});
  j["pairs"] = std::move(pairs);
  Json ranking = Json::array();
  for (const auto& in : r.ranking) ranking.push_back(Json{{"variable", in.name}, {"h_star", in.h_star}});
  j["ranking"] = std::move(ranking);
  j["output"] = r.output_col ? Json(r.variables.at(*r.output_col)) : Json(nullptr);
  j["params"] = Json{{"method", to_string(r.method)},
                     {"n_points", r.n_points},
                     {"replicates", r.replicates},
                     {"subsets", r.params.subsets},
                     {"restarts", r.params.restarts},
                     {"max_iters", r.params.max_iters},
                     {"gamma", r.params.gamma.gamma()},
                     {"alpha", r.params.gamma.alpha()},
                     {"seed", r.seed},
                     {"eta", opt(r.eta)},
                     {"reference_r", opt(r.reference_r)}};
  j["caveat"] = r.caveat;
  return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
  try {
    const auto j = Json::parse(text);
    Report r;
    r.variables = j.at("variables").get<std::vector<std::string>>();
    auto column = [&](const std::string& name) {
      for (std::size_t c = 0; c < r.variables.size(); ++c)
        if (r.variables[c] == name) return c;
      throw std::runtime_error("report names unknown variable '" + name + "'");
    };
    for (const auto& p : j.at("pairs")) {
      PairVerdict v;
      v.index = p.at("index").get<std::size_t>();
      v.i = column(p.at("i").get<std::string>());
      v.j = column(p.at("j").get<std::string>());
      v.mean = p.at("h_star_mean").get<double>();
      v.min = p.at("h_star_min").get<double>();
      v.max = p.at("h_star_max").get<double>();
      v.dependent = get_opt<bool>(p, "dependent");
      v.threshold = get_opt<double>(p, "threshold");
      r.pairs.push_back(v);
    }
    for (const auto& in : j.at("ranking")) {
      const auto name = in.at("variable").get<std::string>();
      r.ranking.push_back({column(name), name, in.at("h_star").get<double>()});
    }
    if (auto out = get_opt<std::string>(j, "output")) r.output_col = column(*out);
    const auto& p = j.at("params");
    const auto tag = p.at("method").get<std::string>();
    const auto method = parse_method(tag);
    if (!method) throw std::runtime_error("unknown method '" + tag + "'");
    r.method = *method;
    r.n_points = p.at("n_points").get<std::size_t>();
    r.replicates = p.at("replicates").get<std::size_t>();
    r.params.subsets = p.at("subsets").get<std::size_t>();
    r.params.restarts = p.at("restarts").get<std::size_t>();
    r.params.max_iters = p.at("max_iters").get<std::size_t>();
    r.params.gamma = GammaParam(p.at("gamma").get<double>());
    r.seed = p.at("seed").get<std::uint64_t>();
    r.eta = get_opt<double>(p, "eta");
    r.reference_r = get_opt<std::size_t>(p, "reference_r");
    r.caveat = j.at("caveat").get<std::string>();
    return r;
  } catch (const Json::exception& e) {
    throw std::runtime_error(std::string("malformed report: ") + e.what());
  }
}

std::string report_to_table(const Report& r) {
  std::size_t name_w = 4;
  for (const auto& v : r.variables) name_w = std::max(name_w, v.size());
  std::ostringstream out;
  out << "method " << to_string(r.method) << ", N = " << r.n_points << ", replicates = " << r.replicates << "\n\n";
  auto pad = [](std::string s, std::size_t w) {
    if (s.size() < w) s.insert(0, w - s.size(), ' ');
    return s;
  };
  out << pad("#", 4) << "  " << pad("i", name_w) << "  " << pad("j", name_w) << "  " << pad("h*", 9) << "  "
      << pad("min", 9) << "  " << pad("max", 9);
  if (r.eta) out << "  " << pad("threshold", 9) << "  dependent";
  out << "\n";
  for (const auto& p : r.pairs) {
    out << pad(std::to_string(p.index), 4) << "  " << pad(r.variables[p.i], name_w) << "  "
        << pad(r.variables[p.j], name_w) << "  " << pad(fixed(p.mean), 9) << "  " << pad(fixed(p.min), 9) << "  "
        << pad(fixed(p.max), 9);
    if (p.threshold) out << "  " << pad(fixed(*p.threshold), 9) << "  " << (*p.dependent ? "yes" : "no");
    out << "\n";
  }
  if (r.output_col) {
    out << "\nimportance for " << r.variables[*r.output_col] << " (strongest first):\n";
    for (std::size_t k = 0; k < r.ranking.size(); ++k)
      out << pad(std::to_string(k + 1), 4) << "  " << pad(r.ranking[k].name, name_w) << "  "
          << pad(fixed(r.ranking[k].h_star), 9) << "\n";
  }
  out << "\nnote: " << r.caveat << "\n";
  return out.str();
}

}  // namespace mstdep
