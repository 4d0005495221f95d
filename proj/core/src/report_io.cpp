#include "pangular/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace pangular {

namespace {

using nlohmann::json;

json optional_index(const std::optional<double>& v) {
  if (!v) return nullptr;
  if (std::isinf(*v)) return *v > 0 ? json("inf") : json("-inf");
  return *v;
}

std::optional<double> index_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  if (j.is_string()) {
    if (j == "inf") return std::numeric_limits<double>::infinity();
    if (j == "-inf") return -std::numeric_limits<double>::infinity();
    throw BadSpecError("bad index value in JSON");
  }
  return j.get<double>();
}

json params_json(const DistanceParams& p) {
  return json{{"p", p.p}, {"q", optional_index(p.q)}, {"r", optional_index(p.r)}};
}

DistanceParams params_from_json(const json& j) {
  DistanceParams p;
  p.p = j.at("p").get<double>();
  p.q = index_from_json(j.at("q"));
  p.r = index_from_json(j.at("r"));
  return p;
}

json violation_json(const Violation& v) {
  return json{{"index", v.index}, {"lhs", v.lhs}, {"rhs", v.rhs},
              {"gap", v.gap},     {"x", v.x},     {"y", v.y}};
}

Violation violation_from_json(const json& j) {
  Violation v;
  v.index = j.at("index").get<int>();
  v.lhs = j.at("lhs").get<double>();
  v.rhs = j.at("rhs").get<double>();
  v.gap = j.at("gap").get<double>();
  v.x = j.at("x").get<Vec>();
  v.y = j.at("y").get<Vec>();
  return v;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string join17(const Vec& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += fmt17(v[i]);
  }
  return out;
}

}  // namespace

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string to_json(const VerificationReport& rep) {
  json j;
  j["schema"] = 1;
  j["kind"] = "verification_report";
  j["property_id"] = rep.property_id;
  j["space"] = rep.space.to_string();
  j["params"] = params_json(rep.params);
  j["seed"] = rep.seed;
  j["samples_run"] = rep.samples_run;
  j["tol"] = rep.tol;
  j["rng"] = rep.rng;
  j["passed"] = rep.passed;
  j["max_violation_gap"] = rep.max_violation_gap;
  json arr = json::array();
  for (const auto& v : rep.violations) arr.push_back(violation_json(v));
  j["violations"] = arr;
  return j.dump(2) + "\n";
}

VerificationReport verification_report_from_json(const std::string& text) {
  json j = json::parse(text);
  VerificationReport rep;
  rep.property_id = j.at("property_id").get<std::string>();
  rep.space = SpaceSpec::parse(j.at("space").get<std::string>());
  rep.params = params_from_json(j.at("params"));
  rep.seed = j.at("seed").get<std::uint64_t>();
  rep.samples_run = j.at("samples_run").get<int>();
  rep.tol = j.at("tol").get<double>();
  rep.rng = j.at("rng").get<std::string>();
  rep.passed = j.at("passed").get<bool>();
  rep.max_violation_gap = j.at("max_violation_gap").get<double>();
  for (const auto& v : j.at("violations")) {
    rep.violations.push_back(violation_from_json(v));
  }
  return rep;
}

std::string to_json(const SearchResult& res) {
  json j;
  j["schema"] = 1;
  j["kind"] = "search_result";
  j["ineq_id"] = std::string(to_string(res.ineq_id));
  j["params"] = params_json(res.params);
  j["space"] = res.space.to_string();
  j["x"] = res.x;
  j["y"] = res.y;
  j["margin"] = res.margin;
  j["found"] = res.found;
  j["threshold"] = kFoundMargin;
  j["seed"] = res.seed;
  j["restart_index"] = res.restart_index;
  j["step_count"] = res.step_count;
  return j.dump(2) + "\n";
}

SearchResult search_result_from_json(const std::string& text) {
  json j = json::parse(text);
  SearchResult res;
  auto id = bound_id_from_string(j.at("ineq_id").get<std::string>());
  if (!id) throw BadSpecError("unknown ineq_id in JSON");
  res.ineq_id = *id;
  res.params = params_from_json(j.at("params"));
  res.space = SpaceSpec::parse(j.at("space").get<std::string>());
  res.x = j.at("x").get<Vec>();
  res.y = j.at("y").get<Vec>();
  res.margin = j.at("margin").get<double>();
  res.found = j.at("found").get<bool>();
  res.seed = j.at("seed").get<std::uint64_t>();
  res.restart_index = j.at("restart_index").get<int>();
  res.step_count = j.at("step_count").get<int>();
  return res;
}

std::string to_json(const Verdict& verdict) {
  json j;
  j["schema"] = 1;
  j["kind"] = "classification";
  j["verdict"] = verdict.kind == Verdict::Kind::NOT_IPS ? "NOT_IPS"
                                                        : "CONSISTENT_WITH_IPS";
  if (verdict.witness) {
    j["witness"] = json::parse(to_json(*verdict.witness));
  } else {
    j["witness"] = nullptr;
  }
  return j.dump(2) + "\n";
}

std::string to_json(const RegionReport& rep) {
  json j;
  j["schema"] = 1;
  j["kind"] = "region_report";
  j["bound_id"] = std::string(to_string(rep.bound_id));
  j["seed"] = rep.seed;
  json arr = json::array();
  for (const auto& e : rep.entries) {
    arr.push_back(json{{"p", e.p},
                       {"min_value", e.min_value},
                       {"min_triple", {e.min_triple.a, e.min_triple.b, e.min_triple.c}},
                       {"negative_found", e.negative_found}});
  }
  j["entries"] = arr;
  return j.dump(2) + "\n";
}

std::string to_json(const ChainReport& rep, bool with_alpha_p) {
  json j;
  j["schema"] = 1;
  j["kind"] = "chain_report";
  j["p"] = rep.p;
  j["regime"] = rep.regime;
  j["s"] = rep.s;
  j["d"] = rep.d;
  j["k"] = rep.k;
  if (with_alpha_p) j["alpha_p"] = rep.alpha_p;
  j["K"] = rep.K;
  j["D"] = rep.D;
  j["S"] = rep.S;
  json arr = json::array();
  for (const auto& v : rep.violations) {
    arr.push_back(json{{"relation", v.relation}, {"lhs", v.lhs}, {"rhs", v.rhs}});
  }
  j["violations"] = arr;
  return j.dump(2) + "\n";
}

std::string to_json(const BoundResult& res) {
  json j;
  j["schema"] = 1;
  j["kind"] = "bound_result";
  j["id"] = std::string(to_string(res.id));
  j["regime"] = res.regime;
  j["value"] = res.value;
  j["meaningful"] = res.meaningful;
  j["requires_ips"] = res.requires_ips;
  return j.dump(2) + "\n";
}

std::string catalog_csv() {
  std::ostringstream os;
  os << "id,direction,param_domain,scope,citation\n";
  for (const auto& e : bound_catalog()) {
    os << to_string(e.id) << "," << to_string(e.direction) << ","
       << csv_field(e.param_domain) << "," << to_string(e.scope) << ","
       << csv_field(e.citation) << "\n";
  }
  return os.str();
}

std::string violations_csv(const VerificationReport& rep) {
  std::ostringstream os;
  os << "index,lhs,rhs,gap,x,y\n";
  for (const auto& v : rep.violations) {
    os << v.index << "," << fmt17(v.lhs) << "," << fmt17(v.rhs) << ","
       << fmt17(v.gap) << "," << csv_field(join17(v.x, ';')) << ","
       << csv_field(join17(v.y, ';')) << "\n";
  }
  return os.str();
}

std::string chain_csv(const ChainReport& rep, bool with_alpha_p) {
  std::ostringstream os;
  os << "s=" << fmt17(rep.s) << ",d=" << fmt17(rep.d) << ",k=" << fmt17(rep.k);
  if (with_alpha_p) os << ",alpha_p=" << fmt17(rep.alpha_p);
  os << ",K=" << fmt17(rep.K) << ",D=" << fmt17(rep.D) << ",S=" << fmt17(rep.S);
  if (!rep.violations.empty()) {
    os << ",violations=";
    for (std::size_t i = 0; i < rep.violations.size(); ++i) {
      if (i) os << "|";
      os << rep.violations[i].relation;
    }
  }
  os << "\n";
  return os.str();
}

std::string bound_results_csv(const std::vector<BoundResult>& results) {
  std::ostringstream os;
  os << "id,regime,value,meaningful,requires_ips\n";
  for (const auto& r : results) {
    os << to_string(r.id) << "," << csv_field(r.regime) << "," << fmt17(r.value)
       << "," << (r.meaningful ? "true" : "false") << ","
       << (r.requires_ips ? "true" : "false") << "\n";
  }
  return os.str();
}

std::string region_csv(const RegionReport& rep) {
  std::ostringstream os;
  os << "p,min_value,min_a,min_b,min_c,negative_found\n";
  for (const auto& e : rep.entries) {
    os << fmt17(e.p) << "," << fmt17(e.min_value) << "," << fmt17(e.min_triple.a)
       << "," << fmt17(e.min_triple.b) << "," << fmt17(e.min_triple.c) << ","
       << (e.negative_found ? "true" : "false") << "\n";
  }
  return os.str();
}

}  // namespace pangular
