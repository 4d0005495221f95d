#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "pangular/bounds.hpp"
#include "pangular/distance.hpp"
#include "pangular/probe.hpp"
#include "pangular/report_io.hpp"
#include "pangular/space.hpp"
#include "pangular/verify.hpp"

namespace pangular::cli {

namespace {

using nlohmann::json;

Vec parse_vector(const std::string& text) {
  Vec out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(part, &pos));
      if (pos != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw BadSpecError("cannot parse vector component '" + part + "'");
    }
  }
  if (out.empty()) throw BadSpecError("empty vector '" + text + "'");
  return out;
}

NormTriple parse_triple(const std::string& text) {
  Vec v = parse_vector(text);
  if (v.size() != 3) throw BadSpecError("triple needs exactly a,b,c");
  return validate_triple(v[0], v[1], v[2]);
}

std::uint64_t env_seed() {
  const char* env = std::getenv("PANGULAR_SEED");
  if (!env) return 0;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    throw BadSpecError("PANGULAR_SEED is not an integer");
  }
}

void emit(const std::string& text, const std::string& output_path,
          std::ostream& out) {
  if (output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(output_path, std::ios::binary);
  if (!file) throw BadSpecError("cannot write '" + output_path + "'");
  file << text;
}

// Values from a --config JSON file act as defaults: each key naming a long
// option of the chosen subcommand is appended as a flag unless that flag was
// given explicitly, so command-line flags always win.
std::vector<std::string> apply_config(const CLI::App& app,
                                      std::vector<std::string> args) {
  auto it = std::find(args.begin(), args.end(), "--config");
  if (it == args.end()) return args;
  if (it + 1 == args.end()) throw BadSpecError("--config needs a file path");
  std::ifstream file(*(it + 1));
  if (!file) throw BadSpecError("cannot read config '" + *(it + 1) + "'");
  json cfg;
  try {
    file >> cfg;
  } catch (const std::exception& e) {
    throw BadSpecError(std::string("bad config JSON: ") + e.what());
  }
  if (!cfg.is_object()) throw BadSpecError("config must be a JSON object");

  const CLI::App* sub = nullptr;
  for (const auto& a : args) {
    if (!a.empty() && a[0] != '-') {
      sub = app.get_subcommand_no_throw(a);
      break;
    }
  }
  if (!sub) return args;

  for (const auto* opt : sub->get_options()) {
    std::string name = opt->get_lnames().empty() ? "" : opt->get_lnames()[0];
    if (name.empty() || name == "config" || !cfg.contains(name)) continue;
    std::string flag = "--" + name;
    if (std::find(args.begin(), args.end(), flag) != args.end()) continue;
    const json& v = cfg.at(name);
    if (v.is_boolean()) {
      if (v.get<bool>()) args.push_back(flag);
    } else if (v.is_string()) {
      args.push_back(flag);
      args.push_back(v.get<std::string>());
    } else if (v.is_number()) {
      args.push_back(flag);
      args.push_back(v.dump());
    } else {
      throw BadSpecError("config key '" + name + "' has an unsupported type");
    }
  }
  return args;
}

struct ParamFlags {
  double p = 1.0;
  std::optional<double> q;
  std::optional<double> r;

  DistanceParams to_params() const {
    DistanceParams d;
    d.p = p;
    d.q = q;
    d.r = r;
    return d;
  }
};

void add_param_flags(CLI::App* sub, ParamFlags& pf) {
  sub->add_option("--p", pf.p, "primary index p");
  sub->add_option("--q", pf.q, "secondary index q");
  sub->add_option("--r", pf.r, "power-mean index r");
}

json catalog_json() {
  json arr = json::array();
  for (const auto& e : bound_catalog()) {
    arr.push_back(json{{"id", std::string(to_string(e.id))},
                       {"direction", std::string(to_string(e.direction))},
                       {"target", std::string(to_string(e.target))},
                       {"param_domain", e.param_domain},
                       {"scope", std::string(to_string(e.scope))},
                       {"citation", e.citation}});
  }
  return json{{"schema", 1}, {"kind", "catalog"}, {"entries", arr}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"p-angular distance library: bounds, verification, probes"};
  app.require_subcommand(1);

  std::string config_path;

  // --- eval ---
  auto* eval = app.add_subcommand("eval", "evaluate a distance on two vectors");
  std::string eval_space, eval_x, eval_y;
  ParamFlags eval_pf;
  bool eval_skew = false;
  eval->add_option("--space", eval_space, "space spec, e.g. l2:2")->required();
  eval->add_option("--x", eval_x, "first vector, comma separated")->required();
  eval->add_option("--y", eval_y, "second vector, comma separated")->required();
  add_param_flags(eval, eval_pf);
  eval->add_flag("--skew", eval_skew, "evaluate the skew distance beta_p");
  eval->add_option("--config", config_path, "JSON config mirroring flags");

  // --- bounds ---
  auto* bounds = app.add_subcommand("bounds", "evaluate bounds on a norm triple");
  std::string bounds_triple, bounds_id, bounds_regime, bounds_format = "csv";
  std::string bounds_output;
  ParamFlags bounds_pf;
  std::optional<double> bounds_alpha, bounds_alpha_q;
  bool bounds_hile_limit = false;
  bounds->add_option("--triple", bounds_triple, "a,b,c")->required();
  add_param_flags(bounds, bounds_pf);
  bounds->add_option("--id", bounds_id, "single bound id (default: all evaluable)");
  bounds->add_option("--alpha", bounds_alpha, "angular distance alpha, if needed");
  bounds->add_option("--alpha-q", bounds_alpha_q, "alpha_q, if needed");
  bounds->add_option("--regime", bounds_regime, "pin the parameter regime");
  bounds->add_flag("--hile-limit", bounds_hile_limit,
                   "HILE difference-quotient limit at |x| = |y|");
  bounds->add_option("--format", bounds_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  bounds->add_option("--output", bounds_output, "write to file instead of stdout");
  bounds->add_option("--config", config_path, "JSON config mirroring flags");

  // --- chain ---
  auto* chain = app.add_subcommand("chain", "ordering of the six triple bounds");
  std::string chain_triple, chain_format = "csv", chain_output;
  ParamFlags chain_pf;
  std::optional<double> chain_alpha_p;
  chain->add_option("--triple", chain_triple, "a,b,c")->required();
  add_param_flags(chain, chain_pf);
  chain->add_option("--alpha-p", chain_alpha_p, "alpha_p value to place in the chain");
  chain->add_option("--format", chain_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  chain->add_option("--output", chain_output, "write to file instead of stdout");
  chain->add_option("--config", config_path, "JSON config mirroring flags");

  // --- verify ---
  auto* verify = app.add_subcommand("verify", "seeded property verification");
  std::string verify_property, verify_space, verify_format = "json", verify_output;
  ParamFlags verify_pf;
  int verify_samples = 10000;
  std::uint64_t verify_seed = env_seed();
  double verify_tol = 1e-9, verify_lo = 0.5, verify_hi = 4.0;
  bool verify_list = false;
  verify->add_option("--property", verify_property, "property id");
  verify->add_option("--space", verify_space, "space spec");
  add_param_flags(verify, verify_pf);
  verify->add_option("--samples", verify_samples, "number of samples");
  verify->add_option("--seed", verify_seed, "PRNG seed (default PANGULAR_SEED)");
  verify->add_option("--tol", verify_tol, "relative slack");
  verify->add_option("--norm-lo", verify_lo, "lower norm bound for samples");
  verify->add_option("--norm-hi", verify_hi, "upper norm bound for samples");
  verify->add_flag("--list", verify_list, "list property ids and exit");
  verify->add_option("--format", verify_format, "json or csv")
      ->check(CLI::IsMember({"csv", "json"}));
  verify->add_option("--output", verify_output, "write to file instead of stdout");
  verify->add_option("--config", config_path, "JSON config mirroring flags");

  // --- probe ---
  auto* probe = app.add_subcommand("probe", "counterexample search");
  std::string probe_space, probe_ineq, probe_output;
  ParamFlags probe_pf;
  int probe_restarts = 8, probe_steps = 1000;
  double probe_step_scale = 0.25;
  std::uint64_t probe_seed = env_seed();
  bool probe_classify = false;
  probe->add_option("--space", probe_space, "space spec")->required();
  probe->add_option("--ineq", probe_ineq, "characterization inequality id");
  add_param_flags(probe, probe_pf);
  probe->add_option("--restarts", probe_restarts, "search restarts");
  probe->add_option("--steps", probe_steps, "steps per restart");
  probe->add_option("--step-scale", probe_step_scale, "initial perturbation size");
  probe->add_option("--seed", probe_seed, "PRNG seed (default PANGULAR_SEED)");
  probe->add_flag("--classify", probe_classify, "run the classification panel");
  probe->add_option("--output", probe_output, "write to file instead of stdout");
  probe->add_option("--config", config_path, "JSON config mirroring flags");

  // --- catalog ---
  auto* catalog = app.add_subcommand("catalog", "emit the bound registry");
  std::string catalog_format = "csv", catalog_output;
  catalog->add_option("--format", catalog_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  catalog->add_option("--output", catalog_output, "write to file instead of stdout");
  catalog->add_option("--config", config_path, "JSON config mirroring flags");

  try {
    auto full_args = apply_config(app, args);
    std::vector<const char*> argv;
    argv.push_back("pangular");
    for (const auto& a : full_args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.code() << ": " << e.what() << "\n";
    return 2;
  }

  try {
    if (*eval) {
      SpaceSpec space = SpaceSpec::parse(eval_space);
      Vec x = parse_vector(eval_x);
      Vec y = parse_vector(eval_y);
      double value = eval_skew ? beta_p(space, x, y, eval_pf.p)
                               : alpha_p(space, x, y, eval_pf.p);
      out << fmt17(value) << "\n";
      return 0;
    }

    if (*bounds) {
      NormTriple t = parse_triple(bounds_triple);
      BoundExtras extras;
      extras.alpha = bounds_alpha;
      extras.alpha_q = bounds_alpha_q;
      extras.hile_limit = bounds_hile_limit;
      if (!bounds_regime.empty()) extras.regime = bounds_regime;
      DistanceParams params = bounds_pf.to_params();

      std::vector<BoundResult> results;
      if (!bounds_id.empty()) {
        auto id = bound_id_from_string(bounds_id);
        if (!id) throw BadSpecError("unknown bound id '" + bounds_id + "'");
        results.push_back(evaluate_bound(*id, params, t, extras));
      } else {
        for (const auto& entry : bound_catalog()) {
          if (!results.empty() && results.back().id == entry.id) continue;
          try {
            results.push_back(evaluate_bound(entry.id, params, t, extras));
          } catch (const Error&) {
            // not evaluable with the provided parameters; skip
          }
        }
      }
      if (bounds_format == "csv") {
        emit(bound_results_csv(results), bounds_output, out);
      } else {
        json arr = json::array();
        for (const auto& r : results) arr.push_back(json::parse(to_json(r)));
        json j{{"schema", 1}, {"kind", "bound_results"}, {"results", arr}};
        emit(j.dump(2) + "\n", bounds_output, out);
      }
      return 0;
    }

    if (*chain) {
      NormTriple t = parse_triple(chain_triple);
      bool with_alpha = chain_alpha_p.has_value();
      ChainReport rep = with_alpha ? chain_values(chain_pf.p, t, *chain_alpha_p)
                                   : chain_values(chain_pf.p, t);
      emit(chain_format == "csv" ? chain_csv(rep, with_alpha)
                                 : to_json(rep, with_alpha),
           chain_output, out);
      return rep.ok() ? 0 : 1;
    }

    if (*verify) {
      if (verify_list) {
        for (const auto& id : property_ids()) out << id << "\n";
        return 0;
      }
      if (verify_property.empty() || verify_space.empty()) {
        err << "error: BadSpec: verify needs --property and --space\n";
        return 2;
      }
      SampleConfig cfg;
      cfg.space = SpaceSpec::parse(verify_space);
      cfg.seed = verify_seed;
      cfg.n_samples = verify_samples;
      cfg.norm_lo = verify_lo;
      cfg.norm_hi = verify_hi;
      VerificationReport rep =
          check_property(verify_property, cfg, verify_pf.to_params(), verify_tol);
      emit(verify_format == "json" ? to_json(rep) : violations_csv(rep),
           verify_output, out);
      return rep.passed ? 0 : 1;
    }

    if (*probe) {
      SpaceSpec space = SpaceSpec::parse(probe_space);
      SearchConfig cfg;
      cfg.restarts = probe_restarts;
      cfg.steps_per_restart = probe_steps;
      cfg.step_scale = probe_step_scale;
      cfg.seed = probe_seed;
      if (probe_classify) {
        Verdict verdict = classify_space(space, cfg);
        emit(to_json(verdict), probe_output, out);
        return verdict.kind == Verdict::Kind::NOT_IPS ? 1 : 0;
      }
      if (probe_ineq.empty()) {
        err << "error: BadSpec: probe needs --ineq or --classify\n";
        return 2;
      }
      auto id = bound_id_from_string(probe_ineq);
      if (!id) throw BadSpecError("unknown bound id '" + probe_ineq + "'");
      SearchResult res = search_violation(*id, probe_pf.to_params(), space, cfg);
      emit(to_json(res), probe_output, out);
      return res.found ? 1 : 0;
    }

    if (*catalog) {
      emit(catalog_format == "csv" ? catalog_csv() : catalog_json().dump(2) + "\n",
           catalog_output, out);
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.code() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: Internal: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace pangular::cli
