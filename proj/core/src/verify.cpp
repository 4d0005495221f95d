#include "pangular/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>

#include "pangular/rng.hpp"

namespace pangular {

namespace {

Vec random_direction(SplitMix64& g, int dim) {
  Vec u(dim);
  while (true) {
    double peak = 0.0;
    for (int i = 0; i < dim; ++i) {
      u[i] = g.uniform(-1.0, 1.0);
      peak = std::max(peak, std::fabs(u[i]));
    }
    if (peak > 1e-2) return u;
  }
}

Vec with_norm(const SpaceSpec& sp, const Vec& v, double target) {
  return scaled(v, target / norm(sp, v));
}

struct PairCtx {
  Vec x, y;
  double a = 0.0, b = 0.0;
  NormTriple t;
};

PairCtx draw_pair(const SampleConfig& cfg, int index) {
  auto [x, y] = sample_pair(cfg, index);
  PairCtx ctx;
  ctx.x = std::move(x);
  ctx.y = std::move(y);
  ctx.a = norm(cfg.space, ctx.x);
  ctx.b = norm(cfg.space, ctx.y);
  ctx.t = triple_of(cfg.space, ctx.x, ctx.y);
  return ctx;
}

double rel_scale(double lhs, double rhs) {
  return std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
}

struct Recorder {
  std::vector<Violation>& out;
  double tol;
  int index;
  const Vec* x = nullptr;
  const Vec* y = nullptr;

  void push(double lhs, double rhs, double gap) {
    Violation v;
    v.index = index;
    v.lhs = lhs;
    v.rhs = rhs;
    v.gap = gap;
    if (x) v.x = *x;
    if (y) v.y = *y;
    out.push_back(std::move(v));
  }
  void le(double lhs, double rhs) {
    if (lhs > rhs + tol * rel_scale(lhs, rhs)) push(lhs, rhs, lhs - rhs);
  }
  void eq(double lhs, double rhs) {
    double diff = std::fabs(lhs - rhs);
    if (diff > tol * rel_scale(lhs, rhs)) push(lhs, rhs, diff);
  }
};

bool needs_alpha(BoundId id) {
  switch (id) {
    case BoundId::ALPHAREL_UP:
    case BoundId::ALPHAREL_LO:
    case BoundId::SREDINE:
    case BoundId::KVADRATIK2:
    case BoundId::PAMETNO:
      return true;
    default:
      return false;
  }
}

bool needs_alpha_q(BoundId id) {
  switch (id) {
    case BoundId::HILE_EXT:
    case BoundId::HILE3:
    case BoundId::KORIJENJE:
    case BoundId::THA_II:
    case BoundId::THA_III:
    case BoundId::THA_V:
    case BoundId::THA_VI:
      return true;
    default:
      return false;
  }
}

bool skips_equal_norms(BoundId id) {
  return id == BoundId::HILE || id == BoundId::HILE_EXT || id == BoundId::THA_VI;
}

bool skips_equal_vectors(BoundId id) {
  switch (id) {
    case BoundId::REFINED_UP:
    case BoundId::REFINED_LO:
    case BoundId::ZA_R1_UP:
    case BoundId::ZA_R1_LO:
      return true;
    default:
      return false;
  }
}

double target_of(BoundId id, const SampleConfig& cfg, const DistanceParams& params,
                 const PairCtx& ctx) {
  switch (catalog_entry(id).target) {
    case BoundTarget::AlphaP:
      return alpha_p(cfg.space, ctx.x, ctx.y, params.p);
    case BoundTarget::BetaP: {
      double p = id == BoundId::DEHGHAN_UP || id == BoundId::DEHGHAN_LO
                     ? 0.0
                     : params.p;
      return beta_p(cfg.space, ctx.x, ctx.y, p);
    }
    case BoundTarget::Alpha:
      return angular(cfg.space, ctx.x, ctx.y);
    case BoundTarget::AlphaR:
      if (!params.r) throw ParamOutOfDomainError("target alpha_r needs r");
      return alpha_p(cfg.space, ctx.x, ctx.y, *params.r);
  }
  throw ParamOutOfDomainError("unknown bound target");
}

// One inequality of the registry checked against its target quantity.
void check_registry_bound(BoundId id, const SampleConfig& cfg,
                          const DistanceParams& params, double tol, int index,
                          std::vector<Violation>& out) {
  PairCtx ctx = draw_pair(cfg, index);
  if (skips_equal_norms(id) && ctx.t.a == ctx.t.b) return;
  if (skips_equal_vectors(id) && ctx.t.c == 0.0) return;

  BoundExtras ex;
  if (needs_alpha(id)) ex.alpha = angular(cfg.space, ctx.x, ctx.y);
  if (needs_alpha_q(id)) {
    if (!params.q) throw ParamOutOfDomainError("bound needs parameter q");
    ex.alpha_q = alpha_p(cfg.space, ctx.x, ctx.y, *params.q);
  }
  BoundResult res = evaluate_bound(id, params, ctx.t, ex);
  double target = target_of(id, cfg, params, ctx);

  Direction dir = catalog_entry(id).direction;
  if (id == BoundId::KVADRATIK2 && res.regime == "alpha>sqrt(2)") {
    dir = Direction::Upper;
  }
  Recorder rec{out, tol, index, &ctx.x, &ctx.y};
  if (dir == Direction::Upper) {
    rec.le(target, res.value);
  } else {
    rec.le(res.value, target);
  }
}

using CheckFn = std::function<void(const SampleConfig&, const DistanceParams&,
                                   double, int, std::vector<Violation>&)>;

const std::map<std::string, CheckFn>& property_table() {
  static const std::map<std::string, CheckFn> table = [] {
    std::map<std::string, CheckFn> t;

    t["norm_triangle"] = [](const SampleConfig& cfg, const DistanceParams&,
                            double tol, int index, std::vector<Violation>& out) {
      PairCtx ctx = draw_pair(cfg, index);
      Recorder rec{out, tol, index, &ctx.x, &ctx.y};
      rec.le(ctx.t.c, ctx.a + ctx.b);
      rec.le(std::fabs(ctx.a - ctx.b), ctx.t.c);
    };

    t["triple_validity"] = [](const SampleConfig& cfg, const DistanceParams&,
                              double tol, int index, std::vector<Violation>& out) {
      PairCtx ctx = draw_pair(cfg, index);
      double c = norm(cfg.space, subtract(ctx.x, ctx.y));
      Recorder rec{out, tol, index, &ctx.x, &ctx.y};
      try {
        validate_triple(ctx.a, ctx.b, c);
      } catch (const TripleInfeasibleError&) {
        rec.push(c, ctx.a + ctx.b, 1.0);
      }
    };

    t["radial_composition"] = [](const SampleConfig& cfg, const DistanceParams&,
                                 double tol, int index,
                                 std::vector<Violation>& out) {
      PairCtx ctx = draw_pair(cfg, index);
      auto g = substream(cfg.seed ^ 0x7261646cULL, static_cast<std::uint64_t>(index));
      auto draw_exponent = [&g] {
        double v = g.uniform(0.25, 2.0);
        return g.next_unit() < 0.5 ? -v : v;
      };
      double s = draw_exponent();
      double u = draw_exponent();
      Vec once = radial_transform(cfg.space, radial_transform(cfg.space, ctx.x, u), s);
      Vec direct = radial_transform(cfg.space, ctx.x, s * u);
      double diff = norm(cfg.space, subtract(once, direct));
      double scale = norm(cfg.space, direct);
      Recorder rec{out, tol, index, &ctx.x, nullptr};
      rec.le(diff, tol * std::max(1.0, scale));
    };

    t["alpha_homogeneity"] = [](const SampleConfig& cfg, const DistanceParams& params,
                                double tol, int index, std::vector<Violation>& out) {
      PairCtx ctx = draw_pair(cfg, index);
      auto g = substream(cfg.seed ^ 0x686f6d6fULL, static_cast<std::uint64_t>(index));
      double scale = 10.0 * (1.0 - g.next_unit());  // (0, 10]
      double lhs = alpha_p(cfg.space, scaled(ctx.x, scale), scaled(ctx.y, scale),
                           params.p);
      double rhs = std::pow(scale, params.p) * alpha_p(cfg.space, ctx.x, ctx.y, params.p);
      Recorder rec{out, tol, index, &ctx.x, &ctx.y};
      rec.eq(lhs, rhs);
    };

    t["veza_identity"] = [](const SampleConfig& cfg, const DistanceParams& params,
                            double tol, int index, std::vector<Violation>& out) {
      PairCtx ctx = draw_pair(cfg, index);
      double lhs = beta_p(cfg.space, ctx.x, ctx.y, params.p);
      double rhs = std::pow(ctx.a, params.p - 1.0) * std::pow(ctx.b, params.p - 1.0) *
                   alpha_p(cfg.space, ctx.x, ctx.y, 2.0 - params.p);
      Recorder rec{out, tol, index, &ctx.x, &ctx.y};
      rec.eq(lhs, rhs);
    };

    t["identitet0_zero"] = [](const SampleConfig& cfg, const DistanceParams& params,
                              double tol, int index, std::vector<Violation>& out) {
      PairCtx ctx = draw_pair(cfg, index);
      double ap = alpha_p(cfg.space, ctx.x, ctx.y, params.p);
      double al = angular(cfg.space, ctx.x, ctx.y);
      double pa = std::pow(ctx.a, params.p);
      double pb = std::pow(ctx.b, params.p);
      Recorder rec{out, tol, index, &ctx.x, &ctx.y};
      rec.eq(ap * ap, (pa - pb) * (pa - pb) + pa * pb * al * al);
    };

    t["tha_iv_identity"] = [](const SampleConfig& cfg, const DistanceParams& params,
                              double tol, int index, std::vector<Violation>& out) {
      PairCtx ctx = draw_pair(cfg, index);
      double lhs = alpha_p(cfg.space, ctx.x, ctx.y, -params.p);
      double rhs = std::pow(ctx.a, -params.p) * std::pow(ctx.b, -params.p) *
                   alpha_p(cfg.space, ctx.x, ctx.y, params.p);
      Recorder rec{out, tol, index, &ctx.x, &ctx.y};
      rec.eq(lhs, rhs);
    };

    t["ips_formula_consistency"] = [](const SampleConfig& cfg,
                                      const DistanceParams& params, double tol,
                                      int index, std::vector<Violation>& out) {
      PairCtx ctx = draw_pair(cfg, index);
      double ap = alpha_p(cfg.space, ctx.x, ctx.y, params.p);
      Recorder rec{out, tol, index, &ctx.x, &ctx.y};
      rec.eq(ips_alpha_p_sq(ctx.t, params.p), ap * ap);
    };

    t["power_mean_monotone"] = [](const SampleConfig& cfg, const DistanceParams&,
                                  double tol, int index,
                                  std::vector<Violation>& out) {
      auto g = substream(cfg.seed ^ 0x706d6f6eULL, static_cast<std::uint64_t>(index));
      double a = g.uniform(cfg.norm_lo, cfg.norm_hi);
      double b = g.uniform(cfg.norm_lo, cfg.norm_hi);
      double r = g.uniform(-4.0, 4.0);
      double s = r + g.uniform(1e-3, 3.0);
      double pick = g.next_unit();
      if (pick < 0.1) r = -std::numeric_limits<double>::infinity();
      if (pick > 0.9) s = std::numeric_limits<double>::infinity();
      Recorder rec{out, tol, index, nullptr, nullptr};
      rec.le(power_mean(r, a, b), power_mean(s, a, b));
    };

    t["power_mean_geometric_limit"] = [](const SampleConfig& cfg,
                                         const DistanceParams&, double, int index,
                                         std::vector<Violation>& out) {
      auto g = substream(cfg.seed ^ 0x706d3030ULL, static_cast<std::uint64_t>(index));
      double a = g.uniform(cfg.norm_lo, cfg.norm_hi);
      double b = g.uniform(cfg.norm_lo, cfg.norm_hi);
      double geo = std::sqrt(a) * std::sqrt(b);
      Recorder rec{out, 0.0, index, nullptr, nullptr};
      for (double r : {1e-8, -1e-8}) {
        double v = power_mean(r, a, b);
        if (std::fabs(v - geo) > 1e-6 * geo) rec.push(v, geo, std::fabs(v - geo));
      }
    };

    auto chain_check = [](bool ge_regime) {
      return [ge_regime](const SampleConfig& cfg, const DistanceParams& params,
                         double, int index, std::vector<Violation>& out) {
        if (ge_regime != (params.p >= 1.0)) {
          throw ParamOutOfDomainError("p outside the chain property regime");
        }
        PairCtx ctx = draw_pair(cfg, index);
        double ap = alpha_p(cfg.space, ctx.x, ctx.y, params.p);
        ChainReport rep = chain_values(params.p, ctx.t, ap);
        for (const auto& v : rep.violations) {
          Violation viol;
          viol.index = index;
          viol.lhs = v.lhs;
          viol.rhs = v.rhs;
          viol.gap = std::fabs(v.lhs - v.rhs);
          viol.x = ctx.x;
          viol.y = ctx.y;
          out.push_back(std::move(viol));
        }
      };
    };
    t["chain_p_ge_1"] = chain_check(true);
    t["chain_p_lt_1"] = chain_check(false);

    t["dominance_new_vs_maligranda"] = [](const SampleConfig& cfg,
                                          const DistanceParams& params, double tol,
                                          int index, std::vector<Violation>& out) {
      PairCtx ctx = draw_pair(cfg, index);
      double upper_new = evaluate_bound(BoundId::NEW_K, params, ctx.t).value;
      double upper_mal = evaluate_bound(BoundId::MAL_UP, params, ctx.t).value;
      Recorder rec{out, tol, index, &ctx.x, &ctx.y};
      rec.le(upper_new, upper_mal);
    };

    t["dominance_lower_m01_le_k"] = [](const SampleConfig& cfg,
                                       const DistanceParams& params, double tol,
                                       int index, std::vector<Violation>& out) {
      if (!(params.p >= 0.0) || !(params.p < 1.0)) {
        throw ParamOutOfDomainError("holds for 0 <= p < 1");
      }
      PairCtx ctx = draw_pair(cfg, index);
      double lower_mal = evaluate_bound(BoundId::MAL_LO, params, ctx.t).value;
      double lower_new = evaluate_bound(BoundId::NEW_k, params, ctx.t).value;
      Recorder rec{out, tol, index, &ctx.x, &ctx.y};
      rec.le(lower_mal, lower_new);
    };

    t["hile_dominance"] = [](const SampleConfig& cfg, const DistanceParams& params,
                             double tol, int index, std::vector<Violation>& out) {
      if (!(params.p >= 1.0)) throw ParamOutOfDomainError("holds for p >= 1");
      PairCtx ctx = draw_pair(cfg, index);
      if (ctx.t.a == ctx.t.b) return;
      double upper_new = evaluate_bound(BoundId::NEW_K, params, ctx.t).value;
      double upper_hile = evaluate_bound(BoundId::HILE, params, ctx.t).value;
      Recorder rec{out, tol, index, &ctx.x, &ctx.y};
      rec.le(upper_new, upper_hile);
    };

    t["new_bound_formula_identity"] = [](const SampleConfig& cfg,
                                         const DistanceParams& params, double tol,
                                         int index, std::vector<Violation>& out) {
      // K at p >= 1 and k at p < 1 are the same expression in (a, b, c)
      PairCtx ctx = draw_pair(cfg, index);
      const NormTriple& t3 = ctx.t;
      double expr = std::pow(t3.a, params.p) + std::pow(t3.b, params.p) -
                    t3.slack() * std::pow(t3.min_norm(), params.p - 1.0);
      BoundId id = params.p >= 1.0 ? BoundId::NEW_K : BoundId::NEW_k;
      Recorder rec{out, tol, index, &ctx.x, &ctx.y};
      rec.eq(evaluate_bound(id, params, t3).value, expr);
    };

    t["positivity_new_k"] = [](const SampleConfig& cfg, const DistanceParams& params,
                               double tol, int index, std::vector<Violation>& out) {
      if (!(params.p >= 0.0) || !(params.p <= 2.0)) {
        throw ParamOutOfDomainError("nonnegativity holds for p in [0, 2]");
      }
      PairCtx ctx = draw_pair(cfg, index);
      double v = evaluate_bound(BoundId::NEW_k, params, ctx.t).value;
      Recorder rec{out, tol, index, &ctx.x, &ctx.y};
      rec.le(0.0, v);
    };

    t["refined_refines_angular"] = [](const SampleConfig& cfg,
                                      const DistanceParams& params, double tol,
                                      int index, std::vector<Violation>& out) {
      PairCtx ctx = draw_pair(cfg, index);
      if (ctx.t.c == 0.0) return;
      double ang_up = evaluate_bound(BoundId::ANG_UP, params, ctx.t).value;
      double ang_lo = evaluate_bound(BoundId::ANG_LO, params, ctx.t).value;
      double ref_up = evaluate_bound(BoundId::REFINED_UP, params, ctx.t).value;
      double ref_lo = evaluate_bound(BoundId::REFINED_LO, params, ctx.t).value;
      Recorder rec{out, tol, index, &ctx.x, &ctx.y};
      rec.le(ref_up, ang_up);
      rec.le(ang_lo, ref_lo);
    };

    t["za_r1_matches_refined"] = [](const SampleConfig& cfg, const DistanceParams&,
                                    double tol, int index,
                                    std::vector<Violation>& out) {
      PairCtx ctx = draw_pair(cfg, index);
      if (ctx.t.c == 0.0) return;
      DistanceParams unit;
      unit.r = 1.0;
      Recorder rec{out, tol, index, &ctx.x, &ctx.y};
      rec.eq(evaluate_bound(BoundId::REFINED_UP, unit, ctx.t).value,
             evaluate_bound(BoundId::ZA_R1_UP, unit, ctx.t).value);
      rec.eq(evaluate_bound(BoundId::REFINED_LO, unit, ctx.t).value,
             evaluate_bound(BoundId::ZA_R1_LO, unit, ctx.t).value);
    };

    t["kvadratik2_conditional"] = [](const SampleConfig& cfg,
                                     const DistanceParams& params, double tol,
                                     int index, std::vector<Violation>& out) {
      check_registry_bound(BoundId::KVADRATIK2, cfg, params, tol, index, out);
    };

    for (const auto& entry : bound_catalog()) {
      std::string name = "bound_" + std::string(to_string(entry.id));
      if (t.count(name)) continue;  // HILE_EXT has two catalog rows
      BoundId id = entry.id;
      t[name] = [id](const SampleConfig& cfg, const DistanceParams& params,
                     double tol, int index, std::vector<Violation>& out) {
        check_registry_bound(id, cfg, params, tol, index, out);
      };
    }

    return t;
  }();
  return table;
}

}  // namespace

std::pair<Vec, Vec> sample_pair(const SampleConfig& cfg, int index) {
  if (index < 0 || index >= cfg.n_samples) {
    throw ParamOutOfDomainError("sample index out of range");
  }
  if (!(cfg.norm_lo > 0.0) || !(cfg.norm_hi >= cfg.norm_lo)) {
    throw ParamOutOfDomainError("norm_range needs 0 < lo <= hi");
  }
  auto g = substream(cfg.seed, static_cast<std::uint64_t>(index));
  const int dim = cfg.space.dim;

  double stratum = g.next_unit();
  double nx = g.uniform(cfg.norm_lo, cfg.norm_hi);
  Vec x = with_norm(cfg.space, random_direction(g, dim), nx);

  if (stratum < 0.6) {
    // generic box pair
    double ny = g.uniform(cfg.norm_lo, cfg.norm_hi);
    Vec y = with_norm(cfg.space, random_direction(g, dim), ny);
    return {std::move(x), std::move(y)};
  }
  if (stratum < 0.8) {
    // near-equal norms
    double ny = std::clamp(nx * (1.0 + 1e-6 * g.uniform(-1.0, 1.0)), cfg.norm_lo,
                           cfg.norm_hi);
    Vec y = with_norm(cfg.space, random_direction(g, dim), ny);
    return {std::move(x), std::move(y)};
  }
  // near-collinear (both orientations), small transverse perturbation
  double lambda = g.uniform(0.2, 2.0);
  if (g.next_unit() < 0.5) lambda = -lambda;
  Vec base = scaled(x, lambda);
  Vec jitter = random_direction(g, dim);
  double eps = 1e-6 * norm(cfg.space, base) / norm(cfg.space, jitter);
  Vec y(dim);
  for (int i = 0; i < dim; ++i) y[i] = base[i] + eps * jitter[i];
  double ny = g.uniform(cfg.norm_lo, cfg.norm_hi);
  return {std::move(x), with_norm(cfg.space, y, ny)};
}

std::pair<Vec, Vec> realize_triple(const SpaceSpec& space, const NormTriple& t,
                                   double tol) {
  if (space.dim < 2) {
    throw DimensionTooSmallError("triple realization needs dim >= 2");
  }
  if (!(tol > 0.0)) throw ParamOutOfDomainError("tolerance must be positive");

  Vec e1(space.dim, 0.0);
  e1[0] = 1.0;
  Vec x = with_norm(space, e1, t.a);

  // y rotates on its sphere from +x direction (distance |a-b|) to -x
  // direction (distance a+b); bisect the crossing of |x - y| = c.
  auto y_at = [&](double th) {
    Vec v(space.dim, 0.0);
    v[0] = std::cos(std::numbers::pi * th);
    v[1] = std::sin(std::numbers::pi * th);
    return with_norm(space, v, t.b);
  };
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 10000; ++it) {
    double mid = 0.5 * (lo + hi);
    Vec y = y_at(mid);
    double g = norm(space, subtract(x, y));
    if (std::fabs(g - t.c) <= tol * std::max(t.c, t.a)) return {std::move(x), std::move(y)};
    if (g < t.c) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  throw NoConvergenceError("triple realization did not converge");
}

VerificationReport check_property(const std::string& property_id,
                                  const SampleConfig& cfg,
                                  const DistanceParams& params, double tol) {
  const auto& table = property_table();
  auto it = table.find(property_id);
  if (it == table.end()) {
    throw UnknownPropertyError("no property named '" + property_id + "'");
  }
  VerificationReport rep;
  rep.property_id = property_id;
  rep.space = cfg.space;
  rep.params = params;
  rep.seed = cfg.seed;
  rep.tol = tol;
  rep.rng = SplitMix64::name();
  for (int index = 0; index < cfg.n_samples; ++index) {
    it->second(cfg, params, tol, index, rep.violations);
  }
  rep.samples_run = cfg.n_samples;
  rep.passed = rep.violations.empty();
  rep.max_violation_gap = 0.0;
  for (const auto& v : rep.violations) {
    rep.max_violation_gap = std::max(rep.max_violation_gap, v.gap);
  }
  return rep;
}

std::vector<std::string> property_ids() {
  std::vector<std::string> ids;
  for (const auto& [name, fn] : property_table()) ids.push_back(name);
  return ids;
}

double asymptotic_value(SeqId id, double p, long n) {
  if (n < 1) throw ParamOutOfDomainError("sequence index must be >= 1");
  double nn = static_cast<double>(n);
  switch (id) {
    case SeqId::PHI:
      return nn * std::pow(nn / (nn + 1.0), p - 1.0) - nn + 1.0 + 1.0 / nn;
    case SeqId::PSI:
      return (nn + 1.0) * std::pow((nn + 1.0) / nn, p - 1.0) - nn + 1.0 / nn;
    case SeqId::XI:
      return nn * std::pow(nn / (nn + 1.0), p - 1.0) - nn +
             (p - 1.0) / (2.0 * p - 1.0) * (1.0 + 1.0 / nn);
  }
  throw ParamOutOfDomainError("unknown sequence");
}

RegionReport positivity_scan(BoundId id, std::span<const double> p_grid,
                             const SampleConfig& cfg) {
  const InequalitySpec& spec = catalog_entry(id);
  if (spec.direction != Direction::Lower) {
    throw ParamOutOfDomainError("positivity scan applies to lower bounds");
  }
  if (needs_alpha(id) || needs_alpha_q(id)) {
    throw ParamOutOfDomainError(
        "positivity scan needs a pure triple-level bound");
  }
  RegionReport rep;
  rep.bound_id = id;
  rep.seed = cfg.seed;
  for (double p : p_grid) {
    DistanceParams params;
    params.p = p;
    RegionEntry entry;
    entry.p = p;
    bool first = true;
    auto consider = [&](const NormTriple& t) {
      double v = evaluate_bound(id, params, t).value;
      if (first || v < entry.min_value) {
        entry.min_value = v;
        entry.min_triple = t;
        first = false;
      }
    };
    auto g = substream(cfg.seed ^ 0x706f7363ULL,
                       static_cast<std::uint64_t>(std::llround(p * 1024.0)) + 7);
    for (int i = 0; i < cfg.n_samples; ++i) {
      double a = g.uniform(cfg.norm_lo, cfg.norm_hi);
      double b = g.uniform(cfg.norm_lo, cfg.norm_hi);
      double c = g.uniform(std::fabs(a - b), a + b);
      consider(validate_triple(a, b, c));
    }
    // witness family (n, n+1, 1 + 1/n): sign change region for the
    // refined lower bound when p leaves [0, 2]
    for (long n = 1; n <= 10000; ++n) {
      double nn = static_cast<double>(n);
      consider(validate_triple(nn, nn + 1.0, 1.0 + 1.0 / nn));
    }
    entry.negative_found = entry.min_value < 0.0;
    rep.entries.push_back(entry);
  }
  return rep;
}

}  // namespace pangular
