#include "pangular/probe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pangular/rng.hpp"

namespace pangular {

namespace {

constexpr double kNormFloor = 1e-3;
constexpr double kNormCeil = 10.0;
constexpr double kBox = 10.0;
constexpr int kStallWindow = 20;

bool probe_allowed(BoundId id, const DistanceParams& params) {
  switch (id) {
    case BoundId::REFINED_UP:
    case BoundId::REFINED_LO:
    case BoundId::ZA_R1_UP:
    case BoundId::ZA_R1_LO:
    case BoundId::SREDINE:
    case BoundId::KVADRATIK2:
    case BoundId::HILE3:
    case BoundId::POMOCNA:
    case BoundId::KORIJENJE:
    case BoundId::PAMETNO:
    case BoundId::THA_II:
    case BoundId::THA_III:
    case BoundId::THA_V:
    case BoundId::THA_VI:
    case BoundId::KS:
    case BoundId::ALRASHED:
      return true;
    case BoundId::HILE_EXT:
      // only the |p/q| >= 1 branch with p/q < 1 says anything beyond
      // the all-spaces theorem
      return params.q && *params.q != 0.0 && params.p / *params.q < 1.0;
    default:
      return false;
  }
}

bool needs_alpha(BoundId id) {
  switch (id) {
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

void clamp_scale(const SpaceSpec& space, Vec& x, Vec& y) {
  double peak = std::max(norm(space, x), norm(space, y));
  if (peak <= 0.0) return;
  double t = 1.0;
  if (peak > kNormCeil) t = kNormCeil / peak;
  if (peak < kNormFloor) t = kNormFloor / peak;
  if (t != 1.0) {
    x = scaled(x, t);
    y = scaled(y, t);
  }
}

std::pair<Vec, Vec> random_pair(SplitMix64& g, int dim) {
  auto draw = [&g, dim] {
    Vec v(dim);
    while (true) {
      double peak = 0.0;
      for (int i = 0; i < dim; ++i) {
        v[i] = g.uniform(-kBox, kBox);
        peak = std::max(peak, std::fabs(v[i]));
      }
      if (peak > 1e-2) return v;
    }
  };
  return {draw(), draw()};
}

std::vector<std::pair<Vec, Vec>> canonical_starts(int dim) {
  auto axis = [dim](int i, double v) {
    Vec out(dim, 0.0);
    out[i % dim] = v;
    return out;
  };
  Vec ones(dim, 1.0);
  std::vector<std::pair<Vec, Vec>> starts;
  starts.push_back({ones, axis(0, 2.0)});  // mixed corner vs axis
  // anti-parallel direction with unequal norms: the sharpness region of the
  // power-mean bound for r > 1
  {
    Vec y = axis(0, -2.0);
    if (dim >= 2) y[1] = 1e-3;
    starts.push_back({axis(0, 1.0), y});
  }
  {
    Vec y = axis(0, -1.0);
    if (dim >= 2) y[1] = 1e-3;
    starts.push_back({axis(0, 1.0), y});
  }
  if (dim >= 2) {
    Vec diag(dim, 0.0);
    diag[0] = 0.6;
    diag[1] = 0.6;
    starts.push_back({axis(0, 1.0), diag});
  }
  return starts;
}

}  // namespace

double violation_margin(BoundId id, const DistanceParams& params,
                        const SpaceSpec& space, std::span<const double> x,
                        std::span<const double> y) {
  if (!probe_allowed(id, params)) {
    throw ParamOutOfDomainError(
        std::string(to_string(id)) +
        ": not a characterization inequality in this parameter regime");
  }
  if (id == BoundId::PAMETNO && space.dim < 3) {
    throw DimensionTooSmallError("PAMETNO characterizes only for dim >= 3");
  }
  if (norm(space, x) == 0.0 || norm(space, y) == 0.0) {
    throw ZeroVectorError("probe of a zero vector");
  }
  NormTriple t = triple_of(space, x, y);
  BoundExtras ex;
  if (needs_alpha(id)) ex.alpha = angular(space, x, y);
  if (needs_alpha_q(id)) {
    if (!params.q) throw ParamOutOfDomainError("needs parameter q");
    ex.alpha_q = alpha_p(space, x, y, *params.q);
  }
  BoundResult res = evaluate_bound(id, params, t, ex);

  double target;
  switch (catalog_entry(id).target) {
    case BoundTarget::AlphaP:
      target = alpha_p(space, x, y, params.p);
      break;
    case BoundTarget::Alpha:
      target = angular(space, x, y);
      break;
    case BoundTarget::AlphaR:
      if (!params.r) throw ParamOutOfDomainError("needs parameter r");
      target = alpha_p(space, x, y, *params.r);
      break;
    case BoundTarget::BetaP:
      target = beta_p(space, x, y, params.p);
      break;
    default:
      throw ParamOutOfDomainError("unsupported target");
  }

  Direction dir = catalog_entry(id).direction;
  if (id == BoundId::KVADRATIK2 && res.regime == "alpha>sqrt(2)") {
    dir = Direction::Upper;
  }
  return dir == Direction::Lower ? res.value - target : target - res.value;
}

SearchResult search_violation(BoundId id, const DistanceParams& params,
                              const SpaceSpec& space, const SearchConfig& cfg) {
  if (cfg.restarts < 1 || cfg.steps_per_restart < 1) {
    throw ParamOutOfDomainError("restarts and steps must be >= 1");
  }

  auto margin_or = [&](const Vec& x, const Vec& y) {
    try {
      return violation_margin(id, params, space, x, y);
    } catch (const DegenerateTripleError&) {
      return -std::numeric_limits<double>::infinity();
    } catch (const ZeroVectorError&) {
      return -std::numeric_limits<double>::infinity();
    }
  };

  // dimension / parameter errors should surface immediately, not silently
  // produce an empty search
  if (id == BoundId::PAMETNO && space.dim < 3) {
    throw DimensionTooSmallError("PAMETNO characterizes only for dim >= 3");
  }
  if (!probe_allowed(id, params)) {
    throw ParamOutOfDomainError(
        std::string(to_string(id)) +
        ": not a characterization inequality in this parameter regime");
  }

  SearchResult best;
  best.ineq_id = id;
  best.params = params;
  best.space = space;
  best.seed = cfg.seed;
  best.margin = -std::numeric_limits<double>::infinity();

  auto seeds = canonical_starts(space.dim);
  for (int restart = 0; restart < cfg.restarts; ++restart) {
    auto g = substream(cfg.seed, 0x73726368ULL + static_cast<std::uint64_t>(restart));
    auto [x, y] = restart < static_cast<int>(seeds.size())
                      ? seeds[restart]
                      : random_pair(g, space.dim);
    clamp_scale(space, x, y);
    double cur = margin_or(x, y);
    int best_step = 0;
    double step = cfg.step_scale;
    int stall = 0;
    Vec bx = x, by = y;
    double local_best = cur;
    for (int s = 0; s < cfg.steps_per_restart; ++s) {
      Vec cx = x, cy = y;
      for (double& v : cx) v *= std::exp(step * g.uniform(-1.0, 1.0));
      for (double& v : cy) v *= std::exp(step * g.uniform(-1.0, 1.0));
      clamp_scale(space, cx, cy);
      double cand = margin_or(cx, cy);
      if (cand > cur) {
        x = std::move(cx);
        y = std::move(cy);
        cur = cand;
        stall = 0;
        if (cand > local_best) {
          local_best = cand;
          bx = x;
          by = y;
          best_step = s + 1;
        }
      } else if (++stall >= kStallWindow) {
        step *= 0.5;
        stall = 0;
      }
    }
    if (local_best > best.margin) {
      best.margin = local_best;
      best.x = bx;
      best.y = by;
      best.restart_index = restart;
      best.step_count = best_step;
    }
  }

  // HILE3 reduces to the alpha_r form with r = q/p; a witness there maps
  // back through the radial transform with s = 1/p.
  if (id == BoundId::HILE3 && best.margin <= kFoundMargin && params.q &&
      params.p != 0.0) {
    double r = *params.q / params.p;
    if (std::fabs(r) > 0.0 && std::fabs(r) <= 1.0 && r != 1.0) {
      DistanceParams sub_params;
      sub_params.r = r;
      SearchConfig sub_cfg = cfg;
      sub_cfg.seed = mix64(cfg.seed ^ 0x706f6d6fULL);
      SearchResult sub =
          search_violation(BoundId::POMOCNA, sub_params, space, sub_cfg);
      if (sub.found) {
        Vec mx = radial_transform(space, sub.x, 1.0 / params.p);
        Vec my = radial_transform(space, sub.y, 1.0 / params.p);
        clamp_scale(space, mx, my);
        double m = margin_or(mx, my);
        if (m > best.margin) {
          best.margin = m;
          best.x = std::move(mx);
          best.y = std::move(my);
          best.restart_index = sub.restart_index;
          best.step_count = sub.step_count;
        }
      }
    }
  }

  best.found = best.margin > kFoundMargin;
  return best;
}

std::vector<std::pair<BoundId, DistanceParams>> characterization_panel(int dim) {
  auto pq = [](double p, double q) {
    DistanceParams d;
    d.p = p;
    d.q = q;
    return d;
  };
  auto pr = [](double p, double r) {
    DistanceParams d;
    d.p = p;
    d.r = r;
    return d;
  };
  auto r_only = [](double r) {
    DistanceParams d;
    d.r = r;
    return d;
  };

  std::vector<std::pair<BoundId, DistanceParams>> panel;
  for (auto& g : {pq(2, 1), pq(3, 1), pq(2, 0), pq(-1, 1)}) {
    panel.push_back({BoundId::HILE3, g});
  }
  for (double r : {0.0, 0.5, 1.0}) panel.push_back({BoundId::SREDINE, pr(2, r)});
  for (double r : {0.5, 1.0}) panel.push_back({BoundId::REFINED_UP, r_only(r)});
  panel.push_back({BoundId::POMOCNA, r_only(-1.0)});
  if (dim >= 3) {
    DistanceParams p1;
    p1.p = 1.0;
    DistanceParams p2;
    p2.p = 2.0;
    panel.push_back({BoundId::PAMETNO, p1});
    panel.push_back({BoundId::PAMETNO, p2});
  }
  return panel;
}

Verdict classify_space(const SpaceSpec& space, const SearchConfig& cfg) {
  auto panel = characterization_panel(space.dim);
  if (!cfg.pq_grid.empty()) {
    panel.clear();
    for (const auto& params : cfg.pq_grid) {
      if (params.q) {
        panel.push_back({BoundId::HILE3, params});
      } else if (params.r) {
        panel.push_back({BoundId::SREDINE, params});
      }
    }
  }
  Verdict verdict;
  for (std::size_t i = 0; i < panel.size(); ++i) {
    SearchConfig entry_cfg = cfg;
    entry_cfg.seed = mix64(cfg.seed ^ (0x70616e65ULL + i));
    SearchResult res =
        search_violation(panel[i].first, panel[i].second, space, entry_cfg);
    if (res.found) {
      verdict.kind = Verdict::Kind::NOT_IPS;
      verdict.witness = std::move(res);
      return verdict;
    }
  }
  verdict.kind = Verdict::Kind::CONSISTENT_WITH_IPS;
  return verdict;
}

}  // namespace pangular
