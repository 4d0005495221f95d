// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Tolerances are pinned in code next to each check.

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pangular/bounds.hpp"
#include "pangular/distance.hpp"
#include "pangular/probe.hpp"
#include "pangular/space.hpp"
#include "pangular/verify.hpp"

using namespace pangular;

namespace {

constexpr std::uint64_t kSeed = 20240809;

DistanceParams with_p(double p) {
  DistanceParams d;
  d.p = p;
  return d;
}

DistanceParams pq(double p, double q) {
  DistanceParams d;
  d.p = p;
  d.q = q;
  return d;
}

DistanceParams pr(double p, double r) {
  DistanceParams d;
  d.p = p;
  d.r = r;
  return d;
}

std::vector<SpaceSpec> chain_spaces() {
  std::vector<SpaceSpec> spaces;
  for (int dim : {2, 3, 4}) {
    spaces.push_back(SpaceSpec::euclidean(dim));
    spaces.push_back(SpaceSpec::lp(1.0, dim));
    spaces.push_back(SpaceSpec::linf(dim));
  }
  return spaces;
}

SampleConfig cfg_for(const SpaceSpec& sp, int n) {
  SampleConfig cfg;
  cfg.space = sp;
  cfg.n_samples = n;
  cfg.seed = kSeed;
  cfg.norm_lo = 0.5;
  cfg.norm_hi = 4.0;
  return cfg;
}

bool criterion_fixtures(std::ostream& log) {
  NormTriple t1 = validate_triple(1, 4, 4);
  double d1 = evaluate_bound(BoundId::MAL_LO, with_p(-1), t1).value -
              evaluate_bound(BoundId::NEW_k, with_p(-1), t1).value;
  NormTriple t2 = validate_triple(1, 4, 4.5);
  double d2 = evaluate_bound(BoundId::MAL_LO, with_p(-1), t2).value -
              evaluate_bound(BoundId::NEW_k, with_p(-1), t2).value;
  bool ok = std::fabs(d1 - 1.0 / 12.0) <= 1e-12 && std::fabs(d2 + 0.375) <= 1e-12;
  if (!ok) log << "gaps " << d1 << " and " << d2;
  return ok;
}

bool criterion_chain(std::ostream& log) {
  const double p_grid[] = {0.0, 0.25, 0.5, 1.0, 1.5, 2.0, 3.0, -1.0};
  long violations = 0;
  for (const auto& sp : chain_spaces()) {
    SampleConfig cfg = cfg_for(sp, 10000);
    for (int i = 0; i < cfg.n_samples; ++i) {
      auto [x, y] = sample_pair(cfg, i);
      NormTriple t = triple_of(sp, x, y);
      for (double p : p_grid) {
        ChainReport rep = chain_values(p, t, alpha_p(sp, x, y, p));
        violations += static_cast<long>(rep.violations.size());
      }
    }
  }
  if (violations) log << violations << " chain violations";
  return violations == 0;
}

bool criterion_dominance(std::ostream& log) {
  const double upper_grid[] = {1.0, 1.5, 2.0, 3.0, 5.0, 0.0,  0.25,
                               0.5, 0.75, -0.5, -1.0, -2.0};
  const double lower_grid[] = {0.0, 0.25, 0.5, 0.75};
  const double hile_grid[] = {1.0, 2.0, 3.0, 5.0};
  long violations = 0;
  auto slack = [](double a, double b) {
    return 1e-9 * std::max({1.0, std::fabs(a), std::fabs(b)});
  };
  for (const auto& sp : chain_spaces()) {
    SampleConfig cfg = cfg_for(sp, 10000);
    for (int i = 0; i < cfg.n_samples; ++i) {
      auto [x, y] = sample_pair(cfg, i);
      NormTriple t = triple_of(sp, x, y);
      for (double p : upper_grid) {
        double lhs = evaluate_bound(BoundId::NEW_K, with_p(p), t).value;
        double rhs = evaluate_bound(BoundId::MAL_UP, with_p(p), t).value;
        if (lhs > rhs + slack(lhs, rhs)) ++violations;
      }
      for (double p : lower_grid) {
        double lhs = evaluate_bound(BoundId::MAL_LO, with_p(p), t).value;
        double rhs = evaluate_bound(BoundId::NEW_k, with_p(p), t).value;
        if (lhs > rhs + slack(lhs, rhs)) ++violations;
      }
      if (t.a != t.b) {
        for (double p : hile_grid) {
          double lhs = evaluate_bound(BoundId::NEW_K, with_p(p), t).value;
          double rhs = evaluate_bound(BoundId::HILE, with_p(p), t).value;
          if (lhs > rhs + slack(lhs, rhs)) ++violations;
        }
      }
    }
  }
  if (violations) log << violations << " dominance violations";
  return violations == 0;
}

bool criterion_positivity(std::ostream& log) {
  SampleConfig cfg = cfg_for(SpaceSpec::euclidean(2), 10000);
  const double nonneg_grid[] = {0.0, 0.5, 1.0, 1.5, 2.0};
  RegionReport nonneg = positivity_scan(BoundId::NEW_k, nonneg_grid, cfg);
  for (const auto& e : nonneg.entries) {
    if (e.negative_found || e.min_value < 0.0) {
      log << "negative value " << e.min_value << " at p=" << e.p;
      return false;
    }
  }
  const double neg_grid[] = {3.0, -1.0};
  RegionReport neg = positivity_scan(BoundId::NEW_k, neg_grid, cfg);
  for (const auto& e : neg.entries) {
    if (!e.negative_found) {
      log << "no negative value found at p=" << e.p;
      return false;
    }
  }
  double phi = asymptotic_value(SeqId::PHI, 3.0, 1000000);
  double psi = asymptotic_value(SeqId::PSI, 0.5, 1000000);
  double xi = asymptotic_value(SeqId::XI, 2.0, 1000000);
  bool limits_ok = std::fabs(phi - (-1.0)) <= 1e-3 && std::fabs(psi - 0.5) <= 1e-3 &&
                   std::fabs(xi - (-2.0 / 3.0)) <= 1e-3;
  if (!limits_ok) log << "sequence limits " << phi << ", " << psi << ", " << xi;
  return limits_ok;
}

bool criterion_ips_identities(std::ostream& log) {
  const double p_grid[] = {-1.0, 0.5, 2.0, 3.0};
  for (int dim : {2, 3, 4}) {
    SampleConfig cfg = cfg_for(SpaceSpec::euclidean(dim), 10000);
    for (double p : p_grid) {
      if (!check_property("identitet0_zero", cfg, with_p(p), 1e-9).passed) {
        log << "square identity failed, dim " << dim << " p " << p;
        return false;
      }
      if (!check_property("ips_formula_consistency", cfg, with_p(p), 1e-9).passed) {
        log << "closed form failed, dim " << dim << " p " << p;
        return false;
      }
      if (p != 0.0 &&
          !check_property("tha_iv_identity", cfg, with_p(p), 1e-10).passed) {
        log << "negative-index identity failed, dim " << dim << " p " << p;
        return false;
      }
    }
  }
  return true;
}

bool criterion_probe(std::ostream& log) {
  SearchConfig cfg;
  cfg.seed = kSeed;
  cfg.restarts = 8;
  cfg.steps_per_restart = 1000;

  auto linf = SpaceSpec::linf(2);
  DistanceParams pom;
  pom.r = -1.0;
  SearchResult res = search_violation(BoundId::POMOCNA, pom, linf, cfg);
  if (!res.found || res.margin < 0.5 - 1e-9) {
    log << "alpha_r probe margin " << res.margin;
    return false;
  }
  // map the witness back to the power-sum form with (p, q) = (-1, 1)
  Vec mx = radial_transform(linf, res.x, -1.0);
  Vec my = radial_transform(linf, res.y, -1.0);
  double mapped = violation_margin(BoundId::HILE3, pq(-1, 1), linf, mx, my);
  if (!(mapped > 0.0)) {
    log << "mapped witness margin " << mapped;
    return false;
  }

  // full panel in Euclidean dim 3: >= 1e5 margin evaluations in total
  std::vector<std::pair<BoundId, DistanceParams>> panel;
  for (auto& g : {pq(2, 1), pq(3, 1), pq(2, 0), pq(-1, 1)}) {
    panel.push_back({BoundId::HILE3, g});
  }
  for (double r : {0.0, 0.5, 1.0}) panel.push_back({BoundId::SREDINE, pr(2, r)});
  for (double p : {1.0, 2.0}) panel.push_back({BoundId::PAMETNO, with_p(p)});
  for (double r : {0.5, 1.0}) {
    DistanceParams d;
    d.r = r;
    panel.push_back({BoundId::REFINED_UP, d});  // the characterizing upper bound
  }

  SearchConfig panel_cfg;
  panel_cfg.seed = kSeed + 1;
  panel_cfg.restarts = 5;
  panel_cfg.steps_per_restart = 1850;
  long evaluations =
      static_cast<long>(panel.size()) * panel_cfg.restarts *
      (panel_cfg.steps_per_restart + 1);
  double max_margin = -1e300;
  auto l2 = SpaceSpec::euclidean(3);
  for (std::size_t i = 0; i < panel.size(); ++i) {
    SearchConfig entry_cfg = panel_cfg;
    entry_cfg.seed = panel_cfg.seed + i;
    SearchResult r = search_violation(panel[i].first, panel[i].second, l2, entry_cfg);
    max_margin = std::max(max_margin, r.margin);
  }
  if (evaluations < 100000) {
    log << "only " << evaluations << " evaluations";
    return false;
  }
  if (max_margin > 1e-9) {
    log << "false positive margin " << max_margin;
    return false;
  }
  return true;
}

bool criterion_sharpness(std::ostream& log) {
  SearchConfig cfg;
  cfg.seed = kSeed;
  cfg.restarts = 8;
  cfg.steps_per_restart = 1000;
  SearchResult res =
      search_violation(BoundId::SREDINE, pr(2, 2), SpaceSpec::euclidean(2), cfg);
  if (!res.found || res.margin <= 1e-6) {
    log << "r=2 power-mean margin " << res.margin;
    return false;
  }
  SampleConfig vcfg = cfg_for(SpaceSpec::euclidean(2), 10000);
  if (!check_property("kvadratik2_conditional", vcfg, with_p(2.0), 1e-9).passed) {
    log << "conditional quadratic-mean bound violated inside a cell";
    return false;
  }
  return true;
}

bool criterion_no_ips_certificate(std::ostream& log) {
  SearchConfig cfg;
  cfg.seed = kSeed;
  cfg.restarts = 4;
  cfg.steps_per_restart = 300;
  for (const auto& sp : {SpaceSpec::euclidean(3), SpaceSpec::lp(2.0, 4),
                         SpaceSpec::weighted_l2({1, 4})}) {
    Verdict v = classify_space(sp, cfg);
    if (v.kind != Verdict::Kind::CONSISTENT_WITH_IPS || v.witness.has_value()) {
      log << "unexpected verdict for " << sp.to_string();
      return false;
    }
  }
  for (const auto& sp : {SpaceSpec::linf(2), SpaceSpec::lp(1.0, 2)}) {
    Verdict v = classify_space(sp, cfg);
    if (v.kind != Verdict::Kind::NOT_IPS || !v.witness.has_value()) {
      log << "missed violation in " << sp.to_string();
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    std::function<bool(std::ostream&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "lower-bound fixtures (1,4,4) and (1,4,4.5) at p=-1", criterion_fixtures},
      {2, "chain ordering, 9 spaces x 8 indices x 10^4 samples", criterion_chain},
      {3, "dominance suites over the classical upper bounds", criterion_dominance},
      {4, "positivity region and witness-family asymptotics", criterion_positivity},
      {5, "inner-product identity suite in Euclidean dims 2-4", criterion_ips_identities},
      {6, "characterization probe: witness found, no false positives", criterion_probe},
      {7, "sharpness of the power-mean bound at r=2", criterion_sharpness},
      {8, "classification emits no positive inner-product certificate",
       criterion_no_ips_certificate},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    std::ostringstream detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail << "exception: " << e.what();
    }
    if (ok) {
      std::printf("PASS  %d  %s\n", c.number, c.name);
    } else {
      ++failed;
      std::printf("FAIL  %d  %s  (%s)\n", c.number, c.name, detail.str().c_str());
    }
    std::fflush(stdout);
  }
  if (failed == 0) {
    std::printf("all %zu acceptance criteria passed\n", criteria.size());
  } else {
    std::printf("%d acceptance criteria failed\n", failed);
  }
  return failed;
}
