#include "pangular/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace pangular {

namespace {

double pw(double base, double e) { return std::pow(base, e); }

[[noreturn]] void out_of_domain(BoundId id, const std::string& why) {
  std::ostringstream os;
  os << to_string(id) << ": " << why;
  throw ParamOutOfDomainError(os.str());
}

double require_alpha(BoundId id, const BoundExtras& ex) {
  if (!ex.alpha) out_of_domain(id, "needs the angular distance alpha as input");
  if (!(*ex.alpha >= 0.0)) out_of_domain(id, "alpha must be nonnegative");
  return *ex.alpha;
}

double require_alpha_q(BoundId id, const BoundExtras& ex) {
  if (!ex.alpha_q) out_of_domain(id, "needs alpha_q as input");
  if (!(*ex.alpha_q >= 0.0)) out_of_domain(id, "alpha_q must be nonnegative");
  return *ex.alpha_q;
}

double require_q(BoundId id, const DistanceParams& params) {
  if (!params.q) out_of_domain(id, "needs parameter q");
  return *params.q;
}

double require_r(BoundId id, const DistanceParams& params) {
  if (!params.r) out_of_domain(id, "needs parameter r");
  return *params.r;
}

const char* mal_regime(double p) {
  if (p >= 1.0) return "p>=1";
  if (p >= 0.0) return "0<=p<1";
  return "p<0";
}

struct Eval {
  std::string regime;
  double value = 0.0;
};

Eval eval_impl(BoundId id, const DistanceParams& params, const NormTriple& t,
               const BoundExtras& ex) {
  const double a = t.a, b = t.b, c = t.c;
  const double m = t.min_norm();
  const double M = t.max_norm();
  const double slack = t.slack();     // a + b - c
  const double gap = t.norm_gap();    // |a - b|
  const double p = params.p;

  switch (id) {
    case BoundId::MAL_UP: {
      if (p >= 1.0) return {"p>=1", p * pw(M, p - 1.0) * c};
      if (p >= 0.0) return {"0<=p<1", (2.0 - p) * pw(M, p - 1.0) * c};
      return {"p<0", (2.0 - p) * (pw(m, p) / M) * c};
    }
    case BoundId::MAL_LO: {
      if (p >= 1.0) return {"p>=1", p / (2.0 * p - 1.0) * pw(M, p - 1.0) * c};
      if (p >= 0.0) return {"0<=p<1", p * pw(M, p - 1.0) * c};
      return {"p<0", p / (2.0 * p - 1.0) * (pw(m, p) / M) * c};
    }
    case BoundId::NEW_K: {
      double inner = p >= 1.0 ? m : M;
      return {p >= 1.0 ? "p>=1" : "p<1",
              pw(a, p) + pw(b, p) - slack * pw(inner, p - 1.0)};
    }
    case BoundId::NEW_k: {
      double inner = p >= 1.0 ? M : m;
      return {p >= 1.0 ? "p>=1" : "p<1",
              pw(a, p) + pw(b, p) - slack * pw(inner, p - 1.0)};
    }
    case BoundId::DRG_D: {
      double e = std::fabs(pw(a, p - 1.0) - pw(b, p - 1.0));
      double first = p >= 1.0 ? pw(m, p - 1.0) : pw(M, p - 1.0);
      return {p >= 1.0 ? "p>=1" : "p<1", c * first + e * M};
    }
    case BoundId::DRG_S: {
      double e = std::fabs(pw(a, p - 1.0) - pw(b, p - 1.0));
      double first = p >= 1.0 ? pw(M, p - 1.0) : pw(m, p - 1.0);
      return {p >= 1.0 ? "p>=1" : "p<1", c * first + e * m};
    }
    case BoundId::DRG_d: {
      double e = std::fabs(pw(a, p - 1.0) - pw(b, p - 1.0));
      double first = p >= 1.0 ? pw(M, p - 1.0) : pw(m, p - 1.0);
      return {p >= 1.0 ? "p>=1" : "p<1", c * first - e * M};
    }
    case BoundId::DRG_s: {
      double e = std::fabs(pw(a, p - 1.0) - pw(b, p - 1.0));
      double first = p >= 1.0 ? pw(m, p - 1.0) : pw(M, p - 1.0);
      return {p >= 1.0 ? "p>=1" : "p<1", c * first - e * m};
    }
    case BoundId::HILE: {
      if (p < 1.0) out_of_domain(id, "stated for p >= 1");
      if (a == b) {
        if (!ex.hile_limit) {
          throw DegenerateTripleError("HILE needs |x| != |y|");
        }
        return {"p>=1 (limit a=b)", p * pw(a, p - 1.0) * c};
      }
      return {"p>=1", (pw(M, p) - pw(m, p)) / (M - m) * c};
    }
    case BoundId::HILE_EXT: {
      double q = require_q(id, params);
      if (q == 0.0) out_of_domain(id, "needs q != 0");
      double ratio = p / q;
      if (!(std::fabs(ratio) >= 1.0)) out_of_domain(id, "needs |p/q| >= 1");
      if (a == b) throw DegenerateTripleError("HILE_EXT needs |x| != |y|");
      double aq = require_alpha_q(id, ex);
      double value = std::fabs((pw(b, p) - pw(a, p)) / (pw(b, q) - pw(a, q))) * aq;
      if (ratio >= 1.0) return {"p/q>=1", value};
      return {"|p/q|>=1", value};
    }
    case BoundId::SKEW_UP: {
      double g = a * pw(b, p - 1.0) + pw(a, p - 1.0) * b;
      double inner = p <= 1.0 ? M : m;
      return {p <= 1.0 ? "p<=1" : "p>1", g - slack * pw(inner, p - 1.0)};
    }
    case BoundId::SKEW_LO: {
      double g = a * pw(b, p - 1.0) + pw(a, p - 1.0) * b;
      double inner = p <= 1.0 ? m : M;
      return {p <= 1.0 ? "p<=1" : "p>1", g - slack * pw(inner, p - 1.0)};
    }
    case BoundId::DEHGHAN_UP:
      return {"p=0", c / M + gap / m};
    case BoundId::DEHGHAN_LO:
      return {"p=0", c / m - gap / M};
    case BoundId::ALPHAREL_UP: {
      double al = require_alpha(id, ex);
      double e = std::fabs(pw(a, p) - pw(b, p));
      double lead = p >= 0.0 ? pw(m, p) : pw(M, p);  // min{a^p, b^p}
      return {p >= 0.0 ? "p>=0" : "p<0", lead * al + e};
    }
    case BoundId::ALPHAREL_LO: {
      double al = require_alpha(id, ex);
      double e = std::fabs(pw(a, p) - pw(b, p));
      double lead = p >= 0.0 ? pw(M, p) : pw(m, p);  // max{a^p, b^p}
      return {p >= 0.0 ? "p>=0" : "p<0", lead * al - e};
    }
    case BoundId::ANG_UP:
      return {"all", (c + gap) / M};
    case BoundId::ANG_LO:
      return {"all", (c - gap) / m};
    case BoundId::REFINED_UP:
    case BoundId::REFINED_LO: {
      double r = require_r(id, params);
      if (!(r > 0.0) || std::isinf(r)) out_of_domain(id, "needs finite r > 0");
      if (c == 0.0) throw DegenerateTripleError("refined bounds undefined at x = y");
      double A = (c - gap) / m;
      double B = (c + gap) / M;
      double ratio = std::clamp(A / B, 0.0, 1.0);
      double factor;  // ((1 + ratio^r)/2)^(1/r)
      if (ratio == 0.0) {
        factor = pw(0.5, 1.0 / r);
      } else {
        double pow_m1 = std::expm1(r * std::log(ratio));
        factor = std::exp(std::log1p(pow_m1 / 2.0) / r);
      }
      if (id == BoundId::REFINED_UP) return {"r>0", factor * B};
      return {"r>0", A / factor};
    }
    case BoundId::ZA_R1_UP: {
      if (c == 0.0) throw DegenerateTripleError("r=1 refinement undefined at x = y");
      return {"r=1", (c * (a + b) - gap * gap) / (2.0 * a * b)};
    }
    case BoundId::ZA_R1_LO: {
      if (c == 0.0) throw DegenerateTripleError("r=1 refinement undefined at x = y");
      return {"r=1", 2.0 * (c * c - gap * gap) / (c * (a + b) - gap * gap)};
    }
    case BoundId::SREDINE: {
      double r = require_r(id, params);
      double al = require_alpha(id, ex);
      double value = power_mean(r, pw(a, p), pw(b, p)) * al;
      return {r <= 1.0 ? "r<=1" : "r>1", value};
    }
    case BoundId::KVADRATIK2: {
      double al = require_alpha(id, ex);
      double value = power_mean(2.0, pw(a, p), pw(b, p)) * al;
      return {al <= std::sqrt(2.0) ? "alpha<=sqrt(2)" : "alpha>sqrt(2)", value};
    }
    case BoundId::HILE3: {
      double q = require_q(id, params);
      if (!(std::fabs(p) >= std::fabs(q)) || p == q) {
        out_of_domain(id, "needs |p| >= |q| and p != q");
      }
      double aq = require_alpha_q(id, ex);
      return {"|p|>=|q|", (pw(a, p) + pw(b, p)) / (pw(a, q) + pw(b, q)) * aq};
    }
    case BoundId::POMOCNA: {
      double r = require_r(id, params);
      if (!(std::fabs(r) > 0.0) || !(std::fabs(r) <= 1.0) || r == 1.0) {
        out_of_domain(id, "needs 0 < |r| <= 1 and r != 1");
      }
      return {"0<|r|<=1", (pw(a, r) + pw(b, r)) / (a + b) * c};
    }
    case BoundId::KORIJENJE: {
      double q = require_q(id, params);
      if (!(std::fabs(p) >= std::fabs(q))) out_of_domain(id, "needs |p| >= |q|");
      double aq = require_alpha_q(id, ex);
      return {"|p|>=|q|", pw(a, (p - q) / 2.0) * pw(b, (p - q) / 2.0) * aq};
    }
    case BoundId::PAMETNO: {
      if (p == 0.0) out_of_domain(id, "needs p != 0");
      double al = require_alpha(id, ex);
      double pa = pw(a, p), pb = pw(b, p);
      return {"p!=0", (2.0 * pa * pb * al + (pa - pb) * (pa - pb)) / (pa + pb)};
    }
    case BoundId::THA_II: {
      double q = require_q(id, params);
      if (q == 0.0 || !(p / q >= 0.0) || !(p / q < 1.0)) {
        out_of_domain(id, "needs 0 <= p/q < 1");
      }
      double aq = require_alpha_q(id, ex);
      return {"0<=p/q<1", 2.0 * aq / (pw(a, q - p) + pw(b, q - p))};
    }
    case BoundId::THA_III: {
      double q = require_q(id, params);
      if (!(std::fabs(p) <= std::fabs(q)) || p == q) {
        out_of_domain(id, "needs |p| <= |q| and p != q");
      }
      double aq = require_alpha_q(id, ex);
      return {"|p|<=|q|", pw(a, (p - q) / 2.0) * pw(b, (p - q) / 2.0) * aq};
    }
    case BoundId::THA_V: {
      double q = require_q(id, params);
      double r = require_r(id, params);
      if (q == 0.0 || !(p / q >= 0.0) || !(p / q < 1.0)) {
        out_of_domain(id, "needs 0 <= p/q < 1");
      }
      double aq = require_alpha_q(id, ex);
      return {"0<=p/q<1", aq / power_mean(r, pw(a, q - p), pw(b, q - p))};
    }
    case BoundId::THA_VI: {
      double q = require_q(id, params);
      if (q == 0.0 || !(p / q > 0.0) || !(p / q < 1.0)) {
        out_of_domain(id, "needs 0 < p/q < 1");
      }
      if (a == b) throw DegenerateTripleError("THA_VI needs |x| != |y|");
      double aq = require_alpha_q(id, ex);
      return {"0<p/q<1", aq / std::min(pw(a, q - p), pw(b, q - p))};
    }
    case BoundId::KS:
      return {"all", 2.0 * c / (a + b)};
    case BoundId::ALRASHED: {
      double q = require_q(id, params);
      if (!(q > 0.0) || !(q <= 1.0)) out_of_domain(id, "needs 0 < q <= 1");
      return {"0<q<=1", c / power_mean(q, a, b)};
    }
  }
  out_of_domain(id, "unhandled id");
}

const std::vector<InequalitySpec>& catalog_impl() {
  static const std::vector<InequalitySpec> table = {
      {BoundId::MAL_UP, Direction::Upper, BoundTarget::AlphaP,
       "p in R (regimes p>=1, 0<=p<1, p<0)", Scope::AllSpaces,
       "Maligranda (2006), p-indexed upper bounds"},
      {BoundId::MAL_LO, Direction::Lower, BoundTarget::AlphaP,
       "p in R (regimes p>=1, 0<=p<1, p<0)", Scope::AllSpaces,
       "lower counterparts of the Maligranda bounds (Rooin et al. 2018)"},
      {BoundId::DRG_D, Direction::Upper, BoundTarget::AlphaP,
       "p in R (regimes p>=1, p<1)", Scope::AllSpaces, "Dragomir (2009)"},
      {BoundId::DRG_S, Direction::Upper, BoundTarget::AlphaP,
       "p in R (regimes p>=1, p<1)", Scope::AllSpaces, "Dragomir (2009)"},
      {BoundId::DRG_d, Direction::Lower, BoundTarget::AlphaP,
       "p in R (regimes p>=1, p<1)", Scope::AllSpaces, "Dragomir (2009)"},
      {BoundId::DRG_s, Direction::Lower, BoundTarget::AlphaP,
       "p in R (regimes p>=1, p<1)", Scope::AllSpaces, "Dragomir (2009)"},
      {BoundId::NEW_K, Direction::Upper, BoundTarget::AlphaP,
       "p in R (regimes p>=1, p<1)", Scope::AllSpaces,
       "triangle refinement with weight f(t)=t^(p-1), upper"},
      {BoundId::NEW_k, Direction::Lower, BoundTarget::AlphaP,
       "p in R (regimes p>=1, p<1)", Scope::AllSpaces,
       "triangle refinement with weight f(t)=t^(p-1), lower"},
      {BoundId::HILE, Direction::Upper, BoundTarget::AlphaP,
       "p>=1, |x| != |y|", Scope::AllSpaces, "Hile (1972)"},
      {BoundId::HILE_EXT, Direction::Upper, BoundTarget::AlphaP,
       "p/q>=1, q!=0, |x| != |y|", Scope::AllSpaces,
       "two-index Hile form (Rooin et al. 2018)"},
      {BoundId::HILE_EXT, Direction::Upper, BoundTarget::AlphaP,
       "|p/q|>=1, q!=0, |x| != |y|", Scope::IpsOnlyValid,
       "two-index Hile form in inner-product spaces (Rooin et al. 2017)"},
      {BoundId::SKEW_UP, Direction::Upper, BoundTarget::BetaP,
       "p in R (regimes p<=1, p>1)", Scope::AllSpaces,
       "skew-distance bounds via the triangle refinement"},
      {BoundId::SKEW_LO, Direction::Lower, BoundTarget::BetaP,
       "p in R (regimes p<=1, p>1)", Scope::AllSpaces,
       "skew-distance bounds via the triangle refinement"},
      {BoundId::DEHGHAN_UP, Direction::Upper, BoundTarget::BetaP, "p=0",
       Scope::AllSpaces, "Dehghan (2009)"},
      {BoundId::DEHGHAN_LO, Direction::Lower, BoundTarget::BetaP, "p=0",
       Scope::AllSpaces, "Dehghan (2009)"},
      {BoundId::ALPHAREL_UP, Direction::Upper, BoundTarget::AlphaP,
       "p in R (regimes p>=0, p<0)", Scope::AllSpaces,
       "homogeneity transfer of the angular-distance bounds"},
      {BoundId::ALPHAREL_LO, Direction::Lower, BoundTarget::AlphaP,
       "p in R (regimes p>=0, p<0)", Scope::AllSpaces,
       "homogeneity transfer of the angular-distance bounds"},
      {BoundId::ANG_UP, Direction::Upper, BoundTarget::Alpha, "none",
       Scope::AllSpaces, "Maligranda (2006), angular distance bounds"},
      {BoundId::ANG_LO, Direction::Lower, BoundTarget::Alpha, "none",
       Scope::AllSpaces, "Maligranda (2006), angular distance bounds"},
      {BoundId::REFINED_UP, Direction::Upper, BoundTarget::Alpha,
       "r>0, x != y (characterizing for 0<r<=1)", Scope::IpsChar,
       "geometric-mean split of the angular bounds"},
      {BoundId::REFINED_LO, Direction::Lower, BoundTarget::Alpha,
       "r>0, x != y", Scope::IpsOnlyValid,
       "geometric-mean split of the angular bounds"},
      {BoundId::ZA_R1_UP, Direction::Upper, BoundTarget::Alpha, "x != y",
       Scope::IpsChar, "r=1 refinement: arithmetic-mean upper bound"},
      {BoundId::ZA_R1_LO, Direction::Lower, BoundTarget::Alpha, "x != y",
       Scope::IpsOnlyValid, "r=1 refinement: harmonic-mean lower bound"},
      {BoundId::SREDINE, Direction::Lower, BoundTarget::AlphaP,
       "r<=1 characterizing; any r evaluable", Scope::IpsChar,
       "power-mean characterization, every r<=1"},
      {BoundId::KVADRATIK2, Direction::Lower, BoundTarget::AlphaP,
       "r=2 fixed; lower for alpha<=sqrt(2), upper otherwise",
       Scope::IpsOnlyValid, "quadratic-mean conditional bound"},
      {BoundId::HILE3, Direction::Lower, BoundTarget::AlphaP,
       "|p|>=|q|, p!=q", Scope::IpsChar,
       "power-sum ratio characterization"},
      {BoundId::POMOCNA, Direction::Upper, BoundTarget::AlphaR,
       "0<|r|<=1, r!=1", Scope::IpsChar,
       "index-1/p transform of the power-sum characterization"},
      {BoundId::KORIJENJE, Direction::Lower, BoundTarget::AlphaP,
       "|p|>=|q|", Scope::IpsChar, "geometric-mean two-index characterization"},
      {BoundId::PAMETNO, Direction::Lower, BoundTarget::AlphaP,
       "p!=0, dim>=3", Scope::IpsChar,
       "angular lower-bound characterization"},
      {BoundId::THA_II, Direction::Upper, BoundTarget::AlphaP,
       "0<=p/q<1, dim>=3", Scope::IpsChar,
       "two-index comparison II (Rooin et al. 2017)"},
      {BoundId::THA_III, Direction::Upper, BoundTarget::AlphaP,
       "|p|<=|q|, p!=q, dim>=3", Scope::IpsChar,
       "two-index comparison III (Rooin et al. 2017)"},
      {BoundId::THA_V, Direction::Upper, BoundTarget::AlphaP,
       "0<=p/q<1, r in R or +-inf, dim>=3", Scope::IpsChar,
       "two-index comparison V (Rooin et al. 2017)"},
      {BoundId::THA_VI, Direction::Upper, BoundTarget::AlphaP,
       "0<p/q<1, |x| != |y|, dim>=3", Scope::IpsChar,
       "two-index strict comparison VI (Rooin et al. 2017)"},
      {BoundId::KS, Direction::Upper, BoundTarget::Alpha, "none",
       Scope::IpsChar, "Kirk-Smiley (1964) / Dunkl-Williams"},
      {BoundId::ALRASHED, Direction::Upper, BoundTarget::Alpha, "0<q<=1",
       Scope::IpsChar, "Al-Rashed (1993)"},
  };
  return table;
}

}  // namespace

std::string_view to_string(BoundId id) {
  switch (id) {
    case BoundId::MAL_UP: return "MAL_UP";
    case BoundId::MAL_LO: return "MAL_LO";
    case BoundId::DRG_D: return "DRG_D";
    case BoundId::DRG_S: return "DRG_S";
    case BoundId::DRG_d: return "DRG_d";
    case BoundId::DRG_s: return "DRG_s";
    case BoundId::NEW_K: return "NEW_K";
    case BoundId::NEW_k: return "NEW_k";
    case BoundId::HILE: return "HILE";
    case BoundId::HILE_EXT: return "HILE_EXT";
    case BoundId::SKEW_UP: return "SKEW_UP";
    case BoundId::SKEW_LO: return "SKEW_LO";
    case BoundId::DEHGHAN_UP: return "DEHGHAN_UP";
    case BoundId::DEHGHAN_LO: return "DEHGHAN_LO";
    case BoundId::ALPHAREL_UP: return "ALPHAREL_UP";
    case BoundId::ALPHAREL_LO: return "ALPHAREL_LO";
    case BoundId::ANG_UP: return "ANG_UP";
    case BoundId::ANG_LO: return "ANG_LO";
    case BoundId::REFINED_UP: return "REFINED_UP";
    case BoundId::REFINED_LO: return "REFINED_LO";
    case BoundId::ZA_R1_UP: return "ZA_R1_UP";
    case BoundId::ZA_R1_LO: return "ZA_R1_LO";
    case BoundId::SREDINE: return "SREDINE";
    case BoundId::KVADRATIK2: return "KVADRATIK2";
    case BoundId::HILE3: return "HILE3";
    case BoundId::POMOCNA: return "POMOCNA";
    case BoundId::KORIJENJE: return "KORIJENJE";
    case BoundId::PAMETNO: return "PAMETNO";
    case BoundId::THA_II: return "THA_II";
    case BoundId::THA_III: return "THA_III";
    case BoundId::THA_V: return "THA_V";
    case BoundId::THA_VI: return "THA_VI";
    case BoundId::KS: return "KS";
    case BoundId::ALRASHED: return "ALRASHED";
  }
  return "?";
}

std::string_view to_string(Direction d) {
  return d == Direction::Upper ? "upper" : "lower";
}

std::string_view to_string(Scope s) {
  switch (s) {
    case Scope::AllSpaces: return "ALL_SPACES";
    case Scope::IpsChar: return "IPS_CHAR";
    case Scope::IpsOnlyValid: return "IPS_ONLY_VALID";
  }
  return "?";
}

std::string_view to_string(BoundTarget t) {
  switch (t) {
    case BoundTarget::AlphaP: return "alpha_p";
    case BoundTarget::BetaP: return "beta_p";
    case BoundTarget::Alpha: return "alpha";
    case BoundTarget::AlphaR: return "alpha_r";
  }
  return "?";
}

std::optional<BoundId> bound_id_from_string(std::string_view name) {
  static const std::unordered_map<std::string_view, BoundId> lut = [] {
    std::unordered_map<std::string_view, BoundId> m;
    for (const auto& e : catalog_impl()) m.emplace(to_string(e.id), e.id);
    m.emplace("KARAKTER", BoundId::REFINED_UP);
    return m;
  }();
  auto it = lut.find(name);
  if (it == lut.end()) return std::nullopt;
  return it->second;
}

BoundResult evaluate_bound(BoundId id, const DistanceParams& params,
                           const NormTriple& t, const BoundExtras& extras) {
  Eval e = eval_impl(id, params, t, extras);
  if (extras.regime && *extras.regime != e.regime) {
    out_of_domain(id, "parameters select regime '" + e.regime +
                          "', caller asked for '" + *extras.regime + "'");
  }
  BoundResult out;
  out.id = id;
  out.regime = e.regime;
  out.value = e.value;
  const InequalitySpec& spec = catalog_entry(id);
  Direction dir = spec.direction;
  if (id == BoundId::KVADRATIK2 && e.regime == "alpha>sqrt(2)") {
    dir = Direction::Upper;
  }
  out.meaningful = dir == Direction::Upper || e.value >= 0.0;
  out.requires_ips = spec.scope != Scope::AllSpaces;
  if (id == BoundId::HILE_EXT) {
    out.requires_ips = e.regime != "p/q>=1";
  }
  return out;
}

namespace {

ChainReport chain_impl(double p, const NormTriple& t, bool with_alpha,
                       double alpha_p_value) {
  DistanceParams params;
  params.p = p;
  ChainReport rep;
  rep.p = p;
  rep.regime = p >= 1.0 ? "p>=1" : "p<1";
  rep.s = evaluate_bound(BoundId::DRG_s, params, t).value;
  rep.d = evaluate_bound(BoundId::DRG_d, params, t).value;
  rep.k = evaluate_bound(BoundId::NEW_k, params, t).value;
  rep.alpha_p = alpha_p_value;
  rep.K = evaluate_bound(BoundId::NEW_K, params, t).value;
  rep.D = evaluate_bound(BoundId::DRG_D, params, t).value;
  rep.S = evaluate_bound(BoundId::DRG_S, params, t).value;

  auto scale = [](double x, double y) {
    return std::max({1.0, std::fabs(x), std::fabs(y)});
  };
  auto check_le = [&](const char* rel, double lhs, double rhs) {
    if (lhs > rhs + 1e-9 * scale(lhs, rhs)) rep.violations.push_back({rel, lhs, rhs});
  };
  auto check_eq = [&](const char* rel, double lhs, double rhs) {
    if (std::fabs(lhs - rhs) > 1e-12 * scale(lhs, rhs)) {
      rep.violations.push_back({rel, lhs, rhs});
    }
  };

  check_le("s <= d", rep.s, rep.d);
  if (p >= 1.0) {
    check_le("d <= k", rep.d, rep.k);
    if (with_alpha) {
      check_le("k <= alpha_p", rep.k, rep.alpha_p);
      check_le("alpha_p <= K", rep.alpha_p, rep.K);
    } else {
      check_le("k <= K", rep.k, rep.K);
    }
    check_eq("K = D", rep.K, rep.D);
    check_le("D <= S", rep.D, rep.S);
  } else {
    check_eq("d = k", rep.d, rep.k);
    if (with_alpha) {
      check_le("k <= alpha_p", rep.k, rep.alpha_p);
      check_le("alpha_p <= K", rep.alpha_p, rep.K);
    } else {
      check_le("k <= K", rep.k, rep.K);
    }
    check_le("K <= D", rep.K, rep.D);
    check_le("D <= S", rep.D, rep.S);
  }
  return rep;
}

}  // namespace

ChainReport chain_values(double p, const NormTriple& t, double alpha_p_value) {
  if (!(alpha_p_value >= 0.0)) {
    throw ParamOutOfDomainError("chain needs a nonnegative alpha_p value");
  }
  return chain_impl(p, t, true, alpha_p_value);
}

ChainReport chain_values(double p, const NormTriple& t) {
  return chain_impl(p, t, false, std::numeric_limits<double>::quiet_NaN());
}

const std::vector<InequalitySpec>& bound_catalog() { return catalog_impl(); }

const InequalitySpec& catalog_entry(BoundId id) {
  for (const auto& e : catalog_impl()) {
    if (e.id == id) return e;
  }
  throw ParamOutOfDomainError("no catalog entry");  // unreachable
}

}  // namespace pangular
