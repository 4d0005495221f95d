#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pangular/distance.hpp"
#include "pangular/space.hpp"

namespace pangular {

/// Identifiers of every bound/inequality family in the registry. These names
/// are the external interface: the catalog CSV, the CLI `--ineq` flag and the
/// verification property ids `bound_<ID>` all use them verbatim.
enum class BoundId {
  MAL_UP,       // Maligranda upper bounds on alpha_p (three p regimes)
  MAL_LO,       // transformed lower counterparts
  DRG_D,        // Dragomir upper bound D
  DRG_S,        // Dragomir upper bound S
  DRG_d,        // Dragomir lower bound d
  DRG_s,        // Dragomir lower bound s
  NEW_K,        // power-weight triangle refinement, upper
  NEW_k,        // power-weight triangle refinement, lower
  HILE,         // Hile difference-quotient upper bound, p >= 1
  HILE_EXT,     // two-index Hile form |(b^p-a^p)/(b^q-a^q)| alpha_q
  SKEW_UP,      // skew-distance upper bound
  SKEW_LO,      // skew-distance lower bound
  DEHGHAN_UP,   // Dehghan upper bound on the skew angular distance
  DEHGHAN_LO,   // Dehghan lower bound
  ALPHAREL_UP,  // alpha_p vs alpha transfer, upper
  ALPHAREL_LO,  // alpha_p vs alpha transfer, lower
  ANG_UP,       // angular distance upper bound (c+|a-b|)/max
  ANG_LO,       // angular distance lower bound (c-|a-b|)/min
  REFINED_UP,   // power-mean refinement of ANG_UP (characterizing, 0<r<=1)
  REFINED_LO,   // power-mean refinement of ANG_LO (inner-product spaces)
  ZA_R1_UP,     // r = 1 refinement, arithmetic-mean form
  ZA_R1_LO,     // r = 1 refinement, harmonic-mean form
  SREDINE,      // power-mean lower bound M_r(a^p,b^p) alpha (characterizing, r<=1)
  KVADRATIK2,   // quadratic-mean conditional bound, direction flips at alpha = sqrt(2)
  HILE3,        // power-sum ratio characterization (|p|>=|q|, p != q)
  POMOCNA,      // transformed power-sum characterization on alpha_r
  KORIJENJE,    // geometric-mean two-index characterization
  PAMETNO,      // angular lower-bound characterization (dim >= 3)
  THA_II,       // two-index comparison II (dim >= 3)
  THA_III,      // two-index comparison III (dim >= 3)
  THA_V,        // two-index comparison V, parametric power mean (dim >= 3)
  THA_VI,       // two-index strict comparison VI (dim >= 3)
  KS,           // Kirk-Smiley / Dunkl-Williams bound 2c/(a+b)
  ALRASHED,     // Al-Rashed bound c / M_q(a,b), 0 < q <= 1
};

enum class Direction { Upper, Lower };

enum class Scope { AllSpaces, IpsChar, IpsOnlyValid };

/// Which quantity the bound estimates; verification compares against it.
enum class BoundTarget { AlphaP, BetaP, Alpha, AlphaR };

std::string_view to_string(BoundId id);
std::string_view to_string(Direction d);
std::string_view to_string(Scope s);
std::string_view to_string(BoundTarget t);

/// Parses a registry id; also accepts the alias KARAKTER for REFINED_UP
/// (the characterizing use of the refined upper bound).
std::optional<BoundId> bound_id_from_string(std::string_view name);

/// One evaluated bound. `meaningful` is false exactly for lower bounds with
/// negative values; they are reported raw, never clamped.
struct BoundResult {
  BoundId id;
  std::string regime;
  double value = 0.0;
  bool meaningful = true;
  bool requires_ips = false;
};

/// Registry entry. HILE_EXT contributes two entries: its all-spaces domain
/// p/q >= 1 and the wider |p/q| >= 1 domain proved for inner-product spaces.
struct InequalitySpec {
  BoundId id;
  Direction direction;
  BoundTarget target;
  std::string param_domain;
  Scope scope;
  std::string citation;
};

/// Scalars some formulas need in addition to the triple; the caller computes
/// them at vector level. `regime` optionally pins the parameter branch: a
/// mismatch with the actual parameters raises ParamOutOfDomain. `hile_limit`
/// opts into the a = b difference-quotient limit p a^(p-1) c for HILE.
struct BoundExtras {
  std::optional<double> alpha;
  std::optional<double> alpha_q;
  std::optional<std::string> regime;
  bool hile_limit = false;
};

BoundResult evaluate_bound(BoundId id, const DistanceParams& params,
                           const NormTriple& t, const BoundExtras& extras = {});

struct ChainViolation {
  std::string relation;  // e.g. "d <= k"
  double lhs = 0.0;
  double rhs = 0.0;
};

/// The six triple-level bounds of the ordering theorem around alpha_p:
/// for p >= 1:  s <= d <= k <= alpha_p <= K = D <= S
/// for p <  1:  s <= d = k <= alpha_p <= K <= D <= S
/// Equalities are checked at 1e-12 relative, inequalities with 1e-9 slack.
struct ChainReport {
  double p = 1.0;
  std::string regime;
  double s = 0.0, d = 0.0, k = 0.0, alpha_p = 0.0, K = 0.0, D = 0.0, S = 0.0;
  std::vector<ChainViolation> violations;
  bool ok() const { return violations.empty(); }
};

ChainReport chain_values(double p, const NormTriple& t, double alpha_p_value);

/// Bounds-only variant: checks the mutual ordering of the six bounds without
/// an alpha_p value (rep.alpha_p is left NaN).
ChainReport chain_values(double p, const NormTriple& t);

/// Full registry in stable order.
const std::vector<InequalitySpec>& bound_catalog();

/// First registry entry for `id`.
const InequalitySpec& catalog_entry(BoundId id);

}  // namespace pangular
