#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pangular/bounds.hpp"
#include "pangular/distance.hpp"
#include "pangular/space.hpp"

namespace pangular {

/// Seeded sampling configuration. norm_lo/norm_hi bound the vector norms;
/// with norm_lo == norm_hi all samples live on that sphere.
struct SampleConfig {
  std::uint64_t seed = 0;
  int n_samples = 10000;
  double norm_lo = 0.5;
  double norm_hi = 4.0;
  SpaceSpec space = SpaceSpec::euclidean(2);
};

struct Violation {
  int index = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
  Vec x, y;  // empty for scalar-only properties
};

/// Result of running one property over n_samples seeded samples. A pure
/// function of (property_id, cfg, params, tol); passed iff no violations.
struct VerificationReport {
  std::string property_id;
  SpaceSpec space = SpaceSpec::euclidean(2);
  DistanceParams params;
  std::uint64_t seed = 0;
  int samples_run = 0;
  double tol = 1e-9;
  std::string rng = "splitmix64";
  std::vector<Violation> violations;
  double max_violation_gap = 0.0;
  bool passed = true;
};

/// Deterministic pair for (cfg.seed, index). Mixture: 60% generic box, 20%
/// near-equal norms, 20% near-collinear (stressing the equality cases).
/// Both vectors are nonzero with norms in [norm_lo, norm_hi].
std::pair<Vec, Vec> sample_pair(const SampleConfig& cfg, int index);

/// Realizes a valid triple as a vector pair in `space` (dim >= 2) by
/// bisecting a rotation parameter; existence follows from continuity.
/// Throws NoConvergence after 10^4 bisection steps.
std::pair<Vec, Vec> realize_triple(const SpaceSpec& space, const NormTriple& t,
                                   double tol);

/// Runs the named property over cfg.n_samples samples, recording every
/// violation beyond the relative slack tol * max(1, |lhs|, |rhs|).
VerificationReport check_property(const std::string& property_id,
                                  const SampleConfig& cfg,
                                  const DistanceParams& params, double tol);

/// All registered property ids, sorted.
std::vector<std::string> property_ids();

enum class SeqId { PHI, PSI, XI };

/// Witness-family sequences behind the positivity analysis of the refined
/// lower bounds; closed-form evaluation at (p, n).
///   PHI -> 2 - p,  PSI -> p,  XI -> -2(p-1)^2/(2p-1)  as n -> infinity.
double asymptotic_value(SeqId id, double p, long n);

struct RegionEntry {
  double p = 0.0;
  double min_value = 0.0;
  NormTriple min_triple;
  bool negative_found = false;
};

struct RegionReport {
  BoundId bound_id;
  std::uint64_t seed = 0;
  std::vector<RegionEntry> entries;
};

/// Scans a triple-level lower bound for sign changes over random triples
/// plus the (n, n+1, 1+1/n) witness family, n <= 10^4.
RegionReport positivity_scan(BoundId id, std::span<const double> p_grid,
                             const SampleConfig& cfg);

}  // namespace pangular
