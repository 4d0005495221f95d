#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pangular/bounds.hpp"
#include "pangular/distance.hpp"
#include "pangular/space.hpp"

namespace pangular {

/// Multistart hill-climbing configuration. The first restarts begin from a
/// fixed list of canonical pairs (axis patterns and near-anti-parallel pairs,
/// where the characterization inequalities are tight or break); the rest are
/// random. pq_grid, when nonempty, overrides the parameter grid of the
/// classification panel.
struct SearchConfig {
  int restarts = 8;
  int steps_per_restart = 1000;
  std::uint64_t seed = 0;
  double step_scale = 0.25;
  std::vector<DistanceParams> pq_grid;
};

/// Margin above which a violation counts as found; three orders of magnitude
/// above the verification slack, so float noise never qualifies.
inline constexpr double kFoundMargin = 1e-6;

struct SearchResult {
  BoundId ineq_id = BoundId::HILE3;
  DistanceParams params;
  SpaceSpec space = SpaceSpec::euclidean(2);
  Vec x, y;            // best pair seen
  double margin = 0.0; // positive = inequality violated at (x, y)
  bool found = false;  // margin > kFoundMargin
  std::uint64_t seed = 0;
  int restart_index = 0;
  int step_count = 0;
};

struct Verdict {
  enum class Kind { NOT_IPS, CONSISTENT_WITH_IPS };
  Kind kind = Kind::CONSISTENT_WITH_IPS;
  std::optional<SearchResult> witness;
};

/// Signed violation margin of one characterization inequality at (x, y):
/// bound - target for >=-form bounds, target - bound for <=-form. Positive
/// means the inequality is violated, so the space cannot be inner-product.
double violation_margin(BoundId id, const DistanceParams& params,
                        const SpaceSpec& space, std::span<const double> x,
                        std::span<const double> y);

/// Maximizes the violation margin by seeded multistart hill climbing with
/// multiplicative coordinate perturbations. Deterministic given cfg. For
/// HILE3 a stalled direct search falls back to the equivalent alpha_r form
/// (r = q/p) and maps any witness back through the radial transform.
SearchResult search_violation(BoundId id, const DistanceParams& params,
                              const SpaceSpec& space, const SearchConfig& cfg);

/// Runs the characterization panel; NOT_IPS on the first found violation.
/// Sampling cannot prove the universal statement, so there is no positive
/// inner-product certificate.
Verdict classify_space(const SpaceSpec& space, const SearchConfig& cfg);

/// Fixed panel of (inequality, parameters) used by classify_space. Entries
/// whose theorems need dim >= 3 are included only for such spaces.
std::vector<std::pair<BoundId, DistanceParams>> characterization_panel(int dim);

}  // namespace pangular
