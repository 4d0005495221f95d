#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "pangular/errors.hpp"

namespace pangular {

using Vec = std::vector<double>;

enum class NormKind { LP, LINF, WEIGHTED_L2, EUCLIDEAN };

/// Declaration of a finite-dimensional real normed space.
///
/// Supported kinds: lp (p >= 1), l-infinity, weighted l2 (positive weights)
/// and plain Euclidean. Construct through the factories or `parse`, which
/// validate the parameters.
struct SpaceSpec {
  NormKind kind = NormKind::EUCLIDEAN;
  int dim = 1;
  double p_exponent = 2.0;       // LP only
  std::vector<double> weights;   // WEIGHTED_L2 only

  static SpaceSpec euclidean(int dim);
  static SpaceSpec lp(double p, int dim);
  static SpaceSpec linf(int dim);
  static SpaceSpec weighted_l2(std::vector<double> weights);

  /// Parses the CLI/config syntax: "l2:3", "lp:1.0:2", "linf:2", "wl2:2:w=1,4".
  static SpaceSpec parse(const std::string& text);

  /// True exactly for EUCLIDEAN, WEIGHTED_L2 and LP with p_exponent == 2.
  bool is_ips() const;

  std::string to_string() const;
};

/// Validated scalar triple (|x|, |y|, |x-y|). Every triple-level bound
/// formula operates on this type; construction enforces a, b > 0 and the
/// two-sided triangle constraint |a-b| <= c <= a+b.
struct NormTriple {
  double a = 1.0;
  double b = 1.0;
  double c = 0.0;

  double min_norm() const { return a < b ? a : b; }
  double max_norm() const { return a < b ? b : a; }
  /// Triangle slack a + b - c, nonnegative for a valid triple.
  double slack() const { return a + b - c; }
  /// |a - b|.
  double norm_gap() const { return a < b ? b - a : a - b; }
};

/// Evaluates the norm of `space` on `v`. Throws DimensionMismatch or
/// NonFinite on bad input.
double norm(const SpaceSpec& space, std::span<const double> v);

/// Checks feasibility of (a, b, c) and returns the triple. A relative slack
/// of 1e-12 absorbs float roundoff from measured norms; c is clamped back
/// into the exact feasible interval.
NormTriple validate_triple(double a, double b, double c);

/// Measures (|x|, |y|, |x-y|) in `space` and validates it.
NormTriple triple_of(const SpaceSpec& space, std::span<const double> x,
                     std::span<const double> y);

/// Radial power transform v -> |v|^(s-1) v. Maps the p-angular distance
/// index: alpha_p of transformed vectors equals alpha_{p*s} of the originals.
Vec radial_transform(const SpaceSpec& space, std::span<const double> v, double s);

// Small vector helpers shared by the modules.
Vec scaled(std::span<const double> v, double t);
Vec subtract(std::span<const double> x, std::span<const double> y);

}  // namespace pangular
