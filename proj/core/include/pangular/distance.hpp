#pragma once

#include <optional>
#include <span>

#include "pangular/space.hpp"

namespace pangular {

/// Parameter bundle for the distance and bound families. `p` is the primary
/// index, `q` the secondary index of two-index relations, `r` a power-mean
/// index (may be +/-infinity).
struct DistanceParams {
  double p = 1.0;
  std::optional<double> q;
  std::optional<double> r;
};

/// p-angular distance: norm of |x|^(p-1) x - |y|^(p-1) y. alpha_0 is the
/// angular (Clarkson) distance, alpha_1 = |x-y|. Inputs are rescaled by
/// 1/max(|x|,|y|) and the result restored via degree-p homogeneity, so large
/// |p| does not overflow.
double alpha_p(const SpaceSpec& space, std::span<const double> x,
               std::span<const double> y, double p);

/// Skew p-angular distance: norm of |y|^(p-1) x - |x|^(p-1) y. Satisfies
/// beta_p = a^(p-1) b^(p-1) alpha_{2-p}.
double beta_p(const SpaceSpec& space, std::span<const double> x,
              std::span<const double> y, double p);

/// Angular distance alpha_0.
double angular(const SpaceSpec& space, std::span<const double> x,
               std::span<const double> y);

/// Squared p-angular distance an inner-product realization of the triple
/// would have: a^(p-1) b^(p-1) c^2 + (a^(p-1) - b^(p-1))(a^(p+1) - b^(p+1)).
/// Nonnegative for every valid triple; equals c^2 at p = 1.
double ips_alpha_p_sq(const NormTriple& t, double p);

/// Residual of the inner-product-space square identity:
/// alpha_p^2 - [(a^p - b^p)^2 + a^p b^p alpha^2]. Zero (to roundoff) when
/// the space is an inner-product space; generally nonzero otherwise.
double ips_identity_residual(const SpaceSpec& space, std::span<const double> x,
                             std::span<const double> y, double p);

/// Two-point power mean ((a^r + b^r)/2)^(1/r) with the geometric mean at
/// r = 0 and min/max at -/+infinity. Monotone nondecreasing in r.
double power_mean(double r, double a, double b);

}  // namespace pangular
