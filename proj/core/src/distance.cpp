#include "pangular/distance.hpp"

#include <algorithm>
#include <cmath>

namespace pangular {

namespace {

struct ScaledPair {
  Vec x, y;       // rescaled by 1/max(a, b)
  double na, nb;  // rescaled norms, max of the two is exactly 1
  double scale;
};

ScaledPair rescale(const SpaceSpec& space, std::span<const double> x,
                   std::span<const double> y) {
  double a = norm(space, x);
  double b = norm(space, y);
  if (a == 0.0 || b == 0.0) throw ZeroVectorError("distance of a zero vector");
  double s = std::max(a, b);
  ScaledPair out;
  out.x = scaled(x, 1.0 / s);
  out.y = scaled(y, 1.0 / s);
  out.na = a / s;
  out.nb = b / s;
  out.scale = s;
  return out;
}

}  // namespace

double alpha_p(const SpaceSpec& space, std::span<const double> x,
               std::span<const double> y, double p) {
  ScaledPair sp = rescale(space, x, y);
  double fa = std::pow(sp.na, p - 1.0);
  double fb = std::pow(sp.nb, p - 1.0);
  Vec diff(sp.x.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = fa * sp.x[i] - fb * sp.y[i];
  return std::pow(sp.scale, p) * norm(space, diff);
}

double beta_p(const SpaceSpec& space, std::span<const double> x,
              std::span<const double> y, double p) {
  ScaledPair sp = rescale(space, x, y);
  // cross weighting: x carries |y|^(p-1), y carries |x|^(p-1)
  double fa = std::pow(sp.nb, p - 1.0);
  double fb = std::pow(sp.na, p - 1.0);
  Vec diff(sp.x.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = fa * sp.x[i] - fb * sp.y[i];
  return std::pow(sp.scale, p) * norm(space, diff);
}

double angular(const SpaceSpec& space, std::span<const double> x,
               std::span<const double> y) {
  return alpha_p(space, x, y, 0.0);
}

double ips_alpha_p_sq(const NormTriple& t, double p) {
  double am = std::pow(t.a, p - 1.0);
  double bm = std::pow(t.b, p - 1.0);
  double ap = std::pow(t.a, p + 1.0);
  double bp = std::pow(t.b, p + 1.0);
  double v = am * bm * t.c * t.c + (am - bm) * (ap - bp);
  // roundoff can push the exact zero slightly negative near c = |a-b|
  return std::max(v, 0.0);
}

double ips_identity_residual(const SpaceSpec& space, std::span<const double> x,
                             std::span<const double> y, double p) {
  double a = norm(space, x);
  double b = norm(space, y);
  if (a == 0.0 || b == 0.0) throw ZeroVectorError("residual of a zero vector");
  double al = angular(space, x, y);
  double ap = alpha_p(space, x, y, p);
  double pa = std::pow(a, p);
  double pb = std::pow(b, p);
  return ap * ap - ((pa - pb) * (pa - pb) + pa * pb * al * al);
}

double power_mean(double r, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw ParamOutOfDomainError("power mean needs positive arguments");
  }
  double lo = std::min(a, b);
  double hi = std::max(a, b);
  if (std::isinf(r)) return r > 0 ? hi : lo;
  if (r == 0.0) return std::sqrt(a) * std::sqrt(b);
  if (lo == hi) return lo;
  // Factor out the dominant argument; the remaining ratio power is <= 1,
  // and expm1/log1p keep the r -> 0 limit accurate.
  double base = r > 0 ? hi : lo;
  double ratio = r > 0 ? lo / hi : hi / lo;
  double pow_m1 = std::expm1(r * std::log(ratio));  // ratio^r - 1
  return base * std::exp(std::log1p(pow_m1 / 2.0) / r);
}

}  // namespace pangular
