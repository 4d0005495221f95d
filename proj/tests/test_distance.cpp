#include "doctest.h"

#include <cmath>
#include <limits>

#include "pangular/distance.hpp"
#include "pangular/rng.hpp"
#include "pangular/space.hpp"

using namespace pangular;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Vec random_vec(SplitMix64& g, int dim) {
  Vec v(dim);
  while (true) {
    double peak = 0.0;
    for (int i = 0; i < dim; ++i) {
      v[i] = g.uniform(-4.0, 4.0);
      peak = std::max(peak, std::fabs(v[i]));
    }
    if (peak > 1e-2) return v;
  }
}

}  // namespace

TEST_CASE("alpha_p examples") {
  auto l2 = SpaceSpec::euclidean(2);
  // |3|^1 (3,0) - |4|^1 (0,4) = (9,-16); direct oracle
  double expected = std::hypot(9.0, 16.0);
  CHECK(alpha_p(l2, Vec{3, 0}, Vec{0, 4}, 2.0) ==
        doctest::Approx(expected).epsilon(1e-14));
  CHECK(expected == doctest::Approx(std::sqrt(337.0)).epsilon(1e-15));

  for (double p : {-2.0, 0.0, 1.0, 3.5}) {
    CHECK(alpha_p(l2, Vec{1, 2}, Vec{1, 2}, p) == doctest::Approx(0.0));
  }

  // hand oracle: |(1,1) - (0.5,0)|_inf = 1
  CHECK(alpha_p(SpaceSpec::linf(2), Vec{1, 1}, Vec{2, 0}, -1.0) ==
        doctest::Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_AS(alpha_p(l2, Vec{0, 0}, Vec{1, 0}, 2.0), ZeroVectorError);
}

TEST_CASE("alpha_p special indices") {
  SplitMix64 g(21);
  auto l1 = SpaceSpec::lp(1.0, 3);
  for (int i = 0; i < 300; ++i) {
    Vec x = random_vec(g, 3), y = random_vec(g, 3);
    double c = norm(l1, subtract(x, y));
    CHECK(std::fabs(alpha_p(l1, x, y, 1.0) - c) <= 1e-12 * std::max(1.0, c));
    // alpha_0 is the distance of the normalized vectors
    Vec xn = scaled(x, 1.0 / norm(l1, x));
    Vec yn = scaled(y, 1.0 / norm(l1, y));
    double a0 = norm(l1, subtract(xn, yn));
    CHECK(std::fabs(angular(l1, x, y) - a0) <= 1e-12 * std::max(1.0, a0));
    // symmetry
    CHECK(alpha_p(l1, x, y, 2.5) ==
          doctest::Approx(alpha_p(l1, y, x, 2.5)).epsilon(1e-12));
  }
}

TEST_CASE("alpha_p homogeneity of degree p") {
  SplitMix64 g(22);
  auto linf = SpaceSpec::linf(3);
  for (int i = 0; i < 500; ++i) {
    Vec x = random_vec(g, 3), y = random_vec(g, 3);
    double p = g.uniform(-3.0, 3.0);
    double t = 10.0 * (1.0 - g.next_unit());
    double lhs = alpha_p(linf, scaled(x, t), scaled(y, t), p);
    double rhs = std::pow(t, p) * alpha_p(linf, x, y, p);
    CHECK(std::fabs(lhs - rhs) <= 1e-9 * std::max(1.0, rhs));
  }
}

TEST_CASE("beta_p examples and the relation to alpha_{2-p}") {
  auto l2 = SpaceSpec::euclidean(2);
  CHECK(beta_p(l2, Vec{3, 0}, Vec{0, 4}, 1.0) == doctest::Approx(5.0).epsilon(1e-14));
  CHECK(beta_p(l2, Vec{1, 2}, Vec{1, 2}, 0.5) == doctest::Approx(0.0));
  // |y|^-1 x - |x|^-1 y = (0.5,0) - (0,2) -> sqrt(4.25)
  CHECK(beta_p(l2, Vec{1, 0}, Vec{0, 2}, 0.0) ==
        doctest::Approx(std::hypot(0.5, 2.0)).epsilon(1e-14));

  SplitMix64 g(23);
  for (const auto& sp : {SpaceSpec::linf(2), SpaceSpec::lp(1.0, 3), SpaceSpec::euclidean(4)}) {
    for (int i = 0; i < 300; ++i) {
      Vec x = random_vec(g, sp.dim), y = random_vec(g, sp.dim);
      double p = g.uniform(-2.0, 3.0);
      double a = norm(sp, x), b = norm(sp, y);
      double lhs = beta_p(sp, x, y, p);
      double rhs = std::pow(a, p - 1.0) * std::pow(b, p - 1.0) *
                   alpha_p(sp, x, y, 2.0 - p);
      CHECK(std::fabs(lhs - rhs) <= 1e-10 * std::max({1.0, lhs, rhs}));
    }
  }
}

TEST_CASE("ips closed form for alpha_p squared") {
  // orthonormal pair: alpha = sqrt(2)
  CHECK(ips_alpha_p_sq(validate_triple(1, 1, std::sqrt(2.0)), 0.0) ==
        doctest::Approx(2.0).epsilon(1e-14));
  // p = 1 collapses to c^2
  CHECK(ips_alpha_p_sq(validate_triple(1, 4, 4), 1.0) ==
        doctest::Approx(16.0).epsilon(1e-15));

  // independent oracle via the square identity: alpha^2 from the p=0 closed
  // form, then (a^p-b^p)^2 + a^p b^p alpha^2 at p=2
  NormTriple t = validate_triple(1, 4, 4);
  double alpha_sq = (t.c * t.c - t.norm_gap() * t.norm_gap()) / (t.a * t.b);
  CHECK(alpha_sq == doctest::Approx((16.0 - 9.0) / 4.0).epsilon(1e-15));
  double oracle = std::pow(1.0 - 16.0, 2.0) + 16.0 * alpha_sq;
  CHECK(oracle == doctest::Approx(253.0).epsilon(1e-15));
  CHECK(ips_alpha_p_sq(t, 2.0) == doctest::Approx(oracle).epsilon(1e-13));

  // matches the real alpha_p in a Euclidean realization
  auto l2 = SpaceSpec::euclidean(2);
  SplitMix64 g(24);
  for (int i = 0; i < 400; ++i) {
    Vec x = random_vec(g, 2), y = random_vec(g, 2);
    double p = g.uniform(-2.0, 3.0);
    double ap = alpha_p(l2, x, y, p);
    double closed = ips_alpha_p_sq(triple_of(l2, x, y), p);
    CHECK(std::fabs(closed - ap * ap) <= 1e-9 * std::max({1.0, closed, ap * ap}));
  }
}

TEST_CASE("square identity residual") {
  auto l2 = SpaceSpec::euclidean(3);
  SplitMix64 g(25);
  for (int i = 0; i < 400; ++i) {
    Vec x = random_vec(g, 3), y = random_vec(g, 3);
    double p = g.uniform(-2.0, 3.0);
    CHECK(std::fabs(ips_identity_residual(l2, x, y, p)) <= 1e-9);
  }

  // collinear same-direction pair: alpha = 0, alpha_3 = |a^3 - b^3|
  Vec y{0.7, -0.4};
  CHECK(ips_identity_residual(SpaceSpec::lp(1.0, 2), scaled(y, 2.0), y, 3.0) ==
        doctest::Approx(0.0).epsilon(1e-12));

  // hand witness: alpha_{-1} = 1, alpha = 1, residual 1 - (0.25 + 0.5) = 0.25
  CHECK(ips_identity_residual(SpaceSpec::linf(2), Vec{1, 1}, Vec{2, 0}, -1.0) ==
        doctest::Approx(0.25).epsilon(1e-13));
}

TEST_CASE("alpha_{-p} identity in inner-product spaces") {
  auto wl2 = SpaceSpec::weighted_l2({1, 2, 3});
  SplitMix64 g(26);
  for (int i = 0; i < 400; ++i) {
    Vec x = random_vec(g, 3), y = random_vec(g, 3);
    double p = g.uniform(0.25, 3.0);
    double a = norm(wl2, x), b = norm(wl2, y);
    double lhs = alpha_p(wl2, x, y, -p);
    double rhs = std::pow(a, -p) * std::pow(b, -p) * alpha_p(wl2, x, y, p);
    CHECK(std::fabs(lhs - rhs) <= 1e-10 * std::max({1.0, lhs, rhs}));
  }
}

TEST_CASE("power mean values") {
  CHECK(power_mean(1.0, 2, 8) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(power_mean(0.0, 2, 8) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(power_mean(-1.0, 2, 8) == doctest::Approx(3.2).epsilon(1e-15));
  CHECK(power_mean(2.0, 1, 4) == doctest::Approx(std::sqrt(8.5)).epsilon(1e-15));
  CHECK(power_mean(kInf, 2, 8) == 8.0);
  CHECK(power_mean(-kInf, 2, 8) == 2.0);
  CHECK(power_mean(3.0, 5, 5) == 5.0);
  CHECK_THROWS_AS(power_mean(1.0, 0.0, 1.0), ParamOutOfDomainError);
}

TEST_CASE("power mean monotone in r and continuous at 0") {
  SplitMix64 g(27);
  for (int i = 0; i < 2000; ++i) {
    double a = g.uniform(0.01, 10.0);
    double b = g.uniform(0.01, 10.0);
    double r = g.uniform(-5.0, 5.0);
    double s = r + g.uniform(1e-3, 4.0);
    CHECK(power_mean(r, a, b) <= power_mean(s, a, b) * (1.0 + 1e-12));
    CHECK(power_mean(-kInf, a, b) <= power_mean(r, a, b) * (1.0 + 1e-12));
    CHECK(power_mean(r, a, b) <= power_mean(kInf, a, b) * (1.0 + 1e-12));

    double geo = std::sqrt(a) * std::sqrt(b);
    CHECK(std::fabs(power_mean(1e-8, a, b) - geo) <= 1e-6 * geo);
    CHECK(std::fabs(power_mean(-1e-8, a, b) - geo) <= 1e-6 * geo);
  }
}
