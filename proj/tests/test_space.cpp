#include "doctest.h"

#include <cmath>

#include "pangular/rng.hpp"
#include "pangular/space.hpp"

using namespace pangular;

namespace {

Vec random_vec(SplitMix64& g, int dim, double lo = -5.0, double hi = 5.0) {
  Vec v(dim);
  while (true) {
    double peak = 0.0;
    for (int i = 0; i < dim; ++i) {
      v[i] = g.uniform(lo, hi);
      peak = std::max(peak, std::fabs(v[i]));
    }
    if (peak > 1e-3) return v;
  }
}

const SpaceSpec kSpaces[] = {
    SpaceSpec::euclidean(3),
    SpaceSpec::lp(1.0, 2),
    SpaceSpec::lp(1.5, 3),
    SpaceSpec::linf(4),
    SpaceSpec::weighted_l2({1.0, 4.0}),
};

}  // namespace

TEST_CASE("norm evaluates the four kinds") {
  CHECK(norm(SpaceSpec::euclidean(2), Vec{3, 4}) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(norm(SpaceSpec::linf(2), Vec{1, 1}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(norm(SpaceSpec::lp(1.0, 2), Vec{1, -2}) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(norm(SpaceSpec::weighted_l2({1, 4}), Vec{1, 1}) ==
        doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
  CHECK(norm(SpaceSpec::lp(3.0, 2), Vec{1, 1}) ==
        doctest::Approx(std::pow(2.0, 1.0 / 3.0)).epsilon(1e-14));
}

TEST_CASE("norm input validation") {
  CHECK_THROWS_AS(norm(SpaceSpec::euclidean(3), Vec{1, 2}), DimensionMismatchError);
  CHECK_THROWS_AS(norm(SpaceSpec::euclidean(2), Vec{1, std::nan("")}), NonFiniteError);
  CHECK_THROWS_AS(norm(SpaceSpec::euclidean(1), Vec{INFINITY}), NonFiniteError);
  CHECK(norm(SpaceSpec::linf(2), Vec{0, 0}) == 0.0);
}

TEST_CASE("norm homogeneity and zero only at zero") {
  SplitMix64 g(11);
  for (const auto& sp : kSpaces) {
    for (int i = 0; i < 500; ++i) {
      Vec v = random_vec(g, sp.dim);
      double t = g.uniform(-4.0, 4.0);
      double lhs = norm(sp, scaled(v, t));
      double rhs = std::fabs(t) * norm(sp, v);
      CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::max(1.0, rhs));
      CHECK(norm(sp, v) > 0.0);
    }
  }
}

TEST_CASE("validate_triple accepts and rejects") {
  CHECK_NOTHROW(validate_triple(1, 4, 4));
  CHECK_NOTHROW(validate_triple(2, 2, 0));
  CHECK_NOTHROW(validate_triple(1, 1, 2));  // boundary c = a+b
  CHECK_THROWS_AS(validate_triple(1, 4, 5.1), TripleInfeasibleError);
  CHECK_THROWS_AS(validate_triple(1, 4, 2.9), TripleInfeasibleError);
  CHECK_THROWS_AS(validate_triple(0, 1, 1), TripleInfeasibleError);
  CHECK_THROWS_AS(validate_triple(1, -1, 1), TripleInfeasibleError);
  CHECK_THROWS_AS(validate_triple(1, 1, std::nan("")), TripleInfeasibleError);

  NormTriple t = validate_triple(1, 4, 4.5);
  CHECK(t.min_norm() == 1.0);
  CHECK(t.max_norm() == 4.0);
  CHECK(t.norm_gap() == 3.0);
  CHECK(t.slack() == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("measured triples always validate") {
  SplitMix64 g(12);
  for (const auto& sp : kSpaces) {
    for (int i = 0; i < 2000; ++i) {
      Vec x = random_vec(g, sp.dim);
      Vec y = random_vec(g, sp.dim);
      CHECK_NOTHROW(triple_of(sp, x, y));
    }
  }
}

TEST_CASE("radial transform examples") {
  auto l2 = SpaceSpec::euclidean(2);
  Vec v = radial_transform(l2, Vec{3, 0}, 2.0);
  CHECK(v[0] == doctest::Approx(9.0).epsilon(1e-15));
  CHECK(v[1] == 0.0);

  Vec back = radial_transform(l2, Vec{9, 0}, 0.5);
  CHECK(back[0] == doctest::Approx(3.0).epsilon(1e-15));

  // |v| = 2, factor 2^(-2) = 0.25
  Vec w = radial_transform(SpaceSpec::linf(2), Vec{2, 0}, -1.0);
  CHECK(w[0] == doctest::Approx(0.5).epsilon(1e-15));

  CHECK_THROWS_AS(radial_transform(l2, Vec{0, 0}, 2.0), ZeroVectorError);
}

TEST_CASE("radial transform norm map and composition") {
  SplitMix64 g(13);
  for (const auto& sp : kSpaces) {
    for (int i = 0; i < 400; ++i) {
      Vec v = random_vec(g, sp.dim);
      double s = g.uniform(0.25, 2.0) * (g.next_unit() < 0.5 ? -1.0 : 1.0);
      double t = g.uniform(0.25, 2.0) * (g.next_unit() < 0.5 ? -1.0 : 1.0);

      double n = norm(sp, v);
      double mapped = norm(sp, radial_transform(sp, v, s));
      CHECK(std::fabs(mapped - std::pow(n, s)) <= 1e-10 * std::max(1.0, std::pow(n, s)));

      Vec twice = radial_transform(sp, radial_transform(sp, v, t), s);
      Vec direct = radial_transform(sp, v, s * t);
      double diff = norm(sp, subtract(twice, direct));
      CHECK(diff <= 1e-10 * std::max(1.0, norm(sp, direct)));

      Vec inv = radial_transform(sp, radial_transform(sp, v, s), 1.0 / s);
      CHECK(norm(sp, subtract(inv, v)) <= 1e-10 * std::max(1.0, n));
    }
  }
}

TEST_CASE("space spec parsing round trips") {
  for (const char* text : {"l2:3", "linf:2", "lp:1.5:3", "wl2:2:w=1,4"}) {
    SpaceSpec sp = SpaceSpec::parse(text);
    CHECK(SpaceSpec::parse(sp.to_string()).to_string() == sp.to_string());
  }
  CHECK(SpaceSpec::parse("l2:3").dim == 3);
  CHECK(SpaceSpec::parse("lp:1.0:2").p_exponent == 1.0);
  CHECK(SpaceSpec::parse("wl2:2:w=1,4").weights == std::vector<double>{1, 4});

  CHECK_THROWS_AS(SpaceSpec::parse("l3:2"), BadSpecError);
  CHECK_THROWS_AS(SpaceSpec::parse("lp:0.5:2"), BadSpecError);
  CHECK_THROWS_AS(SpaceSpec::parse("l2:0"), BadSpecError);
  CHECK_THROWS_AS(SpaceSpec::parse("wl2:2:w=1"), BadSpecError);
  CHECK_THROWS_AS(SpaceSpec::parse("wl2:2:w=1,-4"), BadSpecError);
}

TEST_CASE("is_ips flags the inner-product norms") {
  CHECK(SpaceSpec::euclidean(2).is_ips());
  CHECK(SpaceSpec::weighted_l2({1, 2, 3}).is_ips());
  CHECK(SpaceSpec::lp(2.0, 5).is_ips());
  CHECK_FALSE(SpaceSpec::lp(1.0, 2).is_ips());
  CHECK_FALSE(SpaceSpec::lp(3.0, 2).is_ips());
  CHECK_FALSE(SpaceSpec::linf(2).is_ips());
}
