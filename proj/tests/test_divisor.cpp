#include <doctest.h>

#include <random>

#include "support/catalog.hpp"
#include "toric/builders.hpp"
#include "toric/divisor.hpp"
#include "toric/error.hpp"
#include "toric/mori.hpp"

using namespace toric;

namespace {

TDivisor ray_divisor(const Fan& f, std::size_t r) {
  TDivisor d{std::vector<Integer>(f.rays.size(), 0)};
  d.coeffs[r] = 1;
  return d;
}

}  // namespace

TEST_CASE("picard rank is rays minus rank") {
  CHECK(picard_rank(fan_projective_space(2)) == 1);
  CHECK(picard_rank(fan_projective_space(3)) == 1);
  CHECK(picard_rank(fan_p1_power(3)) == 3);
  CHECK(picard_rank(fan_hirzebruch(2)) == 2);
  for (const auto& e : catalog::fans()) CHECK(class_group(e.fan)->rank() == picard_rank(e.fan));
}

TEST_CASE("canonical divisor") {
  CHECK(canonical_divisor(fan_projective_space(2)).coeffs == std::vector<Integer>{-1, -1, -1});
  CHECK(canonical_divisor(fan_p1_power(3)).coeffs == std::vector<Integer>(6, -1));
}

TEST_CASE("classes on P2") {
  const Fan f = fan_projective_space(2);  // rays e1, e2, -e1-e2
  auto g = class_group(f);
  CHECK(class_of(g, ray_divisor(f, 0) - ray_divisor(f, 2)).class_vector == std::vector<Integer>{0});
  auto c0 = class_of(g, ray_divisor(f, 0));
  CHECK(c0 == class_of(g, ray_divisor(f, 1)));
  CHECK(c0 == class_of(g, ray_divisor(f, 2)));
  CHECK(abs(c0.class_vector[0]) == 1);
}

TEST_CASE("opposite rays of (P1)^2 have equal classes") {
  const Fan f = fan_p1_power(2);
  CHECK(class_of(f, ray_divisor(f, 0)) == class_of(f, ray_divisor(f, 1)));
  CHECK_FALSE(class_of(f, ray_divisor(f, 0)) == class_of(f, ray_divisor(f, 2)));
}

TEST_CASE("principal divisors vanish and classes are additive") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> dist(-7, 7);
  for (const auto& e : catalog::fans()) {
    CAPTURE(e.name);
    auto g = class_group(e.fan);
    const std::vector<Integer> zero(g->rank(), 0);
    for (std::size_t i = 0; i < e.fan.rank; ++i) {
      LatticeVector m(e.fan.rank);
      m[i] = 1;
      CHECK(class_of(g, principal_divisor(e.fan, m)).class_vector == zero);
    }
    for (int trial = 0; trial < 10; ++trial) {
      TDivisor a{std::vector<Integer>(e.fan.rays.size())}, b = a;
      for (auto& x : a.coeffs) x = dist(rng);
      for (auto& x : b.coeffs) x = dist(rng);
      auto ca = class_of(g, a).class_vector, cb = class_of(g, b).class_vector;
      auto sum = class_of(g, a + b).class_vector;
      for (std::size_t k = 0; k < sum.size(); ++k) CHECK(sum[k] == ca[k] + cb[k]);
      CHECK(class_of(g, g->representative(ca)) == class_of(g, a));
    }
  }
}

TEST_CASE("dividing classes") {
  SUBCASE("(P1)^3, -K by 2") {
    const Fan f = fan_p1_power(3);
    auto c = class_of(f, Integer(-1) * canonical_divisor(f));
    auto half = divide_class(c, 2);
    REQUIRE(half);
    // D_e1 + D_e2 + D_e3 is the (1,1,1) class
    TDivisor d{std::vector<Integer>{1, 0, 1, 0, 1, 0}};
    CHECK(*half == class_of(f, d));
    for (std::size_t k = 0; k < c.class_vector.size(); ++k) CHECK(2 * half->class_vector[k] == c.class_vector[k]);
  }
  SUBCASE("P3, -K by 4") {
    const Fan f = fan_projective_space(3);
    auto quarter = divide_class(class_of(f, Integer(-1) * canonical_divisor(f)), 4);
    REQUIRE(quarter);
    CHECK(*quarter == class_of(f, ray_divisor(f, 0)));
  }
  SUBCASE("P2, -K by 2") {
    const Fan f = fan_projective_space(2);
    CHECK_FALSE(divide_class(class_of(f, Integer(-1) * canonical_divisor(f)), 2));
  }
  const Fan f = fan_projective_space(2);
  CHECK_THROWS_AS(divide_class(class_of(f, canonical_divisor(f)), 0), Error);
}

TEST_CASE("class_of rejects divisors of the wrong size") {
  const Fan f = fan_projective_space(2);
  CHECK_THROWS(class_of(f, TDivisor{{1, 2}}));
}

TEST_CASE("intersection numbers") {
  const Fan p2 = fan_projective_space(2);
  const CurveClass line{{1, 1, 1}};
  CHECK(intersect(p2, Integer(-1) * canonical_divisor(p2), line) == 3);

  const Fan q = fan_p1_power(2);
  const CurveClass fiber{{0, 0, 1, 1}};
  CHECK(intersect(q, Integer(-1) * canonical_divisor(q), fiber) == 2);
  CHECK(intersect(q, ray_divisor(q, 0), CurveClass{{0, 0, 0, 0}}) == 0);
  CHECK_THROWS_AS(intersect(q, ray_divisor(p2, 0), fiber), DimensionError);
}

TEST_CASE("intersection ignores principal changes of the divisor") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> dist(-9, 9);
  for (const auto& e : catalog::fans()) {
    CAPTURE(e.name);
    for (const auto& w : walls(e.fan)) {
      const CurveClass c = curve_class(e.fan, w);
      TDivisor d{std::vector<Integer>(e.fan.rays.size())};
      for (auto& x : d.coeffs) x = dist(rng);
      LatticeVector m(e.fan.rank);
      for (std::size_t i = 0; i < e.fan.rank; ++i) m[i] = dist(rng);
      CHECK(intersect(e.fan, d, c) == intersect(e.fan, d + principal_divisor(e.fan, m), c));
    }
  }
}
