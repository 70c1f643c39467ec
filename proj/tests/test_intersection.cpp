#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "branecharge/error.hpp"
#include "branecharge/intersection.hpp"
#include "fixtures.hpp"

using namespace branecharge;

namespace {

ChowRing p2_ring() {
  return ChowRing(Fan::from_max_cones(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}));
}

ChowRing ring_of(const fixtures::Fixture& fx) { return ChowRing(normal_fan(fx.polytope)); }

DivisorClass random_divisor(std::mt19937_64& rng, int rays, int bound) {
  std::uniform_int_distribution<int> coeff(-bound, bound);
  std::vector<std::int64_t> c(rays);
  for (auto& x : c) x = coeff(rng);
  return DivisorClass::from_integers(c);
}

GradedClass random_cycle(std::mt19937_64& rng, const ChowRing& ring) {
  std::uniform_int_distribution<int> pick(0, ring.fan().num_cones() - 1);
  std::uniform_int_distribution<int> coeff(-4, 4);
  GradedClass c(ring.dim());
  for (int i = 0; i < 3; ++i) {
    const int id = pick(rng);
    c.add(ring.fan().cone_dim(id), id, coeff(rng));
  }
  return c;
}

DivisorClass scaled(const DivisorClass& d, int s) { return Rational(s) * d; }

}  // namespace

TEST_CASE("divisor_mul_cycle examples") {
  const auto ring = p2_ring();
  const auto& fan = ring.fan();
  const int r0 = *fan.find({0});
  const auto d0 = DivisorClass::ray(3, 0);

  CHECK(ring.divisor_mul_cycle(d0, 0) == ring.orbit_class(r0));

  // m = (1, 0) gives D_0 ~ D_2, and D_2 . V(rho_0) = [V(rho_0, rho_2)].
  const auto self = ring.divisor_mul_cycle(d0, r0);
  CHECK(self == ring.orbit_class(*fan.find({0, 2})));
  CHECK(degree(self) == 1);

  const auto square = ChowRing(normal_fan(fixtures::product_of({1, 1}).polytope));
  // Ray 3 is +e1 in canonical order.
  REQUIRE(square.fan().rays()[3] == IntVector{1, 0});
  const int plus = *square.fan().find({3});
  CHECK(square.divisor_mul_cycle(DivisorClass::ray(4, 3), plus).is_zero());
}

TEST_CASE("evaluate_polynomial") {
  const auto p3 = ring_of(fixtures::projective(3));
  DivisorPolynomial cube;
  // (D_0 + D_1 + D_2 + D_3)^3 expanded into 64 ordered monomials.
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) cube.push_back({1, {a, b, c}});
  CHECK(degree(p3.evaluate_polynomial(cube)) == 64);

  const auto p2 = p2_ring();
  DivisorPolynomial sq;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) sq.push_back({1, {a, b}});
  CHECK(degree(p2.evaluate_polynomial(sq)) == 9);

  CHECK(p2.evaluate_polynomial({}).is_zero());

  // Result independent of the factor order inside each monomial.
  const auto fx = fixtures::threefolds()[3];
  const auto ring = ring_of(fx);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> ray(0, ring.num_rays() - 1);
  for (int t = 0; t < 30; ++t) {
    std::vector<int> rays{ray(rng), ray(rng), ray(rng)};
    auto other = rays;
    std::reverse(other.begin(), other.end());
    CHECK(ring.equivalent(ring.evaluate_polynomial({{1, rays}}), ring.evaluate_polynomial({{1, other}})));
  }
}

TEST_CASE("degree") {
  const auto ring = p2_ring();
  GradedClass pt(2);
  pt.add(2, ring.fan().max_cones().front(), 3);
  CHECK(degree(pt) == 3);
  CHECK(degree(ring.chern_total()) == 3);
  CHECK(degree(GradedClass(2)) == 0);
}

TEST_CASE("chern_total") {
  const auto p4 = ring_of(fixtures::projective(4));
  const auto c = p4.chern_total();
  CHECK(c.part(2).size() == 10);
  for (const auto& [cone, coeff] : c.part(2)) CHECK(coeff == 1);
  const auto h = DivisorClass::ray(5, 0);
  CHECK(p4.equivalent(c.component(2), Rational(10) * p4.power(h, 2, p4.fundamental_class())));

  const auto square = ring_of(fixtures::product_of({1, 1}));
  // rays: -e1, -e2, +e2, +e1; H1 = D(+e1), H2 = D(+e2).
  const auto two_h = DivisorClass::from_integers({0, 0, 2, 2});
  CHECK(square.equivalent(square.chern_total().component(1), square.multiply(two_h, square.fundamental_class())));

  for (const auto& fx : fixtures::all_fixtures()) {
    INFO(fx.name);
    const auto ring = ring_of(fx);
    CHECK(degree(ring.chern_total()) == static_cast<long>(ring.fan().max_cones().size()));
    CHECK(ring.equivalent(ring.chern_total().component(1),
                          ring.multiply(ring.anticanonical(), ring.fundamental_class())));
  }
}

TEST_CASE("c2_wall_sum") {
  const auto p3 = ring_of(fixtures::projective(3));
  const auto w3 = p3.c2_wall_sum();
  CHECK(w3.part(2).size() == 6);
  CHECK(p3.equivalent(w3, Rational(6) * p3.power(DivisorClass::ray(4, 1), 2, p3.fundamental_class())));
  CHECK(ring_of(fixtures::projective(4)).c2_wall_sum().part(2).size() == 10);
  CHECK(ring_of(fixtures::projective(1)).c2_wall_sum().is_zero());

  for (const auto& fx : fixtures::all_fixtures()) {
    INFO(fx.name);
    const auto ring = ring_of(fx);
    if (ring.dim() < 2) continue;
    CHECK(ring.equivalent(ring.chern_total().component(2), ring.c2_wall_sum()));
    CHECK(ring.chern_total().component(2) == ring.c2_wall_sum());
  }
}

TEST_CASE("todd_class") {
  for (const auto& fx : fixtures::all_fixtures()) {
    INFO(fx.name);
    const auto ring = ring_of(fx);
    const auto td = ring.todd_class(ring.dim());
    CHECK(degree(td) == 1);
    CHECK(td.part(0).at(0) == 1);
    // td_1 = c_1 / 2
    CHECK(ring.equivalent(td.component(1),
                          Rational(1, 2) * ring.multiply(ring.anticanonical(), ring.fundamental_class())));
  }
  const auto p1 = ring_of(fixtures::projective(1));
  const auto td1 = p1.todd_class(1);
  CHECK(p1.equivalent(td1, p1.fundamental_class() + p1.multiply(DivisorClass::ray(2, 0), p1.fundamental_class())));

  const auto p3 = ring_of(fixtures::projective(3));
  CHECK(p3.equivalent(p3.todd_class(3).component(1), p3.multiply(DivisorClass::from_integers({2, 0, 0, 0}),
                                                                 p3.fundamental_class())));
  // td_2 = (c_1^2 + c_2)/12 = 11/6 H^2 on P^3
  CHECK(p3.pairings_against(p3.todd_class(3), DivisorClass::ray(4, 0))[2] == Rational(11, 6));
  CHECK(p3.todd_class(1).part(2).empty());
  CHECK_THROWS_AS(p3.todd_class(4), Error);
}

TEST_CASE("chern_character") {
  const auto ring = p2_ring();
  CHECK(ring.chern_character(DivisorClass::zero(3), 2) == ring.fundamental_class());
  const auto h = DivisorClass::ray(3, 0);
  const auto ch = ring.chern_character(h, 2);
  CHECK(ring.pairings_against(ch, h) == std::vector<Rational>{1, 1, Rational(1, 2)});

  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_divisor(rng, 3, 3);
    const auto b = random_divisor(rng, 3, 3);
    CHECK(ring.chern_character(a + b, 2).component(1) ==
          ring.chern_character(a, 2).component(1) + ring.chern_character(b, 2).component(1));
  }
}

TEST_CASE("is_nef") {
  const auto p4 = ring_of(fixtures::projective(4));
  CHECK(p4.is_nef(p4.anticanonical()));
  CHECK(p4.is_nef(DivisorClass::zero(5)));
  const auto p2 = p2_ring();
  CHECK_FALSE(p2.is_nef(DivisorClass::from_integers({-1, 0, 0})));
  CHECK(p2.is_nef(DivisorClass::from_integers({2, -1, 0})));
  CHECK_THROWS_WITH_AS(p2.is_nef(DivisorClass({Rational(1, 2), 0, 0})), doctest::Contains("NonIntegerCoefficients"),
                       Error);
}

TEST_CASE("ring construction gates") {
  CHECK_THROWS_WITH_AS(ChowRing(normal_fan(LatticePolytope::from_points({{1, 0}, {0, 1}, {-1, -1}}))),
                       doctest::Contains("NotSmooth"), Error);
  CHECK_THROWS_WITH_AS(ChowRing(Fan::from_max_cones(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}})),
                       doctest::Contains("NotComplete"), Error);
}

TEST_CASE("equivalence is numerical, not representational") {
  const auto ring = p2_ring();
  const auto a = ring.orbit_class(*ring.fan().find({0}));
  const auto b = ring.orbit_class(*ring.fan().find({1}));
  CHECK_FALSE(a == b);
  CHECK(ring.equivalent(a, b));
  CHECK_FALSE(ring.equivalent(a, Rational(2) * b));
}

TEST_CASE("property: principal divisors annihilate cycles") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (const auto& fx : fixtures::all_fixtures()) {
    INFO(fx.name);
    const auto ring = ring_of(fx);
    for (int t = 0; t < 50; ++t) {
      IntVector m(ring.dim());
      for (auto& x : m) x = entry(rng);
      const auto z = random_cycle(rng, ring);
      CHECK(ring.equivalent(ring.multiply(ring.principal(m), z), GradedClass(ring.dim())));
    }
  }
}

TEST_CASE("property: divisor multiplication commutes") {
  std::mt19937_64 rng(99);
  for (const auto& fx : fixtures::all_fixtures()) {
    INFO(fx.name);
    const auto ring = ring_of(fx);
    for (int t = 0; t < 50; ++t) {
      const auto d1 = random_divisor(rng, ring.num_rays(), 3);
      const auto d2 = random_divisor(rng, ring.num_rays(), 3);
      const auto z = random_cycle(rng, ring);
      CHECK(ring.equivalent(ring.multiply(d1, ring.multiply(d2, z)), ring.multiply(d2, ring.multiply(d1, z))));
    }
  }
}

TEST_CASE("property: products of distinct rays") {
  for (const auto& fx : fixtures::all_fixtures()) {
    INFO(fx.name);
    const auto ring = ring_of(fx);
    const auto& fan = ring.fan();
    const int n = ring.dim();
    const int r = fan.num_rays();
    // All n-subsets of rays.
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    while (true) {
      DivisorPolynomial mono{{1, idx}};
      const Rational expected = fan.find(idx) ? 1 : 0;
      CHECK(degree(ring.evaluate_polynomial(mono)) == expected);
      int i = n - 1;
      while (i >= 0 && idx[i] == r - n + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

TEST_CASE("property: top intersection numbers match the product-of-projective-spaces oracle") {
  std::mt19937_64 rng(314);
  for (const auto& fx : fixtures::all_fixtures()) {
    if (fx.factors.empty()) continue;
    INFO(fx.name);
    const auto ring = ring_of(fx);
    for (int t = 0; t < 25; ++t) {
      std::vector<DivisorClass> ds;
      GradedClass z = ring.fundamental_class();
      for (int k = 0; k < ring.dim(); ++k) {
        ds.push_back(random_divisor(rng, ring.num_rays(), 3));
        z = ring.multiply(ds.back(), z);
      }
      CHECK(degree(z) == fixtures::degree_product(ring.fan(), fx.factors, ds));
    }
    // Self-intersection of a single ray divisor exercises the rewrite branch.
    const auto d = scaled(DivisorClass::ray(ring.num_rays(), 0), 2);
    std::vector<DivisorClass> same(ring.dim(), d);
    CHECK(degree(ring.power(d, ring.dim(), ring.fundamental_class())) ==
          fixtures::degree_product(ring.fan(), fx.factors, same));
  }
}
