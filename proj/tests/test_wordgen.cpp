#include <catch2/catch_amalgamated.hpp>

#include "test_fixtures.hpp"

using namespace lcsc;
using namespace lcsc::testing;

TEST_CASE("free monoid enumeration", "[wordgen]") {
  auto f2 = make_f2(4);
  // 1 + 2 + 4 + 8 + 16 words
  REQUIRE(f2.cat.num_morphisms() == 31);
  REQUIRE(f2.cat.truncated());
  for (Mor m = 0; m < f2.cat.num_morphisms(); ++m)
    REQUIRE(f2.d.scalar(m) <= 4);
}

TEST_CASE("relations give normal forms", "[wordgen]") {
  auto z2 = make_z2_central(3);
  // words x^n c^e with n <= 3, e in {0,1}
  REQUIRE(z2.cat.num_morphisms() == 8);
  Mor c = z2.cat.morphism_named("c");
  Mor x = z2.cat.morphism_named("x");
  REQUIRE(z2.cat.compose(c, c) == z2.cat.identity(0));
  // the commutation relation pushes c to the right of x
  REQUIRE(z2.cat.name(z2.cat.compose(c, x)) == "x.c");
  REQUIRE(z2.cat.invertibles().members.size() == 2);
}

TEST_CASE("commutative square has two factorizations", "[wordgen]") {
  auto fc = make_free_comm2(3);
  Mor x = fc.cat.morphism_named("x");
  Mor y = fc.cat.morphism_named("y");
  Mor xy = fc.cat.compose(x, y);
  REQUIRE(fc.cat.compose(y, x) == xy);
  REQUIRE(fc.cat.name(xy) == "x.y");
}

TEST_CASE("numerical monoid category", "[wordgen]") {
  auto nm = make_numerical25(12);
  auto const& c = nm.cat;
  // elements of <2,5> up to 12: 0,2,4,5,6,7,8,9,10,11,12
  REQUIRE(c.num_morphisms() == 11);
  Mor p = c.morphism_named("p");
  Mor q = c.morphism_named("q");
  // p^5 = q^2 is one element of length 10
  Mor p2 = c.compose(p, p);
  Mor p4 = c.compose(p2, p2);
  Mor p5 = c.compose(p4, p);
  Mor q2 = c.compose(q, q);
  REQUIRE(p5 == q2);
  REQUIRE(nm.d.scalar(p5) == 10);
}

TEST_CASE("unclosed generator system without horizon is rejected", "[wordgen]") {
  CategoryGenerator g(OrderedMonoid::naturals());
  Obj o = g.add_object("o");
  g.add_generator("x", o, o, {{1}});
  g.set_cap(100);
  REQUIRE_THROWS_AS(g.build(), HorizonError);
}

TEST_CASE("graph path categories are genuinely finite", "[wordgen]") {
  CategoryGenerator g(OrderedMonoid::naturals());
  Obj v0 = g.add_object("v0");
  Obj v1 = g.add_object("v1");
  Obj v2 = g.add_object("v2");
  g.add_generator("e1", v0, v1, {{1}});
  g.add_generator("e2", v1, v2, {{1}});
  auto r = g.build();
  REQUIRE(!r.cat.truncated());
  // 3 identities + e1 + e2 + e2.e1
  REQUIRE(r.cat.num_morphisms() == 6);
}

TEST_CASE("length-incompatible relations are rejected", "[wordgen]") {
  CategoryGenerator g(OrderedMonoid::naturals());
  Obj o = g.add_object("o");
  int x = g.add_generator("x", o, o, {{1}});
  g.add_relation({x, x}, {x});
  g.set_horizon(3);
  REQUIRE_THROWS_AS(g.build(), ValidationError);
}
