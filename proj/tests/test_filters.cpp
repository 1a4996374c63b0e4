#include <algorithm>
#include <catch2/catch_amalgamated.hpp>

#include "lcsc/io/doc.hpp"
#include "lcsc/io/fixtures.hpp"
#include "lcsc/product/zappa_szep.hpp"
#include "lcsc/tight/filters.hpp"
#include "test_fixtures.hpp"

using namespace lcsc;
using namespace lcsc::testing;

namespace {

std::vector<std::vector<std::string>> filter_names(FiniteCategory const& c,
                                                   std::vector<Filter> const& fs) {
  std::vector<std::vector<std::string>> out;
  for (auto const& f : fs) {
    std::vector<std::string> ns;
    for (Mor m : f.members) ns.push_back(c.name(m));
    std::sort(ns.begin(), ns.end());
    out.push_back(ns);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::string>> oracle_names(
    FiniteCategory const& c, std::vector<std::vector<Mor>> const& fs) {
  std::vector<std::vector<std::string>> out;
  for (auto const& f : fs) {
    std::vector<std::string> ns;
    for (Mor m : f) ns.push_back(c.name(m));
    std::sort(ns.begin(), ns.end());
    out.push_back(ns);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// one object, an order-2 invertible, and Z/2 acting trivially with the
// nontrivial cocycle on the loop
CategoryDoc c2_with_z2() {
  CategoryDoc d;
  d.name = "c2-z2";
  d.objects = {"v"};
  d.morphisms.push_back({"g", "v", "v", "0"});
  d.compose.push_back({"g", "g", "v"});
  d.with_groupoid = true;
  d.g_morphisms.push_back({"s", "v", "v", ""});
  d.g_compose.push_back({"s", "s", "v"});
  d.action.push_back({"s", "g", "g"});
  d.cocycle.push_back({"s", "g", "s"});
  return d;
}

}  // namespace

TEST_CASE("filters of the one-edge graph", "[filters]") {
  auto e2 = make_e2();
  auto fam = enumerate_filters(e2.cat);
  REQUIRE(filter_names(e2.cat, fam.all) ==
          std::vector<std::vector<std::string>>{{"e", "v"}, {"u"}, {"v"}});
  REQUIRE(filter_names(e2.cat, fam.maximal) ==
          std::vector<std::vector<std::string>>{{"e", "v"}, {"u"}});
  REQUIRE(filter_names(e2.cat, fam.tight) == filter_names(e2.cat, fam.maximal));
  REQUIRE(fam.tight_equals_maximal);
  REQUIRE(!fam.up_to_horizon);
}

TEST_CASE("subset oracle agrees on small categories", "[filters][oracle]") {
  for (auto fx : {make_e2(), make_c2()}) {
    auto fam = enumerate_filters(fx.cat);
    auto oracle = enumerate_filters_subset_oracle(fx.cat);
    std::vector<std::vector<Mor>> lib;
    for (auto const& f : fam.all) lib.push_back(f.members);
    REQUIRE(oracle_names(fx.cat, lib) == oracle_names(fx.cat, oracle.stars));
    std::vector<std::vector<Mor>> libmax;
    for (auto const& f : fam.maximal) libmax.push_back(f.members);
    REQUIRE(oracle_names(fx.cat, libmax) == oracle_names(fx.cat, oracle.maximal));
    std::vector<std::vector<Mor>> libt;
    for (auto const& f : fam.tight) libt.push_back(f.members);
    REQUIRE(oracle_names(fx.cat, libt) == oracle_names(fx.cat, oracle.tight));
  }
}

TEST_CASE("all morphisms of a groupoid give one filter", "[filters]") {
  auto c2 = make_c2();
  auto fam = enumerate_filters(c2.cat);
  REQUIRE(fam.all.size() == 1);
  REQUIRE(fam.all[0].members == std::vector<Mor>{c2.cat.identity(0)});
}

TEST_CASE("trivial category filters", "[filters]") {
  auto b = compile(generate_fixture("trivial", {}));
  auto fam = enumerate_filters(b.cat());
  REQUIRE(fam.all.size() == 1);
  REQUIRE(fam.maximal.size() == 1);
  REQUIRE(fam.tight.size() == 1);
}

TEST_CASE("truncated filters are labeled and frontier-tight", "[filters]") {
  auto f2 = make_f2(3);
  auto fam = enumerate_filters(f2.cat);
  REQUIRE(fam.up_to_horizon);
  REQUIRE(fam.all.size() == 15);   // all words up to length 3
  REQUIRE(fam.tight.size() == 8);  // frontier words of length 3
  for (auto const& f : fam.tight) REQUIRE(f2.d.scalar(f.top) == 3);
}

TEST_CASE("filter action", "[filters]") {
  auto e2 = make_e2();
  Mor e = e2.cat.morphism_named("e");
  Mor idu = e2.cat.morphism_named("u");
  auto Fu = principal_filter(e2.cat, idu);
  auto img = act_on_filter(e2.cat, {e, idu}, Fu);
  REQUIRE(img == principal_filter(e2.cat, e));
  REQUIRE(img.members.size() == 2);

  // identity element fixes every filter
  auto Fe = principal_filter(e2.cat, e);
  Mor idv = e2.cat.morphism_named("v");
  REQUIRE(act_on_filter(e2.cat, {idv, idv}, Fe) == Fe);

  auto f2 = make_f2(4);
  Mor a = f2.cat.morphism_named("a");
  Mor b = f2.cat.morphism_named("b");
  REQUIRE(act_on_filter(f2.cat, {a, b}, principal_filter(f2.cat, b)) ==
          principal_filter(f2.cat, a));
  Mor ba = f2.cat.compose(b, a);
  Mor aa = f2.cat.compose(a, a);
  REQUIRE(act_on_filter(f2.cat, {a, b}, principal_filter(f2.cat, ba)) ==
          principal_filter(f2.cat, aa));

  // the bottom must belong to the filter
  REQUIRE_THROWS_AS(act_on_filter(f2.cat, {a, b}, principal_filter(f2.cat, a)),
                    DomainError);
}

TEST_CASE("filter transfer to the product is a bijection", "[filters][zs]") {
  std::vector<Bundle> bundles;
  bundles.push_back(compile(c2_with_z2()));
  bundles.push_back(compile(generate_fixture("exel-pardo-swap", {{{"horizon", 3}}})));
  bundles.push_back(
      compile(generate_fixture("graph-path", {{{"n", 2}, {"trivial-group", 1}}})));
  bundles.push_back(compile(
      generate_fixture("sec6", {{{"horizon", 2}, {"n", 2}, {"p", 2}}})));
  for (auto const& b : bundles) {
    auto p = build_product(b.system, true);
    auto fam_c = enumerate_filters(b.cat());
    auto fam_p = enumerate_filters(p.prod);

    // F -> F ⋈ G on principal generators
    std::vector<Mor> mapped;
    for (auto const& f : fam_c.all) {
      Mor unit = b.grp().identity(b.cat().src(f.top));
      mapped.push_back(p.prod.canonical_rep(p.id_of_pair(f.top, unit)));
    }
    std::sort(mapped.begin(), mapped.end());
    std::vector<Mor> tops;
    for (auto const& f : fam_p.all) tops.push_back(f.top);
    std::sort(tops.begin(), tops.end());
    REQUIRE(mapped == tops);

    // the bijection respects maximal and tight subsets
    auto project = [&](std::vector<Filter> const& fs) {
      std::vector<Mor> out;
      for (auto const& f : fs) out.push_back(f.top);
      std::sort(out.begin(), out.end());
      return out;
    };
    std::vector<Mor> max_mapped;
    for (auto const& f : fam_c.maximal) {
      Mor unit = b.grp().identity(b.cat().src(f.top));
      max_mapped.push_back(p.prod.canonical_rep(p.id_of_pair(f.top, unit)));
    }
    std::sort(max_mapped.begin(), max_mapped.end());
    REQUIRE(max_mapped == project(fam_p.maximal));
    std::vector<Mor> tight_mapped;
    for (auto const& f : fam_c.tight) {
      Mor unit = b.grp().identity(b.cat().src(f.top));
      tight_mapped.push_back(p.prod.canonical_rep(p.id_of_pair(f.top, unit)));
    }
    std::sort(tight_mapped.begin(), tight_mapped.end());
    REQUIRE(tight_mapped == project(fam_p.tight));
  }
}

TEST_CASE("tight filters equal maximal filters on finite categories",
          "[filters][property]") {
  for (auto fx : {make_e2(), make_c2()}) {
    auto fam = enumerate_filters(fx.cat);
    REQUIRE(fam.tight_equals_maximal);
  }
  auto b = compile(generate_fixture("graph-path", {{{"n", 3}}}));
  REQUIRE(enumerate_filters(b.cat()).tight_equals_maximal);
}
