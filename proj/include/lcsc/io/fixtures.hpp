#pragma once

#include <map>
#include <string>

#include "lcsc/io/doc.hpp"

namespace lcsc {

//! Parameters for fixture generation: a flat name -> integer map.
struct FixtureParams {
  std::map<std::string, long> kv;

  long get(std::string const& k, long dflt) const {
    auto it = kv.find(k);
    return it == kv.end() ? dflt : it->second;
  }
  bool has(std::string const& k) const { return kv.count(k) != 0; }
};

namespace fixtures {

inline CategoryDoc trivial() {
  CategoryDoc d;
  d.name = "trivial";
  d.objects = {"v"};
  return d;
}

//! The free category on a directed path. n = 1 yields the single-edge graph
//! u --e--> v; larger n yields v0 --e1--> v1 --e2--> ... Genuinely finite.
inline CategoryDoc graph_path(long n) {
  if (n < 1) throw BadParamsError("graph-path needs n >= 1");
  CategoryDoc d;
  d.name = "graph-path";
  if (n == 1) {
    d.objects = {"u", "v"};
    d.generators.push_back({"e", "u", "v", "1"});
    return d;
  }
  for (long i = 0; i <= n; ++i) d.objects.push_back("v" + std::to_string(i));
  for (long i = 1; i <= n; ++i)
    d.generators.push_back({"e" + std::to_string(i), "v" + std::to_string(i - 1),
                            "v" + std::to_string(i), "1"});
  return d;
}

//! The free monoid on k letters a, b, c, ... truncated at `horizon`.
inline CategoryDoc rose(long k, long horizon) {
  if (k < 1 || k > 26) throw BadParamsError("rose-k needs 1 <= k <= 26");
  if (horizon < 1) throw BadParamsError("rose-k needs a horizon");
  CategoryDoc d;
  d.name = "rose-k";
  d.horizon = horizon;
  d.objects = {"o"};
  for (long i = 0; i < k; ++i)
    d.generators.push_back({std::string(1, static_cast<char>('a' + i)), "o", "o", "1"});
  return d;
}

//! {x}* with a central order-two invertible c.
inline CategoryDoc z2_central(long horizon) {
  if (horizon < 1) throw BadParamsError("z2-central needs a horizon");
  CategoryDoc d;
  d.name = "z2-central";
  d.horizon = horizon;
  d.objects = {"o"};
  d.generators.push_back({"x", "o", "o", "1"});
  d.generators.push_back({"c", "o", "o", "0"});
  d.relations.push_back({"c.c", "o"});
  d.relations.push_back({"c.x", "x.c"});
  return d;
}

//! Z/2 swapping the two letters of the rose, with the constant cocycle: the
//! letterwise-swap self-similar action.
inline CategoryDoc exel_pardo_swap(long horizon) {
  CategoryDoc d = rose(2, horizon);
  d.name = "exel-pardo-swap";
  d.with_groupoid = true;
  d.g_morphisms.push_back({"s", "o", "o", ""});
  d.g_compose.push_back({"s", "s", "o"});
  d.action.push_back({"s", "a", "b"});
  d.action.push_back({"s", "b", "a"});
  d.cocycle.push_back({"s", "a", "s"});
  d.cocycle.push_back({"s", "b", "s"});
  return d;
}

//! Z/2 fixing both letters, with cocycle s on a and trivial on b. This is
//! the standard source of a non-Hausdorff tight groupoid.
inline CategoryDoc nonhausdorff_swap_fix(long horizon) {
  CategoryDoc d = rose(2, horizon);
  d.name = "nonhausdorff-swap-fix";
  d.with_groupoid = true;
  d.g_morphisms.push_back({"s", "o", "o", ""});
  d.g_compose.push_back({"s", "s", "o"});
  d.action.push_back({"s", "a", "a"});
  d.action.push_back({"s", "b", "b"});
  d.cocycle.push_back({"s", "a", "s"});
  d.cocycle.push_back({"s", "b", "o"});
  return d;
}

//! Z/2 acting trivially on {a}* with the trivial cocycle away from the
//! identity: a category system that is not pseudo-free.
inline CategoryDoc z2_trivial_line(long horizon) {
  CategoryDoc d;
  d.name = "z2-trivial-line";
  d.horizon = horizon;
  d.objects = {"o"};
  d.generators.push_back({"a", "o", "o", "1"});
  d.with_groupoid = true;
  d.g_morphisms.push_back({"s", "o", "o", ""});
  d.g_compose.push_back({"s", "s", "o"});
  d.action.push_back({"s", "a", "a"});
  d.cocycle.push_back({"s", "a", "o"});
  return d;
}

//! A cyclic chain of objects v0..v{n-1} with unit loops of order p and the
//! translation action of the pair groupoid: morphisms are loop-decorated
//! paths and the groupoid shifts every index. The length horizon truncates
//! the path degree; the loop order keeps each degree level finite.
inline CategoryDoc sec_chain(long n, long horizon, long p) {
  if (n < 2) throw BadParamsError("sec6 needs n >= 2");
  if (p < 2) throw BadParamsError("sec6 needs loop order p >= 2");
  if (horizon < 1) throw BadParamsError("sec6 needs a horizon");
  CategoryDoc d;
  d.name = "sec6";
  d.horizon = horizon;
  d.objects.clear();
  auto v = [&](long i) { return "v" + std::to_string(((i % n) + n) % n); };
  auto a = [&](long i) { return "a" + std::to_string(((i % n) + n) % n); };
  auto c = [&](long i) { return "c" + std::to_string(((i % n) + n) % n); };
  auto g = [&](long i, long j) {
    return "g" + std::to_string(((i % n) + n) % n) + "_" +
           std::to_string(((j % n) + n) % n);
  };
  for (long i = 0; i < n; ++i) d.objects.push_back(v(i));
  for (long i = 0; i < n; ++i) d.generators.push_back({a(i), v(i), v(i + 1), "1"});
  for (long i = 0; i < n; ++i) d.generators.push_back({c(i), v(i), v(i), "0"});
  for (long i = 0; i < n; ++i) {
    std::string word = c(i);
    for (long t = 1; t < p; ++t) word += "." + c(i);
    d.relations.push_back({word, v(i)});
  }
  d.with_groupoid = true;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      if (i != j) d.g_morphisms.push_back({g(i, j), v(i), v(j), ""});
  auto gname = [&](long i, long j) {
    return ((i % n) + n) % n == ((j % n) + n) % n ? v(i) : g(i, j);
  };
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      for (long k = 0; k < n; ++k) {
        if (i == j || j == k) continue;  // unit arguments are implied
        d.g_compose.push_back({g(j, k), g(i, j), gname(i, k)});
      }
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      if (i == j) continue;
      d.action.push_back({g(i, j), a(i - 1), a(j - 1)});
      d.action.push_back({g(i, j), c(i), c(j)});
      d.cocycle.push_back({g(i, j), a(i - 1), gname(i - 1, j - 1)});
      d.cocycle.push_back({g(i, j), c(i), g(i, j)});
    }
  return d;
}

}  // namespace fixtures

//! Deterministic fixture generation by name; see the README for the
//! parameter conventions of each family.
inline CategoryDoc generate_fixture(std::string const& name, FixtureParams const& p) {
  CategoryDoc d;
  if (name == "trivial") {
    d = fixtures::trivial();
  } else if (name == "graph-path") {
    d = fixtures::graph_path(p.get("n", 1));
  } else if (name == "rose-k") {
    d = fixtures::rose(p.get("k", 2), p.get("horizon", 4));
  } else if (name == "z2-central") {
    d = fixtures::z2_central(p.get("horizon", 4));
  } else if (name == "exel-pardo-swap") {
    d = fixtures::exel_pardo_swap(p.get("horizon", 4));
  } else if (name == "nonhausdorff-swap-fix") {
    d = fixtures::nonhausdorff_swap_fix(p.get("horizon", 4));
  } else if (name == "z2-trivial-line") {
    d = fixtures::z2_trivial_line(p.get("horizon", 4));
  } else if (name == "sec6") {
    d = fixtures::sec_chain(p.get("n", 3), p.get("horizon", 4), p.get("p", 3));
  } else {
    throw BadParamsError("unknown fixture '" + name + "'");
  }
  if (p.get("trivial-group", 0) != 0) d.with_groupoid = true;
  return d;
}

}  // namespace lcsc
