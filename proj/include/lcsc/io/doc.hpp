#pragma once

#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lcsc/action/system.hpp"
#include "lcsc/core/category.hpp"
#include "lcsc/core/length.hpp"
#include "lcsc/core/monoid.hpp"
#include "lcsc/core/wordgen.hpp"

namespace lcsc {

//! Structured form of a `.lcsc` category description. The same struct backs
//! the text parser, the canonical serializer, and the fixture generators, so
//! a generated document re-serializes byte-identically after a parse.
struct CategoryDoc {
  std::string name;
  std::optional<long> horizon;
  std::string monoid = "N";
  std::vector<std::string> objects;

  struct GenLine {
    std::string name, src, rng, length;
  };
  // generator mode
  std::vector<GenLine> generators;
  std::vector<std::pair<std::string, std::string>> relations;  // dot-words

  // explicit mode
  std::vector<GenLine> morphisms;  // length per non-identity morphism
  struct CompLine {
    std::string a, b, c;
  };
  std::vector<CompLine> compose;

  bool with_groupoid = false;
  std::vector<GenLine> g_morphisms;  // length field unused
  std::vector<CompLine> g_compose;

  struct ActLine {
    std::string g, x, value;
  };
  std::vector<ActLine> action;
  std::vector<ActLine> cocycle;

  bool generator_mode() const { return morphisms.empty(); }
};

//! A compiled description: the category, its length assignment, the acting
//! system (a trivial group bundle when no groupoid section is present), and
//! the validation certificates gathered while compiling.
struct Bundle {
  CategoryDoc doc;
  CategorySystem system;  // owns cat, d, grp, action, cocycle
  std::vector<std::pair<std::string, Verdict>> certificates;

  FiniteCategory const& cat() const { return system.cat; }
  LengthAssignment const& d() const { return system.d; }
  FiniteCategory const& grp() const { return system.grp; }
  bool trivial_group() const {
    return system.grp.num_morphisms() == system.grp.num_objects();
  }
};

namespace detail {

inline OrderedMonoid parse_monoid(std::string const& s) {
  std::istringstream is(s);
  std::string head;
  is >> head;
  if (head == "N") return OrderedMonoid::naturals();
  if (head.rfind("N^", 0) == 0) return OrderedMonoid::natural_vec(std::stoi(head.substr(2)));
  if (head == "numerical") {
    std::vector<long> gens;
    long g;
    while (is >> g) gens.push_back(g);
    return OrderedMonoid::numerical(std::move(gens));
  }
  if (head == "free") {
    std::vector<std::string> ls;
    std::string l;
    while (is >> l) ls.push_back(l);
    return OrderedMonoid::free_words(std::move(ls));
  }
  if (head == "trivial") return OrderedMonoid::trivial();
  throw ParseError("unknown monoid '" + s + "'");
}

inline std::vector<std::string> split_word(std::string const& w) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : w) {
    if (ch == '.') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace detail

//! Compile a document into a validated bundle. Hard structural defects
//! (broken tables, non-groupoid acting section, unresolved names) throw;
//! property-level findings are recorded as certificates.
inline Bundle compile(CategoryDoc doc) {
  Bundle b;
  OrderedMonoid monoid = detail::parse_monoid(doc.monoid);

  FiniteCategory cat;
  LengthAssignment d;
  d.monoid = monoid;

  std::map<std::string, Obj> obj_index;
  for (std::size_t i = 0; i < doc.objects.size(); ++i) {
    if (!obj_index.emplace(doc.objects[i], static_cast<Obj>(i)).second)
      throw ParseError("duplicate object '" + doc.objects[i] + "'");
  }
  auto obj_of = [&](std::string const& n) -> Obj {
    auto it = obj_index.find(n);
    if (it == obj_index.end()) throw ParseError("unknown object '" + n + "'");
    return it->second;
  };

  if (doc.generator_mode()) {
    CategoryGenerator gen(monoid);
    for (auto const& o : doc.objects) gen.add_object(o);
    std::map<std::string, int> gen_index;
    for (auto const& g : doc.generators) {
      int idx = gen.add_generator(g.name, obj_of(g.src), obj_of(g.rng),
                                  monoid.parse(g.length));
      if (!gen_index.emplace(g.name, idx).second)
        throw ParseError("duplicate generator '" + g.name + "'");
    }
    auto word_of = [&](std::string const& w) -> std::vector<int> {
      auto parts = detail::split_word(w);
      if (parts.size() == 1 && obj_index.count(parts[0])) return {};
      std::vector<int> out;
      for (auto const& p : parts) {
        auto it = gen_index.find(p);
        if (it == gen_index.end()) throw ParseError("unknown generator '" + p + "'");
        out.push_back(it->second);
      }
      return out;
    };
    for (auto const& [lhs, rhs] : doc.relations)
      gen.add_relation(word_of(lhs), word_of(rhs));
    if (doc.horizon) gen.set_horizon(*doc.horizon);
    auto r = gen.build();
    cat = std::move(r.cat);
    d.value = std::move(r.lengths);
  } else {
    CategoryBuilder cb;
    for (auto const& o : doc.objects) cb.add_object(o);
    std::map<std::string, Mor> mor_index;
    for (std::size_t i = 0; i < doc.objects.size(); ++i)
      mor_index[doc.objects[i]] = static_cast<Mor>(i);
    std::vector<MonoidElem> lens(doc.objects.size(), monoid.one());
    for (auto const& m : doc.morphisms) {
      Mor id = cb.add_morphism(m.name, obj_of(m.src), obj_of(m.rng));
      if (!mor_index.emplace(m.name, id).second)
        throw ParseError("duplicate morphism '" + m.name + "'");
      lens.push_back(monoid.parse(m.length));
    }
    auto mor_of = [&](std::string const& n) -> Mor {
      auto it = mor_index.find(n);
      if (it == mor_index.end()) throw ParseError("unknown morphism '" + n + "'");
      return it->second;
    };
    for (auto const& e : doc.compose) cb.set_compose(mor_of(e.a), mor_of(e.b), mor_of(e.c));
    if (doc.horizon) cb.set_horizon(*doc.horizon);
    cat = cb.build();
    d.value = std::move(lens);
  }

  b.certificates.push_back({"length", Verdict::pass(cat.truncated())});
  {
    auto lr = validate_length(cat, d);
    Verdict v = lr.total;
    v &= lr.homomorphism;
    b.certificates.back().second = v;
  }

  // groupoid: explicit section or the trivial group bundle
  FiniteCategory grp;
  {
    CategoryBuilder gb;
    for (auto const& o : doc.objects) gb.add_object(o);
    std::map<std::string, Mor> gidx;
    for (std::size_t i = 0; i < doc.objects.size(); ++i)
      gidx[doc.objects[i]] = static_cast<Mor>(i);
    for (auto const& m : doc.g_morphisms) {
      Mor id = gb.add_morphism(m.name, obj_of(m.src), obj_of(m.rng));
      if (!gidx.emplace(m.name, id).second)
        throw ParseError("duplicate groupoid morphism '" + m.name + "'");
    }
    auto gmor_of = [&](std::string const& n) -> Mor {
      auto it = gidx.find(n);
      if (it == gidx.end()) throw ParseError("unknown groupoid morphism '" + n + "'");
      return it->second;
    };
    for (auto const& e : doc.g_compose)
      gb.set_compose(gmor_of(e.a), gmor_of(e.b), gmor_of(e.c));
    grp = gb.build();

    ActionTables tables;
    for (auto const& a : doc.action)
      tables.act[{gmor_of(a.g), cat.morphism_named(a.x)}] = cat.morphism_named(a.value);
    for (auto const& a : doc.cocycle)
      tables.coc[{gmor_of(a.g), cat.morphism_named(a.x)}] = gmor_of(a.value);
    b.system = materialize_system(std::move(cat), std::move(d), std::move(grp), tables);
  }

  {
    auto ar = validate_action(b.cat(), b.d(), b.grp(), b.system.phi);
    Verdict v = ar.groupoid;
    v &= ar.partial_isos;
    v &= ar.homomorphism;
    b.certificates.push_back({"action", v});
    auto cr = validate_category_cocycle(b.system);
    Verdict cv = cr.axiom1;
    cv &= cr.axiom2;
    cv &= cr.axiom3;
    cv &= cr.axiom4;
    cv &= cr.axiom5;
    cv &= cr.cocycle_identity;
    b.certificates.push_back({"cocycle", cv});
  }

  b.doc = std::move(doc);
  return b;
}

}  // namespace lcsc
