#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include "lcsc/action/partial_iso.hpp"
#include "lcsc/core/category.hpp"
#include "lcsc/core/length.hpp"

namespace lcsc {

//! A discrete groupoid acting on a category through partial isomorphisms.
//! The unit spaces are identified: object v of the category corresponds to
//! object v of the acting groupoid (same index, same name).
struct GroupoidAction {
  FiniteCategory grp;            // all morphisms invertible
  std::vector<PartialIso> phi;   // indexed by groupoid morphism

  Obj src_obj(Mor g) const { return grp.src(g); }
  Obj rng_obj(Mor g) const { return grp.rng(g); }
};

//! A verified bundle (Λ, d, G, action, cocycle). The traditional overloading
//! of one symbol for both maps is split here into the action map
//! (act: g, x -> g·x) and the cocycle map (coc: g, x -> G-morphism).
struct CategorySystem {
  FiniteCategory cat;
  LengthAssignment d;
  FiniteCategory grp;
  std::vector<PartialIso> phi;   // indexed by G-morphism
  std::vector<Mor> cocycle;      // [g * cat.num_morphisms() + x] -> G-morphism

  Mor act(Mor g, Mor x) const { return phi[g].apply(cat, x); }
  bool act_defined(Mor g, Mor x) const {
    return cat.rng(x) == grp.src(g) && phi[g].defined(x);
  }
  //! g·v for an object v = src-object of g.
  Obj act_obj(Mor g, Obj v) const {
    if (grp.src(g) != v) throw DomainError("object action undefined");
    return grp.rng(g);
  }
  Mor coc(Mor g, Mor x) const {
    Mor h = cocycle[static_cast<std::size_t>(g) * cat.num_morphisms() + x];
    if (h == kNoMor) {
      if (cat.truncated())
        throw BeyondHorizonError("cocycle undefined at (" + grp.name(g) + ", " +
                                 cat.name(x) + ") within the horizon");
      throw DomainError("cocycle undefined at (" + grp.name(g) + ", " +
                        cat.name(x) + ")");
    }
    return h;
  }
  bool coc_defined(Mor g, Mor x) const {
    return cat.rng(x) == grp.src(g) &&
           cocycle[static_cast<std::size_t>(g) * cat.num_morphisms() + x] != kNoMor;
  }
};

//! Raw action data on generators: for every non-unit groupoid morphism g and
//! every category generator e with rng(e) = src-object of g, the image g·e
//! and the cocycle value. For categories without generator words the tables
//! must instead cover every morphism of the cone.
struct ActionTables {
  // keyed by (g, e)
  std::map<std::pair<Mor, Mor>, Mor> act;
  std::map<std::pair<Mor, Mor>, Mor> coc;
};

namespace detail {

inline void require_groupoid(FiniteCategory const& g) {
  for (Mor m = 0; m < g.num_morphisms(); ++m)
    if (!g.invertible(m))
      throw ValidationError("acting category is not a groupoid: " + g.name(m) +
                            " has no inverse");
}

inline void require_unit_bijection(FiniteCategory const& cat,
                                   FiniteCategory const& grp) {
  if (cat.num_objects() != grp.num_objects())
    throw ValidationError(
        "the unit space of the groupoid must be identified with the objects "
        "of the category");
  for (Obj v = 0; v < cat.num_objects(); ++v)
    if (cat.object_name(v) != grp.object_name(v))
      throw ValidationError("object mismatch between category and groupoid at '" +
                            cat.object_name(v) + "'");
}

}  // namespace detail

//! Materialize the full action and cocycle from generator-level tables,
//! using the self-similarity recursion g·(e∘w) = (g·e)∘(coc(g,e)·w) and the
//! cocycle recursion coc(g, e∘w) = coc(coc(g, e), w).
inline CategorySystem materialize_system(FiniteCategory cat, LengthAssignment d,
                                         FiniteCategory grp,
                                         ActionTables const& tables) {
  detail::require_groupoid(grp);
  detail::require_unit_bijection(cat, grp);

  CategorySystem sys;
  sys.cat = std::move(cat);
  sys.d = std::move(d);
  sys.grp = std::move(grp);

  auto const& c = sys.cat;
  auto const& G = sys.grp;
  int const nm = c.num_morphisms();
  int const ng = G.num_morphisms();

  std::vector<Mor> act_all(static_cast<std::size_t>(ng) * nm, kNoMor);
  sys.cocycle.assign(static_cast<std::size_t>(ng) * nm, kNoMor);
  auto A = [&](Mor g, Mor x) -> Mor& {
    return act_all[static_cast<std::size_t>(g) * nm + x];
  };
  auto C = [&](Mor g, Mor x) -> Mor& {
    return sys.cocycle[static_cast<std::size_t>(g) * nm + x];
  };

  // identities of Λ: act via the object action, cocycle via axioms (1)/(3)
  for (Mor g = 0; g < ng; ++g) {
    Mor idv = c.identity(G.src(g));
    A(g, idv) = c.identity(G.rng(g));
    C(g, idv) = g;
  }
  // units of G act as the identity
  for (Obj v = 0; v < c.num_objects(); ++v) {
    Mor u = G.identity(v);
    for (Mor x : c.cone(v)) {
      A(u, x) = x;
      C(u, x) = G.identity(c.src(x));
    }
  }
  // generator seeds
  for (auto const& [key, y] : tables.act) {
    auto [g, e] = key;
    if (c.rng(e) != G.src(g))
      throw ValidationError("action table entry (" + G.name(g) + ", " + c.name(e) +
                            ") is outside the domain cone");
    A(g, e) = y;
  }
  for (auto const& [key, h] : tables.coc) {
    auto [g, e] = key;
    C(g, e) = h;
  }

  // recursion over morphisms ordered by word length
  std::vector<Mor> order;
  for (Mor m = 0; m < nm; ++m) order.push_back(m);
  std::stable_sort(order.begin(), order.end(), [&](Mor a, Mor b) {
    auto wa = c.word(a) ? c.word(a)->size() : 0;
    auto wb = c.word(b) ? c.word(b)->size() : 0;
    return wa < wb;
  });
  bool incomplete = false;
  for (Mor x : order) {
    if (c.is_identity(x)) continue;
    auto const& w = c.word(x);
    for (Mor g = 0; g < ng; ++g) {
      if (G.src(g) != c.rng(x)) continue;
      if (A(g, x) != kNoMor && C(g, x) != kNoMor) continue;
      if (!w || w->empty()) {
        throw ValidationError("action tables do not cover (" + G.name(g) + ", " +
                              c.name(x) + ") and the category has no generator words");
      }
      Mor e = w->front();
      if (e == x) {  // x is itself a generator; seed required
        throw ValidationError("action tables are missing the generator entry (" +
                              G.name(g) + ", " + c.name(x) + ")");
      }
      auto rest = c.divide_left(e, x);
      if (!rest) throw ValidationError("generator word of " + c.name(x) + " is broken");
      Mor ge = A(g, e), ce = C(g, e);
      if (ge == kNoMor || ce == kNoMor) {
        incomplete = true;
        continue;
      }
      Mor arest = A(ce, *rest), crest = C(ce, *rest);
      if (arest == kNoMor || crest == kNoMor) {
        incomplete = true;
        continue;
      }
      auto img = c.try_compose(ge, arest);
      if (!img) {
        incomplete = true;  // image escapes the horizon
        continue;
      }
      if (A(g, x) == kNoMor) A(g, x) = *img;
      if (C(g, x) == kNoMor) C(g, x) = crest;
    }
  }
  if (incomplete && !c.truncated())
    throw ValidationError("action materialization is incomplete");

  // assemble the partial isomorphisms
  sys.phi.resize(ng);
  for (Mor g = 0; g < ng; ++g) {
    PartialIso f;
    f.dom = G.src(g);
    f.cod = G.rng(g);
    for (Mor x : c.cone(f.dom)) {
      if (A(g, x) != kNoMor) f.set(x, A(g, x));
    }
    sys.phi[g] = std::move(f);
  }
  return sys;
}

struct ActionReport {
  Verdict groupoid;        // acting category is a groupoid with the right units
  Verdict partial_isos;    // every phi(g) satisfies the defining conditions
  Verdict homomorphism;    // phi(gh) = phi(g)phi(h), phi(g^{-1}) = phi(g)^{-1}
  Verdict self_similar;    // a witness h exists for every (g, α)
  bool all_pass() const {
    return groupoid.holds() && partial_isos.holds() && homomorphism.holds() &&
           self_similar.holds();
  }
};

//! Verify that phi is a groupoid action by partial isomorphisms and report
//! whether it is self-similar.
inline ActionReport validate_action(FiniteCategory const& c, LengthAssignment const& d,
                                    FiniteCategory const& G,
                                    std::vector<PartialIso> const& phi) {
  ActionReport rep;
  bool uth = c.truncated();
  rep.groupoid = Verdict::pass();
  rep.partial_isos = Verdict::pass(uth);
  rep.homomorphism = Verdict::pass(uth);
  rep.self_similar = Verdict::pass(uth);

  try {
    detail::require_groupoid(G);
    detail::require_unit_bijection(c, G);
  } catch (ValidationError const& e) {
    rep.groupoid = Verdict::fail({}, e.what());
    return rep;
  }

  for (Mor g = 0; g < G.num_morphisms() && rep.partial_isos.holds(); ++g) {
    if (phi[g].dom != G.src(g) || phi[g].cod != G.rng(g)) {
      rep.partial_isos = Verdict::fail({G.name(g)}, "phi(g) has wrong domain", uth);
      break;
    }
    auto pr = validate_partial_iso(c, d, phi[g]);
    if (!pr.all_pass())
      rep.partial_isos = Verdict::fail({G.name(g)}, "phi(g) is not a partial isomorphism", uth);
  }

  // units act as identities
  for (Obj v = 0; v < G.num_objects() && rep.homomorphism.holds(); ++v) {
    if (!(phi[G.identity(v)] == PartialIso::identity(c, v)))
      rep.homomorphism = Verdict::fail({G.object_name(v)}, "phi(unit) is not the identity", uth);
  }
  // composition and inverses
  for (Mor g = 0; g < G.num_morphisms() && rep.homomorphism.holds(); ++g) {
    for (Mor h = 0; h < G.num_morphisms(); ++h) {
      if (G.src(g) != G.rng(h)) continue;
      Mor gh = G.compose(g, h);
      auto composed = piso_compose(c, phi[g], phi[h]);
      // compare on the intersection of domains (horizon may clip either side)
      for (auto const& [x, y] : composed.fwd) {
        if (phi[gh].defined(x) && phi[gh].fwd.at(x) != y) {
          rep.homomorphism = Verdict::fail({G.name(g), G.name(h), c.name(x)},
                                           "phi(gh) != phi(g)phi(h)", uth);
          break;
        }
      }
      if (!rep.homomorphism.holds()) break;
    }
  }
  for (Mor g = 0; g < G.num_morphisms() && rep.homomorphism.holds(); ++g) {
    auto inv = piso_inverse(phi[g]);
    Mor gi = G.inverse(g);
    for (auto const& [x, y] : inv.fwd) {
      if (phi[gi].defined(x) && phi[gi].fwd.at(x) != y) {
        rep.homomorphism = Verdict::fail({G.name(g), c.name(x)},
                                         "phi(g^{-1}) != phi(g)^{-1}", uth);
        break;
      }
    }
  }

  // self-similarity: for each (g, α) find h with g·(αμ) = (g·α)(h·μ)
  for (Mor g = 0; g < G.num_morphisms() && rep.self_similar.holds(); ++g) {
    for (Mor a : c.cone(G.src(g))) {
      if (!phi[g].defined(a)) continue;
      Mor ga = phi[g].fwd.at(a);
      bool found = false;
      for (Mor h = 0; h < G.num_morphisms() && !found; ++h) {
        if (G.src(h) != c.src(a)) continue;
        bool ok = true;
        for (Mor mu : c.cone(c.src(a))) {
          auto amu = c.try_compose(a, mu);
          if (!amu || !phi[g].defined(*amu)) continue;
          if (!phi[h].defined(mu)) {
            ok = false;
            break;
          }
          auto rhs = c.try_compose(ga, phi[h].fwd.at(mu));
          if (!rhs || phi[g].fwd.at(*amu) != *rhs) {
            ok = false;
            break;
          }
        }
        found = ok;
      }
      if (!found) {
        rep.self_similar = Verdict::fail({G.name(g), c.name(a)},
                                         "no groupoid element restricts the action here",
                                         uth);
        break;
      }
    }
  }
  return rep;
}

struct CocycleReport {
  Verdict axiom1, axiom2, axiom3, axiom4, axiom5;
  Verdict cocycle_identity;
  Verdict derived;             // r(g·α) = g·r(α), s(coc) = s(α), inverse rule
  Verdict restriction_compat;  // phi(coc(g,α)) = restrict(phi(g), α)
  bool all_pass() const {
    return axiom1.holds() && axiom2.holds() && axiom3.holds() && axiom4.holds() &&
           axiom5.holds() && cocycle_identity.holds() && derived.holds() &&
           restriction_compat.holds();
  }
};

//! Exhaustively verify the category-cocycle axioms, the cocycle identity,
//! and their derived consequences on the stored part of the system.
inline CocycleReport validate_category_cocycle(CategorySystem const& sys) {
  CocycleReport rep;
  auto const& c = sys.cat;
  auto const& G = sys.grp;
  bool uth = c.truncated();
  for (Verdict* v : {&rep.axiom1, &rep.axiom2, &rep.axiom3, &rep.axiom4, &rep.axiom5,
                     &rep.cocycle_identity, &rep.derived, &rep.restriction_compat})
    *v = Verdict::pass(uth);

  // (1) coc(g, s(g)) = g
  for (Mor g = 0; g < G.num_morphisms(); ++g) {
    Mor idv = c.identity(G.src(g));
    if (!sys.coc_defined(g, idv) || sys.coc(g, idv) != g) {
      rep.axiom1 = Verdict::fail({G.name(g)}, "coc(g, domain identity) != g", uth);
      break;
    }
  }

  // pointwise axioms
  for (Mor g = 0; g < G.num_morphisms(); ++g) {
    Obj v = G.src(g);
    for (Mor a : c.cone(v)) {
      if (!sys.act_defined(g, a) || !sys.coc_defined(g, a)) continue;
      Mor ga = sys.act(g, a);
      Mor h = sys.coc(g, a);
      // (2) s(g·α) = r(coc(g,α)) as objects
      if (rep.axiom2.holds() && (c.src(ga) != G.rng(h)))
        rep.axiom2 = Verdict::fail({G.name(g), c.name(a)},
                                   "s(g·α) != r(coc(g,α))", uth);
      // (3) coc(r(α), α) = unit at s(α)
      Mor u = G.identity(c.rng(a));
      if (rep.axiom3.holds() &&
          (!sys.coc_defined(u, a) || sys.coc(u, a) != G.identity(c.src(a))))
        rep.axiom3 = Verdict::fail({c.name(a)}, "coc(r(α), α) is not a unit", uth);
      // derived: r(g·α) = g·r(α), s(coc(g,α)) = s(α), inverse rule
      if (rep.derived.holds()) {
        if (c.rng(ga) != G.rng(g))
          rep.derived = Verdict::fail({G.name(g), c.name(a)}, "r(g·α) != g·r(α)", uth);
        else if (G.src(h) != c.src(a))
          rep.derived = Verdict::fail({G.name(g), c.name(a)}, "s(coc(g,α)) != s(α)", uth);
        else if (sys.coc_defined(G.inverse(g), ga) &&
                 G.inverse(h) != sys.coc(G.inverse(g), ga))
          rep.derived = Verdict::fail({G.name(g), c.name(a)},
                                      "coc(g,α)^{-1} != coc(g^{-1}, g·α)", uth);
      }
      // (4) and (5) over extensions
      for (Mor b : c.cone(c.src(a))) {
        auto ab = c.try_compose(a, b);
        if (!ab) continue;
        if (rep.axiom4.holds() && sys.coc_defined(g, *ab) && sys.coc_defined(h, b)) {
          if (sys.coc(g, *ab) != sys.coc(h, b))
            rep.axiom4 = Verdict::fail({G.name(g), c.name(a), c.name(b)},
                                       "coc(g, αβ) != coc(coc(g,α), β)", uth);
        }
        if (rep.axiom5.holds() && sys.act_defined(g, *ab) && sys.act_defined(h, b)) {
          auto rhs = c.try_compose(ga, sys.act(h, b));
          if (!rhs || sys.act(g, *ab) != *rhs)
            rep.axiom5 = Verdict::fail({G.name(g), c.name(a), c.name(b)},
                                       "g·(αβ) != (g·α)(coc(g,α)·β)", uth);
        }
        if (!rep.axiom4.holds() && !rep.axiom5.holds()) break;
      }
    }
  }

  // cocycle identity coc(gh, α) = coc(g, h·α) coc(h, α)
  for (Mor g = 0; g < G.num_morphisms() && rep.cocycle_identity.holds(); ++g) {
    for (Mor h = 0; h < G.num_morphisms(); ++h) {
      if (G.src(g) != G.rng(h)) continue;
      Mor gh = G.compose(g, h);
      for (Mor a : c.cone(G.src(h))) {
        if (!sys.act_defined(h, a) || !sys.coc_defined(h, a) ||
            !sys.coc_defined(gh, a))
          continue;
        Mor ha = sys.act(h, a);
        if (!sys.coc_defined(g, ha)) continue;
        if (sys.coc(gh, a) != G.compose(sys.coc(g, ha), sys.coc(h, a))) {
          rep.cocycle_identity = Verdict::fail({G.name(g), G.name(h), c.name(a)},
                                               "cocycle identity fails", uth);
          break;
        }
      }
      if (!rep.cocycle_identity.holds()) break;
    }
  }

  // phi(coc(g,α)) = restrict(phi(g), α) on the common domain
  for (Mor g = 0; g < G.num_morphisms() && rep.restriction_compat.holds(); ++g) {
    for (Mor a : c.cone(G.src(g))) {
      if (!sys.phi[g].defined(a) || !sys.coc_defined(g, a)) continue;
      auto r = restrict(c, sys.phi[g], a);
      auto const& ph = sys.phi[sys.coc(g, a)];
      for (auto const& [x, y] : r.fwd) {
        if (ph.defined(x) && ph.fwd.at(x) != y) {
          rep.restriction_compat = Verdict::fail({G.name(g), c.name(a), c.name(x)},
                                                 "phi(coc(g,α)) != phi(g)|α", uth);
          break;
        }
      }
      if (!rep.restriction_compat.holds()) break;
    }
  }
  return rep;
}

//! Pseudo-freeness: Λ is action-free and g·α = f∘α with a unit cocycle value
//! forces g to be a unit.
inline Verdict is_pseudo_free(CategorySystem const& sys) {
  auto const& c = sys.cat;
  auto const& G = sys.grp;
  bool uth = c.truncated();
  auto af = is_action_free(c);
  if (!af.holds()) {
    af.note = "category is not action-free: " + af.note;
    return af;
  }
  for (Mor g = 0; g < G.num_morphisms(); ++g) {
    if (G.is_identity(g)) continue;
    for (Mor a : c.cone(G.src(g))) {
      if (!sys.act_defined(g, a) || !sys.coc_defined(g, a)) continue;
      if (!G.is_identity(sys.coc(g, a))) continue;
      Mor ga = sys.act(g, a);
      for (Mor f : c.invertibles().members) {
        if (c.src(f) != c.rng(a)) continue;
        auto fa = c.try_compose(f, a);
        if (fa && *fa == ga)
          return Verdict::fail({G.name(g), c.name(a), c.name(f)},
                               "non-unit g acts as an invertible with trivial cocycle",
                               uth);
      }
    }
  }
  return Verdict::pass(uth);
}

//! Lift a faithful action to its unique category cocycle by solving the
//! self-similarity equation; fails loudly when no or multiple solutions
//! exist.
inline CategorySystem infer_cocycle(FiniteCategory cat, LengthAssignment d,
                                    FiniteCategory grp,
                                    std::vector<PartialIso> phi) {
  CategorySystem sys;
  sys.cat = std::move(cat);
  sys.d = std::move(d);
  sys.grp = std::move(grp);
  sys.phi = std::move(phi);
  auto const& c = sys.cat;
  auto const& G = sys.grp;
  sys.cocycle.assign(static_cast<std::size_t>(G.num_morphisms()) * c.num_morphisms(),
                     kNoMor);
  for (Mor g = 0; g < G.num_morphisms(); ++g) {
    for (Mor a : c.cone(G.src(g))) {
      if (!sys.phi[g].defined(a)) continue;
      auto r = restrict(c, sys.phi[g], a);
      Mor found = kNoMor;
      int count = 0;
      for (Mor h = 0; h < G.num_morphisms(); ++h) {
        if (G.src(h) != r.dom || G.rng(h) != r.cod) continue;
        bool agrees = true;
        for (auto const& [x, y] : r.fwd) {
          if (!sys.phi[h].defined(x) || sys.phi[h].fwd.at(x) != y) {
            agrees = false;
            break;
          }
        }
        if (agrees) {
          found = h;
          ++count;
        }
      }
      if (count == 0)
        throw ValidationError("no groupoid element realizes phi(g)|α at (" +
                              G.name(g) + ", " + c.name(a) + ")");
      if (count > 1) {
        // near the horizon the clipped restriction may not pin h down; the
        // cocycle stays undefined there on truncated categories
        if (!c.truncated())
          throw ValidationError(
              "action is not faithful: multiple cocycle solutions at (" +
              G.name(g) + ", " + c.name(a) + ")");
        continue;
      }
      sys.cocycle[static_cast<std::size_t>(g) * c.num_morphisms() + a] = found;
    }
  }
  return sys;
}

}  // namespace lcsc
