#pragma once

#include <unordered_map>
#include <vector>

#include "lcsc/core/category.hpp"
#include "lcsc/core/length.hpp"

namespace lcsc {

//! A partial isomorphism f: vΛ -> wΛ stored as an explicit pairing.
//!
//! On a truncated category the pairing covers the stored part of the cone;
//! applying f outside the pairing raises BeyondHorizonError there and
//! DomainError on morphisms outside vΛ altogether.
struct PartialIso {
  Obj dom = -1;  // v = d(f)
  Obj cod = -1;  // w = c(f)
  std::unordered_map<Mor, Mor> fwd, bwd;

  bool defined(Mor x) const { return fwd.count(x) != 0; }

  Mor apply(FiniteCategory const& c, Mor x) const {
    if (c.rng(x) != dom)
      throw DomainError("morphism " + c.name(x) + " is not in the domain cone");
    auto it = fwd.find(x);
    if (it == fwd.end()) {
      if (c.truncated())
        throw BeyondHorizonError("partial isomorphism undefined at " + c.name(x) +
                                 " within the horizon");
      throw DomainError("partial isomorphism undefined at " + c.name(x));
    }
    return it->second;
  }

  Mor apply_inverse(FiniteCategory const& c, Mor z) const {
    if (c.rng(z) != cod)
      throw DomainError("morphism " + c.name(z) + " is not in the codomain cone");
    auto it = bwd.find(z);
    if (it == bwd.end()) {
      if (c.truncated())
        throw BeyondHorizonError("partial isomorphism inverse undefined at " +
                                 c.name(z) + " within the horizon");
      throw DomainError("partial isomorphism inverse undefined at " + c.name(z));
    }
    return it->second;
  }

  void set(Mor x, Mor y) {
    fwd[x] = y;
    bwd[y] = x;
  }

  static PartialIso identity(FiniteCategory const& c, Obj v) {
    PartialIso f;
    f.dom = f.cod = v;
    for (Mor x : c.cone(v)) f.set(x, x);
    return f;
  }

  friend bool operator==(PartialIso const& a, PartialIso const& b) {
    return a.dom == b.dom && a.cod == b.cod && a.fwd == b.fwd;
  }
};

struct PisoReport {
  Verdict bijection;         // condition (1)
  Verdict ideal;             // condition (2): f(αΛ) = f(α)Λ
  Verdict unit;              // condition (3): f(v) = w
  Verdict length;            // condition (4): d(f(α)) = d(α)
  Verdict invertible_image;  // consequence: invertibles map to invertibles
  bool all_pass() const {
    return bijection.holds() && ideal.holds() && unit.holds() && length.holds() &&
           invertible_image.holds();
  }
};

//! Check the defining conditions of a partial isomorphism against the stored
//! part of the category.
inline PisoReport validate_partial_iso(FiniteCategory const& c,
                                       LengthAssignment const& d,
                                       PartialIso const& f) {
  PisoReport rep;
  bool uth = c.truncated();
  rep.bijection = Verdict::pass(uth);
  rep.ideal = Verdict::pass(uth);
  rep.unit = Verdict::pass(uth);
  rep.length = Verdict::pass(uth);
  rep.invertible_image = Verdict::pass(uth);

  // (1) pairing is a bijection between the cones
  for (auto const& [x, y] : f.fwd) {
    if (c.rng(x) != f.dom || c.rng(y) != f.cod) {
      rep.bijection = Verdict::fail({c.name(x), c.name(y)},
                                    "pair leaves the domain/codomain cones", uth);
      break;
    }
  }
  if (rep.bijection.holds() && f.fwd.size() != f.bwd.size())
    rep.bijection = Verdict::fail({}, "pairing is not injective", uth);
  if (rep.bijection.holds() && !uth) {
    if (f.fwd.size() != c.cone(f.dom).size() || f.bwd.size() != c.cone(f.cod).size())
      rep.bijection = Verdict::fail({}, "pairing is not a total bijection", false);
  }

  // (3) f maps the domain identity to the codomain identity
  Mor idv = c.identity(f.dom);
  if (!f.defined(idv) || f.fwd.at(idv) != c.identity(f.cod))
    rep.unit = Verdict::fail({c.object_name(f.dom)}, "f(v) != w", uth);

  // (4) length preservation
  for (auto const& [x, y] : f.fwd) {
    if (d.of(x) != d.of(y)) {
      rep.length = Verdict::fail({c.name(x), c.name(y)}, "d(f(x)) != d(x)", uth);
      break;
    }
  }

  // (2) f(αΛ) = f(α)Λ, both inclusions on the stored part
  for (auto const& [y, fy] : f.fwd) {
    if (!rep.ideal.holds()) break;
    for (auto const& [a, b] : c.factorizations(y)) {
      if (!f.defined(a)) continue;
      Mor fa = f.fwd.at(a);
      if (!c.leq(fa, fy)) {
        rep.ideal = Verdict::fail({c.name(a), c.name(y)},
                                  "f(αβ) does not extend f(α)", uth);
        break;
      }
    }
  }
  for (auto const& [a, fa] : f.fwd) {
    if (!rep.ideal.holds()) break;
    for (Mor z : c.extensions(fa)) {
      auto it = f.bwd.find(z);
      if (it == f.bwd.end()) continue;  // unmapped: only possible when truncated
      if (!c.leq(a, it->second)) {
        rep.ideal = Verdict::fail({c.name(a), c.name(z)},
                                  "f(α)Λ is not contained in f(αΛ)", uth);
        break;
      }
    }
  }

  // Invertibles must map to invertibles
  for (auto const& [x, y] : f.fwd) {
    if (c.invertible(x) && !c.invertible(y)) {
      rep.invertible_image = Verdict::fail({c.name(x), c.name(y)},
                                           "invertible image is not invertible", uth);
      break;
    }
  }
  return rep;
}

//! The unique restriction f|a with f(a∘β) = f(a)∘f|a(β).
inline PartialIso restrict(FiniteCategory const& c, PartialIso const& f, Mor a) {
  if (c.rng(a) != f.dom)
    throw DomainError("restrict: " + c.name(a) + " is not in the domain cone");
  Mor fa = f.apply(c, a);
  PartialIso r;
  r.dom = c.src(a);
  r.cod = c.src(fa);
  for (Mor beta : c.cone(c.src(a))) {
    auto ab = c.try_compose(a, beta);
    if (!ab) continue;  // beyond horizon
    if (!f.defined(*ab)) {
      if (c.truncated()) continue;
      throw DomainError("restrict: image of " + c.name(*ab) + " undefined");
    }
    Mor z = f.fwd.at(*ab);
    auto w = c.divide_left(fa, z);
    if (!w)
      throw ValidationError("restrict: f(a∘β) does not extend f(a) at β = " +
                            c.name(beta));
    r.set(beta, *w);
  }
  return r;
}

//! Composition f∘g, defined when d(f) = c(g).
inline PartialIso piso_compose(FiniteCategory const& c, PartialIso const& f,
                               PartialIso const& g) {
  if (f.dom != g.cod)
    throw NotComposableError("piso_compose: d(f) != c(g)");
  PartialIso r;
  r.dom = g.dom;
  r.cod = f.cod;
  for (auto const& [x, gx] : g.fwd) {
    if (!f.defined(gx)) continue;
    r.set(x, f.fwd.at(gx));
  }
  return r;
}

inline PartialIso piso_inverse(PartialIso const& f) {
  PartialIso r;
  r.dom = f.cod;
  r.cod = f.dom;
  r.fwd = f.bwd;
  r.bwd = f.fwd;
  return r;
}

}  // namespace lcsc
