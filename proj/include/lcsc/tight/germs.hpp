#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lcsc/core/length.hpp"
#include "lcsc/tight/filters.hpp"

namespace lcsc {

//! A germ [τ^top σ^bottom, F] of the tight groupoid: an inverse-semigroup
//! element together with a filter containing its bottom, up to agreement on
//! a neighborhood inside the filter.
struct Germ {
  SElement elem;
  Filter filter;
};

inline Germ make_germ(FiniteCategory const& c, SElement s, Filter F) {
  if (c.src(s.top) != c.src(s.bottom))
    throw DomainError("germ element has mismatched sources");
  if (!F.contains(c, s.bottom))
    throw DomainError("germ filter does not contain the bottom");
  return Germ{s, std::move(F)};
}

inline Germ unit_germ(FiniteCategory const& c, Filter const& F) {
  Mor id = c.identity(F.base);
  return Germ{{id, id}, F};
}

//! The value of the element on the filter's top: top ∘ σ^{bottom}(F.top).
//! Two germs over the same filter are equal exactly when these values agree;
//! nullopt when the composition escapes the horizon.
inline std::optional<Mor> germ_value_at_top(FiniteCategory const& c, Germ const& x) {
  auto w = c.divide_left(x.elem.bottom, x.filter.top);
  if (!w) {
    // the bottom is only ≈-below the top; rewrite through the representative
    Mor rep = c.canonical_rep(x.elem.bottom);
    auto u = c.divide_left(rep, x.filter.top);
    if (!u) return std::nullopt;
    // bottom = rep∘g with g invertible, so σ^bottom(top) = g^{-1}∘σ^rep(top)
    for (Mor g : c.invertibles().members) {
      if (c.src(rep) != c.rng(g)) continue;
      auto bg = c.try_compose(rep, g);
      if (bg && *bg == x.elem.bottom) {
        auto gi = c.try_compose(c.inverse(g), *u);
        if (!gi) return std::nullopt;
        return c.try_compose(x.elem.top, *gi);
      }
    }
    return std::nullopt;
  }
  return c.try_compose(x.elem.top, *w);
}

//! Germ equality: same filter and agreement on a common member; by
//! directedness agreement at the filter's top decides.
inline bool germ_equal(FiniteCategory const& c, Germ const& x, Germ const& y) {
  if (!(x.filter == y.filter)) return false;
  auto vx = germ_value_at_top(c, x);
  auto vy = germ_value_at_top(c, y);
  if (vx && vy) return *vx == *vy;
  // horizon fallback: look for a smaller common member where both evaluate
  for (auto it = x.filter.members.rbegin(); it != x.filter.members.rend(); ++it) {
    Mor gamma = *it;
    if (!c.leq(x.elem.bottom, gamma) || !c.leq(y.elem.bottom, gamma)) continue;
    auto wx = c.divide_left(x.elem.bottom, gamma);
    auto wy = c.divide_left(y.elem.bottom, gamma);
    if (!wx || !wy) continue;
    auto ax = c.try_compose(x.elem.top, *wx);
    auto ay = c.try_compose(y.elem.top, *wy);
    if (ax && ay) return *ax == *ay;
  }
  throw BeyondHorizonError("germ comparison undecidable within the horizon");
}

//! Composition of germs: defined when y sends its filter onto x's filter;
//! the representatives are refined through a common extension of x.bottom
//! and y.top inside the intermediate filter.
inline Germ compose_germs(FiniteCategory const& c, Germ const& x, Germ const& y) {
  Filter mid = act_on_filter(c, y.elem, y.filter);
  if (!(mid == x.filter))
    throw NotComposableError("germs are not composable: filters do not match");
  // the least common refinement of x.bottom and y.top inside the filter
  // keeps the composite representative small
  Mor eps = kNoMor;
  std::size_t eps_segments = 0;
  for (Mor m : mid.members) {
    if (!c.leq(x.elem.bottom, m) || !c.leq(y.elem.top, m)) continue;
    std::size_t segs = c.initial_segments(m).size();
    if (eps == kNoMor || segs < eps_segments) {
      eps = m;
      eps_segments = segs;
    }
  }
  if (eps == kNoMor)
    throw BeyondHorizonError("no common refinement inside the horizon");
  auto u = c.divide_left(x.elem.bottom, eps);
  auto v = c.divide_left(y.elem.top, eps);
  auto top = u ? c.try_compose(x.elem.top, *u) : std::nullopt;
  auto bottom = v ? c.try_compose(y.elem.bottom, *v) : std::nullopt;
  if (!top || !bottom)
    throw BeyondHorizonError("germ composition escapes the horizon");
  return make_germ(c, {*top, *bottom}, y.filter);
}

inline Germ invert_germ(FiniteCategory const& c, Germ const& x) {
  Filter img = act_on_filter(c, x.elem, x.filter);
  return make_germ(c, {x.elem.bottom, x.elem.top}, img);
}

//! Range and source filters of a germ.
inline Filter germ_source(FiniteCategory const&, Germ const& x) { return x.filter; }
inline Filter germ_range(FiniteCategory const& c, Germ const& x) {
  return act_on_filter(c, x.elem, x.filter);
}

//! The degree cocycle: the enveloping-group value d(top) d(bottom)^{-1}.
//! Constant on germ classes and a groupoid homomorphism.
inline std::vector<long> degree_cocycle(LengthAssignment const& d, Germ const& x) {
  return d.monoid.group_difference(d.of(x.elem.top), d.of(x.elem.bottom));
}

struct GermEnumOptions {
  long max_degree = -1;       // cap on scalar degree of tops/bottoms; -1 = none
  std::size_t cap = 200000;   // hard cap on enumerated germs
};

//! Enumerate germs over the given filters, one representative per germ
//! class (deduplicated through the value at the filter top). Elements whose
//! evaluation escapes the horizon are skipped.
inline std::vector<Germ> enumerate_germs(FiniteCategory const& c,
                                         LengthAssignment const& d,
                                         std::vector<Filter> const& filters,
                                         GermEnumOptions opts = {}) {
  std::vector<Germ> out;
  std::map<std::pair<Mor, Mor>, bool> seen;  // (filter top, value at top)
  for (auto const& F : filters) {
    for (Mor bottom : F.members) {
      if (opts.max_degree >= 0 && d.scalar(bottom) > opts.max_degree) continue;
      for (Mor top = 0; top < c.num_morphisms(); ++top) {
        if (c.src(top) != c.src(bottom)) continue;
        if (opts.max_degree >= 0 && d.scalar(top) > opts.max_degree) continue;
        Germ g{{top, bottom}, F};
        auto val = germ_value_at_top(c, g);
        if (!val) continue;
        if (seen.emplace(std::make_pair(F.top, *val), true).second) {
          out.push_back(std::move(g));
          if (out.size() > opts.cap)
            throw TooLargeError("germ enumeration exceeds the cap");
        }
      }
    }
  }
  return out;
}

}  // namespace lcsc
