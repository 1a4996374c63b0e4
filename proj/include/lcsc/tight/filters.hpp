#pragma once

#include <algorithm>
#include <vector>

#include "lcsc/core/category.hpp"

namespace lcsc {

//! A hereditary upward-directed subset of the category, stored through
//! canonical ≈-representatives. In a finite (or truncated) category every
//! such set has a maximum, so filters are principal: `top` generates and
//! `members` lists the canonical representatives of its initial segments.
struct Filter {
  Mor top = kNoMor;
  Obj base = -1;
  std::vector<Mor> members;  // sorted canonical representatives

  bool contains(FiniteCategory const& c, Mor m) const {
    return std::binary_search(members.begin(), members.end(), c.canonical_rep(m));
  }
  friend bool operator==(Filter const& a, Filter const& b) { return a.top == b.top; }
};

inline Filter principal_filter(FiniteCategory const& c, Mor x) {
  Filter f;
  f.top = c.canonical_rep(x);
  f.base = c.rng(x);
  for (Mor a : c.initial_segments(f.top)) f.members.push_back(c.canonical_rep(a));
  std::sort(f.members.begin(), f.members.end());
  f.members.erase(std::unique(f.members.begin(), f.members.end()), f.members.end());
  return f;
}

struct FilterFamily {
  std::vector<Filter> all;      // Λ*
  std::vector<Filter> maximal;  // Λ**
  std::vector<Filter> tight;    // Λ_tight
  bool tight_equals_maximal = false;
  bool up_to_horizon = false;
};

//! Enumerate the filters of the category. On a genuinely finite category
//! this is exact and tightness follows the raw definition; on a truncated
//! one the filters of the stored window are returned and the frontier
//! filters stand in for the tight ones, labeled up-to-horizon.
inline FilterFamily enumerate_filters(FiniteCategory const& c,
                                      std::size_t cap = 1u << 20) {
  FilterFamily fam;
  fam.up_to_horizon = c.truncated();

  std::vector<Mor> tops;
  for (Mor m = 0; m < c.num_morphisms(); ++m)
    if (c.canonical_rep(m) == m) tops.push_back(m);
  if (tops.size() > cap) throw TooLargeError("filter enumeration exceeds the cap");

  for (Mor t : tops) fam.all.push_back(principal_filter(c, t));

  // maximal = no stored proper extension
  for (auto const& f : fam.all) {
    bool maximal = true;
    for (Mor e : c.extensions(f.top)) {
      if (!c.equivalent(e, f.top)) {
        maximal = false;
        break;
      }
    }
    if (maximal) fam.maximal.push_back(f);
  }

  if (!c.truncated()) {
    // tight per the raw definition; the binding finite set F is the whole
    // complement of the filter
    for (auto const& f : fam.all) {
      bool tight = true;
      for (Mor alpha : f.members) {
        bool found = false;
        for (auto const& m : fam.maximal) {
          if (!m.contains(c, alpha)) continue;
          bool avoids = true;
          for (Mor x : m.members) {
            if (!f.contains(c, x)) {
              avoids = false;
              break;
            }
          }
          if (avoids) {
            found = true;
            break;
          }
        }
        if (!found) {
          tight = false;
          break;
        }
      }
      if (tight) fam.tight.push_back(f);
    }
  } else {
    fam.tight = fam.maximal;
  }

  fam.tight_equals_maximal =
      fam.tight.size() == fam.maximal.size() &&
      std::equal(fam.tight.begin(), fam.tight.end(), fam.maximal.begin(),
                 [](Filter const& a, Filter const& b) { return a.top == b.top; });
  return fam;
}

//! Independent brute-force oracle: enumerate every subset of the morphism
//! set and keep the nonempty hereditary directed ones. Exponential; only for
//! small genuinely finite categories and cross-checking.
struct FilterSubsetOracle {
  std::vector<std::vector<Mor>> stars, maximal, tight;
};

inline FilterSubsetOracle enumerate_filters_subset_oracle(FiniteCategory const& c,
                                                          std::size_t cap = 1u << 22) {
  int n = c.num_morphisms();
  if (n >= 22 || (std::size_t{1} << n) > cap)
    throw TooLargeError("subset oracle is limited to tiny categories");
  FilterSubsetOracle out;
  auto is_filter = [&](std::vector<Mor> const& s) {
    if (s.empty()) return false;
    for (Mor m : s) {
      for (Mor a : c.initial_segments(m)) {
        bool in = false;
        for (Mor x : s)
          if (c.equivalent(x, a)) in = true;
        if (!in) return false;
      }
    }
    for (Mor a : s)
      for (Mor b : s) {
        bool common = false;
        for (Mor g : s)
          if (c.leq(a, g) && c.leq(b, g)) common = true;
        if (!common) return false;
      }
    return true;
  };
  // canonicalize subsets to representative sets to avoid ≈-duplicates
  auto canon = [&](std::vector<Mor> s) {
    for (Mor& m : s) m = c.canonical_rep(m);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  };
  std::vector<std::vector<Mor>> found;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Mor> s;
    for (int i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) s.push_back(i);
    if (!is_filter(s)) continue;
    auto cs = canon(s);
    if (std::find(found.begin(), found.end(), cs) == found.end())
      found.push_back(cs);
  }
  out.stars = found;
  for (auto const& s : found) {
    bool maximal = true;
    for (auto const& t : found) {
      if (t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end()))
        maximal = false;
    }
    if (maximal) out.maximal.push_back(s);
  }
  // tightness by the raw definition, quantifying over every subset of the
  // complement
  for (auto const& s : found) {
    std::vector<Mor> complement;
    for (Mor m = 0; m < n; ++m) {
      Mor r = c.canonical_rep(m);
      if (!std::binary_search(s.begin(), s.end(), r)) complement.push_back(r);
    }
    std::sort(complement.begin(), complement.end());
    complement.erase(std::unique(complement.begin(), complement.end()),
                     complement.end());
    bool tight = true;
    for (std::size_t fmask = 0; fmask < (std::size_t{1} << complement.size()) && tight;
         ++fmask) {
      std::vector<Mor> F;
      for (std::size_t i = 0; i < complement.size(); ++i)
        if (fmask & (std::size_t{1} << i)) F.push_back(complement[i]);
      for (Mor alpha : s) {
        bool witnessed = false;
        for (auto const& D : out.maximal) {
          if (!std::binary_search(D.begin(), D.end(), alpha)) continue;
          bool avoids = true;
          for (Mor x : F)
            if (std::binary_search(D.begin(), D.end(), x)) avoids = false;
          if (avoids) {
            witnessed = true;
            break;
          }
        }
        if (!witnessed) {
          tight = false;
          break;
        }
      }
    }
    if (tight) out.tight.push_back(s);
  }
  return out;
}

//! An element τ^top σ^bottom of the inverse semigroup of the category: the
//! partial bijection bottomΛ -> topΛ sending bottom∘w to top∘w. Requires
//! s(top) = s(bottom). For product categories the canonical form keeps the
//! groupoid part of the bottom trivial (it is absorbed by ≈).
struct SElement {
  Mor top = kNoMor;
  Mor bottom = kNoMor;
};

//! The action of an inverse-semigroup element on a filter containing its
//! bottom: the union of the segment filters of top∘σ^bottom(γ) over γ in the
//! filter, which is the principal filter of the image of the filter's top.
inline Filter act_on_filter(FiniteCategory const& c, SElement const& s,
                            Filter const& F) {
  if (c.src(s.top) != c.src(s.bottom))
    throw DomainError("inverse-semigroup element has mismatched sources");
  if (!F.contains(c, s.bottom))
    throw DomainError("filter does not contain the bottom of the element");
  auto w = c.divide_left(s.bottom, F.top);
  if (!w)
    throw ValidationError("filter membership did not yield a division witness");
  auto img = c.try_compose(s.top, *w);
  if (!img)
    throw BeyondHorizonError("filter image escapes the horizon");
  return principal_filter(c, *img);
}

}  // namespace lcsc
