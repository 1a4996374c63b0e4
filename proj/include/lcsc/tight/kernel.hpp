#pragma once

#include <map>
#include <vector>

#include "lcsc/product/zappa_szep.hpp"
#include "lcsc/tight/germs.hpp"
#include "lcsc/tight/properties.hpp"

namespace lcsc {

struct StarResult {
  Verdict verdict;
  bool fast_path = false;
  std::map<Mor, Mor> beta;  // filter top -> maximal element of degree <= g
};

//! The maximal-element property of tight filters at degree bound g: every
//! tight filter has a member of degree <= g above all its members of degree
//! <= g. The bound holds automatically when bounded ascending chains in the
//! length monoid stabilize; the chosen witnesses are recorded for the
//! kernel homomorphism. Ties are broken toward the canonical representative.
inline StarResult check_star_property(FiniteCategory const& c,
                                      LengthAssignment const& d,
                                      std::vector<Filter> const& tight,
                                      MonoidElem const& g) {
  StarResult res;
  res.fast_path = d.monoid.bounded_chains_stabilize();
  res.verdict = Verdict::pass(c.truncated(),
                              res.fast_path ? "bounded chains stabilize" : "");
  for (auto const& F : tight) {
    std::vector<Mor> cands;
    for (Mor m : F.members)
      if (d.monoid.leq(d.of(m), g)) cands.push_back(m);
    Mor best = kNoMor;
    for (Mor m : cands) {
      bool dominates = true;
      for (Mor x : cands) {
        if (!c.leq(x, m)) {
          dominates = false;
          break;
        }
      }
      if (dominates) {
        best = m;
        break;  // members are sorted, the first dominating one is canonical
      }
    }
    if (best == kNoMor) {
      res.verdict = Verdict::fail({c.name(F.top), d.monoid.format(g)},
                                  "no maximal element of bounded degree",
                                  c.truncated());
      return res;
    }
    res.beta[F.top] = best;
  }
  return res;
}

struct KernelOptions {
  std::size_t max_filters = 4096;
  std::size_t max_pairs = 500000;
};

struct KernelResult {
  std::vector<Germ> germs;    // one representative per germ class of K_g
  std::vector<Mor> t_value;   // the kernel homomorphism into the invertibles
  Verdict star;
  Verdict well_defined;
  Verdict homomorphism;
  Verdict strongly_surjective;
  Verdict closure;            // K_{g1} K_{g2} ⊆ K_{g1∨g2}
  bool all_pass() const {
    return star.holds() && well_defined.holds() && homomorphism.holds() &&
           strongly_surjective.holds() && closure.holds();
  }
};

//! Materialize the degree-kernel piece K_g of the tight groupoid of the
//! product — germs whose two legs have the same length, bounded by g — and
//! the homomorphism t sending a germ in normal form
//! [(β_{F'} ξ, h) \ (β_F, unit), F] to the invertible pair (ξ, h).
//! Verifies well-definedness on germ-equal pairs, the homomorphism law on
//! composable pairs, strong surjectivity onto the image, and the closure of
//! kernel pieces under composition.
inline KernelResult kernel_and_tg(CategorySystem const& sys, ZSCategory const& p,
                                  MonoidElem const& g,
                                  KernelOptions opts = {}) {
  if (!is_pseudo_free(sys).holds())
    throw PreconditionError("the kernel homomorphism needs a pseudo-free system");

  auto const& prod = p.prod;
  auto const& d = p.d;
  bool uth = prod.truncated();
  KernelResult res;

  auto fam = enumerate_filters(prod);
  std::vector<Filter> filters = fam.tight;
  bool sampled = filters.size() > opts.max_filters;
  if (sampled) filters.resize(opts.max_filters);

  auto star = check_star_property(prod, d, filters, g);
  res.star = star.verdict;
  if (!res.star.holds()) {
    res.well_defined = res.homomorphism = res.strongly_surjective = res.closure =
        Verdict::inconclusive("the maximal-element property failed");
    return res;
  }

  res.well_defined = Verdict::pass(uth);
  res.homomorphism = Verdict::pass(uth);
  res.strongly_surjective = Verdict::pass(uth);
  res.closure = Verdict::pass(uth);

  // t on a germ with degree-g legs
  auto tmap = [&](Germ const& x) -> Mor {
    Mor betaF = star.beta.at(x.filter.top);
    auto u = prod.divide_left(x.elem.bottom, betaF);
    if (!u) throw BeyondHorizonError("kernel germ cannot reach the marker");
    auto top2 = prod.try_compose(x.elem.top, *u);
    if (!top2) throw BeyondHorizonError("kernel germ value escapes the horizon");
    Filter F2 = act_on_filter(prod, x.elem, x.filter);
    auto it = star.beta.find(F2.top);
    if (it == star.beta.end())
      throw TooLargeError("range filter outside the sampled family");
    auto xi = prod.divide_left(it->second, *top2);
    if (!xi || !prod.invertible(*xi))
      throw ValidationError("normal form of a kernel germ is not invertible over the marker");
    return *xi;
  };

  // enumerate K_g: equal-length legs of degree <= g over the tight filters;
  // classes are keyed by the value at the filter top, and every germ-equal
  // representative found along the way must map to the same t-value
  std::map<std::pair<Mor, Mor>, std::pair<std::size_t, Mor>> classes;
  std::map<Mor, std::vector<std::size_t>> by_source_top, by_range_top;
  for (auto const& F : filters) {
    for (Mor bottom : F.members) {
      if (!d.monoid.leq(d.of(bottom), g)) continue;
      for (Mor top = 0; top < prod.num_morphisms(); ++top) {
        if (prod.src(top) != prod.src(bottom)) continue;
        if (d.of(top) != d.of(bottom)) continue;
        Germ x{{top, bottom}, F};
        auto val = germ_value_at_top(prod, x);
        if (!val) continue;
        Mor t;
        try {
          t = tmap(x);
        } catch (TooLargeError const&) {
          continue;  // range filter not in the sampled family
        }
        auto key = std::make_pair(F.top, *val);
        auto it = classes.find(key);
        if (it == classes.end()) {
          std::size_t idx = res.germs.size();
          classes.emplace(key, std::make_pair(idx, t));
          res.germs.push_back(x);
          res.t_value.push_back(t);
          by_source_top[F.top].push_back(idx);
          by_range_top[act_on_filter(prod, x.elem, F).top].push_back(idx);
        } else if (it->second.second != t && res.well_defined.holds()) {
          res.well_defined = Verdict::fail(
              {prod.name(top), prod.name(bottom), prod.name(F.top)},
              "germ-equal representatives map to different values", uth);
        }
      }
    }
  }

  // homomorphism on composable pairs
  std::size_t pairs = 0;
  for (auto const& [ftop, xs] : by_range_top) {
    auto it = by_source_top.find(ftop);
    if (it == by_source_top.end()) continue;
    for (std::size_t yi : xs) {
      // germs y with range filter = ftop compose with germs x based there
      for (std::size_t xi : it->second) {
        if (++pairs > opts.max_pairs) break;
        auto const& x = res.germs[xi];
        auto const& y = res.germs[yi];
        Germ xy = compose_germs(prod, x, y);
        auto txy = tmap(xy);
        Mor expect = prod.compose(res.t_value[xi], res.t_value[yi]);
        if (txy != expect && res.homomorphism.holds())
          res.homomorphism = Verdict::fail(
              {prod.name(x.elem.top), prod.name(y.elem.top)},
              "t(xy) != t(x) t(y)", uth);
        // closure of the kernel pieces: the composite has degree bounded by
        // the join of the factors' degrees
        auto j = d.monoid.try_join(d.of(x.elem.top), d.of(y.elem.top));
        if (res.closure.holds()) {
          bool member = d.of(xy.elem.top) == d.of(xy.elem.bottom) && j &&
                        d.monoid.leq(d.of(xy.elem.top), *j);
          if (!member)
            res.closure = Verdict::fail({prod.name(x.elem.top), prod.name(y.elem.top)},
                                        "composite leaves the joined kernel piece",
                                        uth);
        }
      }
    }
  }

  // strong surjectivity onto the image H_g: for every unit (filter) F', the
  // t-image of the germs ranging at F' is exactly the part of H_g ranging at
  // t(F')'s unit. The comparison is only meaningful when the germ family is
  // closed, i.e. no tight filter was dropped by the cap.
  if (sampled) {
    res.strongly_surjective = Verdict::inconclusive(
        "tight filter family truncated by the cap; image sets are not closed");
    return res;
  }
  std::vector<Mor> image = res.t_value;
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  for (auto const& F : filters) {
    Mor betaF = star.beta.at(F.top);
    Obj unit_obj = prod.src(betaF);
    std::vector<Mor> lhs;
    auto it = by_range_top.find(F.top);
    if (it != by_range_top.end())
      for (std::size_t xi : it->second) lhs.push_back(res.t_value[xi]);
    std::sort(lhs.begin(), lhs.end());
    lhs.erase(std::unique(lhs.begin(), lhs.end()), lhs.end());
    std::vector<Mor> rhs;
    for (Mor w : image)
      if (prod.rng(w) == unit_obj) rhs.push_back(w);
    if (lhs != rhs && res.strongly_surjective.holds()) {
      res.strongly_surjective =
          Verdict::fail({prod.name(F.top)},
                        "t(r^{-1}(F)) differs from r^{-1}(t(F)) in the image", uth);
    }
  }
  return res;
}

}  // namespace lcsc
