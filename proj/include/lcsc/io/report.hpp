#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lcsc/factor/factorization.hpp"
#include "lcsc/io/doc.hpp"
#include "lcsc/tight/kernel.hpp"
#include "lcsc/tight/properties.hpp"

namespace lcsc {

//! A machine-readable verdict document for one property check.
struct Report {
  std::string property;
  Verdict verdict;
  std::optional<long> horizon;
  double elapsed_ms = 0;
  std::vector<std::pair<std::string, Verdict>> details;
  std::string dot;  // optional graph payload for --format dot

  int exit_code() const {
    switch (verdict.outcome) {
      case Outcome::Holds: return 0;
      case Outcome::Fails: return 1;
      default: return 2;
    }
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["property"] = property;
    j["verdict"] = to_string(verdict.outcome);
    j["up_to_horizon"] = verdict.up_to_horizon;
    j["witnesses"] = verdict.witness;
    if (horizon) j["horizon"] = *horizon;
    else j["horizon"] = nullptr;
    j["elapsed_ms"] = elapsed_ms;
    if (!verdict.note.empty()) j["note"] = verdict.note;
    nlohmann::json ds = nlohmann::json::array();
    for (auto const& [name, v] : details) {
      nlohmann::json dj;
      dj["name"] = name;
      dj["verdict"] = to_string(v.outcome);
      dj["witnesses"] = v.witness;
      if (!v.note.empty()) dj["note"] = v.note;
      ds.push_back(dj);
    }
    j["details"] = ds;
    return j;
  }

  std::string to_text() const {
    std::ostringstream os;
    os << property << ": " << to_string(verdict.outcome);
    if (verdict.up_to_horizon) os << " (up to horizon)";
    if (!verdict.note.empty()) os << " -- " << verdict.note;
    os << "\n";
    if (!verdict.witness.empty()) {
      os << "  witness:";
      for (auto const& w : verdict.witness) os << " " << w;
      os << "\n";
    }
    for (auto const& [name, v] : details) {
      os << "  " << name << ": " << to_string(v.outcome);
      if (!v.witness.empty()) {
        os << " [";
        for (std::size_t i = 0; i < v.witness.size(); ++i)
          os << (i ? " " : "") << v.witness[i];
        os << "]";
      }
      if (!v.note.empty()) os << " -- " << v.note;
      os << "\n";
    }
    return os.str();
  }
};

struct CheckOptions {
  std::size_t cap = 1u << 20;          // filter/germ enumeration cap
  long degree_bound = 3;               // scalar bound for star / kernel-tg
  std::vector<long> horizons;          // probe horizons for hausdorff growth
  bool debug_verify = false;           // re-run theorem shortcuts by brute force
  bool want_dot = false;
  std::function<Bundle(long)> regenerate;  // rebuild the bundle at a horizon
};

inline std::vector<std::string> known_properties() {
  return {"cancellation", "alignment",   "wfp",        "action-free",
          "pseudo-free",  "cocycle",     "product",    "preservation",
          "atoms",        "r-condition", "decomposition", "filters",
          "hausdorff",    "top-free",    "minimal",    "simplicity-condition",
          "degree",       "star",        "kernel-tg",  "all"};
}

namespace detail {

inline MonoidElem degree_bound_elem(OrderedMonoid const& m, long bound) {
  switch (m.kind()) {
    case OrderedMonoid::Kind::NaturalVec:
      return {std::vector<long>(m.rank(), bound)};
    case OrderedMonoid::Kind::Numerical: {
      long v = 0;
      for (long x = 0; x <= bound; ++x)
        if (m.numerical_member(x)) v = x;
      return {{v}};
    }
    default: return m.one();
  }
}

inline std::string germ_dot(FiniteCategory const& c, LengthAssignment const& d,
                            std::vector<Filter> const& filters,
                            std::vector<Germ> const& germs) {
  std::ostringstream os;
  os << "digraph tight_groupoid {\n";
  for (auto const& f : filters)
    os << "  \"" << c.name(f.top) << "\" [shape=box];\n";
  for (auto const& g : germs) {
    Filter rng = germ_range(c, g);
    os << "  \"" << c.name(g.filter.top) << "\" -> \"" << c.name(rng.top)
       << "\" [label=\"" << c.name(g.elem.top) << "\\\\" << c.name(g.elem.bottom);
    auto deg = d.monoid.group_difference(d.of(g.elem.top), d.of(g.elem.bottom));
    os << " d=";
    for (std::size_t i = 0; i < deg.size(); ++i) os << (i ? "," : "") << deg[i];
    os << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace detail

//! Dispatch a named property check against a compiled bundle.
inline Report run_check(Bundle const& b, std::string const& property,
                        CheckOptions const& opts = {}) {
  auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.property = property;
  rep.horizon = b.cat().horizon();
  auto const& c = b.cat();
  auto const& d = b.d();
  auto const& sys = b.system;

  auto finish = [&](Verdict v) {
    rep.verdict = std::move(v);
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
  };

  if (property == "cancellation") {
    auto r = check_cancellation(c);
    rep.details = {{"left", r.left}, {"right", r.right}, {"no-inverses", r.no_inverses}};
    Verdict v = r.left;
    v.note = r.left.holds() ? "left cancellative" : "not left cancellative";
    return finish(v);
  }
  if (property == "alignment") {
    auto r = is_finitely_aligned(c);
    Verdict v = r.verdict;
    v.note = r.singly ? "singly aligned" : ("finitely aligned, up to " +
                                            std::to_string(r.max_classes) +
                                            " minimal classes");
    return finish(v);
  }
  if (property == "wfp") {
    auto lr = validate_length(c, d);
    rep.details = {{"total", lr.total},
                   {"homomorphism", lr.homomorphism},
                   {"lf1", lr.lf1},
                   {"lf2", lr.lf2}};
    auto r = check_wfp(c, d);
    Verdict v = r.verdict;
    if (v.holds()) v.note = r.ufp ? "WFP and UFP" : "WFP (not UFP)";
    return finish(v);
  }
  if (property == "action-free") return finish(is_action_free(c));
  if (property == "pseudo-free") return finish(is_pseudo_free(sys));
  if (property == "cocycle") {
    auto ar = validate_action(c, d, b.grp(), sys.phi);
    auto cr = validate_category_cocycle(sys);
    rep.details = {{"groupoid", ar.groupoid},
                   {"partial-isos", ar.partial_isos},
                   {"homomorphism", ar.homomorphism},
                   {"self-similar", ar.self_similar},
                   {"axiom-1", cr.axiom1},
                   {"axiom-2", cr.axiom2},
                   {"axiom-3", cr.axiom3},
                   {"axiom-4", cr.axiom4},
                   {"axiom-5", cr.axiom5},
                   {"cocycle-identity", cr.cocycle_identity},
                   {"derived-identities", cr.derived},
                   {"restriction-compatibility", cr.restriction_compat}};
    Verdict v = ar.groupoid;
    v &= ar.partial_isos;
    v &= ar.homomorphism;
    v &= ar.self_similar;
    v &= cr.axiom1;
    v &= cr.axiom2;
    v &= cr.axiom3;
    v &= cr.axiom4;
    v &= cr.axiom5;
    v &= cr.cocycle_identity;
    v &= cr.derived;
    v &= cr.restriction_compat;
    return finish(v);
  }
  if (property == "product") {
    auto p = build_product(sys, true, opts.debug_verify);
    Verdict v = Verdict::pass(c.truncated());
    v.note = "product has " + std::to_string(p.prod.num_morphisms()) + " morphisms";
    return finish(v);
  }
  if (property == "preservation") {
    auto p = build_product(sys, true, opts.debug_verify);
    auto r = check_preservation(sys, p);
    rep.details = {{"left-cancellative", r.left_cancellative},
                   {"invertibles-formula", r.invertibles_formula},
                   {"ideal-intersections", r.ideal_intersections},
                   {"alignment-transfer", r.alignment_transfer},
                   {"exhaustive-transfer", r.exhaustive_transfer},
                   {"right-cancellative-iff-pseudo-free", r.right_canc_iff_pseudofree}};
    Verdict v = r.left_cancellative;
    v &= r.invertibles_formula;
    v &= r.ideal_intersections;
    v &= r.alignment_transfer;
    v &= r.exhaustive_transfer;
    v &= r.right_canc_iff_pseudofree;
    return finish(v);
  }
  if (property == "atoms") {
    auto r = find_atoms(c, d);
    Verdict v = r.cross_check;
    v.note = std::to_string(r.atoms.size()) + " atoms";
    for (std::size_t i = 0; i < r.atoms.size() && i < 16; ++i)
      v.witness.push_back(c.name(r.atoms[i]));
    return finish(v);
  }
  if (property == "r-condition") {
    auto t = make_transversal(c, d);
    return finish(check_R_condition(c, t));
  }
  if (property == "decomposition") {
    auto t = make_transversal(c, d);
    bool wfp = check_wfp(c, d).verdict.holds();
    auto r = verify_zs_decomposition(c, d, t, wfp);
    rep.details = {{"factorize-total", r.factorize_total},
                   {"factorize-unique", r.factorize_unique},
                   {"r-condition", r.r_condition},
                   {"induced-system", r.induced_system},
                   {"bijection", r.bijection},
                   {"ufp-on-bstar", r.ufp_on_bstar}};
    Verdict v = r.factorize_total;
    v &= r.factorize_unique;
    v &= r.r_condition;
    v &= r.induced_system;
    v &= r.bijection;
    if (!b.trivial_group()) {
      // iterated decomposition of the product through its own transversal
      auto p = build_product(sys, true, false);
      auto tp = make_transversal(p.prod, p.d);
      auto rp = verify_zs_decomposition(p.prod, p.d, tp,
                                        check_wfp(p.prod, p.d).verdict.holds());
      Verdict iv = rp.factorize_total;
      iv &= rp.factorize_unique;
      iv &= rp.bijection;
      rep.details.push_back({"iterated-on-product", iv});
      v &= iv;
    }
    return finish(v);
  }
  if (property == "filters") {
    auto fam = enumerate_filters(c, opts.cap);
    Verdict v = Verdict::pass(fam.up_to_horizon);
    v.note = std::to_string(fam.all.size()) + " filters, " +
             std::to_string(fam.maximal.size()) + " maximal, " +
             std::to_string(fam.tight.size()) + " tight" +
             (fam.tight_equals_maximal ? " (tight = maximal)" : "");
    if (opts.want_dot) {
      GermEnumOptions go;
      go.max_degree = 2;
      auto germs = enumerate_germs(c, d, fam.tight, go);
      rep.dot = detail::germ_dot(c, d, fam.tight, germs);
    }
    return finish(v);
  }
  if (property == "hausdorff") {
    HausdorffOptions ho;
    ho.horizons = opts.horizons;
    if (opts.regenerate)
      ho.rebuild = [&](long h) { return opts.regenerate(h).system; };
    auto r = check_hausdorff(sys, ho);
    Verdict v = r.verdict;
    if (r.fast_path) v.note = "pseudo-free fast path";
    if (!r.growth.empty()) {
      std::string g = "cover lower bounds:";
      for (auto x : r.growth) g += " " + std::to_string(x);
      v.note = g;
    }
    return finish(v);
  }
  if (property == "top-free" || property == "minimal" ||
      property == "simplicity-condition") {
    auto fam = enumerate_filters(c, opts.cap);
    auto pre = establish_preconditions(sys, fam);
    if (!pre.ok())
      return finish(Verdict::inconclusive(
          "preconditions (Hausdorff or tight = maximal) not established"));
    if (property == "top-free")
      return finish(check_topological_freeness(sys, pre));
    if (property == "minimal") return finish(check_minimality(sys, pre));
    Verdict v = simplicity_condition(sys, pre);
    v.note += v.note.empty() ? "" : "; ";
    v.note += "combinatorial criterion only";
    return finish(v);
  }
  if (property == "degree") {
    auto fam = enumerate_filters(c, opts.cap);
    GermEnumOptions go;
    go.max_degree = opts.degree_bound;
    auto germs = enumerate_germs(c, d, fam.tight, go);
    Verdict v = Verdict::pass(c.truncated());
    // group by source/range filter so composable pairs are found directly
    std::map<Mor, std::vector<std::size_t>> by_source, by_range;
    for (std::size_t i = 0; i < germs.size(); ++i) {
      by_source[germs[i].filter.top].push_back(i);
      by_range[germ_range(c, germs[i]).top].push_back(i);
    }
    std::size_t pairs = 0, pair_cap = 200000;
    for (auto const& [ftop, ys] : by_range) {
      auto it = by_source.find(ftop);
      if (it == by_source.end()) continue;
      for (std::size_t yi : ys) {
        for (std::size_t xi : it->second) {
          if (++pairs > pair_cap) break;
          auto const& x = germs[xi];
          auto const& y = germs[yi];
          Germ xy = compose_germs(c, x, y);
          auto dx = degree_cocycle(d, x);
          auto dy = degree_cocycle(d, y);
          auto dxy = degree_cocycle(d, xy);
          for (std::size_t i = 0; i < dxy.size(); ++i) {
            if (dxy[i] != dx[i] + dy[i]) {
              v = Verdict::fail({c.name(x.elem.top), c.name(y.elem.top)},
                                "degree cocycle is not multiplicative",
                                c.truncated());
              break;
            }
          }
          if (!v.holds()) break;
        }
        if (!v.holds() || pairs > pair_cap) break;
      }
      if (!v.holds() || pairs > pair_cap) break;
    }
    v.note = std::to_string(germs.size()) + " germ classes, " +
             std::to_string(std::min(pairs, pair_cap)) + " composable pairs";
    if (opts.want_dot) rep.dot = detail::germ_dot(c, d, fam.tight, germs);
    return finish(v);
  }
  if (property == "star") {
    auto fam = enumerate_filters(c, opts.cap);
    auto g = detail::degree_bound_elem(d.monoid, opts.degree_bound);
    auto r = check_star_property(c, d, fam.tight, g);
    Verdict v = r.verdict;
    if (r.fast_path) v.note = "bounded ascending chains stabilize";
    return finish(v);
  }
  if (property == "kernel-tg") {
    auto p = build_product(sys, true, false);
    auto g = detail::degree_bound_elem(p.d.monoid, opts.degree_bound);
    auto r = kernel_and_tg(sys, p, g);
    rep.details = {{"star", r.star},
                   {"well-defined", r.well_defined},
                   {"homomorphism", r.homomorphism},
                   {"strongly-surjective", r.strongly_surjective},
                   {"kernel-closure", r.closure}};
    Verdict v = r.star;
    v &= r.well_defined;
    v &= r.homomorphism;
    v &= r.strongly_surjective;
    v &= r.closure;
    v.note = std::to_string(r.germs.size()) + " kernel germ classes";
    if (opts.want_dot) {
      auto fam = enumerate_filters(p.prod, opts.cap);
      rep.dot = detail::germ_dot(p.prod, p.d, fam.tight, r.germs);
    }
    return finish(v);
  }
  if (property == "all") {
    Verdict v = Verdict::pass();
    for (auto const& prop : known_properties()) {
      if (prop == "all") continue;
      auto sub = run_check(b, prop, opts);
      rep.details.push_back({prop, sub.verdict});
      if (sub.verdict.outcome == Outcome::Fails) v.outcome = Outcome::Fails;
      else if (sub.verdict.outcome == Outcome::Inconclusive &&
               v.outcome == Outcome::Holds)
        v.outcome = Outcome::Inconclusive;
      v.up_to_horizon = v.up_to_horizon || sub.verdict.up_to_horizon;
    }
    return finish(v);
  }
  throw UnknownPropertyError("unknown property '" + property + "'");
}

//! Re-run the module operation named by a report's witness and confirm that
//! it reproduces the failure. Supported for the scan-style properties.
inline bool replay_witness(Bundle const& b, Report const& rep) {
  auto const& c = b.cat();
  auto const& sys = b.system;
  auto const& w = rep.verdict.witness;
  auto mor = [&](std::string const& n) { return c.morphism_named(n); };
  try {
    if (rep.property == "action-free" && w.size() == 2) {
      return c.compose(mor(w[0]), mor(w[1])) == mor(w[1]);
    }
    if (rep.property == "pseudo-free" && w.size() == 3) {
      Mor g = b.grp().morphism_named(w[0]);
      Mor a = mor(w[1]);
      Mor f = mor(w[2]);
      return sys.act(g, a) == c.compose(f, a) &&
             b.grp().is_identity(sys.coc(g, a)) && !b.grp().is_identity(g);
    }
    if (rep.property == "top-free" && w.size() == 4) {
      auto fam = enumerate_filters(c);
      auto pre = establish_preconditions(sys, fam);
      auto again = check_topological_freeness(sys, pre);
      return again.fails() && again.witness == w;
    }
    if (rep.property == "minimal" && w.size() == 2) {
      auto fam = enumerate_filters(c);
      auto pre = establish_preconditions(sys, fam);
      auto again = check_minimality(sys, pre);
      return again.fails() && again.witness == w;
    }
    if (rep.property == "cancellation") {
      for (auto const& [name, v] : rep.details) {
        if (!v.fails()) continue;
        if (name == "left" && v.witness.size() == 3)
          return c.compose(mor(v.witness[0]), mor(v.witness[1])) ==
                     c.compose(mor(v.witness[0]), mor(v.witness[2])) &&
                 mor(v.witness[1]) != mor(v.witness[2]);
        if (name == "no-inverses" && v.witness.size() == 1)
          return c.invertible(mor(v.witness[0])) && !c.is_identity(mor(v.witness[0]));
      }
    }
    if (rep.property == "wfp" && !w.empty()) {
      auto again = check_wfp(c, b.d());
      return again.verdict.fails() && again.verdict.witness == w;
    }
  } catch (Error const&) {
    return false;
  }
  return false;
}

}  // namespace lcsc
