#pragma once

#include <algorithm>
#include <vector>

#include "lcsc/action/system.hpp"
#include "lcsc/core/category.hpp"
#include "lcsc/core/length.hpp"
#include "lcsc/product/zappa_szep.hpp"

namespace lcsc {

inline LengthAssignment restrict_length(LengthAssignment const& d,
                                        Subcategory const& s) {
  LengthAssignment out;
  out.monoid = d.monoid;
  for (Mor m : s.to_parent) out.value.push_back(d.of(m));
  return out;
}

struct AtomsReport {
  std::vector<Mor> atoms;  // sorted; non-invertible morphisms with no
                           // nontrivial two-sided factorization
  Verdict cross_check;     // atoms = union of d^{-1}(e) over monoid atoms e
};

//! Atoms of the category, cross-checked against the length grading (the two
//! descriptions agree whenever LF1/LF2 hold for a conical atomic monoid).
inline AtomsReport find_atoms(FiniteCategory const& c, LengthAssignment const& d) {
  AtomsReport rep;
  rep.cross_check = Verdict::pass(c.truncated());
  for (Mor m = 0; m < c.num_morphisms(); ++m) {
    if (c.invertible(m)) continue;
    bool atom = true;
    for (auto const& [a, b] : c.factorizations(m)) {
      if (!c.invertible(a) && !c.invertible(b)) {
        atom = false;
        break;
      }
    }
    if (atom) rep.atoms.push_back(m);
  }
  for (Mor m = 0; m < c.num_morphisms(); ++m) {
    bool by_length = d.monoid.is_atom(d.of(m));
    bool by_scan = std::binary_search(rep.atoms.begin(), rep.atoms.end(), m);
    if (by_length != by_scan) {
      rep.cross_check = Verdict::fail(
          {c.name(m)},
          by_scan ? "atom whose length is not an atom" : "non-atom of atomic length",
          c.truncated());
      break;
    }
  }
  return rep;
}

//! A transversal B of generators of the maximal principal right ideals,
//! together with the generated subcategory B* (materialized inside the
//! stored part of Λ). Selection is deterministic: the canonical (lowest-id)
//! representative of every atom ≈-class.
struct Transversal {
  std::vector<Mor> atoms;  // one canonical atom per ideal, sorted
  std::vector<Mor> bstar;  // members of B*, sorted, identities included
};

inline Transversal make_transversal(FiniteCategory const& c,
                                    LengthAssignment const& d) {
  Transversal t;
  auto atoms = find_atoms(c, d).atoms;
  for (Mor a : atoms) {
    Mor r = c.canonical_rep(a);
    if (!std::binary_search(atoms.begin(), atoms.end(), r))
      throw ValidationError("canonical representative of an atom class is not an atom");
    t.atoms.push_back(r);
  }
  std::sort(t.atoms.begin(), t.atoms.end());
  t.atoms.erase(std::unique(t.atoms.begin(), t.atoms.end()), t.atoms.end());

  // close under composition
  std::vector<Mor> frontier;
  std::vector<char> in(c.num_morphisms(), 0);
  for (Obj v = 0; v < c.num_objects(); ++v) {
    in[c.identity(v)] = 1;
    t.bstar.push_back(c.identity(v));
  }
  for (Mor a : t.atoms) {
    if (!in[a]) {
      in[a] = 1;
      t.bstar.push_back(a);
      frontier.push_back(a);
    }
  }
  while (!frontier.empty()) {
    std::vector<Mor> next;
    for (Mor w : frontier) {
      for (Mor a : t.atoms) {
        if (c.src(a) != c.rng(w)) continue;
        auto aw = c.try_compose(a, w);
        if (aw && !in[*aw]) {
          in[*aw] = 1;
          t.bstar.push_back(*aw);
          next.push_back(*aw);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(t.bstar.begin(), t.bstar.end());
  return t;
}

//! The R-condition: β g ∈ B* with β ∈ B* and g invertible forces g to be an
//! identity.
inline Verdict check_R_condition(FiniteCategory const& c, Transversal const& t) {
  bool uth = c.truncated();
  for (Mor beta : t.bstar) {
    for (Mor g : c.invertibles().members) {
      if (c.is_identity(g)) continue;
      if (c.src(beta) != c.rng(g)) continue;
      auto bg = c.try_compose(beta, g);
      if (bg && std::binary_search(t.bstar.begin(), t.bstar.end(), *bg))
        return Verdict::fail({c.name(*bg), c.name(beta), c.name(g)},
                             "B* absorbs a nontrivial invertible", uth);
    }
  }
  return Verdict::pass(uth);
}

struct Factorization {
  Mor b;  // the B* part
  Mor g;  // the invertible part
};

//! The unique representation a = b∘g with b in B* and g invertible. Raises
//! NoFactorizationError when the hypotheses fail; with `verify_unique` the
//! uniqueness is re-established by exhaustive search.
inline Factorization factorize(FiniteCategory const& c, Transversal const& t, Mor a,
                               bool verify_unique = false) {
  Mor rest = a;
  Mor prefix = c.identity(c.rng(a));
  while (!c.invertible(rest)) {
    Mor next = kNoMor;
    for (Mor atom : t.atoms) {
      if (c.rng(atom) != c.rng(rest)) continue;
      if (auto w = c.divide_left(atom, rest)) {
        auto np = c.try_compose(prefix, atom);
        if (!np) continue;
        prefix = *np;
        rest = *w;
        next = atom;
        break;
      }
    }
    if (next == kNoMor)
      throw NoFactorizationError("no transversal atom divides " + c.name(rest) +
                                 "; the decomposition hypotheses fail at " + c.name(a));
  }
  Factorization f{prefix, rest};
  if (verify_unique) {
    int count = 0;
    for (Mor x : t.bstar) {
      for (Mor g : c.invertibles().members) {
        if (c.src(x) != c.rng(g)) continue;
        auto xg = c.try_compose(x, g);
        if (xg && *xg == a) ++count;
      }
    }
    if (count != 1)
      throw NoFactorizationError("representation of " + c.name(a) + " in B*Λ^{-1} is not unique (" +
                                 std::to_string(count) + " found)");
  }
  return f;
}

struct DecompositionReport {
  Verdict factorize_total;   // every morphism has a representation
  Verdict factorize_unique;  // and exactly one
  Verdict r_condition;
  Verdict induced_system;    // Λ^{-1} acting on B* is a category system
  Verdict bijection;         // B* ⋈ Λ^{-1} -> Λ is bijective and multiplicative
  Verdict ufp_on_bstar;      // the restriction of d to B* has the UFP
  bool core_pass() const {
    return factorize_total.holds() && factorize_unique.holds() &&
           r_condition.holds() && induced_system.holds() && bijection.holds();
  }
};

//! Verify the decomposition Λ = B* Λ^{-1}: unique factorizations, the
//! induced action of the invertibles on B*, and the multiplicative bijection
//! from the product back to Λ. When `wfp_holds`, also checks the UFP on B*.
inline DecompositionReport verify_zs_decomposition(FiniteCategory const& c,
                                                   LengthAssignment const& d,
                                                   Transversal const& t,
                                                   bool wfp_holds) {
  DecompositionReport rep;
  bool uth = c.truncated();
  rep.r_condition = check_R_condition(c, t);

  rep.factorize_total = Verdict::pass(uth);
  rep.factorize_unique = Verdict::pass(uth);
  std::vector<Factorization> fact(c.num_morphisms());
  for (Mor m = 0; m < c.num_morphisms(); ++m) {
    try {
      fact[m] = factorize(c, t, m, /*verify_unique=*/true);
    } catch (NoFactorizationError const& e) {
      std::string what = e.what();
      if (what.find("not unique") != std::string::npos) {
        if (rep.factorize_unique.holds())
          rep.factorize_unique = Verdict::fail({c.name(m)}, what, uth);
      } else if (rep.factorize_total.holds()) {
        rep.factorize_total = Verdict::fail({c.name(m)}, what, uth);
      }
    }
  }
  if (!rep.factorize_total.holds() || !rep.factorize_unique.holds()) {
    rep.induced_system = Verdict::inconclusive("factorization failed");
    rep.bijection = Verdict::inconclusive("factorization failed");
    rep.ufp_on_bstar = Verdict::inconclusive("factorization failed");
    return rep;
  }

  // extract B* and Λ^{-1}
  auto bsub = extract_subcategory(c, t.bstar);
  auto bd = restrict_length(d, bsub);
  auto isub = extract_subcategory(c, c.invertibles().members);

  // induced action of Λ^{-1} on B*: g·b is the B*-part of g∘b, the cocycle
  // value its invertible part
  ActionTables tables;
  bool tables_ok = true;
  for (Mor gi = 0; gi < isub.cat.num_morphisms(); ++gi) {
    Mor g = isub.to_parent[gi];
    for (Mor bi = 0; bi < bsub.cat.num_morphisms(); ++bi) {
      Mor b = bsub.to_parent[bi];
      if (c.rng(b) != c.src(g)) continue;
      auto gb = c.try_compose(g, b);
      if (!gb) continue;
      Factorization f = fact[*gb];
      auto bchild = bsub.child_of(f.b);
      auto gchild = isub.child_of(f.g);
      if (!bchild || !gchild) {
        tables_ok = false;
        continue;
      }
      tables.act[{gi, bi}] = *bchild;
      tables.coc[{gi, bi}] = *gchild;
    }
  }
  if (!tables_ok) {
    rep.induced_system = Verdict::fail({}, "induced action leaves B*", uth);
    rep.bijection = Verdict::inconclusive("induced action failed");
    rep.ufp_on_bstar = Verdict::inconclusive("induced action failed");
    return rep;
  }

  CategorySystem induced =
      materialize_system(bsub.cat, bd, isub.cat, tables);
  {
    auto arep = validate_action(induced.cat, induced.d, induced.grp, induced.phi);
    auto crep = validate_category_cocycle(induced);
    Verdict v = arep.groupoid;
    v &= arep.partial_isos;
    v &= arep.homomorphism;
    v &= crep.axiom1;
    v &= crep.axiom2;
    v &= crep.axiom3;
    v &= crep.axiom4;
    v &= crep.axiom5;
    v &= crep.cocycle_identity;
    rep.induced_system = v;
  }

  // bijection B* ⋈ Λ^{-1} -> Λ, multiplicative where defined
  rep.bijection = Verdict::pass(uth);
  if (rep.induced_system.holds()) {
    auto p = build_product(induced, /*assume_validated=*/true,
                           /*check_associativity=*/false);
    std::vector<int> hits(c.num_morphisms(), 0);
    std::vector<Mor> image(p.prod.num_morphisms(), kNoMor);
    for (Mor z = 0; z < p.prod.num_morphisms(); ++z) {
      Mor b = bsub.to_parent[p.alpha_of(z)];
      Mor g = isub.to_parent[p.g_of(z)];
      auto bg = c.try_compose(b, g);
      if (!bg) continue;
      image[z] = *bg;
      ++hits[*bg];
    }
    for (Mor m = 0; m < c.num_morphisms() && rep.bijection.holds(); ++m) {
      if (hits[m] != 1)
        rep.bijection = Verdict::fail({c.name(m)},
                                      hits[m] == 0 ? "morphism missed by B*Λ^{-1}"
                                                   : "morphism hit more than once",
                                      uth);
    }
    // multiplicativity
    for (Mor z1 = 0; z1 < p.prod.num_morphisms() && rep.bijection.holds(); ++z1) {
      for (Mor z2 = 0; z2 < p.prod.num_morphisms(); ++z2) {
        if (!p.prod.composable(z1, z2)) continue;
        auto zz = p.prod.try_compose(z1, z2);
        if (!zz || image[z1] == kNoMor || image[z2] == kNoMor || image[*zz] == kNoMor)
          continue;
        auto lhs = c.try_compose(image[z1], image[z2]);
        if (lhs && *lhs != image[*zz]) {
          rep.bijection = Verdict::fail({p.prod.name(z1), p.prod.name(z2)},
                                        "bijection is not multiplicative", uth);
          break;
        }
      }
    }
  } else {
    rep.bijection = Verdict::inconclusive("induced system failed");
  }

  if (wfp_holds) {
    auto w = check_wfp(bsub.cat, bd);
    rep.ufp_on_bstar = w.ufp ? Verdict::pass(uth)
                             : Verdict::fail(w.verdict.witness,
                                             "B* does not satisfy the UFP", uth);
  } else {
    rep.ufp_on_bstar = Verdict::inconclusive("WFP not established on Λ");
  }
  return rep;
}

}  // namespace lcsc
