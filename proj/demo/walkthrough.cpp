// A guided tour: build the letter-swap system over the free monoid on two
// letters, form its Zappa-Szep product, and walk the structural checks.

#include <iostream>

#include "lcsc/factor/factorization.hpp"
#include "lcsc/io/fixtures.hpp"
#include "lcsc/io/report.hpp"
#include "lcsc/tight/properties.hpp"

int main() {
  using namespace lcsc;

  auto bundle = compile(generate_fixture("exel-pardo-swap", {{{"horizon", 4}}}));
  auto const& cat = bundle.cat();
  auto const& grp = bundle.grp();
  std::cout << "category: " << cat.describe() << "\n";
  std::cout << "groupoid: " << grp.num_morphisms() << " morphisms\n\n";

  // the action: s swaps the two letters of every word
  Mor s = grp.morphism_named("s");
  Mor ab = cat.morphism_named("a.b");
  std::cout << "s · a.b = " << cat.name(bundle.system.act(s, ab)) << "\n";
  std::cout << "coc(s, a.b) = " << grp.name(bundle.system.coc(s, ab)) << "\n\n";

  // the length function has the weak factorization property
  auto wfp = check_wfp(cat, bundle.d());
  std::cout << "WFP: " << to_string(wfp.verdict.outcome)
            << (wfp.ufp ? " (in fact UFP)" : "") << "\n";

  // the product (α, g)(β, h) = (α(g·β), coc(g,β)h)
  auto p = build_product(bundle.system, true);
  std::cout << "product: " << p.prod.describe() << "\n";
  Mor a = cat.morphism_named("a");
  Mor b = cat.morphism_named("b");
  Mor x = p.id_of_pair(a, s);
  Mor y = p.id_of_pair(b, grp.identity(0));
  std::cout << "(a|s)(b|o) = " << p.prod.name(p.prod.compose(x, y)) << "\n\n";

  // structural verdicts
  std::cout << "pseudo-free: " << to_string(is_pseudo_free(bundle.system).outcome)
            << "\n";
  auto h = check_hausdorff(bundle.system);
  std::cout << "hausdorff: " << to_string(h.verdict.outcome)
            << (h.fast_path ? " (pseudo-free fast path)" : "") << "\n";
  auto fam = enumerate_filters(cat);
  auto pre = establish_preconditions(bundle.system, fam);
  std::cout << "topologically free: "
            << to_string(check_topological_freeness(bundle.system, pre).outcome)
            << "\n";
  std::cout << "minimal: " << to_string(check_minimality(bundle.system, pre).outcome)
            << "\n";

  // the atom transversal decomposes the category
  auto t = make_transversal(cat, bundle.d());
  auto rep = verify_zs_decomposition(cat, bundle.d(), t, wfp.verdict.holds());
  std::cout << "atom decomposition bijective: "
            << to_string(rep.bijection.outcome) << "\n";
  return 0;
}
