#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lcsc/core/category.hpp"
#include "lcsc/core/error.hpp"
#include "lcsc/core/monoid.hpp"

namespace lcsc {

//! Generator-mode construction of a FiniteCategory: the free category on a
//! graph of generators, modulo a finite list of relations, truncated at a
//! length horizon.
//!
//! Words are generator-index sequences in composition order (range side
//! first): [g1, g2] denotes g1∘g2 and needs src(g1) = rng(g2). Relations are
//! oriented into shortlex-decreasing rewriting rules and completed by a
//! bounded critical-pair pass; construction is rejected when confluence at
//! the horizon cannot be established.
class CategoryGenerator {
 public:
  struct Generator {
    std::string name;
    Obj src, rng;
    MonoidElem length;
  };

  explicit CategoryGenerator(OrderedMonoid monoid) : monoid_(std::move(monoid)) {}

  Obj add_object(std::string name) {
    objects_.push_back(std::move(name));
    return static_cast<Obj>(objects_.size() - 1);
  }

  int add_generator(std::string name, Obj src, Obj rng, MonoidElem length) {
    gens_.push_back({std::move(name), src, rng, std::move(length)});
    return static_cast<int>(gens_.size() - 1);
  }

  //! lhs = rhs as words of generator indices; an empty side denotes the
  //! identity of the word's common source/range object.
  void add_relation(std::vector<int> lhs, std::vector<int> rhs) {
    relations_.push_back({std::move(lhs), std::move(rhs)});
  }

  void set_horizon(long h) { horizon_ = h; }
  void set_cap(std::size_t cap) { cap_ = cap; }

  std::vector<Generator> const& generators() const { return gens_; }

  struct Result {
    FiniteCategory cat;
    std::vector<MonoidElem> lengths;        // per morphism
    std::vector<Mor> generator_morphism;    // gen index -> morphism id
  };

  Result build(bool check_associativity = true) const {
    auto rules = completed_rules();

    // relations must preserve the length grading or d is ill-defined
    for (auto const& r : rules) {
      if (word_length(r.lhs) != word_length(r.rhs))
        throw ValidationError("relation is not compatible with the length grading");
    }
    for (size_t i = 0; i < gens_.size(); ++i) {
      std::vector<int> w{static_cast<int>(i)};
      if (normal_form(w, rules) != w)
        throw ValidationError("generator '" + gens_[i].name +
                              "' reduces under the relations");
    }

    // BFS over normal forms by word length
    std::map<std::vector<int>, int> index;  // word -> discovery slot
    std::vector<std::vector<int>> by_level_current, all_words;
    for (size_t g = 0; g < gens_.size(); ++g) {
      std::vector<int> w{static_cast<int>(g)};
      if (within_horizon(w)) {
        by_level_current.push_back(w);
      }
    }
    std::sort(by_level_current.begin(), by_level_current.end());
    while (!by_level_current.empty()) {
      for (auto& w : by_level_current) {
        index.emplace(w, static_cast<int>(all_words.size()));
        all_words.push_back(w);
      }
      if (all_words.size() > cap_) {
        if (horizon_)
          throw TooLargeError("generator closure exceeds the morphism cap");
        throw HorizonError(
            "generator closure does not terminate; declare a horizon");
      }
      std::vector<std::vector<int>> next;
      for (auto const& w : by_level_current) {
        for (size_t g = 0; g < gens_.size(); ++g) {
          if (gens_[w.back()].src != gens_[g].rng) continue;
          std::vector<int> w2 = w;
          w2.push_back(static_cast<int>(g));
          if (!within_horizon(w2)) continue;
          if (normal_form(w2, rules) != w2) continue;  // reducible, skip
          next.push_back(std::move(w2));
        }
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      by_level_current = std::move(next);
    }

    // assemble
    CategoryBuilder b;
    for (auto const& o : objects_) b.add_object(o);
    std::vector<Mor> word_mor(all_words.size());
    for (size_t i = 0; i < all_words.size(); ++i) {
      auto const& w = all_words[i];
      word_mor[i] =
          b.add_morphism(word_name(w), gens_[w.back()].src, gens_[w.front()].rng);
    }
    auto mor_of = [&](std::vector<int> const& w, Obj obj_if_empty) -> Mor {
      if (w.empty()) return static_cast<Mor>(obj_if_empty);
      auto it = index.find(w);
      if (it == index.end()) return kNoMor;
      return word_mor[it->second];
    };

    for (size_t i = 0; i < all_words.size(); ++i) {
      for (size_t j = 0; j < all_words.size(); ++j) {
        auto const& x = all_words[i];
        auto const& y = all_words[j];
        if (gens_[x.back()].src != gens_[y.front()].rng) continue;
        std::vector<int> xy = x;
        xy.insert(xy.end(), y.begin(), y.end());
        if (!within_horizon(xy)) continue;
        auto nf = normal_form(xy, rules);
        Mor c = mor_of(nf, gens_[y.back()].src /*only used when nf empty*/);
        if (c == kNoMor)
          throw HorizonError("normal form escaped the enumerated set");
        b.set_compose(word_mor[i], word_mor[j], c);
      }
    }
    if (horizon_) b.set_horizon(*horizon_);

    Result res;
    std::vector<Mor> gen_mor(gens_.size(), kNoMor);
    for (size_t g = 0; g < gens_.size(); ++g) {
      auto it = index.find({static_cast<int>(g)});
      if (it != index.end()) gen_mor[g] = word_mor[it->second];
    }
    for (size_t i = 0; i < all_words.size(); ++i) {
      std::vector<Mor> wm;
      for (int g : all_words[i]) wm.push_back(gen_mor[g]);
      b.set_word(word_mor[i], std::move(wm));
    }

    res.cat = b.build(check_associativity);
    res.generator_morphism = std::move(gen_mor);
    res.lengths.resize(res.cat.num_morphisms(), monoid_.one());
    for (size_t i = 0; i < all_words.size(); ++i)
      res.lengths[word_mor[i]] = word_length(all_words[i]);
    return res;
  }

 private:
  struct Rule {
    std::vector<int> lhs, rhs;
  };

  MonoidElem word_length(std::vector<int> const& w) const {
    MonoidElem e = monoid_.one();
    for (int g : w) e = monoid_.product(e, gens_[g].length);
    return e;
  }

  bool within_horizon(std::vector<int> const& w) const {
    if (!horizon_) return true;
    return monoid_.scalar(word_length(w)) <= *horizon_;
  }

  static bool shortlex_less(std::vector<int> const& a, std::vector<int> const& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }

  std::string word_name(std::vector<int> const& w) const {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
      if (i) s += ".";
      s += gens_[w[i]].name;
    }
    return s;
  }

  void check_typed(std::vector<int> const& w, char const* what) const {
    for (size_t i = 0; i + 1 < w.size(); ++i) {
      if (gens_[w[i]].src != gens_[w[i + 1]].rng)
        throw ValidationError(std::string(what) + " word is not composable");
    }
  }

  static std::vector<int> rewrite_once(std::vector<int> const& w,
                                       std::vector<Rule> const& rules,
                                       bool* changed) {
    for (size_t pos = 0; pos < w.size(); ++pos) {
      for (auto const& r : rules) {
        if (pos + r.lhs.size() > w.size()) continue;
        if (std::equal(r.lhs.begin(), r.lhs.end(), w.begin() + pos)) {
          std::vector<int> out(w.begin(), w.begin() + pos);
          out.insert(out.end(), r.rhs.begin(), r.rhs.end());
          out.insert(out.end(), w.begin() + pos + r.lhs.size(), w.end());
          *changed = true;
          return out;
        }
      }
    }
    *changed = false;
    return w;
  }

  static std::vector<int> normal_form(std::vector<int> w,
                                      std::vector<Rule> const& rules) {
    for (int steps = 0; steps < 100000; ++steps) {
      bool changed = false;
      w = rewrite_once(w, rules, &changed);
      if (!changed) return w;
    }
    throw HorizonError("rewriting did not terminate within the step cap");
  }

  std::vector<Rule> completed_rules() const {
    std::vector<Rule> rules;
    auto orient = [&](std::vector<int> a, std::vector<int> b) -> std::optional<Rule> {
      if (a == b) return std::nullopt;
      if (shortlex_less(a, b)) std::swap(a, b);
      return Rule{std::move(a), std::move(b)};
    };
    for (auto const& rel : relations_) {
      check_typed(rel.lhs, "relation");
      check_typed(rel.rhs, "relation");
      if (!rel.lhs.empty() && !rel.rhs.empty()) {
        if (gens_[rel.lhs.front()].rng != gens_[rel.rhs.front()].rng ||
            gens_[rel.lhs.back()].src != gens_[rel.rhs.back()].src)
          throw ValidationError("relation sides have different src/rng");
      }
      if (auto r = orient(rel.lhs, rel.rhs)) rules.push_back(std::move(*r));
    }

    // bounded Knuth-Bendix style completion
    for (int round = 0; round < 64; ++round) {
      std::vector<Rule> added;
      auto consider = [&](std::vector<int> const& x, std::vector<int> const& y) {
        auto nx = normal_form(x, rules);
        auto ny = normal_form(y, rules);
        if (nx == ny) return;
        auto r = orient(nx, ny);
        if (!r) return;
        for (auto const& ex : rules)
          if (ex.lhs == r->lhs && ex.rhs == r->rhs) return;
        for (auto const& ex : added)
          if (ex.lhs == r->lhs && ex.rhs == r->rhs) return;
        added.push_back(std::move(*r));
      };
      for (auto const& r1 : rules) {
        for (auto const& r2 : rules) {
          // proper overlaps: a suffix of lhs1 equals a prefix of lhs2
          for (size_t k = 1; k < r1.lhs.size() && k <= r2.lhs.size(); ++k) {
            if (!std::equal(r2.lhs.begin(), r2.lhs.begin() + k,
                            r1.lhs.end() - k))
              continue;
            // superposition u = lhs1 + lhs2[k:]
            std::vector<int> u = r1.lhs;
            u.insert(u.end(), r2.lhs.begin() + k, r2.lhs.end());
            // resolve via r1
            std::vector<int> v1 = r1.rhs;
            v1.insert(v1.end(), r2.lhs.begin() + k, r2.lhs.end());
            // resolve via r2
            std::vector<int> v2(r1.lhs.begin(), r1.lhs.end() - k);
            v2.insert(v2.end(), r2.rhs.begin(), r2.rhs.end());
            consider(v1, v2);
          }
          // containment: lhs2 occurs inside lhs1
          if (r2.lhs.size() < r1.lhs.size()) {
            for (size_t pos = 0; pos + r2.lhs.size() <= r1.lhs.size(); ++pos) {
              if (!std::equal(r2.lhs.begin(), r2.lhs.end(), r1.lhs.begin() + pos))
                continue;
              std::vector<int> v(r1.lhs.begin(), r1.lhs.begin() + pos);
              v.insert(v.end(), r2.rhs.begin(), r2.rhs.end());
              v.insert(v.end(), r1.lhs.begin() + pos + r2.lhs.size(), r1.lhs.end());
              consider(v, r1.rhs);
            }
          }
        }
      }
      if (added.empty()) return rules;
      if (rules.size() + added.size() > 512)
        throw HorizonError("rewriting completion exceeded the rule cap");
      for (auto& r : added) rules.push_back(std::move(r));
    }
    throw HorizonError("rewriting completion did not converge");
  }

  OrderedMonoid monoid_;
  std::vector<std::string> objects_;
  std::vector<Generator> gens_;
  std::vector<Rule> relations_;
  std::optional<long> horizon_;
  std::size_t cap_ = 2'000'000;
};

}  // namespace lcsc
