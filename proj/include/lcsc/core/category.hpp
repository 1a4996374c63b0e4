#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lcsc/core/error.hpp"
#include "lcsc/core/verdict.hpp"

namespace lcsc {

using Obj = std::int32_t;
using Mor = std::int32_t;
inline constexpr Mor kNoMor = -1;

inline std::uint64_t mor_pair_key(Mor a, Mor b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

//! The right and left invertible morphisms of a category, with the inverse
//! map. In a left cancellative category every right inverse is two-sided, so
//! `inverse` is an involution on `members`.
struct InvertibleSet {
  std::vector<Mor> members;  // sorted
  std::vector<Mor> inverse;  // indexed by morphism id, kNoMor outside

  bool contains(Mor m) const {
    return m >= 0 && m < static_cast<Mor>(inverse.size()) && inverse[m] != kNoMor;
  }
  Mor inverse_of(Mor m) const {
    if (!contains(m)) throw DomainError("morphism is not invertible");
    return inverse[m];
  }
};

struct CancellationReport {
  Verdict left;
  Verdict right;
  Verdict no_inverses;
  bool category_of_paths() const {
    return left.holds() && right.holds() && no_inverses.holds();
  }
};

struct AlignmentVerdict {
  Verdict verdict;
  bool singly = false;       // every nonempty intersection is one class
  std::size_t max_classes = 0;
};

class CategoryBuilder;

//! A finite (or length-truncated) small category given by an explicit
//! morphism list and a partial composition table.
//!
//! Identities come first in the morphism numbering, one per object, and are
//! named like their objects. When `horizon` is set the table is a truncation
//! of a larger category: compositions falling outside raise
//! BeyondHorizonError and every quantified verdict downstream is labeled
//! up-to-horizon.
//!
//! Instances are immutable after construction and safe to share across
//! threads without synchronization.
class FiniteCategory {
 public:
  int num_objects() const { return static_cast<int>(obj_names_.size()); }
  int num_morphisms() const { return static_cast<int>(mor_names_.size()); }

  std::string const& object_name(Obj v) const { return obj_names_[v]; }
  std::string const& name(Mor m) const { return mor_names_[m]; }

  Obj src(Mor m) const { return src_[m]; }
  Obj rng(Mor m) const { return rng_[m]; }
  Mor identity(Obj v) const { return static_cast<Mor>(v); }
  bool is_identity(Mor m) const { return m < num_objects(); }
  Obj object_of_identity(Mor m) const {
    if (!is_identity(m)) throw DomainError("morphism is not an identity");
    return static_cast<Obj>(m);
  }

  std::optional<long> horizon() const { return horizon_; }
  bool truncated() const { return horizon_.has_value(); }

  //! Type-level composability: src(a) = rng(b).
  bool composable(Mor a, Mor b) const { return src_[a] == rng_[b]; }

  //! Composite a∘b. Throws NotComposableError on src/rng mismatch and
  //! BeyondHorizonError when the pair is composable but not stored (only
  //! possible on truncated categories).
  Mor compose(Mor a, Mor b) const {
    if (!composable(a, b))
      throw NotComposableError("compose(" + name(a) + ", " + name(b) +
                               "): src/rng mismatch");
    if (is_identity(a)) return b;
    if (is_identity(b)) return a;
    auto it = table_.find(mor_pair_key(a, b));
    if (it == table_.end()) {
      if (truncated())
        throw BeyondHorizonError("compose(" + name(a) + ", " + name(b) +
                                 ") exceeds horizon");
      throw ValidationError("composition table has no entry for (" + name(a) +
                            ", " + name(b) + ")");
    }
    return it->second;
  }

  //! Composite, or nullopt when the pair is composable but beyond horizon.
  std::optional<Mor> try_compose(Mor a, Mor b) const {
    if (!composable(a, b)) return std::nullopt;
    if (is_identity(a)) return b;
    if (is_identity(b)) return a;
    auto it = table_.find(mor_pair_key(a, b));
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  //! vΛ, the morphisms with range v.
  std::vector<Mor> const& cone(Obj v) const { return cone_[v]; }
  //! Λv, the morphisms with source v.
  std::vector<Mor> const& co_cone(Obj v) const { return co_cone_[v]; }

  //! All stored factorizations (a, w) with a∘w = c, sorted by a.
  std::vector<std::pair<Mor, Mor>> const& factorizations(Mor c) const {
    return factors_[c];
  }

  //! [b]: the initial segments of b (a with a <= b), sorted by id. Contains
  //! the range identity and b itself.
  std::vector<Mor> const& initial_segments(Mor b) const { return segments_[b]; }

  //! All stored extensions of a (b with a <= b), sorted by id; contains a.
  std::vector<Mor> const& extensions(Mor a) const { return extensions_[a]; }

  //! a <= b (b extends a).
  bool leq(Mor a, Mor b) const {
    return std::binary_search(segments_[b].begin(), segments_[b].end(), a);
  }

  //! The unique w with a∘w = b, if b extends a (unique by left cancellation;
  //! the least such w is returned on degenerate non-cancellative tables).
  std::optional<Mor> divide_left(Mor a, Mor b) const {
    auto const& fs = factors_[b];
    auto it = std::lower_bound(
        fs.begin(), fs.end(), std::make_pair(a, static_cast<Mor>(0)),
        [](auto const& x, auto const& y) { return x.first < y.first; });
    if (it == fs.end() || it->first != a) return std::nullopt;
    return it->second;
  }

  InvertibleSet const& invertibles() const { return invertibles_; }
  bool invertible(Mor m) const { return invertibles_.contains(m); }
  Mor inverse(Mor m) const { return invertibles_.inverse_of(m); }

  //! a ≈ b: mutual extension, equivalently b ∈ aΛ^{-1}.
  bool equivalent(Mor a, Mor b) const { return class_rep_[a] == class_rep_[b]; }

  //! Canonical representative (lowest id) of the ≈-class of m.
  Mor canonical_rep(Mor m) const { return class_rep_[m]; }

  //! a ⋒ b: the right ideals aΛ and bΛ intersect (within the stored part).
  bool meets(Mor a, Mor b) const {
    if (rng_[a] != rng_[b]) return false;
    auto const& ea = extensions_[a];
    auto const& eb = extensions_[b];
    if (ea.size() > eb.size()) return meets(b, a);
    for (Mor x : ea)
      if (std::binary_search(eb.begin(), eb.end(), x)) return true;
    return false;
  }

  //! One canonical representative per ≈-class of minimal elements of
  //! aΛ ∩ bΛ; empty iff a ⊥ b within the stored part.
  std::vector<Mor> minimal_common_extensions(Mor a, Mor b) const {
    std::vector<Mor> common;
    if (rng_[a] != rng_[b]) return common;
    auto const& ea = extensions_[a];
    auto const& eb = extensions_[b];
    std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(),
                          std::back_inserter(common));
    if (common.empty()) return common;
    // process in an order compatible with <= (segment count is monotone)
    std::sort(common.begin(), common.end(), [&](Mor x, Mor y) {
      auto sx = segments_[x].size(), sy = segments_[y].size();
      return sx != sy ? sx < sy : x < y;
    });
    std::vector<Mor> minimal;
    std::vector<Mor> reps;
    for (Mor e : common) {
      bool dominated = false;
      for (Mor m : minimal) {
        if (leq(m, e) && !leq(e, m)) {
          dominated = true;
          break;
        }
      }
      if (dominated) continue;
      Mor r = class_rep_[e];
      if (std::find(reps.begin(), reps.end(), r) == reps.end()) {
        minimal.push_back(e);
        reps.push_back(r);
      }
    }
    std::sort(reps.begin(), reps.end());
    return reps;
  }

  //! The word of generator morphisms whose composite is m, when this
  //! category was produced by a generator-mode construction. Empty word for
  //! identities; empty optional when no word data is attached.
  std::optional<std::vector<Mor>> const& word(Mor m) const { return words_[m]; }
  bool has_words() const { return has_words_; }

  std::string describe() const {
    std::string s = std::to_string(num_objects()) + " objects, " +
                    std::to_string(num_morphisms()) + " morphisms";
    if (truncated()) s += ", horizon " + std::to_string(*horizon_);
    return s;
  }

  Mor morphism_named(std::string const& n) const {
    auto it = name_index_.find(n);
    if (it == name_index_.end()) throw DomainError("no morphism named '" + n + "'");
    return it->second;
  }
  std::optional<Mor> find_morphism(std::string const& n) const {
    auto it = name_index_.find(n);
    if (it == name_index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  friend class CategoryBuilder;

  std::vector<std::string> obj_names_;
  std::vector<std::string> mor_names_;
  std::unordered_map<std::string, Mor> name_index_;
  std::vector<Obj> src_, rng_;
  std::unordered_map<std::uint64_t, Mor> table_;  // non-identity entries
  std::optional<long> horizon_;
  bool has_words_ = false;
  std::vector<std::optional<std::vector<Mor>>> words_;

  // derived
  std::vector<std::vector<Mor>> cone_, co_cone_;
  std::vector<std::vector<std::pair<Mor, Mor>>> factors_;
  std::vector<std::vector<Mor>> segments_, extensions_;
  InvertibleSet invertibles_;
  std::vector<Mor> class_rep_;
};

//! Incremental construction of a FiniteCategory. Identities are created
//! automatically, one per object, named like the object.
class CategoryBuilder {
 public:
  Obj add_object(std::string name) {
    objects_.push_back(std::move(name));
    return static_cast<Obj>(objects_.size() - 1);
  }

  Mor add_morphism(std::string name, Obj src, Obj rng) {
    mors_.push_back({std::move(name), src, rng});
    return static_cast<Mor>(objects_.size() + mors_.size() - 1);
  }

  //! Record a∘b = c. Identity entries are implied and may be omitted.
  void set_compose(Mor a, Mor b, Mor c) { entries_.push_back({a, b, c}); }

  void set_horizon(long h) { horizon_ = h; }

  void set_word(Mor m, std::vector<Mor> w) { word_data_.push_back({m, std::move(w)}); }

  int num_objects() const { return static_cast<int>(objects_.size()); }
  int num_morphisms() const {
    return static_cast<int>(objects_.size() + mors_.size());
  }

  //! Finalize. Verifies identity laws, src/rng consistency of all entries,
  //! closure (for genuinely finite categories), and associativity of every
  //! defined triple when `check_associativity` is set.
  FiniteCategory build(bool check_associativity = true) const {
    FiniteCategory c;
    c.obj_names_ = objects_;
    c.horizon_ = horizon_;
    int const no = static_cast<int>(objects_.size());
    for (int v = 0; v < no; ++v) {
      c.mor_names_.push_back(objects_[v]);
      c.src_.push_back(v);
      c.rng_.push_back(v);
    }
    for (auto const& m : mors_) {
      if (m.src < 0 || m.src >= no || m.rng < 0 || m.rng >= no)
        throw ValidationError("morphism '" + m.name + "' references unknown object");
      c.mor_names_.push_back(m.name);
      c.src_.push_back(m.src);
      c.rng_.push_back(m.rng);
    }
    int const nm = c.num_morphisms();
    for (Mor m = 0; m < nm; ++m) {
      if (!c.name_index_.emplace(c.mor_names_[m], m).second)
        throw ValidationError("duplicate morphism name '" + c.mor_names_[m] + "'");
    }
    for (auto const& e : entries_) {
      if (e.a < 0 || e.a >= nm || e.b < 0 || e.b >= nm || e.c < 0 || e.c >= nm)
        throw ValidationError("composition entry references unknown morphism");
      if (c.src_[e.a] != c.rng_[e.b])
        throw ValidationError("entry " + c.mor_names_[e.a] + "∘" + c.mor_names_[e.b] +
                              " is not composable");
      if (c.src_[e.c] != c.src_[e.b] || c.rng_[e.c] != c.rng_[e.a])
        throw ValidationError("entry " + c.mor_names_[e.a] + "∘" + c.mor_names_[e.b] +
                              " = " + c.mor_names_[e.c] + " breaks src/rng consistency");
      if (c.is_identity(e.a)) {
        if (e.c != e.b) throw ValidationError("identity law violated at " + c.mor_names_[e.b]);
        continue;
      }
      if (c.is_identity(e.b)) {
        if (e.c != e.a) throw ValidationError("identity law violated at " + c.mor_names_[e.a]);
        continue;
      }
      auto key = mor_pair_key(e.a, e.b);
      auto it = c.table_.find(key);
      if (it != c.table_.end() && it->second != e.c)
        throw ValidationError("conflicting entries for " + c.mor_names_[e.a] + "∘" +
                              c.mor_names_[e.b]);
      c.table_.emplace(key, e.c);
    }

    // closure: a genuinely finite category must have a total table
    if (!c.horizon_) {
      for (Mor a = no; a < nm; ++a)
        for (Mor b = no; b < nm; ++b)
          if (c.src_[a] == c.rng_[b] && !c.table_.count(mor_pair_key(a, b)))
            throw ValidationError("missing composition " + c.mor_names_[a] + "∘" +
                                  c.mor_names_[b] +
                                  " in a category declared without horizon");
    }

    if (check_associativity) verify_associativity(c);

    c.words_.assign(nm, std::nullopt);
    for (Mor m = 0; m < no; ++m) c.words_[m] = std::vector<Mor>{};
    for (auto const& [m, w] : word_data_) {
      c.words_[m] = w;
      c.has_words_ = true;
    }

    build_derived(c);
    return c;
  }

 private:
  struct MorSpec {
    std::string name;
    Obj src, rng;
  };
  struct Entry {
    Mor a, b, c;
  };

  static void verify_associativity(FiniteCategory const& c) {
    // for every stored (a,b) and (b,x): (a∘b)∘x must agree with a∘(b∘x)
    // whenever both are stored; without a horizon both must be stored.
    std::vector<std::vector<std::pair<Mor, Mor>>> by_left(c.num_morphisms());
    for (auto const& [key, ab] : c.table_) {
      Mor a = static_cast<Mor>(key >> 32);
      Mor b = static_cast<Mor>(key & 0xffffffffu);
      by_left[b].push_back({a, ab});
    }
    for (auto const& [key, bx] : c.table_) {
      Mor b = static_cast<Mor>(key >> 32);
      Mor x = static_cast<Mor>(key & 0xffffffffu);
      for (auto const& [a, ab] : by_left[b]) {
        auto lhs = c.try_compose(ab, x);
        auto rhs = c.try_compose(a, bx);
        if (lhs && rhs && *lhs != *rhs)
          throw ValidationError("associativity fails at (" + c.name(a) + ", " +
                                c.name(b) + ", " + c.name(x) + ")");
        if (!c.truncated() && (!lhs || !rhs))
          throw ValidationError("associativity triple undefined at (" + c.name(a) +
                                ", " + c.name(b) + ", " + c.name(x) + ")");
      }
    }
  }

  static void build_derived(FiniteCategory& c) {
    int const nm = c.num_morphisms();
    int const no = c.num_objects();
    c.cone_.assign(no, {});
    c.co_cone_.assign(no, {});
    for (Mor m = 0; m < nm; ++m) {
      c.cone_[c.rng_[m]].push_back(m);
      c.co_cone_[c.src_[m]].push_back(m);
    }

    c.factors_.assign(nm, {});
    for (Mor m = 0; m < nm; ++m) {
      c.factors_[m].push_back({c.identity(c.rng_[m]), m});
      if (!c.is_identity(m)) c.factors_[m].push_back({m, c.identity(c.src_[m])});
    }
    for (auto const& [key, prod] : c.table_) {
      Mor a = static_cast<Mor>(key >> 32);
      Mor b = static_cast<Mor>(key & 0xffffffffu);
      c.factors_[prod].push_back({a, b});
    }
    for (auto& f : c.factors_) {
      std::sort(f.begin(), f.end());
      f.erase(std::unique(f.begin(), f.end()), f.end());
    }

    c.segments_.assign(nm, {});
    c.extensions_.assign(nm, {});
    for (Mor m = 0; m < nm; ++m) {
      auto& seg = c.segments_[m];
      for (auto const& [a, w] : c.factors_[m]) seg.push_back(a);
      std::sort(seg.begin(), seg.end());
      seg.erase(std::unique(seg.begin(), seg.end()), seg.end());
      for (Mor a : seg) c.extensions_[a].push_back(m);
    }
    for (auto& e : c.extensions_) std::sort(e.begin(), e.end());

    // right invertibles with least right inverse
    c.invertibles_.inverse.assign(nm, kNoMor);
    for (Obj v = 0; v < no; ++v) {
      Mor idv = c.identity(v);
      for (auto const& [g, h] : c.factors_[idv]) {
        if (c.invertibles_.inverse[g] == kNoMor) {
          c.invertibles_.inverse[g] = h;
          c.invertibles_.members.push_back(g);
        }
      }
    }
    std::sort(c.invertibles_.members.begin(), c.invertibles_.members.end());

    // ≈-classes: b ∈ aΛ^{-1}
    c.class_rep_.assign(nm, kNoMor);
    for (Mor a = 0; a < nm; ++a) {
      Mor rep = a;
      for (Mor g : c.invertibles_.members) {
        if (c.src_[a] == c.rng_[g]) {
          if (auto b = c.try_compose(a, g)) rep = std::min(rep, *b);
        }
      }
      c.class_rep_[a] = rep;
    }
    // one contraction pass: rep of rep (orbits are closed, but guard anyway)
    for (Mor a = 0; a < nm; ++a) c.class_rep_[a] = c.class_rep_[c.class_rep_[a]];
  }

  std::vector<std::string> objects_;
  std::vector<MorSpec> mors_;
  std::vector<Entry> entries_;
  std::vector<std::pair<Mor, std::vector<Mor>>> word_data_;
  std::optional<long> horizon_;
};

//! Scan for the three cancellation properties of a category, with witnesses.
inline CancellationReport check_cancellation(FiniteCategory const& c) {
  CancellationReport rep;
  bool uth = c.truncated();
  rep.left = Verdict::pass(uth);
  rep.right = Verdict::pass(uth);
  rep.no_inverses = Verdict::pass(uth);

  int nm = c.num_morphisms();
  // left: a∘b = a∘b' with b != b'; scan factorizations grouped by left part
  for (Mor m = 0; m < nm && rep.left.holds(); ++m) {
    auto const& fs = c.factorizations(m);
    for (size_t i = 0; i + 1 < fs.size(); ++i) {
      if (fs[i].first == fs[i + 1].first && fs[i].second != fs[i + 1].second) {
        rep.left = Verdict::fail({c.name(fs[i].first), c.name(fs[i].second),
                                  c.name(fs[i + 1].second)},
                                 "left cancellation fails", uth);
        break;
      }
    }
  }
  // right: b∘a = b'∘a with b != b'
  for (Mor m = 0; m < nm && rep.right.holds(); ++m) {
    auto fs = c.factorizations(m);
    std::sort(fs.begin(), fs.end(), [](auto const& x, auto const& y) {
      return x.second != y.second ? x.second < y.second : x.first < y.first;
    });
    for (size_t i = 0; i + 1 < fs.size(); ++i) {
      if (fs[i].second == fs[i + 1].second && fs[i].first != fs[i + 1].first) {
        rep.right = Verdict::fail({c.name(fs[i].first), c.name(fs[i + 1].first),
                                   c.name(fs[i].second)},
                                  "right cancellation fails", uth);
        break;
      }
    }
  }
  // no inverses: a∘b = identity forces a = b = that identity
  for (Mor g : c.invertibles().members) {
    if (!c.is_identity(g)) {
      rep.no_inverses =
          Verdict::fail({c.name(g)}, "nontrivial invertible morphism", uth);
      break;
    }
  }
  return rep;
}

//! F is exhaustive with respect to a: every extension of a meets a member of
//! F. F must lie in rng(a)Λ.
inline bool is_exhaustive(FiniteCategory const& c, std::vector<Mor> const& F, Mor a) {
  for (Mor f : F) {
    if (c.rng(f) != c.rng(a))
      throw DomainError("exhaustive-set member " + c.name(f) +
                        " has range different from rng(" + c.name(a) + ")");
  }
  for (Mor g : c.extensions(a)) {
    bool met = false;
    for (Mor f : F) {
      if (c.meets(f, g)) {
        met = true;
        break;
      }
    }
    if (!met) return false;
  }
  return true;
}

//! A full-on-objects subcategory extracted from a parent category, with the
//! id translation in both directions. All identities are always included.
struct Subcategory {
  FiniteCategory cat;
  std::vector<Mor> to_parent;                 // new id -> parent id
  std::unordered_map<Mor, Mor> from_parent;   // parent id -> new id

  Mor parent_of(Mor m) const { return to_parent[m]; }
  std::optional<Mor> child_of(Mor m) const {
    auto it = from_parent.find(m);
    if (it == from_parent.end()) return std::nullopt;
    return it->second;
  }
};

//! Restrict a category to a subset of its morphisms (identities are added
//! automatically). Compositions are kept when both arguments and the result
//! lie in the subset; the horizon is inherited.
inline Subcategory extract_subcategory(FiniteCategory const& c,
                                       std::vector<Mor> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  Subcategory s;
  CategoryBuilder b;
  for (Obj v = 0; v < c.num_objects(); ++v) b.add_object(c.object_name(v));
  for (Obj v = 0; v < c.num_objects(); ++v) {
    s.to_parent.push_back(c.identity(v));
    s.from_parent.emplace(c.identity(v), static_cast<Mor>(v));
  }
  for (Mor m : members) {
    if (c.is_identity(m)) continue;
    Mor id = b.add_morphism(c.name(m), c.src(m), c.rng(m));
    s.to_parent.push_back(m);
    s.from_parent.emplace(m, id);
  }
  for (std::size_t i = 0; i < s.to_parent.size(); ++i) {
    for (std::size_t j = 0; j < s.to_parent.size(); ++j) {
      Mor a = s.to_parent[i], bb = s.to_parent[j];
      if (c.is_identity(a) || c.is_identity(bb)) continue;
      if (!c.composable(a, bb)) continue;
      auto prod = c.try_compose(a, bb);
      if (!prod) continue;
      auto it = s.from_parent.find(*prod);
      if (it == s.from_parent.end()) {
        if (!c.truncated())
          throw ValidationError("subset is not closed under composition: " +
                                c.name(a) + "∘" + c.name(bb));
        continue;
      }
      b.set_compose(static_cast<Mor>(i), static_cast<Mor>(j), it->second);
    }
  }
  if (c.truncated()) b.set_horizon(*c.horizon());
  s.cat = b.build(false);
  return s;
}

//! Decide finite alignment by brute force. On genuinely finite categories the
//! verdict is exact; on truncated ones it is sound up to the horizon.
inline AlignmentVerdict is_finitely_aligned(FiniteCategory const& c) {
  AlignmentVerdict av;
  av.verdict = Verdict::pass(c.truncated());
  av.singly = true;
  int nm = c.num_morphisms();
  for (Mor a = 0; a < nm; ++a) {
    for (Mor b = a; b < nm; ++b) {
      if (c.rng(a) != c.rng(b)) continue;
      auto mins = c.minimal_common_extensions(a, b);
      av.max_classes = std::max(av.max_classes, mins.size());
      if (mins.size() > 1) av.singly = false;
      // coverage check: every stored common extension extends some minimal rep
      for (Mor e : c.extensions(a)) {
        if (!c.leq(b, e)) continue;
        bool covered = false;
        for (Mor m : mins) {
          if (c.leq(m, e)) {
            covered = true;
            break;
          }
        }
        if (!covered) {
          av.verdict = Verdict::fail({c.name(a), c.name(b), c.name(e)},
                                     "common extension not covered by minimal set",
                                     c.truncated());
          return av;
        }
      }
    }
  }
  return av;
}

}  // namespace lcsc
