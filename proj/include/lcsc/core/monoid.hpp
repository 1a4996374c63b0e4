#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lcsc/core/error.hpp"

namespace lcsc {

//! An element of an OrderedMonoid. The interpretation of `data` depends on
//! the monoid kind: exponent vector for NaturalVec, a single value for
//! Numerical, a letter sequence for FreeWords, empty for Trivial.
struct MonoidElem {
  std::vector<long> data;

  friend bool operator==(MonoidElem const& a, MonoidElem const& b) {
    return a.data == b.data;
  }
  friend bool operator!=(MonoidElem const& a, MonoidElem const& b) {
    return !(a == b);
  }
  friend bool operator<(MonoidElem const& a, MonoidElem const& b) {
    return a.data < b.data;
  }
};

//! A positive cone Gamma inside a group Q, with Gamma ∩ Gamma^{-1} = {1}.
//!
//! Supported shapes:
//!  - NaturalVec: the free commutative monoid N^k, Q = Z^k, order
//!    componentwise, joins by componentwise max;
//!  - Numerical:  the submonoid of N generated by a finite set, Q = Z,
//!    g1 <= g2 iff g2 - g1 lies in the submonoid;
//!  - FreeWords:  the free monoid on a finite alphabet, ordered by prefix;
//!  - Trivial:    the one-element monoid.
class OrderedMonoid {
 public:
  enum class Kind { NaturalVec, Numerical, FreeWords, Trivial };

  OrderedMonoid() : kind_(Kind::Trivial) {}

  static OrderedMonoid naturals() { return natural_vec(1); }

  static OrderedMonoid natural_vec(int k) {
    OrderedMonoid m;
    m.kind_ = Kind::NaturalVec;
    m.rank_ = k;
    return m;
  }

  static OrderedMonoid numerical(std::vector<long> gens) {
    OrderedMonoid m;
    m.kind_ = Kind::Numerical;
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    m.num_gens_ = std::move(gens);
    for (long g : m.num_gens_) {
      if (g <= 0) throw BadParamsError("numerical monoid generators must be positive");
    }
    return m;
  }

  static OrderedMonoid free_words(std::vector<std::string> letters) {
    OrderedMonoid m;
    m.kind_ = Kind::FreeWords;
    m.letters_ = std::move(letters);
    return m;
  }

  static OrderedMonoid trivial() { return OrderedMonoid(); }

  Kind kind() const { return kind_; }
  int rank() const { return rank_; }
  std::vector<long> const& numerical_generators() const { return num_gens_; }
  std::vector<std::string> const& letters() const { return letters_; }

  MonoidElem one() const {
    switch (kind_) {
      case Kind::NaturalVec: return {std::vector<long>(rank_, 0)};
      case Kind::Numerical: return {{0}};
      default: return {{}};
    }
  }

  bool is_one(MonoidElem const& e) const { return e == one(); }

  MonoidElem product(MonoidElem const& a, MonoidElem const& b) const {
    switch (kind_) {
      case Kind::NaturalVec: {
        MonoidElem r = a;
        for (int i = 0; i < rank_; ++i) r.data[i] += b.data[i];
        return r;
      }
      case Kind::Numerical: return {{a.data[0] + b.data[0]}};
      case Kind::FreeWords: {
        MonoidElem r = a;
        r.data.insert(r.data.end(), b.data.begin(), b.data.end());
        return r;
      }
      default: return one();
    }
  }

  //! Membership test for values of the ambient group; only meaningful for
  //! Numerical (is n in <gens>?).
  bool numerical_member(long n) const {
    if (n < 0) return false;
    if (n == 0) return true;
    // bounded coin-problem DP
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    seen[0] = 1;
    for (long v = 1; v <= n; ++v) {
      for (long g : num_gens_) {
        if (v - g >= 0 && seen[v - g]) {
          seen[v] = 1;
          break;
        }
      }
    }
    return seen[n] != 0;
  }

  //! Validity of an element representation (used by parsers).
  bool valid(MonoidElem const& e) const {
    switch (kind_) {
      case Kind::NaturalVec:
        if (static_cast<int>(e.data.size()) != rank_) return false;
        return std::all_of(e.data.begin(), e.data.end(), [](long x) { return x >= 0; });
      case Kind::Numerical:
        return e.data.size() == 1 && numerical_member(e.data[0]);
      case Kind::FreeWords:
        return std::all_of(e.data.begin(), e.data.end(), [&](long x) {
          return x >= 0 && x < static_cast<long>(letters_.size());
        });
      default: return e.data.empty();
    }
  }

  //! g1 <= g2 in the left-invariant order, i.e. g1^{-1} g2 lies in Gamma.
  bool leq(MonoidElem const& a, MonoidElem const& b) const {
    switch (kind_) {
      case Kind::NaturalVec:
        for (int i = 0; i < rank_; ++i)
          if (a.data[i] > b.data[i]) return false;
        return true;
      case Kind::Numerical: return numerical_member(b.data[0] - a.data[0]);
      case Kind::FreeWords:
        if (a.data.size() > b.data.size()) return false;
        return std::equal(a.data.begin(), a.data.end(), b.data.begin());
      default: return true;
    }
  }

  //! Least upper bound, when it exists and is unique; nullopt signals that
  //! Gamma is not a join-semilattice at (a, b).
  std::optional<MonoidElem> try_join(MonoidElem const& a, MonoidElem const& b) const {
    switch (kind_) {
      case Kind::NaturalVec: {
        MonoidElem r = a;
        for (int i = 0; i < rank_; ++i) r.data[i] = std::max(a.data[i], b.data[i]);
        return r;
      }
      case Kind::Numerical: {
        // upper bounds form a nonempty subset of N; the numeric minimum is a
        // join only if it divides (in the monoid order) every other bound.
        long lo = std::max(a.data[0], b.data[0]);
        long frob_bound = lo + frobenius_scan_bound();
        std::vector<long> ubs;
        for (long g = lo; g <= frob_bound; ++g) {
          if (numerical_member(g) && numerical_member(g - a.data[0]) &&
              numerical_member(g - b.data[0]))
            ubs.push_back(g);
        }
        if (ubs.empty()) return std::nullopt;
        long m = ubs.front();
        // all upper bounds beyond frob_bound are >= m + conductor, hence
        // m <= them automatically once m <= every scanned bound.
        for (long u : ubs) {
          if (!numerical_member(u - m)) return std::nullopt;
        }
        return MonoidElem{{m}};
      }
      case Kind::FreeWords: {
        if (leq(a, b)) return b;
        if (leq(b, a)) return a;
        return std::nullopt;  // incomparable words have no common upper bound
      }
      default: return one();
    }
  }

  //! e is an atom: e != 1 and e = m1 m2 forces m1 = 1 or m2 = 1.
  bool is_atom(MonoidElem const& e) const {
    switch (kind_) {
      case Kind::NaturalVec: {
        long s = std::accumulate(e.data.begin(), e.data.end(), 0L);
        return s == 1;
      }
      case Kind::Numerical: {
        long n = e.data[0];
        if (n <= 0 || !numerical_member(n)) return false;
        for (long m = 1; m < n; ++m)
          if (numerical_member(m) && numerical_member(n - m)) return false;
        return true;
      }
      case Kind::FreeWords: return e.data.size() == 1;
      default: return false;
    }
  }

  //! All two-part factorizations of e inside Gamma (including trivial ones).
  std::vector<std::pair<MonoidElem, MonoidElem>> factor_pairs(MonoidElem const& e) const {
    std::vector<std::pair<MonoidElem, MonoidElem>> out;
    switch (kind_) {
      case Kind::NaturalVec: {
        // componentwise splits
        std::vector<long> cur(rank_, 0);
        // iterate over all vectors 0 <= cur <= e
        while (true) {
          MonoidElem rest;
          rest.data.resize(rank_);
          for (int i = 0; i < rank_; ++i) rest.data[i] = e.data[i] - cur[i];
          out.push_back({MonoidElem{cur}, rest});
          int i = 0;
          for (; i < rank_; ++i) {
            if (cur[i] < e.data[i]) {
              ++cur[i];
              for (int j = 0; j < i; ++j) cur[j] = 0;
              break;
            }
          }
          if (i == rank_) break;
        }
        break;
      }
      case Kind::Numerical: {
        long n = e.data[0];
        for (long m = 0; m <= n; ++m)
          if (numerical_member(m) && numerical_member(n - m))
            out.push_back({MonoidElem{{m}}, MonoidElem{{n - m}}});
        break;
      }
      case Kind::FreeWords: {
        for (size_t i = 0; i <= e.data.size(); ++i) {
          MonoidElem l{std::vector<long>(e.data.begin(), e.data.begin() + i)};
          MonoidElem r{std::vector<long>(e.data.begin() + i, e.data.end())};
          out.push_back({l, r});
        }
        break;
      }
      default: out.push_back({one(), one()});
    }
    return out;
  }

  //! True when every bounded ascending chain in Gamma stabilizes. This is the
  //! fast-path hypothesis for the maximal-element property of tight filters.
  bool bounded_chains_stabilize() const {
    return kind_ == Kind::NaturalVec || kind_ == Kind::Numerical ||
           kind_ == Kind::Trivial;
  }

  //! A conical monoid has no nontrivial units; all supported shapes are
  //! conical by construction.
  bool conical() const { return true; }

  //! Gamma is atomic when it is generated by its atoms.
  bool atomic() const {
    switch (kind_) {
      case Kind::Numerical:
        // generators themselves decompose into atoms by the DP construction
        return !num_gens_.empty();
      case Kind::Trivial: return true;
      default: return true;
    }
  }

  //! Enveloping-group difference a * b^{-1}, as a Z^k vector. Only the
  //! commutative shapes embed in an abelian group this way.
  std::vector<long> group_difference(MonoidElem const& a, MonoidElem const& b) const {
    if (kind_ == Kind::FreeWords)
      throw DomainError("group differences are not supported for free-word lengths");
    std::vector<long> r(std::max(a.data.size(), b.data.size()), 0);
    for (size_t i = 0; i < a.data.size(); ++i) r[i] += a.data[i];
    for (size_t i = 0; i < b.data.size(); ++i) r[i] -= b.data[i];
    return r;
  }

  //! A scalar degree used for horizon bookkeeping (total degree).
  long scalar(MonoidElem const& e) const {
    switch (kind_) {
      case Kind::NaturalVec:
      case Kind::Numerical:
        return std::accumulate(e.data.begin(), e.data.end(), 0L);
      case Kind::FreeWords: return static_cast<long>(e.data.size());
      default: return 0;
    }
  }

  std::string format(MonoidElem const& e) const {
    std::ostringstream os;
    switch (kind_) {
      case Kind::NaturalVec:
        for (int i = 0; i < rank_; ++i) {
          if (i) os << ",";
          os << e.data[i];
        }
        break;
      case Kind::Numerical: os << e.data[0]; break;
      case Kind::FreeWords:
        if (e.data.empty()) os << "1";
        for (long x : e.data) os << letters_[x];
        break;
      default: os << "1";
    }
    return os.str();
  }

  MonoidElem parse(std::string const& s) const {
    MonoidElem e;
    switch (kind_) {
      case Kind::NaturalVec: {
        std::stringstream ss(s);
        std::string part;
        while (std::getline(ss, part, ',')) e.data.push_back(std::stol(part));
        if (static_cast<int>(e.data.size()) != rank_)
          throw ParseError("length value '" + s + "' has wrong rank");
        break;
      }
      case Kind::Numerical: e.data.push_back(std::stol(s)); break;
      case Kind::FreeWords: {
        if (s == "1") break;
        // letters are single tokens; match greedily
        size_t pos = 0;
        while (pos < s.size()) {
          bool matched = false;
          for (size_t i = 0; i < letters_.size(); ++i) {
            if (s.compare(pos, letters_[i].size(), letters_[i]) == 0) {
              e.data.push_back(static_cast<long>(i));
              pos += letters_[i].size();
              matched = true;
              break;
            }
          }
          if (!matched) throw ParseError("unknown letter in length value '" + s + "'");
        }
        break;
      }
      default:
        if (s != "1" && s != "0") throw ParseError("trivial monoid value must be 1");
        break;
    }
    if (!valid(e)) throw ParseError("value '" + s + "' is not in the monoid");
    return e;
  }

  std::string describe() const {
    switch (kind_) {
      case Kind::NaturalVec:
        return rank_ == 1 ? "N" : ("N^" + std::to_string(rank_));
      case Kind::Numerical: {
        std::string s = "numerical";
        for (long g : num_gens_) s += " " + std::to_string(g);
        return s;
      }
      case Kind::FreeWords: {
        std::string s = "free";
        for (auto const& l : letters_) s += " " + l;
        return s;
      }
      default: return "trivial";
    }
  }

 private:
  long frobenius_scan_bound() const {
    // past g1*g2 every natural number with the right residues is a member;
    // scanning up to max(gens)^2 + max(gens) is enough for join detection.
    long m = num_gens_.empty() ? 1 : num_gens_.back();
    return m * m + m + 1;
  }

  Kind kind_;
  int rank_ = 0;
  std::vector<long> num_gens_;
  std::vector<std::string> letters_;
};

//! Join of two elements; nullopt when Gamma fails to be a join-semilattice
//! at this pair.
inline std::optional<MonoidElem> monoid_join(OrderedMonoid const& m,
                                             MonoidElem const& a,
                                             MonoidElem const& b) {
  return m.try_join(a, b);
}

}  // namespace lcsc
