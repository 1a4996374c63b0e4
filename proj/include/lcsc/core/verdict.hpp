#pragma once

#include <string>
#include <utility>
#include <vector>

namespace lcsc {

enum class Outcome { Holds, Fails, Inconclusive };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "holds";
    case Outcome::Fails: return "fails";
    default: return "inconclusive";
  }
}

//! Result of a single structural check.
//!
//! A verdict on a length-truncated instance is only sound for the stored part
//! of the category; such verdicts carry up_to_horizon = true. Witnesses are
//! morphism (or monoid element) names so that a failure can be replayed
//! against the library.
struct Verdict {
  Outcome outcome = Outcome::Holds;
  bool up_to_horizon = false;
  std::vector<std::string> witness;
  std::string note;

  bool holds() const { return outcome == Outcome::Holds; }
  bool fails() const { return outcome == Outcome::Fails; }

  static Verdict pass(bool uth = false, std::string note = "") {
    Verdict v;
    v.up_to_horizon = uth;
    v.note = std::move(note);
    return v;
  }
  static Verdict fail(std::vector<std::string> w, std::string note = "",
                      bool uth = false) {
    Verdict v;
    v.outcome = Outcome::Fails;
    v.witness = std::move(w);
    v.note = std::move(note);
    v.up_to_horizon = uth;
    return v;
  }
  static Verdict inconclusive(std::string note = "") {
    Verdict v;
    v.outcome = Outcome::Inconclusive;
    v.up_to_horizon = true;
    v.note = std::move(note);
    return v;
  }

  // Conjunction, keeping the first failure.
  Verdict& operator&=(Verdict const& other) {
    up_to_horizon = up_to_horizon || other.up_to_horizon;
    if (outcome == Outcome::Holds && other.outcome != Outcome::Holds) {
      outcome = other.outcome;
      witness = other.witness;
      note = other.note;
    }
    return *this;
  }
};

}  // namespace lcsc
