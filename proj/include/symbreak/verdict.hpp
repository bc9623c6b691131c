#pragma once

#include <string>
#include <vector>

#include "symbreak/pattern.hpp"

namespace symbreak::translation {

/// Multiplicity conclusion. One implies NonZero; Unknown carries no claim.
enum class Multiplicity { Zero, One, NonZero, Unknown };

std::string multiplicity_str(Multiplicity v);
Multiplicity multiplicity_parse(const std::string& s);

/// Which result certified a step of the conclusion.
enum class TheoremTag {
  Thm2_2,
  Thm2_3,
  Thm2_7_Stability,
  Thm2_11_Vanish,
  WeylLaw,
  Table_He,
  Thm3_3_GGP,
  Thm4_1_Speh,
  Thm7_7_GL,
  Cor7_6_Jump,
  Thm8_5_UpqSym,
  Seed_Period,
  Stiefel,
};

std::string tag_str(TheoremTag t);       // e.g. "Thm2.7-Stability"
std::string tag_citation(TheoremTag t);  // e.g. "Theorem 2.7"
TheoremTag tag_parse(const std::string& s);

struct ProvenanceStep {
  TheoremTag tag;
  std::string detail;                 // parameters, case names, witnesses
  std::vector<patterns::Step> walk;   // optional translation walk

  friend bool operator==(const ProvenanceStep& a, const ProvenanceStep& b) {
    return a.tag == b.tag && a.detail == b.detail && a.walk == b.walk;
  }
};

struct Verdict {
  Multiplicity value = Multiplicity::Unknown;
  std::vector<ProvenanceStep> provenance;

  bool decided() const { return value != Multiplicity::Unknown; }
  bool nonzero() const { return value == Multiplicity::One || value == Multiplicity::NonZero; }

  friend bool operator==(const Verdict& a, const Verdict& b) {
    return a.value == b.value && a.provenance == b.provenance;
  }
};

Verdict make_verdict(Multiplicity value, TheoremTag tag, std::string detail,
                     std::vector<patterns::Step> walk = {});

inline Verdict unknown_verdict() { return Verdict{}; }

}  // namespace symbreak::translation
