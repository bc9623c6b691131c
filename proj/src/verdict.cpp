#include "symbreak/verdict.hpp"

#include "symbreak/errors.hpp"

namespace symbreak::translation {

std::string multiplicity_str(Multiplicity v) {
  switch (v) {
    case Multiplicity::Zero: return "Zero";
    case Multiplicity::One: return "One";
    case Multiplicity::NonZero: return "NonZero";
    case Multiplicity::Unknown: return "Unknown";
  }
  throw InternalError("unreachable multiplicity");
}

Multiplicity multiplicity_parse(const std::string& s) {
  if (s == "Zero") return Multiplicity::Zero;
  if (s == "One") return Multiplicity::One;
  if (s == "NonZero") return Multiplicity::NonZero;
  if (s == "Unknown") return Multiplicity::Unknown;
  throw DomainError("bad multiplicity '" + s + "'");
}

namespace {

struct TagName {
  TheoremTag tag;
  char const* name;
  char const* citation;
};

constexpr TagName kTags[] = {
    {TheoremTag::Thm2_2, "Thm2.2", "Theorem 2.2"},
    {TheoremTag::Thm2_3, "Thm2.3", "Theorem 2.3"},
    {TheoremTag::Thm2_7_Stability, "Thm2.7-Stability", "Theorem 2.7"},
    {TheoremTag::Thm2_11_Vanish, "Thm2.11-Vanish", "Theorem 2.11"},
    {TheoremTag::WeylLaw, "WeylLaw", "Weyl branching law"},
    {TheoremTag::Table_He, "Table-He", "Table 1"},
    {TheoremTag::Thm3_3_GGP, "Thm3.3-GGP", "Theorem 3.3"},
    {TheoremTag::Thm4_1_Speh, "Thm4.1-Speh", "Theorem 4.1"},
    {TheoremTag::Thm7_7_GL, "Thm7.7-GL", "Theorem 7.7"},
    {TheoremTag::Cor7_6_Jump, "Cor7.6-Jump", "Corollary 7.6"},
    {TheoremTag::Thm8_5_UpqSym, "Thm8.5-UpqSym", "Theorem 8.5"},
    {TheoremTag::Seed_Period, "Seed-Period", "Theorem 5.2"},
    {TheoremTag::Stiefel, "Stiefel", "Stiefel transport rule"},
};

}  // namespace

std::string tag_str(TheoremTag t) {
  for (const auto& e : kTags)
    if (e.tag == t) return e.name;
  throw InternalError("unreachable theorem tag");
}

std::string tag_citation(TheoremTag t) {
  for (const auto& e : kTags)
    if (e.tag == t) return e.citation;
  throw InternalError("unreachable theorem tag");
}

TheoremTag tag_parse(const std::string& s) {
  for (const auto& e : kTags)
    if (s == e.name) return e.tag;
  throw DomainError("bad theorem tag '" + s + "'");
}

Verdict make_verdict(Multiplicity value, TheoremTag tag, std::string detail,
                     std::vector<patterns::Step> walk) {
  Verdict v;
  v.value = value;
  v.provenance.push_back(ProvenanceStep{tag, std::move(detail), std::move(walk)});
  return v;
}

}  // namespace symbreak::translation
