#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "symbreak/pattern.hpp"
#include "symbreak/verdict.hpp"

namespace symbreak::translation {

/// Simple roots e_i - e_{i+1} known to kill the coherent family at the
/// corresponding wall, given as the set of indices i in {1..N-1}.
struct TauInvariantSet {
  std::set<int> indices;

  static TauInvariantSet full(int N);
  static TauInvariantSet none() { return {}; }
};

/// Legality of the up-translation tau -> tau + f_i against tau':
/// true iff tau_i avoids the forbidden set {tau'_j - 1/2 : all j}.
/// When true, both non-vanishing and vanishing transport across the move.
bool can_translate_up(const RationalVec& tau, const RationalVec& taup, int i);

/// Mirror for tau -> tau - f_i, forbidden set {tau'_j + 1/2 : all j}.
bool can_translate_down(const RationalVec& tau, const RationalVec& taup, int i);

/// A persisted piece of knowledge: a verdict at one parameter point of a
/// pattern region. The two flags are supplied by the family modules that
/// know them (the translation hypotheses are not decidable from the
/// parameters alone).
struct Fact {
  std::string group_pair;                              // free-form key, e.g. "U(3)/U(2)"
  std::optional<patterns::InterleavingPattern> D;      // absent for patternless facts
  RationalVec lambda;
  RationalVec nu;
  Verdict verdict;
  bool eigenspaces_semisimple = false;  // tensor eigenspace hypothesis holds
  bool multiplicity_free = false;       // pair has multiplicity <= 1

  friend bool operator==(const Fact& a, const Fact& b);
};

/// Transports the seed verdict to lambda inside the seed's fence region.
/// Requires: a decided seed with the eigenspace hypothesis, regular seed
/// character (xi_i - xi_{i+1} >= 1), lambda in xi + Z^n, and (lambda, nu)
/// satisfying seed.D. Every walk step is re-validated against nu with
/// can_translate_up/down; a violation is an InternalError because in-region
/// unit moves of a strict pattern are always legal.
/// NonZero is promoted to One when the seed is flagged multiplicity-free.
Verdict stability_transport(const Fact& seed, const RationalVec& lambda);

/// Zero if some i in tauSet has x_i x_{i+1} adjacent in D (no y between);
/// otherwise Unknown. D must be strict on (n, n-1).
Verdict tau_vanish(const TauInvariantSet& tau_set, const patterns::InterleavingPattern& D);

/// JSON-lines store of Facts; one object per line with keys
/// {groupPair, pattern, lambda, nu, verdict, provenance[]}.
class FactStore {
 public:
  FactStore() = default;

  void add(Fact f);

  const std::vector<Fact>& facts() const { return facts_; }

  /// Facts with the given group-pair key, and with equal pattern when one is
  /// given.
  std::vector<const Fact*> lookup(const std::string& group_pair,
                                  const std::optional<patterns::InterleavingPattern>& D) const;

  std::string to_jsonl() const;
  static FactStore from_jsonl(const std::string& text);

  /// Union with duplicate elimination. Zero/NonZero collisions on the same
  /// (groupPair, pattern, lambda, nu) key raise ConsistencyError listing the
  /// offending facts.
  static FactStore merge(const FactStore& a, const FactStore& b);

 private:
  std::vector<Fact> facts_;
};

std::string fact_to_json(const Fact& f);
Fact fact_from_json(const std::string& line);

std::string verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const std::string& text);

}  // namespace symbreak::translation
