#pragma once

#include <string>
#include <vector>

#include "symbreak/pattern.hpp"
#include "symbreak/translation.hpp"
#include "symbreak/verdict.hpp"

namespace symbreak::uds {

/// Harish-Chandra parameter for U(p,q): p+q entries on the lattice
/// Z + (p+q-1)/2, strictly decreasing on 1..p and on p+1..p+q, no repeats.
struct HCParam {
  int p = 0;
  int q = 0;
  RationalVec entries;
};

/// Epsilon offset (p+q-1)/2 of the discrete-series lattice.
Rational ds_epsilon(int p, int q);

HCParam validate_hc(int p, int q, RationalVec entries);

/// Word over {+,-} of length p+q with exactly p pluses; the chamber datum.
struct ShuffleWord {
  std::string word;

  int plus_count() const;
  friend bool operator==(const ShuffleWord& a, const ShuffleWord& b) {
    return a.word == b.word;
  }
};

ShuffleWord validate_shuffle(int p, int q, std::string word);

/// All C(p+q, p) shuffle words, lexicographic with '+' < '-'.
std::vector<ShuffleWord> enumerate_shuffles(int p, int q);

/// The pair (sorted parameter, chamber word).
struct DSLabel {
  RationalVec lambda_plus;  // strictly decreasing
  ShuffleWord w;
};

/// lambda_plus = entries sorted descending; w marks which positions came
/// from the first chain. merge() inverts it.
DSLabel split(const HCParam& lambda);
HCParam merge(int p, int q, const DSLabel& label);

/// Pattern-constancy transport: if the store holds a decided fact for the
/// triple (w, w', D) at any integral point of D, the same conclusion holds
/// at (lambda_plus, nu_plus). Facts are keyed by ggp_key(w, w').
std::string ggp_key(const ShuffleWord& w, const ShuffleWord& wp);
translation::Verdict ggp_transport(const ShuffleWord& w, const ShuffleWord& wp,
                                   const patterns::InterleavingPattern& D,
                                   const translation::FactStore& store,
                                   const RationalVec& lambda_plus,
                                   const RationalVec& nu_plus);

struct HoloSeed {
  RationalVec lambda;                  // U(p,q) parameter, original coordinates
  patterns::InterleavingPattern D;     // pattern on sorted chains
  RationalVec lambda_sorted;           // x-side values realizing D
  RationalVec nu_sorted;               // y-side values realizing D
};

/// Bottom-layer seed for the holomorphic chamber: nu has p+q-1 entries with
/// nu_p > ... > nu_{p+q-1} > nu_1 > ... > nu_{p-1}. The q-side of lambda is
/// pinned at nu_{p+j-1} - 1/2 and the free slots are filled minimally on the
/// half-integer lattice.
HoloSeed holo_seed(const RationalVec& nu, int p, int q);

/// One row of the encoded (U(2,1), U(1,1)) table.
struct U21Case {
  int case_id = 0;                         // 1..6 for I..VI
  std::string delta;                       // "++-", "+-+", "-++"
  std::string delta_prime;                 // "+-" or "-+"
  patterns::InterleavingPattern pattern;   // strict, on (3,2), sorted labels
  bool coherent = false;                   // only case II
  std::vector<patterns::InterleavingPattern> limit_patterns;  // one Equal each
};

const std::vector<U21Case>& u21_table();

/// tau-invariant indices of the U(2,1) chamber: {1} for "++-", {} for "+-+",
/// {2} for "-++".
translation::TauInvariantSet u21_tau_invariants(const std::string& delta);

/// Verdict for the symbolic configuration (delta, delta', D): table rows are
/// NonZero, tau-invariant vanishing gives Zero, the rest is Unknown unless
/// assume_he_complete promotes it to Zero.
translation::Verdict u21_verdict(const std::string& delta, const std::string& delta_prime,
                                 const patterns::InterleavingPattern& D,
                                 bool assume_he_complete);

/// Verdict for concrete parameters: x1 > x2, y integral and distinct from
/// them, xi != eta half-integral. Degenerate inputs are DomainErrors (use
/// u21_limit_query).
translation::Verdict u21_query(std::int64_t x1, std::int64_t x2, std::int64_t y,
                               const Rational& xi, const Rational& eta,
                               bool assume_he_complete);

/// Matches a weak pattern with exactly one equality against the eight limit
/// rows; NonZero when listed, Unknown otherwise.
translation::Verdict u21_limit_query(const patterns::InterleavingPattern& weak);

struct U21AuditRow {
  std::string delta;
  std::string delta_prime;
  patterns::InterleavingPattern pattern;
  translation::Verdict verdict;
};

/// All 60 strict configurations (3 chambers x 2 dual chambers x 10
/// patterns), with verdicts as in u21_verdict.
std::vector<U21AuditRow> u21_audit(bool assume_he_complete);

}  // namespace symbreak::uds
