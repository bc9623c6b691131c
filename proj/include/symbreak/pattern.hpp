#pragma once

#include <string>
#include <vector>

#include "symbreak/rational.hpp"

namespace symbreak::patterns {

/// Relation between two adjacent entries of a pattern word. A pattern whose
/// relations are all Strict is a strict pattern; any WeakGE or Equal atom
/// makes it a weak pattern.
enum class Rel { Strict, WeakGE, Equal };

char const* rel_str(Rel r);  // ">", ">=", "="

/// One letter of a pattern word: the i-th member of the x-chain or the j-th
/// member of the y-chain (indices are 1-based, as in the x1/y1 grammar).
struct Label {
  bool is_x = true;
  int index = 1;

  friend bool operator==(const Label& a, const Label& b) {
    return a.is_x == b.is_x && a.index == b.index;
  }
  std::string str() const { return (is_x ? "x" : "y") + std::to_string(index); }
};

inline Label X(int i) { return Label{true, i}; }
inline Label Y(int j) { return Label{false, j}; }

/// A total order merging the two decreasing chains x_1 > ... > x_n and
/// y_1 > ... > y_m, together with the relation holding between each adjacent
/// pair. Two patterns are equal iff their words and relation sequences are
/// equal (canonical form).
struct InterleavingPattern {
  int n = 0;
  int m = 0;
  std::vector<Label> word;  // length n+m, each label exactly once
  std::vector<Rel> rel;     // length max(n+m-1, 0)

  bool is_strict() const;
  int equality_count() const;

  /// Position of a label in the word; InternalError if absent.
  int position(const Label& l) const;

  friend bool operator==(const InterleavingPattern& a, const InterleavingPattern& b) {
    return a.n == b.n && a.m == b.m && a.word == b.word && a.rel == b.rel;
  }
  friend bool operator!=(const InterleavingPattern& a, const InterleavingPattern& b) {
    return !(a == b);
  }
};

/// Builds a pattern from a word, filling every relation with Strict;
/// validates the chain-compatibility invariants.
InterleavingPattern strict_pattern(int n, int m, std::vector<Label> word);

/// Builds a pattern from a word plus explicit relations; validates invariants.
InterleavingPattern weak_pattern(int n, int m, std::vector<Label> word, std::vector<Rel> rel);

/// The hyperplane x_i = y_j for an adjacent x/y pair of a strict pattern.
struct Fence {
  int x_index = 1;
  int y_index = 1;
  friend bool operator==(const Fence& a, const Fence& b) {
    return a.x_index == b.x_index && a.y_index == b.y_index;
  }
};

/// A unit move +f_i or -f_i on the x-side, i 1-based.
struct Step {
  int index = 1;
  int sign = +1;
  friend bool operator==(const Step& a, const Step& b) {
    return a.index == b.index && a.sign == b.sign;
  }
  std::string str() const { return (sign > 0 ? "+f" : "-f") + std::to_string(index); }
};

/// A concrete parameter point (x, y) in R^n x R^m, exact rational entries.
struct ParamPoint {
  RationalVec x;
  RationalVec y;
};

/// The pattern realized by p: merge the chains in descending order; equal
/// values produce Equal atoms (x-labels placed before tied y-labels), strict
/// drops produce Strict atoms. Requires x strictly decreasing and y weakly
/// decreasing.
InterleavingPattern classify(const ParamPoint& p);

/// True iff every adjacent relation of D holds for the values of p.
bool satisfies(const InterleavingPattern& D, const ParamPoint& p);

/// All C(n+m, n) strict patterns, in lexicographic word order (x-letters
/// sort before y-letters).
std::vector<InterleavingPattern> enumerate_strict(int n, int m);

/// The fences of a strict pattern, in word order.
std::vector<Fence> fences(const InterleavingPattern& D);

/// 0 if D places y_1 above x_1, otherwise the largest i with x_i > y_1 in D.
/// When D has no y-labels every x counts, so the value is n.
int m_of(const InterleavingPattern& D);

/// True iff x_i and x_{i+1} are adjacent in D's word (no y between them).
bool adjacent_string(const InterleavingPattern& D, int i);

/// The unique mu in xi + Z^n with (mu, nu) in D whose coordinates are
/// minimal for i <= m(D) and maximal for i > m(D) over the region, built by
/// the chain construction: walk i = m(D)..1 packing each coordinate down
/// against its lower neighbor in the word, then i = m(D)+1..n packing up
/// against the upper neighbor. A coordinate with no constraining neighbor
/// (possible only when m = 0 for the last x) keeps its xi value.
RationalVec extremal_mu(const InterleavingPattern& D, const RationalVec& nu,
                        const RationalVec& xi);

/// A sequence of unit steps from xi to lambda such that every intermediate
/// point, paired with nu, satisfies D. Routes through extremal_mu (clamped
/// to the hull of xi and lambda so no coordinate overshoots), moving inner
/// coordinates first on the way to mu and outer coordinates first on the
/// way to lambda. Every step is replay-verified; a failure raises
/// InternalError carrying the stuck state.
std::vector<Step> fence_walk(const InterleavingPattern& D, const RationalVec& nu,
                             const RationalVec& xi, const RationalVec& lambda);

/// The [D D' +] word construction: the pattern of (lambda, x_{r+1}, nu)
/// obtained by interleaving the two parameter alphabets along D's block
/// decomposition, with the extra x-label placed below everything. The result
/// is a strict pattern on (r+s+1, r+s); the coherence predicate on the pair
/// is out of scope.
InterleavingPattern build_dd_plus(const InterleavingPattern& D, const InterleavingPattern& Dp);

/// Text grammar "x1 > y1 >= x2 = y2 > x3"; round-trippable.
std::string to_text(const InterleavingPattern& D);
InterleavingPattern parse_pattern(const std::string& text);

/// JSON form {"word":["x1","y1",...],"rel":[">",">=","="]}.
std::string to_json(const InterleavingPattern& D);
InterleavingPattern pattern_from_json(const std::string& json_text);

}  // namespace symbreak::patterns
