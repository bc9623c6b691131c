#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "symbreak/rational.hpp"

namespace symbreak::weyl {

/// Weakly decreasing integer vector; highest weight of U(N) in standard
/// coordinates.
struct HighestWeight {
  std::vector<std::int64_t> entries;

  std::size_t size() const { return entries.size(); }
  friend bool operator==(const HighestWeight& a, const HighestWeight& b) {
    return a.entries == b.entries;
  }
  friend bool operator<(const HighestWeight& a, const HighestWeight& b) {
    return a.entries < b.entries;
  }
};

HighestWeight validate_highest_weight(std::vector<std::int64_t> entries);

/// Infinitesimal character: a multiset of rationals, stored sorted
/// descending. Equality is equality as multisets.
struct InfinitesimalCharacter {
  RationalVec entries;  // sorted descending

  friend bool operator==(const InfinitesimalCharacter& a, const InfinitesimalCharacter& b) {
    return a.entries == b.entries;
  }
};

InfinitesimalCharacter make_infinitesimal_character(RationalVec entries);

/// Sparse monomial expansion: exponent vector -> coefficient.
using SchurPolynomial = std::map<std::vector<std::int64_t>, std::int64_t>;

/// rho_N = ((N-1)/2, (N-3)/2, ..., (1-N)/2).
RationalVec rho(int N);

/// x + rho_N, strictly decreasing because x is weakly decreasing.
InfinitesimalCharacter infl_char(const HighestWeight& x);

/// Branching multiplicity for U(n) down to U(n-1), values in {0,1}.
/// Computed twice (interlacing of highest weights, and the strict
/// interleaving pattern of the shifted characters) and asserted equal.
int weyl_mult(const HighestWeight& x, const HighestWeight& y);

/// Monomial expansion of the Schur polynomial s_x in N variables via
/// semistandard-tableaux enumeration. Entries of x must be nonnegative.
SchurPolynomial schur_expand(const HighestWeight& x, int N);

/// Ground-truth branching: decompose s_x(z_1..z_{n-1}, t) into
/// sum_y m_y s_y(z) t^{|x|-|y|} by iterated leading-monomial elimination,
/// grading by the t-exponent. Never consults the interlacing rule.
/// Negative entries are handled by shifting and unshifting.
std::map<HighestWeight, std::int64_t> branch_oracle(const HighestWeight& x);

/// Weyl dimension prod_{i<j} (x_i - x_j + j - i)/(j - i); shift-invariant.
std::int64_t weyl_dim(const HighestWeight& x, int N);

/// schur_expand and branch_oracle refuse inputs above this dimension.
constexpr std::int64_t kDimensionCap = 100000;

}  // namespace symbreak::weyl
