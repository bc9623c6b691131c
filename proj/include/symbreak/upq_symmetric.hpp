#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symbreak/gl_symmetric.hpp"
#include "symbreak/pattern.hpp"
#include "symbreak/rational.hpp"
#include "symbreak/translation.hpp"
#include "symbreak/verdict.hpp"
#include "symbreak/weyl.hpp"

namespace symbreak::upqsym {

/// Block data kappa = ((r_j), (s_j), M) of a theta-stable parabolic:
/// 0 <= r_1 < ... < r_{M-1} < r_M = r and 0 < s_1 < ... < s_{M-1} <= s_M = s.
/// r_1 = 0 encodes an empty leading x-block and s_{M-1} = s_M an empty
/// trailing y-block, so M ranges up to min(r,s)+1.
struct ThetaData {
  int M = 1;
  std::vector<int> r_list;
  std::vector<int> s_list;

  int r() const { return r_list.empty() ? 0 : r_list.back(); }
  int s() const { return s_list.empty() ? 0 : s_list.back(); }

  friend bool operator==(const ThetaData& a, const ThetaData& b) {
    return a.M == b.M && a.r_list == b.r_list && a.s_list == b.s_list;
  }
  std::string str() const;
};

ThetaData validate_theta(ThetaData k);

/// min(p1,p2) + min(q1,q2) == min(p1+q1, p2+q2).
bool rank_condition(int p1, int q1, int p2, int q2);

ThetaData kappa_from_pattern(const patterns::InterleavingPattern& D);
patterns::InterleavingPattern pattern_from_kappa(const ThetaData& kappa);

/// Fixed (p,q,r,s) with a chosen pattern; Q = (p+q-1)/2 - r - s.
struct UpqSymContext {
  int p = 0, q = 0, r = 0, s = 0;
  patterns::InterleavingPattern D;
  Rational Q;
};

UpqSymContext make_context(int p, int q, int r, int s, patterns::InterleavingPattern D);

/// Lattice offset of the lambda parameters: Z + (p+q-1)/2.
Rational upq_lattice(int p, int q);

/// (x_1..x_r, 0^{p-2r}, -x_r..-x_1; y_1..y_s, 0^{q-2s}, -y_s..-y_1).
RationalVec z_vector(const UpqSymContext& ctx, const RationalVec& x, const RationalVec& y);

/// ell_i(D) = #{x_k above x_i} - #{y_k above x_i} for i <= r, and
/// ell_{r+i}(D) = #{x_k above y_i} - #{y_k above y_i}.
std::vector<std::int64_t> ell_values(const patterns::InterleavingPattern& D);

/// K-type highest weight for U(p) x U(q): antisymmetric in each factor.
struct MinKType {
  int p = 0, q = 0;
  RationalVec entries;  // length p+q

  friend bool operator==(const MinKType& a, const MinKType& b) {
    return a.p == b.p && a.q == b.q && a.entries == b.entries;
  }
};

/// Minimal K-type in good range (lambda in D_{>Q}); RangeError outside,
/// where no formula is guaranteed.
MinKType min_ktype_upq(const UpqSymContext& ctx, const patterns::ParamPoint& lambda);

/// Nonzero slots of the z-vector joined with the string (Q, Q-1, ..., -Q);
/// the string is empty when Q = -1/2.
weyl::InfinitesimalCharacter infl_char_upq(const UpqSymContext& ctx,
                                           const patterns::ParamPoint& lambda);

/// satisfies(D, lambda) and every coordinate strictly above A.
bool in_D_gtA(const patterns::InterleavingPattern& D, const patterns::ParamPoint& lambda,
              const Rational& A);

struct DiscEntry {
  patterns::InterleavingPattern D;
  patterns::ParamPoint lambda;
  bool good_range = false;  // in D_{>Q}; outside, the representation may vanish
};

/// All (D, lambda) with lambda in D_{>0} on the lattice and entries <= bound.
std::vector<DiscEntry> disc_upq_sym_enumerate(int p, int q, int r, int s,
                                              const Rational& bound);

/// x_i = xi_i + 1/2 and y_i = eta_i - 1/2 coordinatewise.
bool seed_250128(const patterns::ParamPoint& lambda, const patterns::ParamPoint& nu);

/// The merged chain x_1 > xi_1 > ... > eta_j > y_j > ... of the
/// multiplicity-one theorem, generated from kappa block by block.
RationalVec merged_chain_values(const ThetaData& kappa, const patterns::ParamPoint& lambda,
                                const patterns::ParamPoint& nu);

/// One when D = D', lambda in D_{>Q} on its lattice, nu in D_{>Q'} on its
/// lattice (Q' = Q - 1/2), and the merged chain strictly decreases; Unknown
/// otherwise. ctx' must be the (p-1, q) context with the same (r, s).
translation::Verdict upq_sym_multiplicity(const UpqSymContext& ctx,
                                          const UpqSymContext& ctx_prime,
                                          const patterns::ParamPoint& lambda,
                                          const patterns::ParamPoint& nu);

/// Highest-weight-vector containment for (O(n), O(n-1)): componentwise
/// equality of the labels.
bool period_criterion(const glsym::WeylOLabel& mu, const glsym::WeylOLabel& mu_prime);

/// Highest-weight-vector containment for (U(p) x U(q), U(p-1) x U(q)):
/// the q-sides agree and the (p-1)-side equals the p-side with one zero
/// slot removed. The multiplicity-one assumption is automatic for these
/// pairs and is not re-checked.
bool period_criterion(const MinKType& mu, const MinKType& mu_prime);

/// Rank-one transport beyond the symmetric-space family: characters
/// (x1, x2) of the rank-one Levi with x1, -x2 > xi > 0 on the half-shifted
/// lattices give a non-vanishing verdict, One by multiplicity-freeness.
translation::Verdict stiefel_transport(int p, int q, const Rational& x1, const Rational& x2,
                                       const Rational& xi);

}  // namespace symbreak::upqsym
