#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symbreak/rational.hpp"
#include "symbreak/translation.hpp"
#include "symbreak/verdict.hpp"
#include "symbreak/weyl.hpp"

namespace symbreak::glsym {

/// O(N) label in Weyl's notation: Type I (lambda_1..lambda_k, 0^{N-k}) or
/// Type II (lambda_1..lambda_k, 1^{N-2k}, 0^k), lambda_1 >= ... >= lambda_k > 0.
struct WeylOLabel {
  enum class Type { I, II };
  int N = 0;
  std::vector<std::int64_t> entries;
  Type type = Type::I;
  int k = 0;

  friend bool operator==(const WeylOLabel& a, const WeylOLabel& b) {
    return a.N == b.N && a.entries == b.entries;
  }
};

WeylOLabel validate_weyl_o(const std::vector<std::int64_t>& entries);

/// Parameter of the induced family: 0 <= 2*ell <= n and lambda_1 > ... >
/// lambda_ell > 0 integral.
struct PiEllParam {
  int n = 0;
  int ell = 0;
  std::vector<std::int64_t> lambda;
};

PiEllParam validate_pi_ell(int n, int ell, std::vector<std::int64_t> lambda);

/// (1/2)(lambda_1..lambda_ell, n-2ell-1, n-2ell-3, ..., 1+2ell-n,
/// -lambda_ell..-lambda_1) as a multiset.
weyl::InfinitesimalCharacter infl_char_pi_ell(const PiEllParam& p);

struct MinKTypeO {
  WeylOLabel label;
  bool splits_on_so;  // splits into two SO(n) irreducibles iff n == 2*ell
};

/// Minimal K-type (lambda_1+1, ..., lambda_ell+1, 0...) in Weyl's notation.
MinKTypeO min_ktype_pi_ell(const PiEllParam& p);

/// lambda_ell > max(n - 2*ell - 1, 0), chain strict.
bool good_range(int n, int ell, const std::vector<std::int64_t>& lambda);
/// lambda_ell > max(n-2ell-1, n-2k-3, 0), chain strict.
bool sgood(int n, int ell, int k, const std::vector<std::int64_t>& lambda);
/// nu_k > max(0, n-2k-2), chain strict.
bool nugood(int n, int k, const std::vector<std::int64_t>& nu);

/// lambda in (2Z+1)^ell with lambda_1 > ... > lambda_ell > 0, ell = min(p,q).
bool disc_gh_gl_validate(int p, int q, const std::vector<std::int64_t>& lambda);

/// mu = (mu_1..mu_ell, 0^{max(p,q)}) with even, weakly decreasing,
/// nonnegative entries, ell = min(p,q).
bool disc_compact_validate(int p, int q, const std::vector<std::int64_t>& mu);

/// lambda_i = nu_i for all i with the common chain strictly decreasing and
/// positive (vacuously true for ell = 0).
bool gl_seed_condition(const std::vector<std::int64_t>& lambda,
                       const std::vector<std::int64_t>& nu);

/// One when both parameters are odd, strictly decreasing, and above the
/// threshold n-2ell-1; One via the seed route when lambda = nu is an odd
/// positive chain; Unknown otherwise (no vanishing is asserted outside the
/// region).
translation::Verdict gl_multiplicity(int n, int ell, const std::vector<std::int64_t>& lambda,
                                     const std::vector<std::int64_t>& nu);

/// Key for facts consumed by gl_jump_transport.
std::string gl_jump_key(int n, int ell, int k, const std::vector<std::int64_t>& nu);

/// If the store holds a decided fact for (n, ell, k, nu) at some lambda in
/// the sgood range, the same conclusion holds for every such lambda.
translation::Verdict gl_jump_transport(int n, int ell, int k,
                                       const std::vector<std::int64_t>& nu,
                                       const translation::FactStore& store);

/// Parameters of the branching check for the degenerate family of
/// GL(2m,R) restricted to GL(2m-1,R). eps is the lattice offset, 0 or 1/2.
struct SpehParams {
  int m = 0;
  Rational eps;             // lambda lives on Z + eps
  RationalVec lambda;       // length 2m
  RationalVec nu_prime;     // length m-1
  Rational nu_m;
  RationalVec nu_dprime;    // length m-1
  int kappa = 0;            // sign character exponent, 0 or 1
};

SpehParams validate_speh_shape(SpehParams p);  // shape only; ShapeError on mismatch

/// One iff every hypothesis holds: lattices, chains, nu_{m-1} > nu_m >
/// nu_{m+1}, nu_{m-1} - nu_{m+1} != 1, the parity constraint on kappa, and
/// the full interleaving display (with nu_m between lambda_m and
/// lambda_{m+1}). Unknown otherwise.
translation::Verdict speh_check(const SpehParams& p);

/// Returns the failing hypothesis name, or empty when all hold.
std::string speh_failing_clause(const SpehParams& p);

/// Seed construction: nu_i = lambda_{i+1} + 1/2 below the middle,
/// nu_i = lambda_i - 1/2 above, nu_m = lambda_1 + lambda_{2m}, kappa fixed
/// by parity. DomainError when the result violates the check hypotheses.
SpehParams speh_seed(const RationalVec& lambda);

}  // namespace symbreak::glsym
