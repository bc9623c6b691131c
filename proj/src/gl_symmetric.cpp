#include "symbreak/gl_symmetric.hpp"

#include <algorithm>

#include "symbreak/errors.hpp"
#include "symbreak/pattern.hpp"

namespace symbreak::glsym {

using translation::Multiplicity;
using translation::TheoremTag;
using translation::Verdict;

namespace {

bool positive_strict_chain(const std::vector<std::int64_t>& v) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] <= v[i + 1]) return false;
  return v.empty() || v.back() > 0;
}

bool all_odd(const std::vector<std::int64_t>& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t e) { return e % 2 != 0; });
}

}  // namespace

WeylOLabel validate_weyl_o(const std::vector<std::int64_t>& entries) {
  const int N = static_cast<int>(entries.size());
  WeylOLabel out;
  out.N = N;
  out.entries = entries;

  auto head_ok = [&](int k) {
    for (int i = 0; i < k; ++i) {
      if (entries[i] <= 0) return false;
      if (i + 1 < k && entries[i] < entries[i + 1]) return false;
    }
    return true;
  };
  auto block_is = [&](int from, int count, std::int64_t value) {
    for (int i = from; i < from + count; ++i)
      if (entries[i] != value) return false;
    return true;
  };

  // Type I: (head of k positive entries, 0^{N-k}) with 2k <= N.
  int k = 0;
  while (k < N && entries[k] > 0) ++k;
  if (2 * k <= N && head_ok(k) && block_is(k, N - k, 0)) {
    out.type = WeylOLabel::Type::I;
    out.k = k;
    return out;
  }

  // Type II: (head of k positive entries, 1^{N-2k}, 0^k). The count of
  // trailing zeros determines k; the middle ones block must be nonempty.
  int zeros = 0;
  while (zeros < N && entries[N - 1 - zeros] == 0) ++zeros;
  const int k2 = zeros;
  const int mid = N - 2 * k2;
  if (mid >= 1 && head_ok(k2) && block_is(k2, mid, 1)) {
    out.type = WeylOLabel::Type::II;
    out.k = k2;
    return out;
  }
  throw DomainError("not a Weyl O(N) label: " +
                    vec_str(RationalVec(entries.begin(), entries.end())));
}

PiEllParam validate_pi_ell(int n, int ell, std::vector<std::int64_t> lambda) {
  if (n < 1 || ell < 0 || 2 * ell > n) throw ShapeError("pi_ell: need 0 <= 2*ell <= n");
  if (static_cast<int>(lambda.size()) != ell)
    throw ShapeError("pi_ell: lambda must have ell entries");
  if (!positive_strict_chain(lambda))
    throw DomainError("pi_ell: lambda must be strictly decreasing and positive");
  return PiEllParam{n, ell, std::move(lambda)};
}

weyl::InfinitesimalCharacter infl_char_pi_ell(const PiEllParam& p) {
  RationalVec out;
  for (std::int64_t l : p.lambda) out.push_back(Rational(l, 2));
  for (int t = p.n - 2 * p.ell - 1; t >= 1 + 2 * p.ell - p.n; t -= 2)
    out.push_back(Rational(t, 2));
  for (auto it = p.lambda.rbegin(); it != p.lambda.rend(); ++it)
    out.push_back(Rational(-*it, 2));
  return weyl::make_infinitesimal_character(std::move(out));
}

MinKTypeO min_ktype_pi_ell(const PiEllParam& p) {
  std::vector<std::int64_t> entries;
  for (std::int64_t l : p.lambda) entries.push_back(l + 1);
  entries.resize(p.n, 0);
  return MinKTypeO{validate_weyl_o(entries), p.n == 2 * p.ell};
}

bool good_range(int n, int ell, const std::vector<std::int64_t>& lambda) {
  if (static_cast<int>(lambda.size()) != ell) throw ShapeError("good_range: bad lambda length");
  for (int i = 0; i + 1 < ell; ++i)
    if (lambda[i] <= lambda[i + 1]) return false;
  return ell == 0 || lambda[ell - 1] > std::max<std::int64_t>(n - 2 * ell - 1, 0);
}

bool sgood(int n, int ell, int k, const std::vector<std::int64_t>& lambda) {
  if (static_cast<int>(lambda.size()) != ell) throw ShapeError("sgood: bad lambda length");
  for (int i = 0; i + 1 < ell; ++i)
    if (lambda[i] <= lambda[i + 1]) return false;
  const std::int64_t bound =
      std::max<std::int64_t>({static_cast<std::int64_t>(n - 2 * ell - 1),
                              static_cast<std::int64_t>(n - 2 * k - 3), 0});
  return ell == 0 || lambda[ell - 1] > bound;
}

bool nugood(int n, int k, const std::vector<std::int64_t>& nu) {
  if (static_cast<int>(nu.size()) != k) throw ShapeError("nugood: bad nu length");
  for (int i = 0; i + 1 < k; ++i)
    if (nu[i] <= nu[i + 1]) return false;
  return k == 0 || nu[k - 1] > std::max<std::int64_t>(0, n - 2 * k - 2);
}

bool disc_gh_gl_validate(int p, int q, const std::vector<std::int64_t>& lambda) {
  const int ell = std::min(p, q);
  if (static_cast<int>(lambda.size()) != ell) return false;
  return all_odd(lambda) && positive_strict_chain(lambda);
}

bool disc_compact_validate(int p, int q, const std::vector<std::int64_t>& mu) {
  const int ell = std::min(p, q);
  if (static_cast<int>(mu.size()) != p + q) return false;
  for (int i = ell; i < p + q; ++i)
    if (mu[i] != 0) return false;
  for (int i = 0; i < ell; ++i) {
    if (mu[i] < 0 || mu[i] % 2 != 0) return false;
    if (i + 1 < ell && mu[i] < mu[i + 1]) return false;
  }
  return true;
}

bool gl_seed_condition(const std::vector<std::int64_t>& lambda,
                       const std::vector<std::int64_t>& nu) {
  if (lambda.size() != nu.size()) throw ShapeError("gl_seed_condition: length mismatch");
  if (lambda != nu) return false;
  return positive_strict_chain(lambda);
}

translation::Verdict gl_multiplicity(int n, int ell, const std::vector<std::int64_t>& lambda,
                                     const std::vector<std::int64_t>& nu) {
  if (2 * ell >= n) throw DomainError("gl_multiplicity: need 2*ell < n");
  if (static_cast<int>(lambda.size()) != ell || static_cast<int>(nu.size()) != ell)
    throw ShapeError("gl_multiplicity: parameters must have ell entries");

  const std::int64_t threshold = n - 2 * ell - 1;
  auto in_region = [&](const std::vector<std::int64_t>& v) {
    if (!all_odd(v)) return false;
    for (int i = 0; i + 1 < ell; ++i)
      if (v[i] <= v[i + 1]) return false;
    return ell == 0 || v[ell - 1] > threshold;
  };
  if (in_region(lambda) && in_region(nu))
    return translation::make_verdict(
        Multiplicity::One, TheoremTag::Thm7_7_GL,
        "odd chains above threshold " + std::to_string(threshold));
  if (gl_seed_condition(lambda, nu) && all_odd(lambda))
    return translation::make_verdict(Multiplicity::One, TheoremTag::Seed_Period,
                                     "equal odd chains (period seed)");
  return translation::unknown_verdict();
}

std::string gl_jump_key(int n, int ell, int k, const std::vector<std::int64_t>& nu) {
  return "GLJump:n=" + std::to_string(n) + ":ell=" + std::to_string(ell) +
         ":k=" + std::to_string(k) + ":nu=" +
         vec_str(RationalVec(nu.begin(), nu.end()));
}

translation::Verdict gl_jump_transport(int n, int ell, int k,
                                       const std::vector<std::int64_t>& nu,
                                       const translation::FactStore& store) {
  if (!all_odd(nu) || !nugood(n, k, nu))
    throw DomainError("gl_jump_transport: nu must be odd and satisfy the nu-range");
  for (const translation::Fact* f : store.lookup(gl_jump_key(n, ell, k, nu), std::nullopt)) {
    std::vector<std::int64_t> lam;
    for (const Rational& r : f->lambda) {
      if (!r.is_integer()) throw DomainError("gl_jump_transport: non-integral seed lambda");
      lam.push_back(r.numerator());
    }
    if (!all_odd(lam) || !sgood(n, ell, k, lam)) continue;
    if (f->verdict.nonzero())
      return translation::make_verdict(Multiplicity::NonZero, TheoremTag::Cor7_6_Jump,
                                       "seed at lambda=" + vec_str(f->lambda));
    if (f->verdict.value == Multiplicity::Zero)
      return translation::make_verdict(Multiplicity::Zero, TheoremTag::Cor7_6_Jump,
                                       "zero seed at lambda=" + vec_str(f->lambda));
  }
  return translation::unknown_verdict();
}

SpehParams validate_speh_shape(SpehParams p) {
  if (p.m < 2) throw ShapeError("speh: need m >= 2");
  if (static_cast<int>(p.lambda.size()) != 2 * p.m)
    throw ShapeError("speh: lambda must have 2m entries");
  if (static_cast<int>(p.nu_prime.size()) != p.m - 1 ||
      static_cast<int>(p.nu_dprime.size()) != p.m - 1)
    throw ShapeError("speh: nu' and nu'' must have m-1 entries");
  if (p.kappa != 0 && p.kappa != 1) throw ShapeError("speh: kappa must be 0 or 1");
  if (p.eps != Rational(0) && p.eps != Rational(1, 2))
    throw ShapeError("speh: eps must be 0 or 1/2");
  return p;
}

std::string speh_failing_clause(const SpehParams& p0) {
  const SpehParams p = validate_speh_shape(p0);
  const int m = p.m;
  if (!on_lattice(p.lambda, p.eps)) return "lambda off the Z+eps lattice";
  if (!strictly_decreasing(p.lambda)) return "lambda not strictly decreasing";
  const Rational half_offset = p.eps + Rational(1, 2);
  if (!on_lattice(p.nu_prime, half_offset) || !on_lattice(p.nu_dprime, half_offset))
    return "nu' or nu'' off the Z+eps+1/2 lattice";
  if (!strictly_decreasing(p.nu_prime) || !strictly_decreasing(p.nu_dprime))
    return "nu' or nu'' not strictly decreasing";
  if (!p.nu_m.is_integer()) return "nu_m not an integer";
  const Rational parity = Rational(p.kappa) + p.nu_m + Rational(2) * p.eps + Rational(m - 1);
  if (!parity.is_integer() || parity.numerator() % 2 != 0)
    return "kappa parity constraint fails";
  if (!(p.nu_prime[m - 2] > p.nu_m && p.nu_m > p.nu_dprime[0]))
    return "nu_{m-1} > nu_m > nu_{m+1} fails";
  if (p.nu_prime[m - 2] - p.nu_dprime[0] == Rational(1))
    return "excluded case nu_{m-1} - nu_{m+1} = 1";

  // Full interleaving with nu_m placed between lambda_m and lambda_{m+1}.
  RationalVec nu = p.nu_prime;
  nu.push_back(p.nu_m);
  nu.insert(nu.end(), p.nu_dprime.begin(), p.nu_dprime.end());
  std::vector<patterns::Label> word;
  for (int i = 1; i < 2 * m; ++i) {
    word.push_back(patterns::X(i));
    word.push_back(patterns::Y(i));
  }
  word.push_back(patterns::X(2 * m));
  const auto full = patterns::strict_pattern(2 * m, 2 * m - 1, std::move(word));
  if (!patterns::satisfies(full, patterns::ParamPoint{p.lambda, nu}))
    return "interleaving display fails";
  return {};
}

translation::Verdict speh_check(const SpehParams& p) {
  const std::string failing = speh_failing_clause(p);
  if (!failing.empty()) return translation::unknown_verdict();
  return translation::make_verdict(Multiplicity::One, TheoremTag::Thm4_1_Speh,
                                   "all hypotheses hold (m=" + std::to_string(p.m) + ")");
}

SpehParams speh_seed(const RationalVec& lambda) {
  if (lambda.size() < 4 || lambda.size() % 2 != 0)
    throw ShapeError("speh_seed: lambda must have 2m entries, m >= 2");
  const int m = static_cast<int>(lambda.size()) / 2;

  Rational eps;
  if (on_lattice(lambda, Rational(0)))
    eps = Rational(0);
  else if (on_lattice(lambda, Rational(1, 2)))
    eps = Rational(1, 2);
  else
    throw DomainError("speh_seed: lambda is not on Z or Z+1/2");
  if (!strictly_decreasing(lambda))
    throw DomainError("speh_seed: lambda must be strictly decreasing");

  SpehParams p;
  p.m = m;
  p.eps = eps;
  p.lambda = lambda;
  for (int i = 1; i <= m - 1; ++i) p.nu_prime.push_back(lambda[i] + Rational(1, 2));
  p.nu_m = lambda[0] + lambda[2 * m - 1];
  for (int i = m + 1; i <= 2 * m - 1; ++i)
    p.nu_dprime.push_back(lambda[i - 1] - Rational(1, 2));

  // Parity fixes kappa; nu_m = lambda_1 + lambda_{2m} is an integer for both
  // lattice offsets.
  const Rational base = p.nu_m + Rational(2) * eps + Rational(m - 1);
  if (!base.is_integer()) throw InternalError("speh_seed: parity base not integral");
  p.kappa = ((base.numerator() % 2) + 2) % 2 == 0 ? 0 : 1;

  const std::string failing = speh_failing_clause(p);
  if (!failing.empty()) throw DomainError("speh_seed: " + failing);
  return p;
}

}  // namespace symbreak::glsym
