#include "symbreak/upq_symmetric.hpp"

#include <algorithm>
#include <functional>

#include "symbreak/errors.hpp"

namespace symbreak::upqsym {

using patterns::InterleavingPattern;
using patterns::Label;
using patterns::ParamPoint;
using translation::Multiplicity;
using translation::TheoremTag;
using translation::Verdict;

std::string ThetaData::str() const {
  auto list = [](const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(v[i]);
    }
    return out + ")";
  };
  return "{" + list(r_list) + "," + list(s_list) + "," + std::to_string(M) + "}";
}

ThetaData validate_theta(ThetaData k) {
  if (k.M < 1) throw DomainError("theta data: M must be >= 1");
  if (static_cast<int>(k.r_list.size()) != k.M || static_cast<int>(k.s_list.size()) != k.M)
    throw ShapeError("theta data: lists must have length M");
  for (int j = 0; j + 1 < k.M; ++j) {
    if (!(k.r_list[j] < k.r_list[j + 1]))
      throw DomainError("theta data: r-list must be strictly increasing");
    if (!(k.s_list[j] <= k.s_list[j + 1]) || (j + 2 < k.M && k.s_list[j] >= k.s_list[j + 1]))
      throw DomainError("theta data: s-list must increase (equality allowed only at the end)");
  }
  if (k.r_list[0] < 0) throw DomainError("theta data: r_1 must be >= 0");
  // s_1 > 0, except in the degenerate s = 0 case where the single y-block is
  // necessarily empty.
  if (k.s_list[0] < 1 && !(k.M == 1 && k.s() == 0))
    throw DomainError("theta data: s_1 must be > 0");
  return k;
}

bool rank_condition(int p1, int q1, int p2, int q2) {
  if (p1 < 0 || q1 < 0 || p2 < 0 || q2 < 0) throw ShapeError("rank_condition: negative input");
  return std::min(p1, p2) + std::min(q1, q2) == std::min(p1 + q1, p2 + q2);
}

ThetaData kappa_from_pattern(const InterleavingPattern& D) {
  if (!D.is_strict()) throw DomainError("kappa_from_pattern requires a strict pattern");
  // Alternating maximal runs: a possibly-empty leading x-run, then y-run,
  // x-run, ..., ending with a possibly-empty y-run.
  ThetaData k;
  k.r_list.clear();
  k.s_list.clear();
  int seen_x = 0, seen_y = 0;
  std::size_t pos = 0;
  while (pos < D.word.size() || k.r_list.empty()) {
    while (pos < D.word.size() && D.word[pos].is_x) {
      ++seen_x;
      ++pos;
    }
    k.r_list.push_back(seen_x);
    while (pos < D.word.size() && !D.word[pos].is_x) {
      ++seen_y;
      ++pos;
    }
    k.s_list.push_back(seen_y);
  }
  k.M = static_cast<int>(k.r_list.size());
  return validate_theta(std::move(k));
}

InterleavingPattern pattern_from_kappa(const ThetaData& kappa0) {
  const ThetaData kappa = validate_theta(kappa0);
  std::vector<Label> word;
  int x_done = 0, y_done = 0;
  for (int j = 0; j < kappa.M; ++j) {
    for (int i = x_done + 1; i <= kappa.r_list[j]; ++i) word.push_back(patterns::X(i));
    x_done = kappa.r_list[j];
    for (int i = y_done + 1; i <= kappa.s_list[j]; ++i) word.push_back(patterns::Y(i));
    y_done = kappa.s_list[j];
  }
  return patterns::strict_pattern(kappa.r(), kappa.s(), std::move(word));
}

Rational upq_lattice(int p, int q) { return Rational(p + q - 1, 2); }

UpqSymContext make_context(int p, int q, int r, int s, InterleavingPattern D) {
  if (p < 1 || q < 0 || r < 0 || s < 0 || 2 * r > p || 2 * s > q)
    throw ShapeError("upq context: need 0 <= 2r <= p and 0 <= 2s <= q");
  if (D.n != r || D.m != s) throw ShapeError("upq context: pattern shape is not (r,s)");
  if (!D.is_strict()) throw DomainError("upq context: pattern must be strict");
  UpqSymContext ctx;
  ctx.p = p;
  ctx.q = q;
  ctx.r = r;
  ctx.s = s;
  ctx.D = std::move(D);
  ctx.Q = Rational(p + q - 1, 2) - Rational(r + s);
  return ctx;
}

RationalVec z_vector(const UpqSymContext& ctx, const RationalVec& x, const RationalVec& y) {
  if (static_cast<int>(x.size()) != ctx.r || static_cast<int>(y.size()) != ctx.s)
    throw ShapeError("z_vector: (x, y) must have shape (r, s)");
  for (const auto& v : x)
    if (!(v > Rational(0))) throw DomainError("z_vector: x entries must be positive");
  for (const auto& v : y)
    if (!(v > Rational(0))) throw DomainError("z_vector: y entries must be positive");
  if (!strictly_decreasing(x) || !strictly_decreasing(y))
    throw DomainError("z_vector: chains must be strictly decreasing");
  for (const auto& a : x)
    for (const auto& b : y)
      if (a == b) throw DomainError("z_vector: x_i = y_j is excluded");

  RationalVec z;
  z.reserve(ctx.p + ctx.q);
  for (const auto& v : x) z.push_back(v);
  for (int i = 0; i < ctx.p - 2 * ctx.r; ++i) z.push_back(Rational(0));
  for (auto it = x.rbegin(); it != x.rend(); ++it) z.push_back(-*it);
  for (const auto& v : y) z.push_back(v);
  for (int i = 0; i < ctx.q - 2 * ctx.s; ++i) z.push_back(Rational(0));
  for (auto it = y.rbegin(); it != y.rend(); ++it) z.push_back(-*it);
  return z;
}

std::vector<std::int64_t> ell_values(const InterleavingPattern& D) {
  if (!D.is_strict()) throw DomainError("ell_values requires a strict pattern");
  const int r = D.n, s = D.m;
  std::vector<std::int64_t> out(r + s, 0);
  auto counts_above = [&](const Label& l) {
    std::int64_t xs = 0, ys = 0;
    for (const Label& w : D.word) {
      if (w == l) break;
      (w.is_x ? xs : ys) += 1;
    }
    return std::pair<std::int64_t, std::int64_t>{xs, ys};
  };
  for (int i = 1; i <= r; ++i) {
    const auto [xs, ys] = counts_above(patterns::X(i));
    out[i - 1] = xs - ys;
  }
  for (int j = 1; j <= s; ++j) {
    const auto [xs, ys] = counts_above(patterns::Y(j));
    out[r + j - 1] = xs - ys;
  }
  return out;
}

bool in_D_gtA(const InterleavingPattern& D, const ParamPoint& lambda, const Rational& A) {
  if (!patterns::satisfies(D, lambda)) return false;
  for (const auto& v : lambda.x)
    if (!(v > A)) return false;
  for (const auto& v : lambda.y)
    if (!(v > A)) return false;
  return true;
}

MinKType min_ktype_upq(const UpqSymContext& ctx, const ParamPoint& lambda) {
  if (static_cast<int>(lambda.x.size()) != ctx.r || static_cast<int>(lambda.y.size()) != ctx.s)
    throw ShapeError("min_ktype_upq: lambda must have shape (r,s)");
  if (!in_D_gtA(ctx.D, lambda, ctx.Q))
    throw RangeError("min_ktype_upq: lambda outside D_{>Q}; no K-type formula there");
  const std::vector<std::int64_t> ell = ell_values(ctx.D);
  MinKType mu;
  mu.p = ctx.p;
  mu.q = ctx.q;
  mu.entries.assign(ctx.p + ctx.q, Rational(0));
  for (int i = 1; i <= ctx.r; ++i) {
    const Rational v = lambda.x[i - 1] + Rational(-ctx.p + ctx.q + 1, 2) + Rational(ell[i - 1]);
    mu.entries[i - 1] = v;
    mu.entries[ctx.p - i] = -v;
  }
  for (int i = 1; i <= ctx.s; ++i) {
    const Rational v =
        lambda.y[i - 1] + Rational(ctx.p - ctx.q + 1, 2) - Rational(ell[ctx.r + i - 1]);
    mu.entries[ctx.p + i - 1] = v;
    mu.entries[ctx.p + ctx.q - i] = -v;
  }
  return mu;
}

weyl::InfinitesimalCharacter infl_char_upq(const UpqSymContext& ctx, const ParamPoint& lambda) {
  const RationalVec z = z_vector(ctx, lambda.x, lambda.y);
  RationalVec entries;
  // The 2r + 2s nonzero slots of the z-vector, joined with the string
  // (Q, Q-1, ..., -Q); the string is empty when Q = -1/2.
  for (const auto& v : z)
    if (v != Rational(0)) entries.push_back(v);
  for (Rational t = ctx.Q; t >= -ctx.Q; t -= Rational(1)) entries.push_back(t);
  return weyl::make_infinitesimal_character(std::move(entries));
}

std::vector<DiscEntry> disc_upq_sym_enumerate(int p, int q, int r, int s,
                                              const Rational& bound) {
  if (2 * r > p || 2 * s > q || r < 0 || s < 0)
    throw ShapeError("disc enumeration: need 0 <= 2r <= p and 0 <= 2s <= q");
  const Rational offset = upq_lattice(p, q);
  // Positive lattice values up to the bound, descending.
  RationalVec values;
  for (Rational v = offset + Rational((bound - offset).floor()); v > Rational(0);
       v -= Rational(1))
    values.push_back(v);

  std::vector<DiscEntry> out;
  const Rational Q = Rational(p + q - 1, 2) - Rational(r + s);
  for (const InterleavingPattern& D : patterns::enumerate_strict(r, s)) {
    // Choose r+s distinct values and assign them along the word.
    std::vector<int> idx(r + s, 0);
    std::function<void(int, int)> rec = [&](int slot, int from) {
      if (slot == r + s) {
        ParamPoint lam;
        lam.x.resize(r);
        lam.y.resize(s);
        for (int t = 0; t < r + s; ++t) {
          const Label& l = D.word[t];
          (l.is_x ? lam.x[l.index - 1] : lam.y[l.index - 1]) = values[idx[t]];
        }
        out.push_back(DiscEntry{D, lam, in_D_gtA(D, lam, Q)});
        return;
      }
      for (int v = from; v < static_cast<int>(values.size()); ++v) {
        idx[slot] = v;
        rec(slot + 1, v + 1);
      }
    };
    if (static_cast<int>(values.size()) >= r + s) rec(0, 0);
  }
  return out;
}

bool seed_250128(const ParamPoint& lambda, const ParamPoint& nu) {
  if (lambda.x.size() != nu.x.size() || lambda.y.size() != nu.y.size())
    throw ShapeError("seed_250128: shapes differ");
  for (std::size_t i = 0; i < lambda.x.size(); ++i)
    if (lambda.x[i] != nu.x[i] + Rational(1, 2)) return false;
  for (std::size_t i = 0; i < lambda.y.size(); ++i)
    if (lambda.y[i] != nu.y[i] - Rational(1, 2)) return false;
  return true;
}

RationalVec merged_chain_values(const ThetaData& kappa, const ParamPoint& lambda,
                                const ParamPoint& nu) {
  const int r = kappa.r(), s = kappa.s();
  if (static_cast<int>(lambda.x.size()) != r || static_cast<int>(nu.x.size()) != r ||
      static_cast<int>(lambda.y.size()) != s || static_cast<int>(nu.y.size()) != s)
    throw ShapeError("merged_chain_values: shapes do not match kappa");
  RationalVec chain;
  int x_done = 0, y_done = 0;
  for (int j = 0; j < kappa.M; ++j) {
    for (int i = x_done + 1; i <= kappa.r_list[j]; ++i) {
      chain.push_back(lambda.x[i - 1]);  // x_i
      chain.push_back(nu.x[i - 1]);      // xi_i
    }
    x_done = kappa.r_list[j];
    for (int i = y_done + 1; i <= kappa.s_list[j]; ++i) {
      chain.push_back(nu.y[i - 1]);      // eta_i
      chain.push_back(lambda.y[i - 1]);  // y_i
    }
    y_done = kappa.s_list[j];
  }
  return chain;
}

Verdict upq_sym_multiplicity(const UpqSymContext& ctx, const UpqSymContext& ctx_prime,
                             const ParamPoint& lambda, const ParamPoint& nu) {
  if (ctx_prime.p != ctx.p - 1 || ctx_prime.q != ctx.q)
    throw DomainError("upq_sym_multiplicity: contexts must be (p,q) and (p-1,q)");
  if (ctx_prime.r != ctx.r || ctx_prime.s != ctx.s)
    throw DomainError("upq_sym_multiplicity: contexts must share (r,s)");
  if (static_cast<int>(lambda.x.size()) != ctx.r || static_cast<int>(lambda.y.size()) != ctx.s ||
      static_cast<int>(nu.x.size()) != ctx.r || static_cast<int>(nu.y.size()) != ctx.s)
    throw ShapeError("upq_sym_multiplicity: parameter shapes must be (r,s)");

  if (!(ctx.D == ctx_prime.D)) return translation::unknown_verdict();

  const Rational Q = ctx.Q;
  const Rational Qp = Q - Rational(1, 2);
  RationalVec lam_all = lambda.x;
  lam_all.insert(lam_all.end(), lambda.y.begin(), lambda.y.end());
  RationalVec nu_all = nu.x;
  nu_all.insert(nu_all.end(), nu.y.begin(), nu.y.end());
  if (!on_lattice(lam_all, upq_lattice(ctx.p, ctx.q))) return translation::unknown_verdict();
  if (!on_lattice(nu_all, upq_lattice(ctx.p - 1, ctx.q))) return translation::unknown_verdict();
  if (!in_D_gtA(ctx.D, lambda, Q)) return translation::unknown_verdict();
  if (!in_D_gtA(ctx_prime.D, nu, Qp)) return translation::unknown_verdict();

  const ThetaData kappa = kappa_from_pattern(ctx.D);
  const RationalVec chain = merged_chain_values(kappa, lambda, nu);
  if (!strictly_decreasing(chain)) return translation::unknown_verdict();

  return translation::make_verdict(
      Multiplicity::One, TheoremTag::Thm8_5_UpqSym,
      "D = D' = " + patterns::to_text(ctx.D) + ", kappa = " + kappa.str());
}

bool period_criterion(const glsym::WeylOLabel& mu, const glsym::WeylOLabel& mu_prime) {
  if (mu_prime.N != mu.N - 1)
    throw UnsupportedError("period_criterion: labels must be for O(n) and O(n-1)");
  // Containment of the highest weight vector reduces to equality of the
  // nonzero parts.
  std::vector<std::int64_t> a(mu.entries.begin(), mu.entries.begin() + mu.k);
  std::vector<std::int64_t> b(mu_prime.entries.begin(), mu_prime.entries.begin() + mu_prime.k);
  if (mu.type != glsym::WeylOLabel::Type::I || mu_prime.type != glsym::WeylOLabel::Type::I)
    throw UnsupportedError("period_criterion: only Type I labels arise here");
  return a == b;
}

bool period_criterion(const MinKType& mu, const MinKType& mu_prime) {
  if (mu_prime.p != mu.p - 1 || mu_prime.q != mu.q)
    throw UnsupportedError("period_criterion: K-types must be for (p,q) and (p-1,q)");
  // q-sides must agree ...
  for (int i = 0; i < mu.q; ++i)
    if (mu.entries[mu.p + i] != mu_prime.entries[mu_prime.p + i]) return false;
  // ... and the (p-1)-side must be the p-side with one zero slot removed.
  RationalVec p_side(mu.entries.begin(), mu.entries.begin() + mu.p);
  auto zero_it = std::find(p_side.begin(), p_side.end(), Rational(0));
  if (zero_it == p_side.end()) return false;
  p_side.erase(zero_it);
  return std::equal(p_side.begin(), p_side.end(), mu_prime.entries.begin(),
                    mu_prime.entries.begin() + mu_prime.p);
}

Verdict stiefel_transport(int p, int q, const Rational& x1, const Rational& x2,
                          const Rational& xi) {
  if (p < 2 || q < 0) throw ShapeError("stiefel_transport: need p >= 2");
  if (!(x1 - upq_lattice(p, q)).is_integer() || !(x2 - upq_lattice(p, q)).is_integer())
    throw DomainError("stiefel_transport: (x1, x2) off the Z + (p+q-1)/2 lattice");
  if (!(xi - upq_lattice(p - 1, q)).is_integer())
    throw DomainError("stiefel_transport: xi off the Z + (p+q-2)/2 lattice");
  if (!(xi > Rational(0))) throw DomainError("stiefel_transport: need xi > 0");
  if (x1 > xi && -x2 > xi)
    return translation::make_verdict(
        Multiplicity::One, TheoremTag::Stiefel,
        "x1, -x2 > xi with (x1,x2)=(" + x1.str() + "," + x2.str() + "), xi=" + xi.str());
  return translation::unknown_verdict();
}

}  // namespace symbreak::upqsym
