#include "symbreak/unitary_ds.hpp"

#include <algorithm>
#include <numeric>

#include "symbreak/errors.hpp"

namespace symbreak::uds {

using patterns::InterleavingPattern;
using patterns::Label;
using patterns::Rel;
using translation::Multiplicity;
using translation::TheoremTag;
using translation::Verdict;

Rational ds_epsilon(int p, int q) { return Rational(p + q - 1, 2); }

HCParam validate_hc(int p, int q, RationalVec entries) {
  if (p < 0 || q < 0 || p + q < 1) throw ShapeError("validate_hc: bad signature");
  if (static_cast<int>(entries.size()) != p + q)
    throw ShapeError("validate_hc: expected " + std::to_string(p + q) + " entries");
  const Rational eps = ds_epsilon(p, q);
  for (const Rational& e : entries)
    if (!(e - eps).is_integer())
      throw DomainError("validate_hc: entry " + e.str() + " is not in Z + " + eps.str());
  RationalVec xs(entries.begin(), entries.begin() + p);
  RationalVec ys(entries.begin() + p, entries.end());
  if (!strictly_decreasing(xs))
    throw DomainError("validate_hc: first chain is not strictly decreasing");
  if (!strictly_decreasing(ys))
    throw DomainError("validate_hc: second chain is not strictly decreasing");
  for (const Rational& a : xs)
    for (const Rational& b : ys)
      if (a == b) throw DomainError("validate_hc: repeated entry " + a.str());
  return HCParam{p, q, std::move(entries)};
}

int ShuffleWord::plus_count() const {
  return static_cast<int>(std::count(word.begin(), word.end(), '+'));
}

ShuffleWord validate_shuffle(int p, int q, std::string word) {
  if (static_cast<int>(word.size()) != p + q)
    throw ShapeError("shuffle word must have length p+q");
  int plus = 0;
  for (char c : word) {
    if (c != '+' && c != '-') throw DomainError("shuffle word over {+,-} only");
    if (c == '+') ++plus;
  }
  if (plus != p) throw DomainError("shuffle word must contain exactly p pluses");
  return ShuffleWord{std::move(word)};
}

std::vector<ShuffleWord> enumerate_shuffles(int p, int q) {
  std::vector<ShuffleWord> out;
  std::string word(p, '+');
  word += std::string(q, '-');
  std::sort(word.begin(), word.end());  // '+' < '-' in ASCII
  do {
    out.push_back(ShuffleWord{word});
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

DSLabel split(const HCParam& lambda) {
  struct Tagged {
    Rational v;
    bool from_x;
  };
  std::vector<Tagged> all;
  for (int i = 0; i < lambda.p + lambda.q; ++i)
    all.push_back(Tagged{lambda.entries[i], i < lambda.p});
  std::stable_sort(all.begin(), all.end(),
                   [](const Tagged& a, const Tagged& b) { return b.v < a.v; });
  DSLabel out;
  out.w.word.reserve(all.size());
  for (const Tagged& t : all) {
    out.lambda_plus.push_back(t.v);
    out.w.word += t.from_x ? '+' : '-';
  }
  return out;
}

HCParam merge(int p, int q, const DSLabel& label) {
  validate_shuffle(p, q, label.w.word);
  if (static_cast<int>(label.lambda_plus.size()) != p + q)
    throw ShapeError("merge: lambda_plus has wrong length");
  RationalVec xs, ys;
  for (int k = 0; k < p + q; ++k)
    (label.w.word[k] == '+' ? xs : ys).push_back(label.lambda_plus[k]);
  RationalVec entries = xs;
  entries.insert(entries.end(), ys.begin(), ys.end());
  return validate_hc(p, q, std::move(entries));
}

std::string ggp_key(const ShuffleWord& w, const ShuffleWord& wp) {
  return "GGP:w=" + w.word + ":w'=" + wp.word;
}

Verdict ggp_transport(const ShuffleWord& w, const ShuffleWord& wp,
                      const InterleavingPattern& D, const translation::FactStore& store,
                      const RationalVec& lambda_plus, const RationalVec& nu_plus) {
  const int N = static_cast<int>(w.word.size());
  if (static_cast<int>(wp.word.size()) != N - 1)
    throw ShapeError("ggp_transport: w' must have length one less than w");
  if (D.n != N || D.m != N - 1)
    throw ShapeError("ggp_transport: pattern shape does not match the pair");
  const int p = w.plus_count();
  const int q = N - p;
  if (!strictly_decreasing(lambda_plus) || !strictly_decreasing(nu_plus))
    throw DomainError("ggp_transport: sorted parameters must be strictly decreasing");
  if (!on_lattice(lambda_plus, ds_epsilon(p, q)))
    throw DomainError("ggp_transport: lambda+ is off the Z_eps lattice");
  if (!on_lattice(nu_plus, ds_epsilon(p - 1, q)))
    throw DomainError("ggp_transport: nu+ is off the Z_eps' lattice");
  if (!patterns::satisfies(D, patterns::ParamPoint{lambda_plus, nu_plus}))
    throw DomainError("ggp_transport: (lambda+, nu+) does not satisfy D");

  for (const translation::Fact* f : store.lookup(ggp_key(w, wp), D)) {
    if (f->verdict.nonzero())
      return translation::make_verdict(
          Multiplicity::NonZero, TheoremTag::Thm3_3_GGP,
          "seed at (" + vec_str(f->lambda) + "; " + vec_str(f->nu) + ") in " +
              patterns::to_text(D));
    if (f->verdict.value == Multiplicity::Zero)
      return translation::make_verdict(
          Multiplicity::Zero, TheoremTag::Thm3_3_GGP,
          "zero seed at (" + vec_str(f->lambda) + "; " + vec_str(f->nu) + ") in " +
              patterns::to_text(D));
  }
  return translation::unknown_verdict();
}

HoloSeed holo_seed(const RationalVec& nu, int p, int q) {
  if (p < 1 || q < 1) throw ShapeError("holo_seed: need p, q >= 1");
  const int np = p + q - 1;
  if (static_cast<int>(nu.size()) != np)
    throw ShapeError("holo_seed: nu must have " + std::to_string(np) + " entries");
  // The q-side values of lambda sit half a step below nu, so nu itself lives
  // on the lattice Z + (p+q-2)/2.
  if (!on_lattice(nu, Rational(p + q - 2, 2)))
    throw DomainError("holo_seed: nu is off the Z + (p+q-2)/2 lattice");
  // Chamber: nu_p > ... > nu_{p+q-1} > nu_1 > ... > nu_{p-1}.
  for (int j = p; j < np; ++j)
    if (!(nu[j - 1] > nu[j])) throw DomainError("holo_seed: chamber violation in the q-chain");
  for (int i = 1; i < p - 1; ++i)
    if (!(nu[i - 1] > nu[i])) throw DomainError("holo_seed: chamber violation in the p-chain");
  if (p >= 2 && q >= 1 && !(nu[np - 1] > nu[0]))
    throw DomainError("holo_seed: chamber violation between the chains");

  RationalVec lambda(p + q);
  for (int j = 1; j <= q; ++j) lambda[p + j - 1] = nu[p + j - 2] - Rational(1, 2);
  if (p >= 2) {
    for (int i = 1; i <= p - 1; ++i) lambda[i - 1] = nu[i - 1] + Rational(1, 2);
    lambda[p - 1] = nu[p - 2] - Rational(1, 2);
  } else {
    lambda[0] = lambda[p + q - 1] - Rational(1);
  }

  // Sorted chains: lambda's q-block sits above its p-block in this chamber.
  RationalVec lambda_sorted(lambda.begin() + p, lambda.end());
  lambda_sorted.insert(lambda_sorted.end(), lambda.begin(), lambda.begin() + p);
  RationalVec nu_sorted(nu.begin() + p - 1, nu.end());
  nu_sorted.insert(nu_sorted.end(), nu.begin(), nu.begin() + p - 1);

  std::vector<Label> word;
  for (int k = 1; k <= q; ++k) {
    word.push_back(patterns::Y(k));
    word.push_back(patterns::X(k));
  }
  word.push_back(patterns::X(q + 1));
  for (int t = 1; t <= p - 1; ++t) {
    word.push_back(patterns::Y(q + t));
    word.push_back(patterns::X(q + 1 + t));
  }
  InterleavingPattern D = patterns::strict_pattern(p + q, np, std::move(word));
  if (!patterns::satisfies(D, patterns::ParamPoint{lambda_sorted, nu_sorted}))
    throw DomainError("holo_seed: chamber too tight for the minimal filling");
  return HoloSeed{std::move(lambda), std::move(D), std::move(lambda_sorted),
                  std::move(nu_sorted)};
}

namespace {

InterleavingPattern u21_pattern(const char* text) { return patterns::parse_pattern(text); }

std::vector<U21Case> build_u21_table() {
  std::vector<U21Case> t;
  auto row = [&](int id, const char* delta, const char* dp, const char* pat, bool coherent,
                 std::vector<const char*> limits) {
    U21Case c;
    c.case_id = id;
    c.delta = delta;
    c.delta_prime = dp;
    c.pattern = u21_pattern(pat);
    c.coherent = coherent;
    for (const char* l : limits) c.limit_patterns.push_back(u21_pattern(l));
    t.push_back(std::move(c));
  };
  // Sorted-label form: for delta, the x-chain lists the three Harish-Chandra
  // entries in decreasing order; for delta', the y-chain likewise.
  row(1, "++-", "+-", "x1 > y1 > x2 > x3 > y2", false, {"x1 > y1 > x2 = x3 > y2"});
  row(2, "+-+", "+-", "x1 > y1 > y2 > x2 > x3", true, {"x1 > y1 > y2 > x2 = x3"});
  row(3, "+-+", "+-", "x1 > x2 > x3 > y1 > y2", false,
      {"x1 = x2 > x3 > y1 > y2", "x1 > x2 = x3 > y1 > y2"});
  row(4, "+-+", "-+", "x1 > x2 > y1 > y2 > x3", false, {"x1 = x2 > y1 > y2 > x3"});
  row(5, "+-+", "-+", "y1 > y2 > x1 > x2 > x3", false,
      {"y1 > y2 > x1 = x2 > x3", "y1 > y2 > x1 > x2 = x3"});
  row(6, "-++", "-+", "y1 > x1 > x2 > y2 > x3", false, {"y1 > x1 = x2 > y2 > x3"});
  return t;
}

}  // namespace

const std::vector<U21Case>& u21_table() {
  static const std::vector<U21Case> table = build_u21_table();
  return table;
}

translation::TauInvariantSet u21_tau_invariants(const std::string& delta) {
  translation::TauInvariantSet s;
  if (delta == "++-")
    s.indices.insert(1);
  else if (delta == "-++")
    s.indices.insert(2);
  else if (delta != "+-+")
    throw DomainError("u21: unknown chamber '" + delta + "'");
  return s;
}

Verdict u21_verdict(const std::string& delta, const std::string& delta_prime,
                    const InterleavingPattern& D, bool assume_he_complete) {
  if (D.n != 3 || D.m != 2 || !D.is_strict())
    throw ShapeError("u21_verdict: need a strict (3,2) pattern");
  if (delta_prime != "+-" && delta_prime != "-+")
    throw DomainError("u21: unknown dual chamber '" + delta_prime + "'");
  static const char* kRoman[] = {"", "I", "II", "III", "IV", "V", "VI"};
  for (const U21Case& c : u21_table()) {
    if (c.delta == delta && c.delta_prime == delta_prime && c.pattern == D)
      return translation::make_verdict(
          Multiplicity::NonZero, TheoremTag::Table_He,
          std::string("case ") + kRoman[c.case_id] + " (" + delta + ", " + delta_prime + ")");
  }
  const Verdict vanish = translation::tau_vanish(u21_tau_invariants(delta), D);
  if (vanish.value == Multiplicity::Zero) return vanish;
  if (assume_he_complete)
    return translation::make_verdict(Multiplicity::Zero, TheoremTag::Table_He,
                                     "not listed; classification assumed complete");
  return translation::unknown_verdict();
}

Verdict u21_query(std::int64_t x1, std::int64_t x2, std::int64_t y, const Rational& xi,
                  const Rational& eta, bool assume_he_complete) {
  if (x1 == x2 || x1 == y || x2 == y)
    throw DomainError("u21_query: degenerate parameter (use u21_limit_query)");
  if (x1 < x2) throw DomainError("u21_query: need x1 > x2");
  if (!(xi - Rational(1, 2)).is_integer() || !(eta - Rational(1, 2)).is_integer())
    throw DomainError("u21_query: xi, eta must be half-integers");
  if (xi == eta) throw DomainError("u21_query: degenerate dual parameter");

  const std::string delta = y < x2 ? "++-" : (y > x1 ? "-++" : "+-+");
  const std::string delta_prime = xi > eta ? "+-" : "-+";
  RationalVec lam{Rational(x1), Rational(x2), Rational(y)};
  std::sort(lam.begin(), lam.end(), [](const Rational& a, const Rational& b) { return b < a; });
  RationalVec nu{std::max(xi, eta), std::min(xi, eta)};
  const InterleavingPattern D = patterns::classify(patterns::ParamPoint{lam, nu});
  return u21_verdict(delta, delta_prime, D, assume_he_complete);
}

Verdict u21_limit_query(const InterleavingPattern& weak) {
  if (weak.n != 3 || weak.m != 2)
    throw ShapeError("u21_limit_query: need a (3,2) pattern");
  const int eqs = weak.equality_count();
  if (eqs == 0) throw DomainError("u21_limit_query: no equality (use u21_query)");
  if (eqs > 1) throw DomainError("u21_limit_query: more than one equality");
  for (const U21Case& c : u21_table())
    for (const InterleavingPattern& lp : c.limit_patterns)
      if (lp == weak)
        return translation::make_verdict(Multiplicity::NonZero, TheoremTag::Table_He,
                                         "limit column of case " + std::to_string(c.case_id));
  return translation::unknown_verdict();
}

std::vector<U21AuditRow> u21_audit(bool assume_he_complete) {
  std::vector<U21AuditRow> rows;
  const auto all = patterns::enumerate_strict(3, 2);
  for (const char* delta : {"++-", "+-+", "-++"})
    for (const char* dp : {"+-", "-+"})
      for (const InterleavingPattern& D : all)
        rows.push_back(U21AuditRow{delta, dp, D, u21_verdict(delta, dp, D, assume_he_complete)});
  return rows;
}

}  // namespace symbreak::uds
