#include "symbreak/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <nlohmann/json.hpp>

#include "symbreak/errors.hpp"

namespace symbreak::patterns {

char const* rel_str(Rel r) {
  switch (r) {
    case Rel::Strict: return ">";
    case Rel::WeakGE: return ">=";
    case Rel::Equal: return "=";
  }
  throw InternalError("unreachable relation");
}

bool InterleavingPattern::is_strict() const {
  return std::all_of(rel.begin(), rel.end(), [](Rel r) { return r == Rel::Strict; });
}

int InterleavingPattern::equality_count() const {
  return static_cast<int>(std::count(rel.begin(), rel.end(), Rel::Equal));
}

int InterleavingPattern::position(const Label& l) const {
  for (std::size_t k = 0; k < word.size(); ++k)
    if (word[k] == l) return static_cast<int>(k);
  throw InternalError("label " + l.str() + " not in pattern word");
}

namespace {

void validate_word(int n, int m, const std::vector<Label>& word) {
  if (static_cast<int>(word.size()) != n + m)
    throw ShapeError("pattern word has length " + std::to_string(word.size()) +
                     ", expected " + std::to_string(n + m));
  int next_x = 1, next_y = 1;
  for (const Label& l : word) {
    if (l.is_x) {
      if (l.index != next_x)
        throw DomainError("x-labels out of order at " + l.str());
      ++next_x;
    } else {
      if (l.index != next_y)
        throw DomainError("y-labels out of order at " + l.str());
      ++next_y;
    }
  }
  if (next_x != n + 1 || next_y != m + 1)
    throw DomainError("pattern word does not contain each label exactly once");
}

}  // namespace

InterleavingPattern strict_pattern(int n, int m, std::vector<Label> word) {
  validate_word(n, m, word);
  InterleavingPattern D;
  D.n = n;
  D.m = m;
  D.word = std::move(word);
  D.rel.assign(n + m > 0 ? n + m - 1 : 0, Rel::Strict);
  return D;
}

InterleavingPattern weak_pattern(int n, int m, std::vector<Label> word, std::vector<Rel> rel) {
  validate_word(n, m, word);
  if (static_cast<int>(rel.size()) != std::max(n + m - 1, 0))
    throw ShapeError("relation sequence has wrong length");
  InterleavingPattern D;
  D.n = n;
  D.m = m;
  D.word = std::move(word);
  D.rel = std::move(rel);
  return D;
}

InterleavingPattern classify(const ParamPoint& p) {
  if (!strictly_decreasing(p.x))
    throw DomainError("classify: x is not strictly decreasing");
  if (!weakly_decreasing(p.y))
    throw DomainError("classify: y is not weakly decreasing");
  const int n = static_cast<int>(p.x.size());
  const int m = static_cast<int>(p.y.size());

  // Merge the two descending chains; ties take the x-label first.
  std::vector<Label> word;
  std::vector<Rational> values;
  word.reserve(n + m);
  int i = 0, j = 0;
  while (i < n || j < m) {
    const bool take_x = j >= m || (i < n && p.x[i] >= p.y[j]);
    if (take_x) {
      word.push_back(X(i + 1));
      values.push_back(p.x[i]);
      ++i;
    } else {
      word.push_back(Y(j + 1));
      values.push_back(p.y[j]);
      ++j;
    }
  }
  std::vector<Rel> rel;
  for (int k = 0; k + 1 < n + m; ++k)
    rel.push_back(values[k] == values[k + 1] ? Rel::Equal : Rel::Strict);
  return weak_pattern(n, m, std::move(word), std::move(rel));
}

bool satisfies(const InterleavingPattern& D, const ParamPoint& p) {
  if (static_cast<int>(p.x.size()) != D.n || static_cast<int>(p.y.size()) != D.m)
    throw ShapeError("point shape (" + std::to_string(p.x.size()) + "," +
                     std::to_string(p.y.size()) + ") does not match pattern (" +
                     std::to_string(D.n) + "," + std::to_string(D.m) + ")");
  auto value = [&](const Label& l) -> const Rational& {
    return l.is_x ? p.x[l.index - 1] : p.y[l.index - 1];
  };
  for (std::size_t k = 0; k + 1 < D.word.size(); ++k) {
    const Rational& a = value(D.word[k]);
    const Rational& b = value(D.word[k + 1]);
    switch (D.rel[k]) {
      case Rel::Strict:
        if (!(a > b)) return false;
        break;
      case Rel::WeakGE:
        if (!(a >= b)) return false;
        break;
      case Rel::Equal:
        if (!(a == b)) return false;
        break;
    }
  }
  return true;
}

std::vector<InterleavingPattern> enumerate_strict(int n, int m) {
  if (n < 0 || m < 0) throw ShapeError("enumerate_strict: negative shape");
  std::vector<InterleavingPattern> out;
  // Lexicographic word order with x < y means generating the binary words
  // (0 = x, 1 = y) in increasing numeric order.
  std::vector<int> choice(n + m, 0);
  std::fill(choice.begin() + n, choice.end(), 1);  // smallest word: all x first
  std::sort(choice.begin(), choice.end());
  do {
    std::vector<Label> word;
    int xi = 1, yj = 1;
    for (int c : choice) word.push_back(c == 0 ? X(xi++) : Y(yj++));
    out.push_back(strict_pattern(n, m, std::move(word)));
  } while (std::next_permutation(choice.begin(), choice.end()));
  return out;
}

std::vector<Fence> fences(const InterleavingPattern& D) {
  if (!D.is_strict())
    throw DomainError("fences are defined for strict patterns only");
  std::vector<Fence> out;
  for (std::size_t k = 0; k + 1 < D.word.size(); ++k) {
    const Label& a = D.word[k];
    const Label& b = D.word[k + 1];
    if (a.is_x != b.is_x) {
      const Label& x = a.is_x ? a : b;
      const Label& y = a.is_x ? b : a;
      out.push_back(Fence{x.index, y.index});
    }
  }
  return out;
}

int m_of(const InterleavingPattern& D) {
  if (!D.is_strict()) throw DomainError("m_of requires a strict pattern");
  if (D.m == 0) return D.n;
  int last_x_above = 0;
  for (const Label& l : D.word) {
    if (!l.is_x && l.index == 1) break;
    if (l.is_x) last_x_above = l.index;
  }
  return last_x_above;
}

bool adjacent_string(const InterleavingPattern& D, int i) {
  if (!D.is_strict()) throw DomainError("adjacent_string requires a strict pattern");
  if (i < 1 || i >= D.n)
    throw ShapeError("adjacent_string: index " + std::to_string(i) + " out of range");
  const int p = D.position(X(i));
  return p + 1 < static_cast<int>(D.word.size()) && D.word[p + 1] == X(i + 1);
}

namespace {

// Smallest element of base + Z strictly greater than bound.
Rational lattice_above(const Rational& base, const Rational& bound) {
  return base + Rational((bound - base).floor() + 1);
}

// Largest element of base + Z strictly smaller than bound.
Rational lattice_below(const Rational& base, const Rational& bound) {
  return base + Rational((bound - base).ceil() - 1);
}

}  // namespace

RationalVec extremal_mu(const InterleavingPattern& D, const RationalVec& nu,
                        const RationalVec& xi) {
  if (!D.is_strict()) throw DomainError("extremal_mu requires a strict pattern");
  if (!satisfies(D, ParamPoint{xi, nu}))
    throw DomainError("extremal_mu: (xi, nu) does not satisfy D");
  const int n = D.n;
  const int mD = m_of(D);
  RationalVec mu = xi;
  std::vector<bool> fixed(n, false);

  auto neighbor_value = [&](int word_pos) -> Rational {
    const Label& l = D.word[word_pos];
    if (!l.is_x) return nu[l.index - 1];
    if (!fixed[l.index - 1])
      throw InternalError("extremal_mu: neighbor x" + std::to_string(l.index) +
                          " not yet fixed");
    return mu[l.index - 1];
  };

  // i <= m(D): pack downward against the lower neighbor, innermost first.
  for (int i = mD; i >= 1; --i) {
    const int pos = D.position(X(i));
    if (pos + 1 < static_cast<int>(D.word.size()))
      mu[i - 1] = lattice_above(xi[i - 1], neighbor_value(pos + 1));
    fixed[i - 1] = true;  // no lower neighbor: keep xi_i
  }
  // i > m(D): pack upward against the upper neighbor.
  for (int i = mD + 1; i <= n; ++i) {
    const int pos = D.position(X(i));
    if (pos > 0)
      mu[i - 1] = lattice_below(xi[i - 1], neighbor_value(pos - 1));
    fixed[i - 1] = true;
  }
  if (!satisfies(D, ParamPoint{mu, nu}))
    throw InternalError("extremal_mu: constructed point left the region");
  return mu;
}

std::vector<Step> fence_walk(const InterleavingPattern& D, const RationalVec& nu,
                             const RationalVec& xi, const RationalVec& lambda) {
  if (!D.is_strict()) throw DomainError("fence_walk requires a strict pattern");
  if (xi.size() != lambda.size())
    throw ShapeError("fence_walk: xi and lambda have different lengths");
  for (std::size_t i = 0; i < xi.size(); ++i)
    if (!(lambda[i] - xi[i]).is_integer())
      throw DomainError("fence_walk: lambda - xi is not an integer vector");
  if (!satisfies(D, ParamPoint{xi, nu}))
    throw DomainError("fence_walk: (xi, nu) does not satisfy D");
  if (!satisfies(D, ParamPoint{lambda, nu}))
    throw DomainError("fence_walk: (lambda, nu) does not satisfy D");
  if (xi == lambda) return {};

  const int n = D.n;
  const int mD = m_of(D);
  const RationalVec mu = extremal_mu(D, nu, xi);

  // Waypoint: mu clamped to the coordinate hull of xi and lambda, so legs
  // never overshoot past what the route needs. Clamping keeps the waypoint
  // inside D: each coordinate stays between two in-region values on the same
  // side of every nu entry, and the clamped chain is still strictly ordered.
  RationalVec way(n);
  for (int i = 0; i < n; ++i) {
    if (i < mD)
      way[i] = std::max(mu[i], std::min(xi[i], lambda[i]));
    else
      way[i] = std::min(mu[i], std::max(xi[i], lambda[i]));
  }

  std::vector<Step> steps;
  RationalVec cur = xi;
  auto move_to = [&](int i, const Rational& target) {
    const int sign = target > cur[i] ? +1 : -1;
    while (cur[i] != target) {
      cur[i] += Rational(sign);
      steps.push_back(Step{i + 1, sign});
      if (!satisfies(D, ParamPoint{cur, nu}))
        throw InternalError("fence_walk: step " + steps.back().str() +
                            " left the region at x=" + vec_str(cur));
    }
  };

  // Leg 1 (to the waypoint): inner coordinates first.
  for (int i = mD - 1; i >= 0; --i) move_to(i, way[i]);
  for (int i = mD; i < n; ++i) move_to(i, way[i]);
  // Leg 2 (to lambda): outer coordinates first, so each move has room.
  for (int i = 0; i < mD; ++i) move_to(i, lambda[i]);
  for (int i = n - 1; i >= mD; --i) move_to(i, lambda[i]);

  if (cur != lambda) throw InternalError("fence_walk: did not reach lambda");
  return steps;
}

namespace {

// Block decomposition of a strict pattern word: maximal runs, normalized to
// alternate x-run / y-run starting with a (possibly empty) x-run and ending
// with a (possibly empty) y-run.
struct Blocks {
  std::vector<std::pair<int, int>> x_runs;  // [begin, end] 1-based inclusive, empty as (b, b-1)
  std::vector<std::pair<int, int>> y_runs;
};

Blocks split_blocks(const InterleavingPattern& D) {
  Blocks b;
  int i = 1, j = 1;
  std::size_t k = 0;
  while (k < D.word.size()) {
    // x-run (possibly empty)
    int xb = i;
    while (k < D.word.size() && D.word[k].is_x) {
      ++i;
      ++k;
    }
    b.x_runs.emplace_back(xb, i - 1);
    // y-run (possibly empty only at the very end)
    int yb = j;
    while (k < D.word.size() && !D.word[k].is_x) {
      ++j;
      ++k;
    }
    b.y_runs.emplace_back(yb, j - 1);
  }
  if (b.x_runs.empty()) {
    b.x_runs.emplace_back(1, 0);
    b.y_runs.emplace_back(1, 0);
  }
  return b;
}

}  // namespace

InterleavingPattern build_dd_plus(const InterleavingPattern& D, const InterleavingPattern& Dp) {
  if (D.n != Dp.n || D.m != Dp.m)
    throw ShapeError("build_dd_plus: patterns have different shapes");
  if (!D.is_strict() || !Dp.is_strict())
    throw DomainError("build_dd_plus requires strict patterns");
  const int r = D.n, s = D.m;

  // Chain positions follow D's own order for both alphabets: the lambda
  // chain is D's word (r+s letters, then the new bottom letter), the nu
  // chain mirrors it. Blocks alternate (x_i, xi_i) pairs and (eta_j, y_j)
  // pairs along D's run decomposition.
  std::vector<Label> merged;
  const Blocks blocks = split_blocks(D);
  // Map from D's chain letters to positions within the lambda (= X) and
  // nu (= Y) chains of the merged pattern.
  auto lambda_pos = [&](const Label& l) { return D.position(l) + 1; };  // 1-based
  auto nu_pos = lambda_pos;                                             // same order
  for (std::size_t t = 0; t < blocks.x_runs.size(); ++t) {
    for (int i = blocks.x_runs[t].first; i <= blocks.x_runs[t].second; ++i) {
      merged.push_back(X(lambda_pos(patterns::X(i))));
      merged.push_back(Y(nu_pos(patterns::X(i))));
    }
    for (int j = blocks.y_runs[t].first; j <= blocks.y_runs[t].second; ++j) {
      merged.push_back(Y(nu_pos(patterns::Y(j))));
      merged.push_back(X(lambda_pos(patterns::Y(j))));
    }
  }
  merged.push_back(X(r + s + 1));
  return strict_pattern(r + s + 1, r + s, std::move(merged));
}

std::string to_text(const InterleavingPattern& D) {
  std::string out;
  for (std::size_t k = 0; k < D.word.size(); ++k) {
    if (k) {
      out += ' ';
      out += rel_str(D.rel[k - 1]);
      out += ' ';
    }
    out += D.word[k].str();
  }
  return out;
}

namespace {

Label parse_label(const std::string& tok) {
  if (tok.empty() || (tok[0] != 'x' && tok[0] != 'y'))
    throw DomainError("bad pattern token '" + tok + "'");
  int idx = 1;
  if (tok.size() > 1) {
    for (std::size_t i = 1; i < tok.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(tok[i])))
        throw DomainError("bad pattern token '" + tok + "'");
    idx = std::stoi(tok.substr(1));
  }
  return Label{tok[0] == 'x', idx};
}

}  // namespace

InterleavingPattern parse_pattern(const std::string& text) {
  std::vector<Label> word;
  std::vector<Rel> rel;
  std::size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  bool expect_label = true;
  while (pos < text.size()) {
    if (expect_label) {
      std::size_t start = pos;
      while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])))) ++pos;
      if (start == pos) throw DomainError("expected label in pattern at '" + text.substr(pos) + "'");
      word.push_back(parse_label(text.substr(start, pos - start)));
    } else {
      if (text.compare(pos, 2, ">=") == 0) {
        rel.push_back(Rel::WeakGE);
        pos += 2;
      } else if (text[pos] == '>') {
        rel.push_back(Rel::Strict);
        pos += 1;
      } else if (text[pos] == '=') {
        rel.push_back(Rel::Equal);
        pos += 1;
      } else {
        throw DomainError("expected separator in pattern at '" + text.substr(pos) + "'");
      }
    }
    expect_label = !expect_label;
    skip_ws();
  }
  if (word.empty()) throw DomainError("empty pattern");
  if (expect_label) throw DomainError("pattern ends with a separator");
  int n = 0, m = 0;
  for (const Label& l : word) (l.is_x ? n : m) += 1;
  return weak_pattern(n, m, std::move(word), std::move(rel));
}

std::string to_json(const InterleavingPattern& D) {
  nlohmann::json j;
  j["word"] = nlohmann::json::array();
  for (const Label& l : D.word) j["word"].push_back(l.str());
  j["rel"] = nlohmann::json::array();
  for (Rel r : D.rel) j["rel"].push_back(rel_str(r));
  return j.dump();
}

InterleavingPattern pattern_from_json(const std::string& json_text) {
  const auto j = nlohmann::json::parse(json_text);
  std::vector<Label> word;
  for (const auto& t : j.at("word")) word.push_back(parse_label(t.get<std::string>()));
  std::vector<Rel> rel;
  for (const auto& t : j.at("rel")) {
    const std::string s = t.get<std::string>();
    if (s == ">")
      rel.push_back(Rel::Strict);
    else if (s == ">=")
      rel.push_back(Rel::WeakGE);
    else if (s == "=")
      rel.push_back(Rel::Equal);
    else
      throw DomainError("bad relation '" + s + "' in pattern JSON");
  }
  int n = 0, m = 0;
  for (const Label& l : word) (l.is_x ? n : m) += 1;
  return weak_pattern(n, m, std::move(word), std::move(rel));
}

}  // namespace symbreak::patterns
