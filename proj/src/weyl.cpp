#include "symbreak/weyl.hpp"

#include <algorithm>
#include <functional>

#include "symbreak/errors.hpp"
#include "symbreak/pattern.hpp"

namespace symbreak::weyl {

HighestWeight validate_highest_weight(std::vector<std::int64_t> entries) {
  for (std::size_t i = 0; i + 1 < entries.size(); ++i)
    if (entries[i] < entries[i + 1])
      throw DomainError("highest weight is not weakly decreasing");
  return HighestWeight{std::move(entries)};
}

InfinitesimalCharacter make_infinitesimal_character(RationalVec entries) {
  std::sort(entries.begin(), entries.end(), [](const Rational& a, const Rational& b) { return b < a; });
  return InfinitesimalCharacter{std::move(entries)};
}

RationalVec rho(int N) {
  if (N < 1) throw ShapeError("rho: N must be >= 1");
  RationalVec out;
  out.reserve(N);
  for (int i = 0; i < N; ++i) out.push_back(Rational(N - 1 - 2 * i, 2));
  return out;
}

InfinitesimalCharacter infl_char(const HighestWeight& x) {
  const int N = static_cast<int>(x.size());
  const RationalVec r = rho(N);
  RationalVec out;
  out.reserve(N);
  for (int i = 0; i < N; ++i) out.push_back(Rational(x.entries[i]) + r[i]);
  return InfinitesimalCharacter{std::move(out)};  // already strictly decreasing
}

int weyl_mult(const HighestWeight& x, const HighestWeight& y) {
  const int n = static_cast<int>(x.size());
  if (static_cast<int>(y.size()) != n - 1)
    throw ShapeError("weyl_mult: y must have length n-1");

  // Route 1: interlacing inequalities on the highest weights.
  bool interlaced = true;
  for (int i = 0; i < n - 1; ++i)
    if (!(x.entries[i] >= y.entries[i] && y.entries[i] >= x.entries[i + 1]))
      interlaced = false;

  // Route 2: the shifted characters satisfy the full strict interleaving
  // pattern x1 > y1 > x2 > ... > y_{n-1} > xn.
  const RationalVec tau = infl_char(x).entries;
  const RationalVec taup = infl_char(y).entries;
  std::vector<patterns::Label> word;
  for (int i = 1; i < n; ++i) {
    word.push_back(patterns::X(i));
    word.push_back(patterns::Y(i));
  }
  word.push_back(patterns::X(n));
  const auto full = patterns::strict_pattern(n, n - 1, std::move(word));
  const bool via_pattern = patterns::satisfies(full, patterns::ParamPoint{tau, taup});

  if (interlaced != via_pattern)
    throw InternalError("weyl_mult: the two routes disagree");
  return interlaced ? 1 : 0;
}

namespace {

// Rows of a semistandard tableau of shape x are filled top to bottom; each
// partial row obeys weak increase along the row and strict increase against
// the row above. Accumulates the content monomials.
void enumerate_ssyt(const std::vector<std::int64_t>& shape, int N,
                    std::vector<std::vector<int>>& rows, std::size_t row,
                    SchurPolynomial& out) {
  if (row == shape.size() || shape[row] == 0) {
    std::vector<std::int64_t> content(N, 0);
    for (const auto& r : rows)
      for (int e : r) content[e - 1] += 1;
    out[content] += 1;
    return;
  }
  const std::int64_t len = shape[row];
  std::vector<int>& cur = rows[row];
  std::function<void(std::int64_t)> fill = [&](std::int64_t col) {
    if (col == len) {
      enumerate_ssyt(shape, N, rows, row + 1, out);
      return;
    }
    int lo = 1;
    if (col > 0) lo = std::max(lo, cur[col - 1]);                       // weak along row
    if (row > 0 && col < static_cast<std::int64_t>(rows[row - 1].size()))
      lo = std::max(lo, rows[row - 1][col] + 1);                        // strict down column
    for (int v = lo; v <= N; ++v) {
      cur.push_back(v);
      fill(col + 1);
      cur.pop_back();
    }
  };
  fill(0);
}

std::int64_t dim_or_throw(const HighestWeight& x, int N) {
  HighestWeight padded = x;
  padded.entries.resize(N, 0);
  const std::int64_t d = weyl_dim(padded, N);
  if (d > kDimensionCap)
    throw CapacityError("weyl dimension " + std::to_string(d) + " exceeds cap " +
                        std::to_string(kDimensionCap));
  return d;
}

}  // namespace

SchurPolynomial schur_expand(const HighestWeight& x, int N) {
  if (static_cast<int>(x.size()) > N)
    throw ShapeError("schur_expand: weight longer than variable count");
  for (std::int64_t e : x.entries)
    if (e < 0) throw DomainError("schur_expand: negative entries (shift first)");
  dim_or_throw(x, N);
  std::vector<std::int64_t> shape = x.entries;
  shape.resize(N, 0);
  SchurPolynomial out;
  std::vector<std::vector<int>> rows(shape.size());
  enumerate_ssyt(shape, N, rows, 0, out);
  return out;
}

std::map<HighestWeight, std::int64_t> branch_oracle(const HighestWeight& x) {
  const int n = static_cast<int>(x.size());
  if (n < 1) throw ShapeError("branch_oracle: empty weight");

  // Shift to nonnegative entries; unshift the results at the end. Justified
  // by shift equivariance of the branching.
  std::int64_t shift = 0;
  for (std::int64_t e : x.entries) shift = std::min(shift, e);
  HighestWeight xs = x;
  for (auto& e : xs.entries) e -= shift;

  dim_or_throw(xs, n);
  const SchurPolynomial sx = schur_expand(xs, n);

  // Group by the exponent of the last variable (the t-grading).
  std::map<std::int64_t, SchurPolynomial> graded;
  for (const auto& [expo, coeff] : sx) {
    std::vector<std::int64_t> z(expo.begin(), expo.end() - 1);
    graded[expo.back()][std::move(z)] += coeff;
  }

  std::map<HighestWeight, std::int64_t> result;
  for (auto& [deg, poly] : graded) {
    // Eliminate by the lex-leading monomial, which for a symmetric
    // polynomial is a partition. Each pass must strictly lower the leader.
    std::vector<std::int64_t> prev_leader;
    bool have_prev = false;
    while (!poly.empty()) {
      const auto lead = std::prev(poly.end());  // lex-largest key in the map
      const std::vector<std::int64_t> alpha = lead->first;
      const std::int64_t mult = lead->second;
      for (std::size_t i = 0; i + 1 < alpha.size(); ++i)
        if (alpha[i] < alpha[i + 1])
          throw InternalError("branch_oracle: leading monomial is not a partition");
      if (mult <= 0) throw InternalError("branch_oracle: nonpositive leading coefficient");
      if (have_prev && !(alpha < prev_leader))
        throw InternalError("branch_oracle: elimination failed to reduce the leader");
      prev_leader = alpha;
      have_prev = true;

      const SchurPolynomial sy = schur_expand(HighestWeight{alpha}, n - 1);
      for (const auto& [e, c] : sy) {
        auto it = poly.find(e);
        const std::int64_t now = (it == poly.end() ? 0 : it->second) - mult * c;
        if (now == 0) {
          if (it != poly.end()) poly.erase(it);
        } else {
          poly[e] = now;
        }
      }

      HighestWeight y{alpha};
      for (auto& e : y.entries) e += shift;
      result[y] += mult;
    }
  }
  return result;
}

std::int64_t weyl_dim(const HighestWeight& x, int N) {
  if (static_cast<int>(x.size()) != N)
    throw ShapeError("weyl_dim: weight length differs from N");
  Rational d = 1;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      d *= Rational(x.entries[i] - x.entries[j] + j - i, j - i);
  if (!d.is_integer() || d.numerator() <= 0)
    throw InternalError("weyl_dim: product is not a positive integer");
  return d.numerator();
}

}  // namespace symbreak::weyl
