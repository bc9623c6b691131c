#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>

#include "symbreak/errors.hpp"
#include "symbreak/pattern.hpp"

using namespace symbreak;
using namespace symbreak::patterns;

namespace {

InterleavingPattern pat(const char* text) { return parse_pattern(text); }

std::int64_t binomial(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Assigns strictly decreasing integer values along the word of a strict
// pattern, producing a point that realizes it.
ParamPoint realize(const InterleavingPattern& D, int top = 0) {
  ParamPoint p;
  p.x.resize(D.n);
  p.y.resize(D.m);
  int v = top == 0 ? static_cast<int>(D.word.size()) : top;
  for (const Label& l : D.word) {
    (l.is_x ? p.x[l.index - 1] : p.y[l.index - 1]) = Rational(v--);
  }
  return p;
}

}  // namespace

TEST_CASE("classify: merge-sort examples") {
  const auto D1 = classify(ParamPoint{parse_vec("2,0,-1"), parse_vec("3/2,-1/2")});
  CHECK(to_text(D1) == "x1 > y1 > x2 > y2 > x3");

  const auto D2 = classify(ParamPoint{parse_vec("1,0"), parse_vec("1,0")});
  CHECK(to_text(D2) == "x1 = y1 > x2 = y2");

  const auto D3 = classify(ParamPoint{parse_vec("5,-3"), parse_vec("0")});
  CHECK(to_text(D3) == "x1 > y1 > x2");

  CHECK_THROWS_AS(classify(ParamPoint{parse_vec("1,1"), parse_vec("0")}), DomainError);
}

TEST_CASE("satisfies: direct checks") {
  const auto D = pat("x1 > y1 > x2");
  CHECK(satisfies(D, ParamPoint{parse_vec("2,-1"), parse_vec("0")}));
  CHECK_FALSE(satisfies(D, ParamPoint{parse_vec("2,-1"), parse_vec("3")}));
  CHECK_THROWS_AS(satisfies(D, ParamPoint{parse_vec("2,-1,0"), parse_vec("0")}), ShapeError);

  const auto D2 = pat("y1 > y2 > x1 > x2 > x3 > x4 > y3");
  CHECK(satisfies(D2, ParamPoint{parse_vec("7,6,5,1"), parse_vec("9,8,0")}));
}

TEST_CASE("satisfies: weak relations") {
  const auto W = pat("x1 >= y1 >= x2 > y2");
  CHECK(satisfies(W, ParamPoint{parse_vec("2,1"), parse_vec("2,0")}));
  CHECK(satisfies(W, ParamPoint{parse_vec("3,1"), parse_vec("2,0")}));
  CHECK_FALSE(satisfies(W, ParamPoint{parse_vec("2,1"), parse_vec("2,1")}));
}

TEST_CASE("enumerate_strict: counts and order") {
  CHECK(enumerate_strict(4, 3).size() == 35);
  CHECK(enumerate_strict(0, 5).size() == 1);
  CHECK(enumerate_strict(2, 2).size() == 6);

  for (int n = 0; n <= 6; ++n)
    for (int m = 0; m <= 6; ++m) {
      const auto all = enumerate_strict(n, m);
      CHECK(static_cast<std::int64_t>(all.size()) == binomial(n + m, n));
      std::set<std::string> texts;
      for (const auto& D : all) texts.insert(to_text(D));
      CHECK(texts.size() == all.size());
    }

  // Lexicographic word order with x before y.
  const auto small = enumerate_strict(1, 1);
  CHECK(to_text(small[0]) == "x1 > y1");
  CHECK(to_text(small[1]) == "y1 > x1");
}

TEST_CASE("fences: counts from the worked examples") {
  const auto D1 = pat("x1 > y1 > x2 > y2 > x3 > y3 > x4");
  CHECK(fences(D1).size() == 6);

  const auto D2 = pat("y1 > y2 > x1 > x2 > x3 > x4 > y3");
  const auto f2 = fences(D2);
  REQUIRE(f2.size() == 2);
  CHECK(f2[0] == Fence{1, 2});
  CHECK(f2[1] == Fence{4, 3});

  CHECK(fences(pat("x1 > x2 > y1 > y2")).size() == 1);
  CHECK_THROWS_AS(fences(pat("x1 = y1 > x2")), DomainError);
}

TEST_CASE("fences: extremes over all patterns") {
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= 5; ++m) {
      std::size_t best = 0;
      for (const auto& D : enumerate_strict(n, m)) {
        const auto f = fences(D);
        CHECK(f.size() >= 1);
        best = std::max(best, f.size());
      }
      if (std::abs(n - m) <= 1) CHECK(best == static_cast<std::size_t>(n + m - 1));
    }
}

TEST_CASE("m_of") {
  CHECK(m_of(pat("x1 > y1 > x2 > y2 > x3 > y3 > x4")) == 1);
  CHECK(m_of(pat("y1 > y2 > x1 > x2 > x3 > x4 > y3")) == 0);
  CHECK(m_of(pat("x1 > x2 > y1 > x3 > y2 > x4 > y3")) == 2);
  CHECK(m_of(pat("x1 > x2 > x3")) == 3);  // no y labels

  for (const auto& D : enumerate_strict(3, 2)) {
    const bool starts_with_y = !D.word.front().is_x;
    CHECK((m_of(D) == 0) == starts_with_y);
  }
}

TEST_CASE("adjacent_string") {
  const auto D1 = pat("x1 > y1 > x2 > y2 > x3 > y3 > x4");
  CHECK_FALSE(adjacent_string(D1, 1));
  CHECK(adjacent_string(pat("x1 > x2 > y1"), 1));
  const auto D2 = pat("y1 > y2 > x1 > x2 > x3 > x4 > y3");
  CHECK(adjacent_string(D2, 2));
  CHECK_THROWS_AS(adjacent_string(D2, 4), ShapeError);
  CHECK_THROWS_AS(adjacent_string(D2, 0), ShapeError);
}

TEST_CASE("extremal_mu: worked examples") {
  SUBCASE("interlacing, one nu entry") {
    const auto mu = extremal_mu(pat("x1 > y1 > x2"), parse_vec("0"), parse_vec("2,-1"));
    CHECK(mu == parse_vec("1,-1"));
  }
  SUBCASE("m(D) = 0: both coordinates maximized") {
    const auto mu = extremal_mu(pat("y1 > x1 > x2"), parse_vec("10"), parse_vec("3,1"));
    CHECK(mu == parse_vec("9,8"));
  }
  SUBCASE("no y labels: packed descending chain from the last coordinate") {
    const auto mu = extremal_mu(pat("x1 > x2 > x3"), {}, parse_vec("7/2,1,0"));
    CHECK(mu == parse_vec("3/2,1,0"));
  }
  CHECK_THROWS_AS(extremal_mu(pat("x1 > y1 > x2"), parse_vec("0"), parse_vec("-1,-2")),
                  DomainError);
}

namespace {

// Windowed brute force: enumerate all lattice tuples in a box around the nu
// entries and verify coordinatewise extremality of mu, skipping coordinates
// whose optimum touches the window edge (those are unbounded in the region
// and are packed against their one-sided chain constraint instead).
void check_extremal_against_bruteforce(const InterleavingPattern& D, const RationalVec& nu,
                                       const RationalVec& xi) {
  const auto mu = extremal_mu(D, nu, xi);
  REQUIRE(satisfies(D, ParamPoint{mu, nu}));
  for (std::size_t i = 0; i < mu.size(); ++i) REQUIRE((mu[i] - xi[i]).is_integer());
  if (nu.empty()) return;

  const int n = D.n;
  Rational lo = nu[0], hi = nu[0];
  for (const auto& v : nu) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  lo -= Rational(n + 1);
  hi += Rational(n + 1);

  std::vector<RationalVec> grid(n);
  for (int i = 0; i < n; ++i)
    for (Rational v = xi[i] + Rational((lo - xi[i]).ceil()); v <= hi; v += Rational(1))
      grid[i].push_back(v);

  const int mD = m_of(D);
  RationalVec best_min(n), best_max(n);
  bool any = false;
  RationalVec cand(n);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      if (!satisfies(D, ParamPoint{cand, nu})) return;
      if (!any) {
        best_min = cand;
        best_max = cand;
        any = true;
      } else {
        for (int t = 0; t < n; ++t) {
          best_min[t] = std::min(best_min[t], cand[t]);
          best_max[t] = std::max(best_max[t], cand[t]);
        }
      }
      return;
    }
    for (const auto& v : grid[i]) {
      cand[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  REQUIRE(any);

  for (int i = 0; i < n; ++i) {
    if (i < mD) {
      if (best_min[i] > grid[i].front())  // bounded below inside the window
        CHECK(mu[i] == best_min[i]);
    } else {
      if (best_max[i] < grid[i].back())  // bounded above inside the window
        CHECK(mu[i] == best_max[i]);
    }
  }
}

}  // namespace

TEST_CASE("extremal_mu: windowed brute force on random instances") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const int m = 1 + static_cast<int>(rng() % 2);
    const auto all = enumerate_strict(n, m);
    const auto D = all[rng() % all.size()];
    // Distinct half-integer values, descending along the word.
    std::set<Rational> vals;
    while (static_cast<int>(vals.size()) < n + m)
      vals.insert(Rational(static_cast<int>(rng() % 25) - 12, 1 + static_cast<int>(rng() % 2)));
    RationalVec sorted(vals.begin(), vals.end());
    std::reverse(sorted.begin(), sorted.end());
    ParamPoint p;
    p.x.resize(n);
    p.y.resize(m);
    for (std::size_t k = 0; k < D.word.size(); ++k) {
      const Label& l = D.word[k];
      (l.is_x ? p.x[l.index - 1] : p.y[l.index - 1]) = sorted[k];
    }
    check_extremal_against_bruteforce(D, p.y, p.x);
  }
}

namespace {

void check_walk_replays(const InterleavingPattern& D, const RationalVec& nu,
                        const RationalVec& xi, const RationalVec& lambda,
                        const std::vector<Step>& steps) {
  RationalVec cur = xi;
  for (const Step& s : steps) {
    REQUIRE(s.index >= 1);
    REQUIRE(s.index <= D.n);
    REQUIRE((s.sign == 1 || s.sign == -1));
    cur[s.index - 1] += Rational(s.sign);
    REQUIRE(satisfies(D, ParamPoint{cur, nu}));
  }
  REQUIRE(cur == lambda);
}

}  // namespace

TEST_CASE("fence_walk: worked example and edge cases") {
  const auto D = pat("x1 > y1 > x2");
  const auto nu = parse_vec("0");
  const auto xi = parse_vec("2,-1");
  const auto lambda = parse_vec("5,-3");
  const auto steps = fence_walk(D, nu, xi, lambda);
  CHECK(steps.size() == 5);
  check_walk_replays(D, nu, xi, lambda, steps);
  int up1 = 0, down2 = 0;
  for (const auto& s : steps) {
    if (s.index == 1 && s.sign == 1) ++up1;
    if (s.index == 2 && s.sign == -1) ++down2;
  }
  CHECK(up1 == 3);
  CHECK(down2 == 2);

  CHECK(fence_walk(D, nu, xi, xi).empty());
  CHECK_THROWS_AS(fence_walk(D, nu, xi, parse_vec("5,1")), DomainError);
  CHECK_THROWS_AS(fence_walk(D, nu, xi, parse_vec("5/2,-1")), DomainError);
}

TEST_CASE("fence_walk: randomized replay") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const int m = 1 + static_cast<int>(rng() % 3);
    const auto all = enumerate_strict(n, m);
    const auto D = all[rng() % all.size()];
    ParamPoint p = realize(D, 12);
    RationalVec xi = p.x;
    const RationalVec nu = p.y;

    // Random in-region target reachable by legal unit moves.
    RationalVec lambda = xi;
    for (int moves = 0; moves < 14; ++moves) {
      const int i = static_cast<int>(rng() % n);
      const int sign = rng() % 2 ? 1 : -1;
      lambda[i] += Rational(sign);
      if (!satisfies(D, ParamPoint{lambda, nu})) lambda[i] -= Rational(sign);
    }
    const auto steps = fence_walk(D, nu, xi, lambda);
    check_walk_replays(D, nu, xi, lambda, steps);
  }
}

TEST_CASE("classify is a left inverse of realization") {
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      for (const auto& D : enumerate_strict(n, m)) {
        if (D.word.empty()) continue;
        CHECK(classify(realize(D)) == D);
      }
}

TEST_CASE("build_dd_plus") {
  const auto D = pat("x1 > y1");
  const auto merged = build_dd_plus(D, D);
  CHECK(merged.n == 3);
  CHECK(merged.m == 2);
  CHECK(to_text(merged) == "x1 > y1 > y2 > x2 > x3");

  const auto empty = strict_pattern(0, 0, {});
  CHECK(to_text(build_dd_plus(empty, empty)) == "x1");

  const auto Dp = pat("y1 > x1");
  CHECK(to_text(build_dd_plus(D, Dp)) == "x1 > y1 > y2 > x2 > x3");
  CHECK(to_text(build_dd_plus(Dp, D)) == "y1 > x1 > x2 > y2 > x3");

  CHECK_THROWS_AS(build_dd_plus(D, pat("x1 > y1 > y2")), ShapeError);
}

TEST_CASE("serialization round trips") {
  const std::string grammar = "x1 > y1 >= x2 = y2 > x3";
  const auto D = parse_pattern(grammar);
  CHECK(to_text(D) == grammar);
  CHECK(pattern_from_json(to_json(D)) == D);

  for (const auto& P : enumerate_strict(3, 2)) {
    CHECK(parse_pattern(to_text(P)) == P);
    CHECK(pattern_from_json(to_json(P)) == P);
  }

  CHECK_THROWS_AS(parse_pattern("x1 >"), DomainError);
  CHECK_THROWS_AS(parse_pattern("x1 > x1"), DomainError);
  CHECK_THROWS_AS(parse_pattern("x2 > x1"), DomainError);
  CHECK_THROWS_AS(parse_pattern(""), DomainError);
}

TEST_CASE("pattern word validation") {
  CHECK_THROWS_AS(strict_pattern(2, 0, {X(2), X(1)}), DomainError);
  CHECK_THROWS_AS(strict_pattern(2, 1, {X(1), X(2)}), ShapeError);
  CHECK_THROWS_AS(weak_pattern(1, 1, {X(1), Y(1)}, {}), ShapeError);
}
