#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "symbreak/errors.hpp"
#include "symbreak/unitary_ds.hpp"

using namespace symbreak;
using namespace symbreak::uds;
using translation::Multiplicity;

namespace {

std::int64_t binomial(int n, int k) {
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("validate_hc") {
  CHECK_NOTHROW(validate_hc(1, 1, parse_vec("3/2,-1/2")));
  CHECK_NOTHROW(validate_hc(2, 1, parse_vec("2,0,1")));
  CHECK_THROWS_AS(validate_hc(2, 1, parse_vec("2,2,1")), DomainError);
  CHECK_THROWS_AS(validate_hc(2, 1, parse_vec("2,0,2")), DomainError);   // repeat across chains
  CHECK_THROWS_AS(validate_hc(1, 1, parse_vec("1,0")), DomainError);     // off lattice
  CHECK_THROWS_AS(validate_hc(2, 1, parse_vec("2,0")), ShapeError);
}

TEST_CASE("split and merge") {
  const auto lab = split(validate_hc(2, 1, parse_vec("2,0,1")));
  CHECK(lab.lambda_plus == parse_vec("2,1,0"));
  CHECK(lab.w.word == "+-+");

  CHECK(split(validate_hc(2, 1, parse_vec("3,2,1"))).w.word == "++-");
  CHECK(split(validate_hc(0, 2, parse_vec("3/2,1/2"))).w.word == "--");

  std::mt19937 rng(31);
  for (int t = 0; t < 1000; ++t) {
    const int p = 1 + static_cast<int>(rng() % 4);
    const int q = 1 + static_cast<int>(rng() % 4);
    const Rational eps = ds_epsilon(p, q);
    std::set<std::int64_t> offsets;
    while (static_cast<int>(offsets.size()) < p + q)
      offsets.insert(static_cast<int>(rng() % 40) - 20);
    std::vector<std::int64_t> all(offsets.begin(), offsets.end());
    std::shuffle(all.begin(), all.end(), rng);
    RationalVec xs, ys;
    for (int i = 0; i < p; ++i) xs.push_back(eps + Rational(all[i]));
    for (int i = p; i < p + q; ++i) ys.push_back(eps + Rational(all[i]));
    std::sort(xs.rbegin(), xs.rend());
    std::sort(ys.rbegin(), ys.rend());
    RationalVec entries = xs;
    entries.insert(entries.end(), ys.begin(), ys.end());
    const auto hc = validate_hc(p, q, entries);
    const auto label = split(hc);
    CHECK(merge(p, q, label).entries == hc.entries);
  }
}

TEST_CASE("shuffle words") {
  CHECK(enumerate_shuffles(2, 1).size() == 3);
  const auto all21 = enumerate_shuffles(2, 1);
  std::set<std::string> words;
  for (const auto& w : all21) words.insert(w.word);
  CHECK(words == std::set<std::string>{"++-", "+-+", "-++"});

  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3 && p + q <= 5; ++q)
      CHECK(static_cast<std::int64_t>(enumerate_shuffles(p, q).size()) == binomial(p + q, p));

  CHECK_THROWS_AS(validate_shuffle(2, 1, "+--"), DomainError);
  CHECK_THROWS_AS(validate_shuffle(2, 1, "+-"), ShapeError);
}

TEST_CASE("shuffle words model the block-increasing permutations") {
  // sigma = w^{-1} must increase on 1..p and on p+1..p+q; each such
  // permutation corresponds to exactly one shuffle word.
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3 && p + q <= 5; ++q) {
      const int N = p + q;
      std::vector<int> perm(N);
      for (int i = 0; i < N; ++i) perm[i] = i + 1;
      std::set<std::string> induced;
      int count = 0;
      std::sort(perm.begin(), perm.end());
      do {
        bool ok = true;
        for (int i = 0; i + 1 < p; ++i) ok = ok && perm[i] < perm[i + 1];
        for (int i = p; i + 1 < N; ++i) ok = ok && perm[i] < perm[i + 1];
        if (!ok) continue;
        ++count;
        std::string word(N, '-');
        for (int i = 0; i < p; ++i) word[perm[i] - 1] = '+';
        induced.insert(word);
      } while (std::next_permutation(perm.begin(), perm.end()));
      CHECK(count == binomial(N, p));
      CHECK(static_cast<std::int64_t>(induced.size()) == count);
    }
}

TEST_CASE("ggp_transport") {
  const auto w = validate_shuffle(2, 1, "+-+");
  const auto wp = validate_shuffle(1, 1, "+-");
  const auto D = patterns::parse_pattern("x1 > y1 > x2 > y2 > x3");

  translation::FactStore store;
  translation::Fact f;
  f.group_pair = ggp_key(w, wp);
  f.D = D;
  f.lambda = parse_vec("3,1,0");
  f.nu = parse_vec("3/2,1/2");
  f.verdict = translation::make_verdict(Multiplicity::NonZero,
                                        translation::TheoremTag::Table_He, "seed");
  store.add(f);

  SUBCASE("transport to another integral point") {
    const auto v = ggp_transport(w, wp, D, store, parse_vec("5,2,1"), parse_vec("5/2,3/2"));
    CHECK(v.value == Multiplicity::NonZero);
    CHECK(v.provenance.front().tag == translation::TheoremTag::Thm3_3_GGP);
  }
  SUBCASE("empty store") {
    const translation::FactStore empty;
    CHECK(ggp_transport(w, wp, D, empty, parse_vec("5,2,1"), parse_vec("5/2,3/2")).value ==
          Multiplicity::Unknown);
  }
  SUBCASE("point outside the pattern") {
    CHECK_THROWS_AS(ggp_transport(w, wp, D, store, parse_vec("5,2,1"), parse_vec("11/2,3/2")),
                    DomainError);
  }
  SUBCASE("off-lattice point") {
    CHECK_THROWS_AS(ggp_transport(w, wp, D, store, parse_vec("5,2,1"), parse_vec("5/2,1")),
                    DomainError);
  }
}

TEST_CASE("holo_seed") {
  SUBCASE("p = q = 1") {
    const auto seed = holo_seed(parse_vec("2"), 1, 1);
    CHECK(seed.lambda == parse_vec("1/2,3/2"));
    CHECK(patterns::to_text(seed.D) == "y1 > x1 > x2");
    CHECK(patterns::satisfies(seed.D,
                              patterns::ParamPoint{seed.lambda_sorted, seed.nu_sorted}));
  }
  SUBCASE("p = 2, q = 1") {
    const auto seed = holo_seed(parse_vec("1/2,7/2"), 2, 1);
    CHECK(seed.lambda == parse_vec("1,0,3"));
    CHECK(patterns::to_text(seed.D) == "y1 > x1 > x2 > y2 > x3");
    CHECK(seed.lambda_sorted == parse_vec("3,1,0"));
    CHECK(seed.nu_sorted == parse_vec("7/2,1/2"));
    CHECK(patterns::satisfies(seed.D,
                              patterns::ParamPoint{seed.lambda_sorted, seed.nu_sorted}));
  }
  SUBCASE("chamber violations") {
    CHECK_THROWS_AS(holo_seed(parse_vec("7/2,1/2"), 2, 1), DomainError);
    CHECK_THROWS_AS(holo_seed(parse_vec("1/2,3/2"), 2, 1), DomainError);  // too tight
    CHECK_THROWS_AS(holo_seed(parse_vec("1,4"), 2, 1), DomainError);      // off lattice
  }
  SUBCASE("self-satisfaction on random chambers") {
    std::mt19937 rng(77);
    for (int t = 0; t < 100; ++t) {
      const int p = 1 + static_cast<int>(rng() % 3);
      const int q = 1 + static_cast<int>(rng() % 3);
      // Build a chamber-compatible nu with generous gaps.
      const Rational eps_prime = Rational(p + q - 2, 2);
      RationalVec nu(p + q - 1);
      Rational v = eps_prime + Rational(2 * (p + q) + static_cast<int>(rng() % 5));
      for (int j = p; j <= p + q - 1; ++j) {
        nu[j - 1] = v;
        v -= Rational(1 + static_cast<int>(rng() % 2));
      }
      v -= Rational(2 + static_cast<int>(rng() % 2));  // wrap gap >= 2: minimal fill fits
      for (int i = 1; i <= p - 1; ++i) {
        nu[i - 1] = v;
        v -= Rational(1 + static_cast<int>(rng() % 2));
      }
      const auto seed = holo_seed(nu, p, q);
      CHECK(patterns::satisfies(seed.D,
                                patterns::ParamPoint{seed.lambda_sorted, seed.nu_sorted}));
    }
  }
}

TEST_CASE("u21_query worked rows") {
  // Case I: x1 > xi > x2 > y > eta.
  const auto v1 = u21_query(5, 2, 1, Rational(7, 2), Rational(1, 2), false);
  CHECK(v1.value == Multiplicity::NonZero);
  CHECK(v1.provenance.front().detail.find("case I") != std::string::npos);

  // x1 > x2 > xi > y > eta vanishes via the tau-invariant of ++-.
  CHECK(u21_query(5, 4, 3, Rational(7, 2), Rational(1, 2), false).value == Multiplicity::Zero);

  // xi > x1 > x2 > y > eta likewise.
  CHECK(u21_query(4, 3, 1, Rational(9, 2), Rational(1, 2), false).value == Multiplicity::Zero);

  SUBCASE("unknown without the completeness flag, zero with it") {
    // x1 > xi > y > x2 > eta matches no row and no tau-invariant fires (+-+).
    const auto u = u21_query(5, 2, 3, Rational(7, 2), Rational(1, 2), false);
    CHECK(u.value == Multiplicity::Unknown);
    const auto z = u21_query(5, 2, 3, Rational(7, 2), Rational(1, 2), true);
    CHECK(z.value == Multiplicity::Zero);
  }
  SUBCASE("degenerate inputs") {
    CHECK_THROWS_AS(u21_query(5, 5, 3, Rational(7, 2), Rational(1, 2), false), DomainError);
    CHECK_THROWS_AS(u21_query(5, 2, 5, Rational(7, 2), Rational(1, 2), false), DomainError);
    CHECK_THROWS_AS(u21_query(5, 2, 3, Rational(7, 2), Rational(7, 2), false), DomainError);
    CHECK_THROWS_AS(u21_query(5, 2, 3, Rational(3), Rational(1, 2), false), DomainError);
  }
}

TEST_CASE("u21_limit_query") {
  CHECK(u21_limit_query(patterns::parse_pattern("x1 > y1 > x2 = x3 > y2")).value ==
        Multiplicity::NonZero);
  CHECK(u21_limit_query(patterns::parse_pattern("y1 > y2 > x1 = x2 > x3")).value ==
        Multiplicity::NonZero);
  CHECK(u21_limit_query(patterns::parse_pattern("x1 = y1 > x2 > x3 > y2")).value ==
        Multiplicity::Unknown);
  CHECK_THROWS_AS(u21_limit_query(patterns::parse_pattern("x1 = y1 > x2 = x3 > y2")),
                  DomainError);
  CHECK_THROWS_AS(u21_limit_query(patterns::parse_pattern("x1 > y1 > x2 > x3 > y2")),
                  DomainError);

  // All eight limit rows are recognized.
  int listed = 0;
  for (const auto& c : u21_table())
    for (const auto& lp : c.limit_patterns) {
      CHECK(lp.equality_count() == 1);
      CHECK(u21_limit_query(lp).value == Multiplicity::NonZero);
      ++listed;
    }
  CHECK(listed == 8);
}

TEST_CASE("u21 audit totals") {
  const auto rows = u21_audit(false);
  REQUIRE(rows.size() == 60);
  int nonzero = 0, zero = 0, unknown = 0;
  for (const auto& r : rows) {
    switch (r.verdict.value) {
      case Multiplicity::NonZero: ++nonzero; break;
      case Multiplicity::Zero: ++zero; break;
      case Multiplicity::Unknown: ++unknown; break;
      default: FAIL("unexpected verdict");
    }
  }
  CHECK(nonzero == 6);
  CHECK(zero == 24);
  CHECK(unknown == 30);

  const auto complete = u21_audit(true);
  int complete_zero = 0;
  for (const auto& r : complete)
    if (r.verdict.value == Multiplicity::Zero) ++complete_zero;
  CHECK(complete_zero == 54);
}

TEST_CASE("only case II is coherent") {
  int coherent = 0;
  for (const auto& c : u21_table())
    if (c.coherent) {
      ++coherent;
      CHECK(c.case_id == 2);
    }
  CHECK(coherent == 1);
}
