#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "symbreak/errors.hpp"
#include "symbreak/weyl.hpp"

using namespace symbreak;
using namespace symbreak::weyl;

namespace {

HighestWeight hw(std::vector<std::int64_t> v) { return validate_highest_weight(std::move(v)); }

// All weakly decreasing tuples of the given length with entries in [0, top].
std::vector<std::vector<std::int64_t>> all_dominant(int len, int top) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur(len);
  std::function<void(int, std::int64_t)> rec = [&](int i, std::int64_t hi) {
    if (i == len) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t v = hi; v >= 0; --v) {
      cur[i] = v;
      rec(i + 1, v);
    }
  };
  rec(0, top);
  return out;
}

}  // namespace

TEST_CASE("rho") {
  CHECK(rho(3) == parse_vec("1,0,-1"));
  CHECK(rho(1) == parse_vec("0"));
  CHECK(rho(2) == parse_vec("1/2,-1/2"));
  CHECK_THROWS_AS(rho(0), ShapeError);
}

TEST_CASE("infinitesimal characters of the basic U(3) weights") {
  CHECK(infl_char(hw({1, 0, 0})).entries == parse_vec("2,0,-1"));
  CHECK(infl_char(hw({1, 1, 0})).entries == parse_vec("2,1,-1"));
  CHECK(infl_char(hw({0, 0, 0})).entries == rho(3));
}

TEST_CASE("weyl_mult basic values") {
  CHECK(weyl_mult(hw({1, 0, 0}), hw({0, 0})) == 1);
  CHECK(weyl_mult(hw({1, 1, 0}), hw({0, 0})) == 0);
  CHECK(weyl_mult(hw({4, 4, 4}), hw({4, 4})) == 1);
  CHECK_THROWS_AS(weyl_mult(hw({1, 0}), hw({0, 0})), ShapeError);
}

TEST_CASE("schur_expand small cases") {
  const auto std3 = schur_expand(hw({1, 0, 0}), 3);
  CHECK(std3.size() == 3);
  CHECK(std3.at({1, 0, 0}) == 1);
  CHECK(std3.at({0, 1, 0}) == 1);
  CHECK(std3.at({0, 0, 1}) == 1);

  const auto ext = schur_expand(hw({1, 1, 0}), 3);
  CHECK(ext.size() == 3);
  CHECK(ext.at({1, 1, 0}) == 1);
  CHECK(ext.at({1, 0, 1}) == 1);
  CHECK(ext.at({0, 1, 1}) == 1);

  std::int64_t total = 0;
  for (const auto& [e, c] : schur_expand(hw({2, 1, 0}), 3)) total += c;
  CHECK(total == 8);

  CHECK_THROWS_AS(schur_expand(hw({0, -1}), 2), DomainError);
}

TEST_CASE("branch_oracle hand-checked values") {
  const auto b1 = branch_oracle(hw({1, 0, 0}));
  REQUIRE(b1.size() == 2);
  CHECK(b1.at(hw({1, 0})) == 1);
  CHECK(b1.at(hw({0, 0})) == 1);

  const auto b2 = branch_oracle(hw({1, 1, 0}));
  REQUIRE(b2.size() == 2);
  CHECK(b2.at(hw({1, 1})) == 1);
  CHECK(b2.at(hw({1, 0})) == 1);

  const auto b3 = branch_oracle(hw({0, 0}));
  REQUIRE(b3.size() == 1);
  CHECK(b3.at(hw({0})) == 1);
}

TEST_CASE("weyl_dim") {
  CHECK(weyl_dim(hw({1, 0, 0}), 3) == 3);
  CHECK(weyl_dim(hw({1, 1, 0}), 3) == 3);
  CHECK(weyl_dim(hw({2, 1, 0}), 3) == 8);
  CHECK(weyl_dim(hw({0}), 1) == 1);
  // Shift invariance of the dimension.
  CHECK(weyl_dim(hw({5, 4, 3}), 3) == weyl_dim(hw({2, 1, 0}), 3));
}

TEST_CASE("capacity cap") {
  CHECK_THROWS_AS(schur_expand(hw({20, 13, 7, 0}), 4), CapacityError);
  CHECK_THROWS_AS(branch_oracle(hw({20, 13, 7, 0})), CapacityError);
}

TEST_CASE("oracle agrees with the interlacing rule (n <= 3, entries <= 3)") {
  for (int n = 2; n <= 3; ++n) {
    for (const auto& xe : all_dominant(n, 3)) {
      const auto x = hw(xe);
      const auto decomp = branch_oracle(x);
      std::int64_t dim_sum = 0;
      for (const auto& [y, mult] : decomp) {
        CHECK(mult == 1);
        CHECK(weyl_mult(x, y) == 1);
        dim_sum += mult * weyl_dim(y, n - 1);
      }
      CHECK(dim_sum == weyl_dim(x, n));
      for (const auto& ye : all_dominant(n - 1, 3)) {
        const auto y = hw(ye);
        const bool in_decomp = decomp.count(y) > 0;
        CHECK(weyl_mult(x, y) == (in_decomp ? 1 : 0));
      }
    }
  }
}

TEST_CASE("shift equivariance") {
  std::mt19937 rng(5);
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + static_cast<int>(rng() % 3);
    std::vector<std::int64_t> xe(n), ye(n - 1);
    for (int i = 0; i < n; ++i) xe[i] = static_cast<int>(rng() % 5);
    for (int i = 0; i < n - 1; ++i) ye[i] = static_cast<int>(rng() % 5);
    std::sort(xe.rbegin(), xe.rend());
    std::sort(ye.rbegin(), ye.rend());
    const std::int64_t c = static_cast<int>(rng() % 9) - 4;
    auto xs = xe, ys = ye;
    for (auto& e : xs) e += c;
    for (auto& e : ys) e += c;
    CHECK(weyl_mult(hw(xe), hw(ye)) == weyl_mult(hw(xs), hw(ys)));
  }
}

TEST_CASE("oracle handles negative entries by shifting") {
  const auto b = branch_oracle(hw({0, -1}));
  REQUIRE(b.size() == 2);
  CHECK(b.at(hw({0})) == 1);
  CHECK(b.at(hw({-1})) == 1);
}
