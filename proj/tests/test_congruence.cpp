#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "gstruct/congruence.hpp"

using namespace gstruct;

namespace {
// Action of SL2(Z) on the rows (x, y) of (Z/n)^2 of order exactly n,
// which factors through SL2(Z/n) by construction.
std::pair<Permutation, Permutation> primitive_vectors_action(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pts;
  for (std::uint64_t x = 0; x < n; ++x)
    for (std::uint64_t y = 0; y < n; ++y)
      if (std::gcd(std::gcd(x, y), n) == 1) pts.push_back({x, y});
  // (1, 0) first so that point 0 is a valid base point
  std::iter_swap(pts.begin(), std::find(pts.begin(), pts.end(), std::pair<std::uint64_t, std::uint64_t>{1 % n, 0}));
  auto index = [&](std::uint64_t x, std::uint64_t y) {
    return static_cast<Point>(std::find(pts.begin(), pts.end(), std::pair{x % n, y % n}) - pts.begin());
  };
  std::vector<Point> e, t;
  for (auto [x, y] : pts) {
    e.push_back(index(n - y % n, x));  // (x, y) E = (-y, x)
    t.push_back(index(x, x + y));      // (x, y) T = (x, x + y)
  }
  return {Permutation(e), Permutation(t)};
}
}  // namespace

TEST_SUITE("congruence") {
  TEST_CASE("sl2 orders") {
    CHECK(sl2_order(1) == 1);
    CHECK(sl2_order(2) == 6);
    CHECK(sl2_order(3) == 24);
    CHECK(sl2_order(4) == 48);
    CHECK(sl2_order(10) == 720);
    CHECK(sl2_order(60) == 138240);
  }

  TEST_CASE("matrix words") {
    std::uint64_t n = 97;
    auto e = mat_E(n), t = mat_T(n);
    CHECK(evaluate_word({1, 1, 1, 1}, n) == mat_identity(n));
    CHECK(mat_is_minus_identity(evaluate_word({1, 1}, n), n));
    CHECK(evaluate_word({1, 2, 1, 2, 1, 2}, n) == mat_identity(n));
    CHECK(evaluate_word({1, -2, -1}, n) == Mat2{{1, 0, 1, 1}});
    CHECK(evaluate_word({1, 2}, n) == mat_mul(e, t, n));
    for (auto const& w : sl2z_relators()) CHECK(evaluate_word(w, n) == mat_identity(n));
  }

  TEST_CASE("relator family presents SL2(Z/N) for N <= 60") {
    for (std::uint64_t n = 1; n <= 60; ++n) {
      CAPTURE(n);
      for (auto const& w : congruence_relators(n)) CHECK(evaluate_word(w, n) == mat_identity(n));
      CHECK(validate_relator_family(n) == std::optional<bool>(true));
    }
  }

  TEST_CASE("a broken family is rejected") {
    // dropping everything except T^N leaves an infinite group
    auto rels = sl2z_relators();
    rels.push_back(Word(7, 2));
    auto res = enumerate_cosets_of_T(rels, 20000);
    CHECK_FALSE(res.completed);
    // SL2(Z/2) = S3 from E^2 and T^2
    rels = sl2z_relators();
    rels.push_back({2, 2});
    rels.push_back({1, 1});
    res = enumerate_cosets_of_T(rels, 20000);
    REQUIRE(res.completed);
    CHECK(res.index == 3);
  }

  TEST_CASE("methods agree on actions that factor") {
    for (std::uint64_t n : {2u, 3u, 4u, 5u, 6u, 8u, 9u, 12u, 14u, 15u}) {
      CAPTURE(n);
      auto [e, t] = primitive_vectors_action(n);
      CHECK(diagonal_oracle(e, t, n, kDefaultOracleCap) == Congruence::congruence);
      CHECK(relation_check(e, t, n) == Congruence::congruence);
      // also congruence at any multiple
      CHECK(diagonal_oracle(e, t, 2 * n, kDefaultOracleCap) == Congruence::congruence);
      // but not at a modulus that does not kill Gamma(n)... unless it divides n
      if (n > 2) CHECK(diagonal_oracle(e, t, n - 1, kDefaultOracleCap) == Congruence::noncongruence);
      if (n > 2) CHECK(relation_check(e, t, n - 1) == Congruence::noncongruence);
    }
  }

  TEST_CASE("oracle cap gives undetermined") {
    auto [e, t] = primitive_vectors_action(5);
    CHECK(diagonal_oracle(e, t, 5, 10) == Congruence::undetermined);
    CongruenceOptions opts;
    opts.oracle_cap = 10;
    auto v = test_congruence(e, t, 5, opts);
    CHECK(v.verdict == Congruence::congruence);
    CHECK(v.method == CongruenceMethod::relations);
    opts.method = CongruenceMethod::oracle;
    CHECK(test_congruence(e, t, 5, opts).verdict == Congruence::undetermined);
  }
}
