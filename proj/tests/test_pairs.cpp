#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "gstruct/builtin_groups.hpp"
#include "gstruct/pair_enum.hpp"
#include "gstruct/sl2_orbit.hpp"

using namespace gstruct;

namespace {
// All generating pairs partitioned by explicit simultaneous conjugation.
std::size_t brute_force_fiber_size(FiniteGroup const& g) {
  std::set<std::pair<Permutation, Permutation>> seen;
  std::size_t classes = 0;
  std::vector<Permutation> all;
  for (ElementId x = 0; x < g.size(); ++x) all.push_back(g.element(x));
  for (auto const& a : all) {
    for (auto const& b : all) {
      if (seen.count({a, b}) || !is_generating_pair(g, a, b)) continue;
      ++classes;
      for (auto const& h : all) seen.insert({conjugate(h, a), conjugate(h, b)});
    }
  }
  return classes;
}

std::size_t fiber_size(char const* desc) {
  auto g = builtin_group(desc);
  PairCanonicalizer canon(*g);
  return enumerate_exterior_surjections(canon).size();
}

std::multiset<std::size_t> orbit_sizes(char const* desc) {
  auto g = builtin_group(desc);
  PairCanonicalizer canon(*g);
  auto fiber = enumerate_exterior_surjections(canon);
  std::multiset<std::size_t> out;
  for (auto const& o : orbit_decompose(canon, fiber)) out.insert(o.size());
  return out;
}
}  // namespace

TEST_SUITE("pairs") {
  TEST_CASE("fiber sizes against brute force") {
    for (auto desc : {"C1", "C2", "C5", "C6", "S3", "D8", "Q8", "D10", "C3xC3", "A4", "Q12",
                      "D12", "C2xC2xC2", "S4", "C2xC4", "D8xC3"}) {
      CAPTURE(desc);
      auto g = builtin_group(desc);
      PairCanonicalizer canon(*g);
      CHECK(enumerate_exterior_surjections(canon).size() == brute_force_fiber_size(*g));
    }
  }

  TEST_CASE("known fiber sizes") {
    CHECK(fiber_size("S3") == 3);
    CHECK(fiber_size("C5") == 24);
    CHECK(fiber_size("Q8") == 6);
    CHECK(fiber_size("C3xC3") == 48);
    CHECK(fiber_size("A5") == 38);
    CHECK(fiber_size("C2xC2xC2") == 0);
  }

  TEST_CASE("abelian fibers count generating pairs") {
    for (auto desc : {"C7", "C2xC6", "C4xC4", "C3xC3"}) {
      CAPTURE(desc);
      auto g = builtin_group(desc);
      std::size_t pairs = 0;
      for (ElementId a = 0; a < g->size(); ++a)
        for (ElementId b = 0; b < g->size(); ++b)
          pairs += pair_generates(*g, g->element(a), g->element(b));
      CHECK(fiber_size(desc) == pairs);
    }
  }

  TEST_CASE("canonicalization is conjugation invariant and idempotent") {
    std::mt19937 rng(11);
    for (auto desc : {"S4", "A5", "Q8", "PSL(2,7)", "D12"}) {
      CAPTURE(desc);
      auto g = builtin_group(desc);
      PairCanonicalizer canon(*g);
      auto fiber = enumerate_exterior_surjections(canon);
      std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(g->size() - 1));
      for (std::size_t i = 0; i < fiber.size(); i += 1 + fiber.size() / 10) {
        auto p = fiber[i];
        CHECK(canon.canonical(p.a, p.b) == p);
        for (int k = 0; k < 100; ++k) {
          ElementId h = pick(rng);
          CHECK(canon.canonical(g->conjugate(h, p.a), g->conjugate(h, p.b)) == p);
        }
      }
    }
  }

  TEST_CASE("canonical_pair on permutations") {
    auto g = builtin_group("S3");
    PairCanonicalizer canon(*g);
    auto a = Permutation::parse("(1,2)", 3), b = Permutation::parse("(1,2,3)", 3);
    auto p = canonical_pair(canon, a, b);
    for (ElementId h = 0; h < 6; ++h) {
      auto ph = g->element(h);
      CHECK(canonical_pair(canon, conjugate(ph, a), conjugate(ph, b)) == p);
    }
    CHECK_THROWS_AS(canonical_pair(canon, b, b.inverse()), std::invalid_argument);
  }

  TEST_CASE("commutator orders") {
    auto s3 = builtin_group("S3");
    PairCanonicalizer c3(*s3);
    auto p = canonical_pair(c3, Permutation::parse("(1,2)", 3), Permutation::parse("(1,2,3)", 3));
    CHECK(element_order(commutator(*s3, p)) == 3);

    auto d8 = builtin_group("D8");
    PairCanonicalizer c8(*d8);
    auto refl = d8->generators()[1], rot = d8->generators()[0];
    auto q = canonical_pair(c8, refl, rot);
    auto c = commutator(*d8, q);
    CHECK(c == power(rot, 2));
    CHECK(element_order(c) == 2);
    for (auto desc : {"A5", "PSL(2,7)", "S4"}) {
      auto g = builtin_group(desc);
      PairCanonicalizer canon(*g);
      auto fiber = enumerate_exterior_surjections(canon);
      for (auto const& pp : fiber.pairs()) {
        CHECK(g->exponent() % element_order(commutator(*g, pp)) == 0);
      }
    }
  }

  TEST_CASE("parallel enumeration is deterministic") {
    auto g = builtin_group("PSL(2,7)");
    PairCanonicalizer canon(*g);
    auto one = enumerate_exterior_surjections(canon, 1);
    auto four = enumerate_exterior_surjections(canon, 4);
    CHECK(one.pairs() == four.pairs());
  }
}

TEST_SUITE("orbits") {
  TEST_CASE("orbit sizes") {
    CHECK(orbit_sizes("C3xC3") == std::multiset<std::size_t>{24, 24});
    CHECK(orbit_sizes("S3") == std::multiset<std::size_t>{3});
    CHECK(orbit_sizes("A5") == std::multiset<std::size_t>{10, 10, 18});
    CHECK(orbit_sizes("C5") == std::multiset<std::size_t>{24});
    CHECK(orbit_sizes("PSL(2,7)") == std::multiset<std::size_t>{7, 7, 32, 32, 36});
  }

  TEST_CASE("action laws") {
    std::mt19937 rng(3);
    for (auto desc : {"S3", "Q8", "A5", "PSL(2,7)", "C4xC2"}) {
      CAPTURE(desc);
      auto g = builtin_group(desc);
      PairCanonicalizer canon(*g);
      auto fiber = enumerate_exterior_surjections(canon);
      for (auto const& p : fiber.pairs()) {
        auto e2 = act_E(canon, act_E(canon, p));
        CHECK(e2 == act_negI(canon, p));
        CHECK(act_E(canon, act_E(canon, e2)) == p);
        CHECK(act_T_inverse(canon, act_T(canon, p)) == p);
        CHECK(fiber.index_of(act_T_inverse(canon, p)).has_value());
      }
      for (auto const& o : orbit_decompose(canon, fiber)) {
        auto e = o.perm_E;
        CHECK(power(e, 4).is_identity());
        CHECK(power(o.perm_E_pm, 2).is_identity());
        CHECK(power(o.order3_witness_pm(), 3).is_identity());
        CHECK(o.pm_classes.size() == (o.neg_fixed ? o.size() : o.size() / 2));
        // (ET)^3 = I in SL2(Z), so the raw action satisfies it too
        CHECK(power(o.perm_E * o.perm_T, 3).is_identity());
        CHECK(std::is_sorted(o.points.begin(), o.points.end()));
      }
    }
  }

  TEST_CASE("act_T on the S3 pair") {
    auto g = builtin_group("S3");
    PairCanonicalizer canon(*g);
    auto a = Permutation::parse("(1,2)", 3), b = Permutation::parse("(1,2,3)", 3);
    auto p = canonical_pair(canon, a, b);
    CHECK(act_T(canon, p) == canonical_pair(canon, a, a * b));
    auto inv = canonical_pair(canon, Permutation::parse("(1,2)", 3), Permutation::parse("(2,3)", 3));
    CHECK(act_negI(canon, inv) == inv);
  }

  TEST_CASE("decomposition does not depend on fiber order") {
    auto g = builtin_group("A5");
    PairCanonicalizer canon(*g);
    auto fiber = enumerate_exterior_surjections(canon);
    auto action = fiber_action(canon, fiber);
    auto orbits = orbit_decompose(canon, fiber);
    // rebuild each orbit from a shuffled seed list
    std::mt19937 rng(5);
    for (auto const& o : orbits) {
      std::vector<std::uint32_t> idx;
      for (auto const& p : o.points) idx.push_back(static_cast<std::uint32_t>(*fiber.index_of(p)));
      std::shuffle(idx.begin(), idx.end(), rng);
      auto again = make_orbit(fiber, action, idx);
      CHECK(again.points == o.points);
      CHECK(again.perm_E == o.perm_E);
      CHECK(again.perm_T == o.perm_T);
    }
  }
}
