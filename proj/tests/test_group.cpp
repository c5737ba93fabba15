#include "doctest.h"

#include <map>
#include <numeric>
#include <set>

#include "gstruct/builtin_groups.hpp"
#include "gstruct/finite_group.hpp"

using namespace gstruct;

namespace {
// Brute-force conjugacy classes straight from permutations.
std::vector<std::set<Permutation>> naive_classes(FiniteGroup const& g) {
  std::vector<Permutation> all;
  for (ElementId x = 0; x < g.size(); ++x) all.push_back(g.element(x));
  std::set<Permutation> done;
  std::vector<std::set<Permutation>> out;
  for (auto const& x : all) {
    if (done.count(x)) continue;
    std::set<Permutation> cls;
    for (auto const& h : all) cls.insert(conjugate(h, x));
    done.insert(cls.begin(), cls.end());
    out.push_back(cls);
  }
  return out;
}
}  // namespace

TEST_SUITE("group") {
  TEST_CASE("enumeration agrees with permutation arithmetic") {
    auto g = builtin_group("A5");
    REQUIRE(g->size() == 60);
    CHECK(g->element(0).is_identity());
    for (ElementId x = 0; x < 60; x += 7) {
      for (ElementId y = 0; y < 60; y += 5) {
        auto px = g->element(x), py = g->element(y);
        CHECK(g->element(g->multiply(x, y)) == px * py);
        CHECK(g->element(g->conjugate(x, y)) == conjugate(px, py));
        CHECK(g->element(g->commutator(x, y)) == commutator(px, py));
      }
      CHECK(g->multiply(x, g->inverse(x)) == 0);
      CHECK(g->index_of(g->element(x)) == x);
    }
  }

  TEST_CASE("conjugacy classes match brute force") {
    for (auto desc : {"A5", "S4", "Q8", "D10", "C3xC3", "PSL(2,7)", "Q12", "D8xC2"}) {
      CAPTURE(desc);
      auto g = builtin_group(desc);
      auto const& ct = g->classes();
      auto naive = naive_classes(*g);
      REQUIRE(ct.size() == naive.size());
      std::uint64_t total = 0;
      for (std::size_t c = 0; c < ct.size(); ++c) {
        total += ct.class_size(c);
        CHECK(ct.class_size(c) * ct.centralizer_order(c) == g->order());
        auto rep = ct.representative(c);
        for (auto m : ct.members(c)) {
          CHECK(m >= rep);
          CHECK(ct.class_of(m) == c);
          CHECK(g->conjugate(ct.conjugator_to_rep(m), m) == rep);
        }
        for (auto z : ct.centralizer_generators(c)) {
          CHECK(g->multiply(z, rep) == g->multiply(rep, z));
        }
        if (c > 0) CHECK(ct.representative(c - 1) < rep);
      }
      CHECK(total == g->order());
    }
  }

  TEST_CASE("class labels and exponent") {
    auto g = builtin_group("A5");
    auto const& ct = g->classes();
    std::multiset<std::string> labels;
    std::multiset<std::uint64_t> sizes;
    for (std::size_t c = 0; c < ct.size(); ++c) {
      labels.insert(ct.label(c));
      sizes.insert(ct.class_size(c));
    }
    CHECK(labels == std::multiset<std::string>{"1A", "2A", "3A", "5A", "5B"});
    CHECK(sizes == std::multiset<std::uint64_t>{1, 12, 12, 15, 20});
    CHECK(g->exponent() == 30);
    CHECK_FALSE(g->is_abelian());
    CHECK(builtin_group("C3xC3")->is_abelian());
    CHECK(builtin_group("Q8")->exponent() == 4);
  }

  TEST_CASE("generating pairs") {
    auto g = builtin_group("S4");
    CHECK(is_generating_pair(*g, Permutation::parse("(1,2)", 4), Permutation::parse("(1,2,3,4)", 4)));
    CHECK_FALSE(is_generating_pair(*g, Permutation::parse("(1,2)", 4), Permutation::parse("(3,4)", 4)));
    CHECK_FALSE(is_generating_pair(*g, Permutation::parse("(1,2,3)", 4), Permutation::parse("(1,3,2)", 4)));
    auto a5 = builtin_group("A5");
    CHECK_THROWS_AS(is_generating_pair(*a5, Permutation::parse("(1,2)", 5), Permutation::parse("(1,2,3)", 5)),
                    std::invalid_argument);
  }

  TEST_CASE("enumeration cap") {
    FiniteGroup big({Permutation::parse("(1,2)", 9), Permutation::parse("(1,2,3,4,5,6,7,8,9)", 9)}, "S9", 1000);
    CHECK(big.order() == 362880);
    CHECK_FALSE(big.enumerable());
    CHECK_THROWS_AS(big.size(), std::length_error);
  }
}
