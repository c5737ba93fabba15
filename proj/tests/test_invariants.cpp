#include "doctest.h"

#include <numeric>

#include "gstruct/builtin_groups.hpp"
#include "gstruct/curve_invariants.hpp"
#include "gstruct/report.hpp"

using namespace gstruct;

namespace {
// Direct isomorphism search between two transitive E,T-sets: try every image
// of point 0 and extend along E and T.
bool isomorphic(OrbitAction const& x, OrbitAction const& y) {
  if (x.size() != y.size()) return false;
  std::size_t d = x.size();
  for (Point q = 0; q < d; ++q) {
    std::vector<std::int64_t> phi(d, -1), used(d, 0);
    phi[0] = q;
    used[q] = 1;
    std::vector<Point> stack{0};
    bool ok = true;
    while (ok && !stack.empty()) {
      Point p = stack.back();
      stack.pop_back();
      auto img = static_cast<Point>(phi[p]);
      for (auto [px, py] : {std::pair{x.perm_E[p], y.perm_E[img]}, std::pair{x.perm_T[p], y.perm_T[img]}}) {
        if (phi[px] < 0) {
          if (used[py]) { ok = false; break; }
          phi[px] = py;
          used[py] = 1;
          stack.push_back(px);
        } else if (phi[px] != py) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return true;
  }
  return false;
}

struct Computed {
  std::unique_ptr<FiniteGroup> group;
  std::unique_ptr<GroupAnalysis> analysis;
};
Computed compute(char const* desc) {
  Computed c;
  c.group = builtin_group(desc);
  c.analysis = analyze(*c.group, {});
  return c;
}
}  // namespace

TEST_SUITE("invariants") {
  TEST_CASE("level and genus formulas") {
    CHECK(geometric_level({1, 2}) == 2);
    CHECK(geometric_level({2, 3, 3, 5, 5}) == 30);
    CHECK(geometric_level({3, 4}) == 12);
    CHECK(genus_modular_curve(18, 0, 0, 5) == 0);
    CHECK(genus_modular_curve(690, 12, 0, 81) == 15);
    CHECK(genus_modular_curve(7, 1, 1, 2) == 0);
    CHECK_THROWS_AS(genus_modular_curve(7, 0, 0, 2), std::logic_error);
  }

  TEST_CASE("signatures of small groups") {
    auto s3 = compute("S3");
    REQUIRE(s3.analysis->orbits.size() == 1);
    CHECK(signature(s3.analysis->orbits[0]) == Signature{3, 3, 1, 0, 1, {1, 2}});
    auto q8 = compute("Q8");
    CHECK(signature(q8.analysis->orbits[0]) == Signature{6, 6, 0, 0, 1, {2, 2, 2}});
    auto psl = compute("PSL(2,7)");
    auto const& largest = psl.analysis->orbits.back();
    CHECK(signature(largest) == Signature{36, 18, 0, 0, 0, {1, 3, 3, 4, 7}});
    CHECK(psl.analysis->records.back().fine);
  }

  TEST_CASE("cover data") {
    auto a5 = compute("A5");
    for (auto const& r : a5.analysis->records) {
      if (r.sig.d == 18) CHECK(r.cover.e == 3);
      if (r.sig.d == 18) CHECK(r.cover.genus_cover == 21);
      if (r.sig.d == 10) CHECK(r.cover.genus_cover == 25);
    }
    auto c5 = compute("C5");
    CHECK(c5.analysis->records[0].cover.e == 1);
    CHECK(c5.analysis->records[0].cover.genus_cover == 1);
  }

  TEST_CASE("congruence verdicts") {
    auto c5 = compute("C5");
    REQUIRE(c5.analysis->orbits.size() == 1);
    auto const& rec = c5.analysis->records[0];
    CHECK(rec.sig.d == 24);
    CHECK(rec.congruence.tested_modulus == 10);
    CHECK(rec.congruence.verdict == Congruence::congruence);
    CHECK(rec.congruence.oracle == Congruence::congruence);
    CHECK(rec.congruence.relations == Congruence::congruence);
    auto q8 = compute("Q8");
    CHECK(q8.analysis->records[0].congruence.verdict == Congruence::congruence);
    auto a5 = compute("A5");
    for (auto const& r : a5.analysis->records) CHECK(r.congruence.verdict == Congruence::noncongruence);
  }

  TEST_CASE("multiplicity blocks agree with direct isomorphism search") {
    for (auto desc : {"A5", "PSL(2,7)", "C3xC3", "S4", "D10", "Q16", "A4"}) {
      CAPTURE(desc);
      auto c = compute(desc);
      auto const& orbits = c.analysis->orbits;
      auto blocks = group_by_conjugate_stabilizers(orbits);
      for (std::size_t i = 0; i < orbits.size(); ++i) {
        for (std::size_t j = 0; j < orbits.size(); ++j) {
          CHECK((blocks[i] == blocks[j]) == isomorphic(orbits[i], orbits[j]));
        }
      }
    }
  }

  TEST_CASE("the two d=32 orbits of PSL(2,7) are not conjugate") {
    auto c = compute("PSL(2,7)");
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < c.analysis->orbits.size(); ++i)
      if (c.analysis->orbits[i].size() == 32) idx.push_back(i);
    REQUIRE(idx.size() == 2);
    auto const& r0 = c.analysis->records[idx[0]];
    auto const& r1 = c.analysis->records[idx[1]];
    CHECK(r0.sig == r1.sig);
    CHECK(r0.multiplicity_group != r1.multiplicity_group);
  }

  TEST_CASE("canonical code is independent of point numbering") {
    auto c = compute("A5");
    auto const& o = c.analysis->orbits.back();
    // relabel points by reversing the index order
    std::size_t d = o.size();
    std::vector<Point> e(d), t(d);
    for (Point i = 0; i < d; ++i) {
      e[d - 1 - i] = static_cast<Point>(d - 1 - o.perm_E[i]);
      t[d - 1 - i] = static_cast<Point>(d - 1 - o.perm_T[i]);
    }
    OrbitAction r = o;
    r.perm_E = Permutation(e);
    r.perm_T = Permutation(t);
    CHECK(canonical_code(r) == canonical_code(o));
  }

  TEST_CASE("coprime witnesses") {
    auto check = [](char const* desc, std::vector<std::uint64_t> orders) {
      auto c = compute(desc);
      auto w = coprime_witness(*c.group, c.analysis->fiber);
      REQUIRE(w.has_value());
      auto const& g = *c.group;
      std::vector<std::uint64_t> got{g.element_order(w->a), g.element_order(w->b),
                                     g.element_order(g.multiply(w->a, w->b))};
      std::sort(got.begin(), got.end());
      CHECK(got == orders);
      CHECK(std::gcd(got[0], got[1]) == 1);
      CHECK(std::gcd(got[0], got[2]) == 1);
      CHECK(std::gcd(got[1], got[2]) == 1);
      auto i = c.analysis->fiber.index_of(*w);
      for (std::size_t o = 0; o < c.analysis->orbits.size(); ++o) {
        auto const& pts = c.analysis->orbits[o].points;
        if (std::binary_search(pts.begin(), pts.end(), *w)) {
          CHECK(c.analysis->records[o].congruence.verdict == Congruence::noncongruence);
        }
      }
      CHECK(i.has_value());
    };
    check("A5", {2, 3, 5});
    check("PSL(2,7)", {2, 3, 7});
    auto c6 = compute("C6");
    CHECK_FALSE(coprime_witness(*c6.group, c6.analysis->fiber).has_value());
    auto c1 = compute("C1");
    CHECK_FALSE(coprime_witness(*c1.group, c1.analysis->fiber).has_value());
  }

  TEST_CASE("structural identities across groups") {
    for (auto desc : {"S3", "D8", "Q8", "D10", "C3xC3", "A4", "S4", "A5", "PSL(2,7)", "C12", "Q16",
                      "D12xC2", "C4xC4"}) {
      CAPTURE(desc);
      auto c = compute(desc);
      auto exponent = c.group->exponent();
      std::size_t total = 0;
      for (std::size_t i = 0; i < c.analysis->orbits.size(); ++i) {
        auto const& r = c.analysis->records[i];
        total += r.sig.d;
        CHECK(std::accumulate(r.sig.cusp_widths.begin(), r.sig.cusp_widths.end(), std::uint64_t{0}) == r.sig.mu);
        CHECK(r.sig.mu == (r.sig.c_neg1 ? r.sig.d : r.sig.d / 2));
        CHECK(exponent % r.level == 0);
        CHECK(exponent % r.cover.e == 0);
        CHECK(r.fine == (r.sig.c4 == 0 && r.sig.c6 == 0 && r.sig.c_neg1 == 0));
        CHECK(r.congruence.verdict != Congruence::undetermined);
      }
      CHECK(total == c.analysis->fiber.size());
      auto blocks = group_by_conjugate_stabilizers(c.analysis->orbits);
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (std::size_t j = 0; j < blocks.size(); ++j) {
          if (blocks[i] != blocks[j]) continue;
          auto const& x = c.analysis->records[i];
          auto const& y = c.analysis->records[j];
          CHECK(x.sig == y.sig);
          CHECK(x.level == y.level);
          CHECK(x.genus_curve == y.genus_curve);
          CHECK(x.congruence.verdict == y.congruence.verdict);
        }
      }
    }
  }
}
