#include "doctest.h"

#include <set>

#include "gstruct/builtin_groups.hpp"
#include "gstruct/dihedral.hpp"
#include "gstruct/sl2_orbit.hpp"

using namespace gstruct;

TEST_SUITE("dihedral") {
  TEST_CASE("normal form round trip and multiplication") {
    for (std::uint64_t k : {3u, 4u, 7u, 12u}) {
      for (std::uint64_t n = 0; n < k; ++n) {
        for (bool s : {false, true}) {
          DihedralElement x{n, s};
          CHECK(decode_dihedral(k, dihedral_permutation(k, x)) == x);
          for (std::uint64_t m = 0; m < k; ++m) {
            for (bool t : {false, true}) {
              DihedralElement y{m, t};
              // (n, s)(m, t) = (n + s m, s t)
              DihedralElement xy{(n + (s ? k - m : m)) % k, s != t};
              CHECK(dihedral_permutation(k, x) * dihedral_permutation(k, y) == dihedral_permutation(k, xy));
            }
          }
        }
      }
    }
    CHECK_THROWS(decode_dihedral(5, Permutation::parse("(1,2)", 5)));
  }

  TEST_CASE("classification examples") {
    auto g3 = builtin_group("D6");
    PairCanonicalizer c3(*g3);
    auto p = canonical_pair(c3, dihedral_permutation(3, {1, false}), dihedral_permutation(3, {0, true}));
    auto cls = classify_dihedral_pair(*g3, 3, p);
    CHECK(cls.ab_type == DihedralAbType{false, true, std::nullopt});
    CHECK(cls.inv_exponent == 1);

    auto g4 = builtin_group("D8");
    PairCanonicalizer c4(*g4);
    auto q = canonical_pair(c4, dihedral_permutation(4, {1, false}), dihedral_permutation(4, {0, true}));
    auto cls4 = classify_dihedral_pair(*g4, 4, q);
    CHECK(to_string(cls4.ab_type) == "(+,-,0)");
    CHECK(cls4.inv_exponent == 1);

    auto g5 = builtin_group("D10");
    PairCanonicalizer c5(*g5);
    std::set<std::uint64_t> invs;
    auto fiber5 = enumerate_exterior_surjections(c5);
    for (auto const& pp : fiber5.pairs()) invs.insert(classify_dihedral_pair(*g5, 5, pp).inv_exponent);
    CHECK(invs == std::set<std::uint64_t>{1, 2});
  }

  TEST_CASE("transition tables") {
    DihedralAbType pm0{false, true, 0}, mp0{true, false, 0}, mm0{true, true, 0};
    CHECK(dihedral_E_transition(pm0) == mp0);
    CHECK(dihedral_E_transition(mp0) == pm0);
    CHECK(dihedral_E_transition(mm0) == DihedralAbType{true, true, 1});
    CHECK(dihedral_T_transition(pm0) == DihedralAbType{false, true, 1});
    CHECK(dihedral_T_transition(mp0) == DihedralAbType{true, true, 1});
    CHECK(dihedral_T_transition(mm0) == DihedralAbType{true, false, 1});
    DihedralAbType odd{true, true, std::nullopt};
    CHECK(dihedral_E_transition(odd) == odd);
  }

  TEST_CASE("structure theorem for small k") {
    for (std::uint64_t k = 3; k <= 16; ++k) {
      CAPTURE(k);
      auto rep = verify_dihedral_theorem(k);
      for (auto const& f : rep.failures) MESSAGE(f);
      CHECK(rep.passed());
    }
    CHECK(verify_dihedral_theorem(3).orbit_count == 1);
    CHECK(verify_dihedral_theorem(4).orbit_count == 1);
    CHECK(verify_dihedral_theorem(12).orbit_count == 2);
  }
}
