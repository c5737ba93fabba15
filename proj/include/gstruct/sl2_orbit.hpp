#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gstruct/pair_enum.hpp"
#include "gstruct/permutation.hpp"

namespace gstruct {

// Lifts of E = [[0,1],[-1,0]] and T = [[1,1],[0,1]] to Aut(F2), applied to a
// pair and followed by canonicalization:
//   E: (a, b) -> (b^-1, a)    T: (a, b) -> (a, ab)    -I: (a, b) -> (a^-1, b^-1)
// Under abelianization these induce the matrices E and T acting on row
// vectors from the right, so a matrix product M1 M2 acts as M1 then M2.
ExteriorPair act_E(PairCanonicalizer const& canon, ExteriorPair p);
ExteriorPair act_T(PairCanonicalizer const& canon, ExteriorPair p);
ExteriorPair act_T_inverse(PairCanonicalizer const& canon, ExteriorPair p);
ExteriorPair act_negI(PairCanonicalizer const& canon, ExteriorPair p);

// One SL2(Z)-orbit on the fiber. Points are sorted ascending; perm_E and
// perm_T act on point indices. pm_classes are the {p, -p} classes, numbered
// by least member; perm_E_pm and perm_T_pm are the induced actions.
struct OrbitAction {
  std::vector<ExteriorPair> points;
  Permutation perm_E;
  Permutation perm_T;
  bool neg_fixed = false;
  std::vector<std::uint32_t> pm_class_of;
  std::vector<std::vector<std::uint32_t>> pm_classes;
  Permutation perm_E_pm;
  Permutation perm_T_pm;

  std::size_t size() const noexcept { return points.size(); }
  Permutation perm_negI() const { return perm_E * perm_E; }
  // Order-3 element of PSL2(Z) used for elliptic points of order 3: E then T.
  Permutation order3_witness_pm() const { return perm_E_pm * perm_T_pm; }
};

// The actions of E and T on the whole fiber, as permutations of its indices.
struct FiberAction {
  Permutation perm_E;
  Permutation perm_T;
};
FiberAction fiber_action(PairCanonicalizer const& canon, Fiber const& fiber, unsigned jobs = 1);

// Builds one orbit from an explicit point set and the fiber-wide action.
OrbitAction make_orbit(Fiber const& fiber, FiberAction const& action,
                       std::vector<std::uint32_t> fiber_indices);

// Orbits of <E, T> on the fiber, sorted by (size, least point).
std::vector<OrbitAction> orbit_decompose(PairCanonicalizer const& canon, Fiber const& fiber,
                                         unsigned jobs = 1);

}  // namespace gstruct
