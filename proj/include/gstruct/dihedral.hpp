#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gstruct/finite_group.hpp"
#include "gstruct/pair_enum.hpp"

namespace gstruct {

// D_2k as Z/k x| {+1, -1}: (n, s) acts on Z/k by x -> n + s x, and the
// permutation of (n, s) is the inverse of that map, so that products agree
// with the library's composition convention. Requires k >= 3.
struct DihedralElement {
  std::uint64_t n = 0;
  bool reflection = false;  // sign -1
  friend bool operator==(DihedralElement const&, DihedralElement const&) = default;
};

Permutation dihedral_permutation(std::uint64_t k, DihedralElement x);
// Throws std::invalid_argument if p is not an affine map x -> n +- x.
DihedralElement decode_dihedral(std::uint64_t k, Permutation const& p);

struct DihedralAbType {
  bool a_reflection = false;
  bool b_reflection = false;
  std::optional<int> parity;  // even k only
  friend bool operator==(DihedralAbType const&, DihedralAbType const&) = default;
};
std::string to_string(DihedralAbType const& t);

struct DihedralPairClass {
  std::uint64_t k = 0;
  DihedralAbType ab_type;
  std::uint64_t inv_exponent = 0;  // a unit mod k, stored as min(x, k - x)
  friend bool operator==(DihedralPairClass const&, DihedralPairClass const&) = default;
};

// `group` must be the natural D_2k on k points. Throws std::invalid_argument
// when the pair is not a generating pair of D_2k.
DihedralPairClass classify_dihedral_pair(FiniteGroup const& group, std::uint64_t k,
                                         ExteriorPair const& p);

// Expected images of an abelianization type under E and T.
DihedralAbType dihedral_E_transition(DihedralAbType t);
DihedralAbType dihedral_T_transition(DihedralAbType t);

struct DihedralReport {
  std::uint64_t k = 0;
  std::size_t expected_orbits = 0;  // phi(k) / 2
  std::size_t orbit_count = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

// Runs the generic engine on D_2k and checks the structure theorem; every
// discrepancy is reported in `failures`.
DihedralReport verify_dihedral_theorem(std::uint64_t k, unsigned jobs = 1);

}  // namespace gstruct
