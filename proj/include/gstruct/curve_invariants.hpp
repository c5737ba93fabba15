#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gstruct/congruence.hpp"
#include "gstruct/finite_group.hpp"
#include "gstruct/pair_enum.hpp"
#include "gstruct/sl2_orbit.hpp"

namespace gstruct {

struct Signature {
  std::size_t d = 0;       // orbit size, the index in SL2(Z)
  std::size_t mu = 0;      // index in PSL2(Z)
  std::size_t c4 = 0;      // elliptic points of order 2
  std::size_t c6 = 0;      // elliptic points of order 3
  std::size_t c_neg1 = 0;  // 1 iff -I is in the stabilizer
  std::vector<std::uint64_t> cusp_widths;  // ascending
  friend bool operator==(Signature const&, Signature const&) = default;
};

// Widths are the cycle lengths of perm_T_pm, c4 and c6 the fixed points of
// perm_E_pm and of the order-3 witness. Throws std::logic_error when the
// orbit violates a structural identity (width sum, mu, witness orders).
Signature signature(OrbitAction const& orbit);

std::uint64_t geometric_level(std::vector<std::uint64_t> const& widths);

// 1 + mu/12 - c4/4 - c6/3 - cusps/2. Throws std::logic_error unless it is a
// nonnegative integer.
std::uint64_t genus_modular_curve(std::size_t mu, std::size_t c4, std::size_t c6,
                                  std::size_t cusps);

struct CoverData {
  std::uint64_t e = 1;  // order of the commutator
  std::uint64_t genus_cover = 1;
  std::size_t nielsen_class = 0;  // conjugacy class id of the commutator
};

// Uses the orbit's least point. With `check_all_points`, throws
// std::logic_error if the class of the commutator varies over the orbit.
CoverData cover_data(FiniteGroup const& group, OrbitAction const& orbit,
                     bool check_all_points = true);

bool is_fine(Signature const& sig);

// l when -I is in the stabilizer, else 2l.
std::uint64_t congruence_modulus(Signature const& sig);

CongruenceVerdict is_congruence(OrbitAction const& orbit, Signature const& sig,
                                CongruenceOptions const& options = {});

// Canonical code of the transitive action graph (E- and T-successors), the
// least BFS code over all base points. Equal codes iff the stabilizers are
// conjugate in SL2(Z).
std::vector<std::uint32_t> canonical_code(OrbitAction const& orbit);

// Block id per orbit; blocks are numbered by first occurrence.
std::vector<std::size_t> group_by_conjugate_stabilizers(std::vector<OrbitAction> const& orbits,
                                                        unsigned jobs = 1);

// A canonical pair whose |a|, |b|, |ab| are pairwise coprime, with the least
// sorted order triple; none for the trivial group.
std::optional<ExteriorPair> coprime_witness(FiniteGroup const& group, Fiber const& fiber);

struct ComponentRecord {
  Signature sig;
  std::uint64_t level = 1;
  std::uint64_t genus_curve = 0;
  bool fine = false;
  CoverData cover;
  std::string nielsen_label;
  CongruenceVerdict congruence;
  std::size_t multiplicity_group = 0;
};

ComponentRecord component_record(FiniteGroup const& group, OrbitAction const& orbit,
                                 CongruenceOptions const& options = {});

}  // namespace gstruct
