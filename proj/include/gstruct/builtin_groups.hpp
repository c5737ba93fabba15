#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gstruct/finite_group.hpp"

namespace gstruct {

// Builds a group from a descriptor:
//   Cn             cyclic of order n
//   Dn             dihedral of order n (natural action on n/2 points when n >= 6)
//   Qn             dicyclic of order n (generalized quaternion when n is a
//                  power of 2), regular representation
//   Sn, An         symmetric / alternating on n points
//   PSL(2,p)       p prime, acting on the projective line (p + 1 points)
//   Sz(8)          from the bundled generator file
//   AxB            direct product of any of the above ('x' at top level)
//   file:<path>    generators in the text format below
// Throws std::invalid_argument for unknown or malformed descriptors and when a
// named family does not come out with its advertised order.
std::unique_ptr<FiniteGroup> builtin_group(std::string_view descriptor,
                                           std::uint64_t enumeration_cap = kDefaultEnumerationCap);

// The descriptor with whitespace removed, as recorded on the group.
std::string normalize_descriptor(std::string_view descriptor);

// Generator file format: a `degree <n>` line, then one permutation per line in
// 1-based disjoint-cycle notation, e.g. `(1,2)(3,4)`; `()` is the identity.
// Blank lines and lines starting with '#' are skipped.
std::vector<Permutation> parse_generator_text(std::string_view text);
std::vector<Permutation> load_generator_file(std::string const& path);

// Directory holding bundled generator files (e.g. sz8.gens).
std::string data_directory();

}  // namespace gstruct
