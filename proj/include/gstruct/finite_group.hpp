#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "gstruct/permutation.hpp"
#include "gstruct/stabilizer_chain.hpp"

namespace gstruct {

// Dense index of an enumerated group element; 0 is the identity.
using ElementId = std::uint32_t;

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

class FiniteGroup;

// Conjugacy classes of an enumerated group.
//
// Each class representative is the least ElementId in its class, and classes
// are numbered by increasing representative (so class 0 is the identity).
// For every element x the table stores a conjugator g with g x g^-1 = rep;
// those conjugators (inverted) form a transversal of the representative's
// centralizer.
class ConjugacyClassTable {
 public:
  explicit ConjugacyClassTable(FiniteGroup const& group);

  std::size_t size() const noexcept { return reps_.size(); }
  ElementId representative(std::size_t cls) const { return reps_[cls]; }
  std::size_t class_of(ElementId x) const { return class_of_[x]; }
  // g with g x g^-1 = representative(class_of(x)).
  ElementId conjugator_to_rep(ElementId x) const { return to_rep_[x]; }
  std::span<ElementId const> members(std::size_t cls) const { return members_[cls]; }
  std::uint64_t class_size(std::size_t cls) const { return members_[cls].size(); }
  std::uint64_t centralizer_order(std::size_t cls) const;
  // A small generating set of the centralizer of the representative.
  std::span<ElementId const> centralizer_generators(std::size_t cls) const {
    return centralizer_gens_[cls];
  }
  std::uint64_t element_order(std::size_t cls) const { return orders_[cls]; }
  // "5A", "5B", ...: element order, then a letter by representative order.
  std::string const& label(std::size_t cls) const { return labels_[cls]; }

 private:
  std::uint64_t group_order_;
  std::vector<ElementId> reps_;
  std::vector<std::uint32_t> class_of_;
  std::vector<ElementId> to_rep_;
  std::vector<std::vector<ElementId>> members_;
  std::vector<std::vector<ElementId>> centralizer_gens_;
  std::vector<std::uint64_t> orders_;
  std::vector<std::string> labels_;
};

// A permutation group given by generators. Order and membership come from a
// stabilizer chain; element enumeration (dense ElementIds, products by index,
// conjugacy classes) is built on first use and is refused above
// `enumeration_cap` elements. All const methods are safe to call
// concurrently.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<Permutation> generators, std::string descriptor = {},
              std::uint64_t enumeration_cap = kDefaultEnumerationCap);

  std::size_t degree() const noexcept { return degree_; }
  std::vector<Permutation> const& generators() const noexcept { return generators_; }
  std::string const& descriptor() const noexcept { return descriptor_; }
  std::uint64_t order() const noexcept { return order_; }
  StabilizerChain const& chain() const noexcept { return chain_; }
  bool contains(Permutation const& p) const { return chain_.contains(p); }
  bool enumerable() const noexcept { return order_ <= enumeration_cap_; }

  // --- enumerated view; each throws std::length_error past the cap ---
  std::size_t size() const;
  ElementId index_of(Permutation const& p) const;  // throws if not a member
  ElementId index_of_images(std::span<Point const> images) const;
  Permutation element(ElementId x) const;
  std::span<Point const> images(ElementId x) const;
  ElementId multiply(ElementId x, ElementId y) const;
  ElementId inverse(ElementId x) const;
  // g x g^-1
  ElementId conjugate(ElementId g, ElementId x) const;
  // x y x^-1 y^-1
  ElementId commutator(ElementId x, ElementId y) const;
  std::uint64_t element_order(ElementId x) const;
  std::vector<ElementId> const& generator_ids() const;

  ConjugacyClassTable const& classes() const;
  // lcm of element orders over class representatives.
  std::uint64_t exponent() const;
  bool is_abelian() const;

  // Orbits of the group on points, as a point -> orbit id map.
  std::vector<std::uint32_t> const& point_orbits() const noexcept { return point_orbit_; }

 private:
  struct Enumeration {
    std::vector<Point> flat;       // |G| * degree images
    std::vector<ElementId> inv;
    std::vector<ElementId> gens;
  };
  Enumeration const& enumeration() const;

  std::vector<Permutation> generators_;
  std::string descriptor_;
  std::uint64_t enumeration_cap_;
  std::size_t degree_;
  StabilizerChain chain_;
  std::uint64_t order_;
  std::vector<std::uint32_t> point_orbit_;

  mutable std::once_flag enum_once_;
  mutable std::unique_ptr<Enumeration> enum_;
  mutable std::once_flag classes_once_;
  mutable std::unique_ptr<ConjugacyClassTable> classes_;
};

// True iff <a, b> = G. Throws std::invalid_argument if a or b is not in G.
bool is_generating_pair(FiniteGroup const& group, Permutation const& a,
                        Permutation const& b);
// Same test without the membership check.
bool pair_generates(FiniteGroup const& group, Permutation const& a, Permutation const& b);

}  // namespace gstruct
