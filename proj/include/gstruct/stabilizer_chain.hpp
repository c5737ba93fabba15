#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gstruct/permutation.hpp"

namespace gstruct {

// Base and strong generating set for a permutation group, built with Knuth's
// formulation of the Schreier-Sims algorithm. Transversals are stored
// explicitly (degrees here are small), which makes sifting and the dense
// element ranking below cheap.
class StabilizerChain {
 public:
  // `base_prefix` points become the first base points, in order, even if
  // some of them turn out to have trivial basic orbits.
  StabilizerChain(std::size_t degree, std::span<Permutation const> generators,
                  std::span<Point const> base_prefix = {});

  std::size_t degree() const noexcept { return degree_; }
  std::vector<Point> base() const;
  std::vector<std::size_t> orbit_sizes() const;
  // Product of the basic orbit lengths. Throws std::overflow_error past 2^64.
  std::uint64_t order() const;

  bool contains(Permutation const& g) const;

  struct StripResult {
    Permutation residue;
    std::size_t level;  // first level where sifting failed, or depth()
  };
  StripResult strip(Permutation const& g) const;

  // Mixed-radix coordinates of g with respect to the transversals (level 0
  // most significant). This is a bijection G -> [0, |G|) with the identity
  // at rank 0; nullopt for non-members.
  std::optional<std::uint64_t> rank(Permutation const& g) const;
  Permutation unrank(std::uint64_t rank) const;

  // Same as rank() on a raw image array; `scratch` must have size degree().
  // Returns UINT64_MAX for non-members.
  std::uint64_t rank_images(std::span<Point const> images,
                            std::vector<Point>& scratch) const;

  std::size_t depth() const noexcept { return levels_.size(); }

 private:
  struct Level {
    Point base_point = 0;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;
    std::vector<std::int32_t> orbit_index;  // per point, -1 if not in orbit
    std::vector<Permutation> transversal;      // transversal[k] maps base to orbit[k]
    std::vector<Permutation> transversal_inv;
  };

  void add_generator(Permutation g, std::size_t level);   // Knuth's "A"
  void close_orbit(Permutation g, std::size_t level);     // Knuth's "B"
  bool member_from(Permutation const& g, std::size_t level) const;
  void push_level(Point base_point);

  std::size_t degree_;
  std::vector<Level> levels_;
  std::vector<std::uint64_t> strides_;
};

}  // namespace gstruct
