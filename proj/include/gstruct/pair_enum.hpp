#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "gstruct/finite_group.hpp"

namespace gstruct {

// A generating pair up to simultaneous conjugation. Pairs produced by this
// module are always the canonical representative: the lexicographically
// least (a, b) by ElementId over the conjugacy class of the pair.
struct ExteriorPair {
  ElementId a = 0;
  ElementId b = 0;
  friend auto operator<=>(ExteriorPair const&, ExteriorPair const&) = default;
};

inline constexpr std::size_t kDefaultCanonicalTableBudget = std::size_t{512} << 20;

// Canonical forms for pairs of a fixed enumerated group.
//
// For a noncentral class representative r the orbit minima of C(r) acting on
// G by conjugation are tabulated on first use (|G| entries per class) while
// the total stays within `table_budget` bytes; beyond that the minimum is
// found by an orbit walk per call.
class PairCanonicalizer {
 public:
  explicit PairCanonicalizer(FiniteGroup const& group,
                             std::size_t table_budget = kDefaultCanonicalTableBudget);

  FiniteGroup const& group() const noexcept { return group_; }

  // Canonical representative of the class of (a, b). Does not test generation.
  ExteriorPair canonical(ElementId a, ElementId b) const;

  // Least element of the orbit of x under conjugation by C(rep of cls).
  ElementId centralizer_orbit_min(std::size_t cls, ElementId x) const;

 private:
  std::vector<ElementId> const* table(std::size_t cls) const;

  FiniteGroup const& group_;
  ConjugacyClassTable const& classes_;
  std::size_t table_budget_;
  std::unique_ptr<std::once_flag[]> table_once_;
  mutable std::vector<std::unique_ptr<std::vector<ElementId>>> tables_;
  mutable std::mutex budget_mutex_;
  mutable std::size_t budget_used_ = 0;
};

// Canonical pair of (a, b). Throws std::invalid_argument if (a, b) does not
// generate G or is not contained in G.
ExteriorPair canonical_pair(PairCanonicalizer const& canon, Permutation const& a,
                            Permutation const& b);

// The fiber: every canonical generating pair, sorted ascending. Empty when G
// is not 2-generated.
class Fiber {
 public:
  Fiber() = default;
  explicit Fiber(std::vector<ExteriorPair> sorted_pairs);

  std::size_t size() const noexcept { return pairs_.size(); }
  ExteriorPair const& operator[](std::size_t i) const { return pairs_[i]; }
  std::vector<ExteriorPair> const& pairs() const noexcept { return pairs_; }
  std::optional<std::size_t> index_of(ExteriorPair const& p) const;

 private:
  std::vector<ExteriorPair> pairs_;
};

// Loops over class representatives r for a and C(r)-orbit minima b, keeping
// generating pairs. Throws std::length_error above the enumeration cap.
Fiber enumerate_exterior_surjections(PairCanonicalizer const& canon, unsigned jobs = 1);

// a b a^-1 b^-1
Permutation commutator(FiniteGroup const& group, ExteriorPair const& p);

}  // namespace gstruct
