#include "gstruct/pair_enum.hpp"

#include <algorithm>
#include <stdexcept>

#include "gstruct/parallel.hpp"

namespace gstruct {

PairCanonicalizer::PairCanonicalizer(FiniteGroup const& group, std::size_t table_budget)
    : group_(group),
      classes_(group.classes()),
      table_budget_(table_budget),
      table_once_(new std::once_flag[classes_.size()]),
      tables_(classes_.size()) {}

std::vector<ElementId> const* PairCanonicalizer::table(std::size_t cls) const {
  std::call_once(table_once_[cls], [&] {
    std::size_t n = group_.size();
    std::size_t bytes = n * sizeof(ElementId);
    {
      std::lock_guard lock(budget_mutex_);
      if (budget_used_ + bytes > table_budget_) return;
      budget_used_ += bytes;
    }
    auto gens = classes_.centralizer_generators(cls);
    std::vector<ElementId> zinv;
    for (auto z : gens) zinv.push_back(group_.inverse(z));
    constexpr ElementId kUnset = ~ElementId{0};
    auto mins = std::make_unique<std::vector<ElementId>>(n, kUnset);
    std::vector<ElementId> stack;
    for (ElementId x = 0; x < n; ++x) {
      if ((*mins)[x] != kUnset) continue;
      (*mins)[x] = x;
      stack.push_back(x);
      while (!stack.empty()) {
        ElementId y = stack.back();
        stack.pop_back();
        for (std::size_t i = 0; i < gens.size(); ++i) {
          ElementId w = group_.multiply(group_.multiply(gens[i], y), zinv[i]);
          if ((*mins)[w] == kUnset) {
            (*mins)[w] = x;
            stack.push_back(w);
          }
        }
      }
    }
    tables_[cls] = std::move(mins);
  });
  return tables_[cls].get();
}

ElementId PairCanonicalizer::centralizer_orbit_min(std::size_t cls, ElementId x) const {
  if (classes_.class_size(cls) == 1) {
    return classes_.representative(classes_.class_of(x));
  }
  if (auto const* t = table(cls)) return (*t)[x];
  auto gens = classes_.centralizer_generators(cls);
  std::vector<ElementId> seen{x}, stack{x};
  ElementId best = x;
  while (!stack.empty()) {
    ElementId y = stack.back();
    stack.pop_back();
    for (auto z : gens) {
      ElementId w = group_.conjugate(z, y);
      if (std::find(seen.begin(), seen.end(), w) == seen.end()) {
        seen.push_back(w);
        stack.push_back(w);
        best = std::min(best, w);
      }
    }
  }
  return best;
}

ExteriorPair PairCanonicalizer::canonical(ElementId a, ElementId b) const {
  std::size_t cls = classes_.class_of(a);
  ElementId g0 = classes_.conjugator_to_rep(a);
  ElementId moved = group_.conjugate(g0, b);
  return {classes_.representative(cls), centralizer_orbit_min(cls, moved)};
}

ExteriorPair canonical_pair(PairCanonicalizer const& canon, Permutation const& a,
                            Permutation const& b) {
  auto const& g = canon.group();
  if (!is_generating_pair(g, a, b)) {
    throw std::invalid_argument("canonical_pair: pair does not generate the group");
  }
  return canon.canonical(g.index_of(a), g.index_of(b));
}

Fiber::Fiber(std::vector<ExteriorPair> sorted_pairs) : pairs_(std::move(sorted_pairs)) {}

std::optional<std::size_t> Fiber::index_of(ExteriorPair const& p) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p);
  if (it == pairs_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - pairs_.begin());
}

Fiber enumerate_exterior_surjections(PairCanonicalizer const& canon, unsigned jobs) {
  auto const& g = canon.group();
  auto const& ct = g.classes();
  bool abelian = g.is_abelian();

  std::vector<ExteriorPair> candidates;
  for (std::size_t c = 0; c < ct.size(); ++c) {
    ElementId r = ct.representative(c);
    for (ElementId b = 0; b < g.size(); ++b) {
      if (canon.centralizer_orbit_min(c, b) != b) continue;
      if (!abelian && g.multiply(r, b) == g.multiply(b, r)) continue;
      candidates.push_back({r, b});
    }
  }

  std::vector<char> keep(candidates.size(), 0);
  parallel_for(candidates.size(), jobs, [&](std::size_t i, unsigned) {
    keep[i] = pair_generates(g, g.element(candidates[i].a), g.element(candidates[i].b));
  });

  std::vector<ExteriorPair> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (keep[i]) out.push_back(candidates[i]);
  }
  // candidates are generated in ascending order already
  return Fiber(std::move(out));
}

Permutation commutator(FiniteGroup const& group, ExteriorPair const& p) {
  return group.element(group.commutator(p.a, p.b));
}

}  // namespace gstruct
