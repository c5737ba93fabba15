#include "gstruct/stabilizer_chain.hpp"

#include <limits>
#include <stdexcept>

namespace gstruct {

StabilizerChain::StabilizerChain(std::size_t degree,
                                 std::span<Permutation const> generators,
                                 std::span<Point const> base_prefix)
    : degree_(degree) {
  for (Point b : base_prefix) {
    if (b >= degree) throw std::invalid_argument("StabilizerChain: base point out of range");
    push_level(b);
  }
  for (auto const& g : generators) {
    if (g.degree() != degree) {
      throw std::invalid_argument("StabilizerChain: generator degree mismatch");
    }
    add_generator(g, 0);
  }
  strides_.assign(levels_.size(), 1);
  for (std::size_t i = levels_.size(); i-- > 1;) {
    strides_[i - 1] = strides_[i] * levels_[i].orbit.size();
  }
}

void StabilizerChain::push_level(Point base_point) {
  Level level;
  level.base_point = base_point;
  level.orbit_index.assign(degree_, -1);
  level.orbit.push_back(base_point);
  level.orbit_index[base_point] = 0;
  level.transversal.emplace_back(degree_);
  level.transversal_inv.emplace_back(degree_);
  levels_.push_back(std::move(level));
}

bool StabilizerChain::member_from(Permutation const& g, std::size_t level) const {
  Permutation h = g;
  for (std::size_t j = level; j < levels_.size(); ++j) {
    auto const& lv = levels_[j];
    std::int32_t k = lv.orbit_index[h[lv.base_point]];
    if (k < 0) return false;
    h = h * lv.transversal_inv[static_cast<std::size_t>(k)];
  }
  return h.is_identity();
}

void StabilizerChain::add_generator(Permutation g, std::size_t level) {
  if (level == levels_.size()) {
    if (g.is_identity()) return;
    Point moved = 0;
    while (g[moved] == moved) ++moved;
    push_level(moved);
  }
  if (member_from(g, level)) return;
  levels_[level].generators.push_back(g);
  // Iterate by index: close_orbit may extend the orbit while we walk it, and
  // new orbit points are already closed under every generator including g.
  std::size_t existing = levels_[level].orbit.size();
  for (std::size_t k = 0; k < existing; ++k) {
    close_orbit(levels_[level].transversal[k] * g, level);
  }
}

void StabilizerChain::close_orbit(Permutation g, std::size_t level) {
  Level& lv = levels_[level];
  Point p = g[lv.base_point];
  std::int32_t k = lv.orbit_index[p];
  if (k < 0) {
    lv.orbit_index[p] = static_cast<std::int32_t>(lv.orbit.size());
    lv.orbit.push_back(p);
    lv.transversal_inv.push_back(g.inverse());
    lv.transversal.push_back(g);
    // Copy: recursion may reallocate the generator list of this level.
    std::vector<Permutation> gens = levels_[level].generators;
    for (auto const& s : gens) close_orbit(g * s, level);
  } else {
    Permutation h = g * levels_[level].transversal_inv[static_cast<std::size_t>(k)];
    add_generator(std::move(h), level + 1);
  }
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> b;
  for (auto const& lv : levels_) b.push_back(lv.base_point);
  return b;
}

std::vector<std::size_t> StabilizerChain::orbit_sizes() const {
  std::vector<std::size_t> sizes;
  for (auto const& lv : levels_) sizes.push_back(lv.orbit.size());
  return sizes;
}

std::uint64_t StabilizerChain::order() const {
  std::uint64_t order = 1;
  for (auto const& lv : levels_) {
    std::uint64_t len = lv.orbit.size();
    if (order > std::numeric_limits<std::uint64_t>::max() / len) {
      throw std::overflow_error("StabilizerChain: group order exceeds 2^64");
    }
    order *= len;
  }
  return order;
}

StabilizerChain::StripResult StabilizerChain::strip(Permutation const& g) const {
  Permutation h = g;
  for (std::size_t j = 0; j < levels_.size(); ++j) {
    auto const& lv = levels_[j];
    std::int32_t k = lv.orbit_index[h[lv.base_point]];
    if (k < 0) return {std::move(h), j};
    h = h * lv.transversal_inv[static_cast<std::size_t>(k)];
  }
  return {std::move(h), levels_.size()};
}

bool StabilizerChain::contains(Permutation const& g) const {
  if (g.degree() != degree_) return false;
  return member_from(g, 0);
}

std::uint64_t StabilizerChain::rank_images(std::span<Point const> images,
                                           std::vector<Point>& scratch) const {
  // scratch holds the current residue h; start with h = g.
  scratch.assign(images.begin(), images.end());
  std::uint64_t r = 0;
  for (std::size_t j = 0; j < levels_.size(); ++j) {
    auto const& lv = levels_[j];
    std::int32_t k = lv.orbit_index[scratch[lv.base_point]];
    if (k < 0) return std::numeric_limits<std::uint64_t>::max();
    r += strides_[j] * static_cast<std::uint64_t>(k);
    auto inv = lv.transversal_inv[static_cast<std::size_t>(k)].images();
    for (auto& x : scratch) x = inv[x];
  }
  for (std::size_t i = 0; i < scratch.size(); ++i) {
    if (scratch[i] != i) return std::numeric_limits<std::uint64_t>::max();
  }
  return r;
}

std::optional<std::uint64_t> StabilizerChain::rank(Permutation const& g) const {
  if (g.degree() != degree_) return std::nullopt;
  std::vector<Point> scratch;
  std::uint64_t r = rank_images(g.images(), scratch);
  if (r == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return r;
}

Permutation StabilizerChain::unrank(std::uint64_t r) const {
  // g = t_{k-1} * ... * t_1 * t_0 where t_j is the level-j transversal element.
  Permutation g(degree_);
  for (std::size_t j = levels_.size(); j-- > 0;) {
    std::uint64_t k = (r / strides_[j]) % levels_[j].orbit.size();
    g = g * levels_[j].transversal[k];
  }
  return g;
}

}  // namespace gstruct
