#include "gstruct/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace gstruct {

namespace {

std::vector<std::uint32_t> orbit_partition(std::size_t degree,
                                           std::vector<Permutation> const& gens) {
  std::vector<std::uint32_t> orbit(degree, std::numeric_limits<std::uint32_t>::max());
  std::uint32_t next = 0;
  for (Point start = 0; start < degree; ++start) {
    if (orbit[start] != std::numeric_limits<std::uint32_t>::max()) continue;
    std::vector<Point> stack{start};
    orbit[start] = next;
    while (!stack.empty()) {
      Point p = stack.back();
      stack.pop_back();
      for (auto const& g : gens) {
        Point q = g[p];
        if (orbit[q] == std::numeric_limits<std::uint32_t>::max()) {
          orbit[q] = next;
          stack.push_back(q);
        }
      }
    }
    ++next;
  }
  return orbit;
}

std::size_t common_degree(std::vector<Permutation> const& gens) {
  if (gens.empty()) throw std::invalid_argument("FiniteGroup: no generators");
  std::size_t n = gens.front().degree();
  for (auto const& g : gens) {
    if (g.degree() != n) throw std::invalid_argument("FiniteGroup: generator degree mismatch");
  }
  return n;
}

thread_local std::vector<Point> tl_product;
thread_local std::vector<Point> tl_scratch;

}  // namespace

FiniteGroup::FiniteGroup(std::vector<Permutation> generators, std::string descriptor,
                         std::uint64_t enumeration_cap)
    : generators_(std::move(generators)),
      descriptor_(std::move(descriptor)),
      enumeration_cap_(enumeration_cap),
      degree_(common_degree(generators_)),
      chain_(degree_, generators_),
      order_(chain_.order()),
      point_orbit_(orbit_partition(degree_, generators_)) {}

FiniteGroup::Enumeration const& FiniteGroup::enumeration() const {
  if (!enumerable()) {
    throw std::length_error("FiniteGroup: order " + std::to_string(order_) +
                            " exceeds the enumeration cap " +
                            std::to_string(enumeration_cap_));
  }
  std::call_once(enum_once_, [this] {
    auto e = std::make_unique<Enumeration>();
    std::size_t n = degree_;
    e->flat.resize(static_cast<std::size_t>(order_) * n);
    for (std::uint64_t r = 0; r < order_; ++r) {
      Permutation g = chain_.unrank(r);
      std::copy(g.images().begin(), g.images().end(), e->flat.begin() + r * n);
    }
    e->inv.resize(order_);
    std::vector<Point> inv(n), scratch;
    for (std::uint64_t r = 0; r < order_; ++r) {
      Point const* img = e->flat.data() + r * n;
      for (std::size_t i = 0; i < n; ++i) inv[img[i]] = static_cast<Point>(i);
      e->inv[r] = static_cast<ElementId>(chain_.rank_images(inv, scratch));
    }
    for (auto const& g : generators_) {
      e->gens.push_back(static_cast<ElementId>(*chain_.rank(g)));
    }
    enum_ = std::move(e);
  });
  return *enum_;
}

std::size_t FiniteGroup::size() const {
  enumeration();
  return static_cast<std::size_t>(order_);
}

ElementId FiniteGroup::index_of_images(std::span<Point const> images) const {
  enumeration();
  std::uint64_t r = chain_.rank_images(images, tl_scratch);
  if (r == std::numeric_limits<std::uint64_t>::max()) {
    throw std::invalid_argument("FiniteGroup: permutation is not a group element");
  }
  return static_cast<ElementId>(r);
}

ElementId FiniteGroup::index_of(Permutation const& p) const {
  if (p.degree() != degree_) {
    throw std::invalid_argument("FiniteGroup: permutation has the wrong degree");
  }
  return index_of_images(p.images());
}

std::span<Point const> FiniteGroup::images(ElementId x) const {
  auto const& e = enumeration();
  return {e.flat.data() + static_cast<std::size_t>(x) * degree_, degree_};
}

Permutation FiniteGroup::element(ElementId x) const {
  auto img = images(x);
  return Permutation(std::vector<Point>(img.begin(), img.end()));
}

ElementId FiniteGroup::multiply(ElementId x, ElementId y) const {
  auto px = images(x);
  auto py = images(y);
  tl_product.resize(degree_);
  for (std::size_t i = 0; i < degree_; ++i) tl_product[i] = py[px[i]];
  return static_cast<ElementId>(chain_.rank_images(tl_product, tl_scratch));
}

ElementId FiniteGroup::inverse(ElementId x) const { return enumeration().inv[x]; }

ElementId FiniteGroup::conjugate(ElementId g, ElementId x) const {
  auto pg = images(g);
  auto px = images(x);
  auto pgi = images(inverse(g));
  tl_product.resize(degree_);
  for (std::size_t i = 0; i < degree_; ++i) tl_product[i] = pgi[px[pg[i]]];
  return static_cast<ElementId>(chain_.rank_images(tl_product, tl_scratch));
}

ElementId FiniteGroup::commutator(ElementId x, ElementId y) const {
  return multiply(multiply(x, y), multiply(inverse(x), inverse(y)));
}

std::uint64_t FiniteGroup::element_order(ElementId x) const {
  auto img = images(x);
  std::vector<bool> seen(degree_, false);
  std::uint64_t order = 1;
  for (Point s = 0; s < degree_; ++s) {
    if (seen[s]) continue;
    std::uint64_t len = 0;
    for (Point p = s; !seen[p]; p = img[p]) {
      seen[p] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

std::vector<ElementId> const& FiniteGroup::generator_ids() const {
  return enumeration().gens;
}

ConjugacyClassTable const& FiniteGroup::classes() const {
  enumeration();
  std::call_once(classes_once_,
                 [this] { classes_ = std::make_unique<ConjugacyClassTable>(*this); });
  return *classes_;
}

std::uint64_t FiniteGroup::exponent() const {
  auto const& table = classes();
  std::uint64_t e = 1;
  for (std::size_t c = 0; c < table.size(); ++c) e = std::lcm(e, table.element_order(c));
  return e;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      if (generators_[i] * generators_[j] != generators_[j] * generators_[i]) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

ConjugacyClassTable::ConjugacyClassTable(FiniteGroup const& group)
    : group_order_(group.order()) {
  std::size_t const n = group.size();
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  class_of_.assign(n, kUnset);
  to_rep_.assign(n, 0);
  auto const& gens = group.generator_ids();

  std::vector<ElementId> from_rep(n, 0);  // g_y with g_y rep g_y^-1 = y
  std::vector<char> in_closure(n, 0);

  for (ElementId x = 0; x < n; ++x) {
    if (class_of_[x] != kUnset) continue;
    auto cls = static_cast<std::uint32_t>(reps_.size());
    reps_.push_back(x);
    std::vector<ElementId> members{x};
    class_of_[x] = cls;
    from_rep[x] = 0;
    for (std::size_t k = 0; k < members.size(); ++k) {
      ElementId y = members[k];
      for (ElementId s : gens) {
        ElementId z = group.conjugate(s, y);
        if (class_of_[z] == kUnset) {
          class_of_[z] = cls;
          from_rep[z] = group.multiply(s, from_rep[y]);
          members.push_back(z);
        }
      }
    }
    for (ElementId y : members) to_rep_[y] = group.inverse(from_rep[y]);

    // Centralizer of x from Schreier generators g_z^-1 s g_y, thinned to a
    // small generating set by closure testing.
    std::vector<ElementId> cgens;
    std::vector<ElementId> closure{0};
    in_closure[0] = 1;
    auto extend = [&](ElementId c) {
      cgens.push_back(c);
      for (ElementId e : closure) in_closure[e] = 0;
      closure.assign(1, 0);
      in_closure[0] = 1;
      for (std::size_t k = 0; k < closure.size(); ++k) {
        for (ElementId g : cgens) {
          ElementId h = group.multiply(closure[k], g);
          if (!in_closure[h]) {
            in_closure[h] = 1;
            closure.push_back(h);
          }
        }
      }
    };
    std::uint64_t const target = group_order_ / members.size();
    if (members.size() == 1) {
      cgens = gens;
    } else {
      for (ElementId y : members) {
        if (closure.size() == target) break;
        for (ElementId s : gens) {
          ElementId z = group.conjugate(s, y);
          ElementId c = group.multiply(group.multiply(to_rep_[z], s), from_rep[y]);
          if (!in_closure[c]) extend(c);
          if (closure.size() == target) break;
        }
      }
      if (closure.size() != target) {
        throw std::logic_error("ConjugacyClassTable: centralizer closure has wrong order");
      }
    }
    for (ElementId e : closure) in_closure[e] = 0;
    centralizer_gens_.push_back(std::move(cgens));
    orders_.push_back(group.element_order(x));
    members_.push_back(std::move(members));
  }

  std::map<std::uint64_t, int> letters;
  for (std::size_t c = 0; c < reps_.size(); ++c) {
    int k = letters[orders_[c]]++;
    std::string suffix;
    do {
      suffix.insert(suffix.begin(), static_cast<char>('A' + k % 26));
      k = k / 26 - 1;
    } while (k >= 0);
    labels_.push_back(std::to_string(orders_[c]) + suffix);
  }
}

std::uint64_t ConjugacyClassTable::centralizer_order(std::size_t cls) const {
  return group_order_ / members_[cls].size();
}

// ---------------------------------------------------------------------------

bool is_generating_pair(FiniteGroup const& group, Permutation const& a,
                        Permutation const& b) {
  if (!group.contains(a) || !group.contains(b)) {
    throw std::invalid_argument("is_generating_pair: element is not in the group");
  }
  return pair_generates(group, a, b);
}

bool pair_generates(FiniteGroup const& group, Permutation const& a, Permutation const& b) {
  std::vector<Permutation> gens{a, b};
  if (orbit_partition(group.degree(), gens) != group.point_orbits()) return false;
  auto base = group.chain().base();
  StabilizerChain sub(group.degree(), gens, base);
  return sub.order() == group.order();
}

}  // namespace gstruct
