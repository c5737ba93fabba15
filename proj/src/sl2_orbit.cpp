#include "gstruct/sl2_orbit.hpp"

#include <algorithm>
#include <stdexcept>

#include "gstruct/parallel.hpp"

namespace gstruct {

ExteriorPair act_E(PairCanonicalizer const& canon, ExteriorPair p) {
  return canon.canonical(canon.group().inverse(p.b), p.a);
}

ExteriorPair act_T(PairCanonicalizer const& canon, ExteriorPair p) {
  return canon.canonical(p.a, canon.group().multiply(p.a, p.b));
}

ExteriorPair act_T_inverse(PairCanonicalizer const& canon, ExteriorPair p) {
  auto const& g = canon.group();
  return canon.canonical(p.a, g.multiply(g.inverse(p.a), p.b));
}

ExteriorPair act_negI(PairCanonicalizer const& canon, ExteriorPair p) {
  auto const& g = canon.group();
  return canon.canonical(g.inverse(p.a), g.inverse(p.b));
}

FiberAction fiber_action(PairCanonicalizer const& canon, Fiber const& fiber, unsigned jobs) {
  std::size_t n = fiber.size();
  std::vector<Point> e(n), t(n);
  parallel_for(n, jobs, [&](std::size_t i, unsigned) {
    auto pe = fiber.index_of(act_E(canon, fiber[i]));
    auto pt = fiber.index_of(act_T(canon, fiber[i]));
    if (!pe || !pt) throw std::logic_error("fiber_action: image outside the fiber");
    e[i] = static_cast<Point>(*pe);
    t[i] = static_cast<Point>(*pt);
  });
  return {Permutation(std::move(e)), Permutation(std::move(t))};
}

OrbitAction make_orbit(Fiber const& fiber, FiberAction const& action,
                       std::vector<std::uint32_t> idx) {
  std::sort(idx.begin(), idx.end());
  std::size_t d = idx.size();
  auto local = [&](Point global) {
    auto it = std::lower_bound(idx.begin(), idx.end(), global);
    if (it == idx.end() || *it != global) throw std::logic_error("make_orbit: orbit not closed");
    return static_cast<Point>(it - idx.begin());
  };

  OrbitAction o;
  std::vector<Point> e(d), t(d);
  for (std::size_t i = 0; i < d; ++i) {
    o.points.push_back(fiber[idx[i]]);
    e[i] = local(action.perm_E[idx[i]]);
    t[i] = local(action.perm_T[idx[i]]);
  }
  o.perm_E = Permutation(std::move(e));
  o.perm_T = Permutation(std::move(t));

  auto neg = o.perm_negI();
  o.neg_fixed = neg[0] == 0;
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  o.pm_class_of.assign(d, kUnset);
  for (Point i = 0; i < d; ++i) {
    if ((neg[i] == i) != o.neg_fixed) throw std::logic_error("make_orbit: -I not central");
    if (o.pm_class_of[i] != kUnset) continue;
    auto cls = static_cast<std::uint32_t>(o.pm_classes.size());
    o.pm_classes.push_back({i});
    o.pm_class_of[i] = cls;
    if (neg[i] != i) {
      o.pm_classes.back().push_back(neg[i]);
      o.pm_class_of[neg[i]] = cls;
    }
  }
  std::size_t mu = o.pm_classes.size();
  std::vector<Point> epm(mu), tpm(mu);
  for (std::size_t c = 0; c < mu; ++c) {
    Point rep = o.pm_classes[c][0];
    epm[c] = o.pm_class_of[o.perm_E[rep]];
    tpm[c] = o.pm_class_of[o.perm_T[rep]];
  }
  o.perm_E_pm = Permutation(std::move(epm));
  o.perm_T_pm = Permutation(std::move(tpm));
  return o;
}

std::vector<OrbitAction> orbit_decompose(PairCanonicalizer const& canon, Fiber const& fiber,
                                         unsigned jobs) {
  auto action = fiber_action(canon, fiber, jobs);
  std::size_t n = fiber.size();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<std::uint32_t>> components;
  for (std::uint32_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::uint32_t> comp{start};
    seen[start] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      // E and T are permutations of a finite set, so their forward images
      // already reach E^-1 and T^-1 images.
      for (Point next : {action.perm_E[comp[head]], action.perm_T[comp[head]]}) {
        if (!seen[next]) {
          seen[next] = 1;
          comp.push_back(next);
        }
      }
    }
    components.push_back(std::move(comp));
  }
  std::vector<OrbitAction> orbits(components.size());
  parallel_for(components.size(), jobs, [&](std::size_t i, unsigned) {
    orbits[i] = make_orbit(fiber, action, std::move(components[i]));
  }, 1);
  std::stable_sort(orbits.begin(), orbits.end(), [](OrbitAction const& x, OrbitAction const& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.points.front() < y.points.front();
  });
  return orbits;
}

}  // namespace gstruct
