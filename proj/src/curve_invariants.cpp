#include "gstruct/curve_invariants.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>

#include "gstruct/parallel.hpp"

namespace gstruct {

Signature signature(OrbitAction const& orbit) {
  Signature s;
  s.d = orbit.size();
  s.mu = orbit.pm_classes.size();
  s.c_neg1 = orbit.neg_fixed ? 1 : 0;
  if (s.mu != (orbit.neg_fixed ? s.d : s.d / 2)) throw std::logic_error("signature: mu mismatch");
  if (!power(orbit.perm_E_pm, 2).is_identity()) throw std::logic_error("signature: E has order > 2 mod +-I");
  auto witness = orbit.order3_witness_pm();
  if (!power(witness, 3).is_identity()) throw std::logic_error("signature: witness has order > 3");
  s.c4 = orbit.perm_E_pm.fixed_point_count();
  s.c6 = witness.fixed_point_count();
  // T then E is conjugate to E then T, so it must fix as many classes
  if ((orbit.perm_T_pm * orbit.perm_E_pm).fixed_point_count() != s.c6) {
    throw std::logic_error("signature: order-3 witnesses disagree");
  }
  for (auto const& cyc : orbit.perm_T_pm.cycles()) s.cusp_widths.push_back(cyc.size());
  s.cusp_widths.insert(s.cusp_widths.end(), orbit.perm_T_pm.fixed_point_count(), 1);
  std::sort(s.cusp_widths.begin(), s.cusp_widths.end());
  if (std::accumulate(s.cusp_widths.begin(), s.cusp_widths.end(), std::uint64_t{0}) != s.mu) {
    throw std::logic_error("signature: cusp widths do not sum to the index");
  }
  return s;
}

std::uint64_t geometric_level(std::vector<std::uint64_t> const& widths) {
  std::uint64_t l = 1;
  for (auto w : widths) l = std::lcm(l, w);
  return l;
}

std::uint64_t genus_modular_curve(std::size_t mu, std::size_t c4, std::size_t c6,
                                  std::size_t cusps) {
  auto num = static_cast<std::int64_t>(mu) - 3 * static_cast<std::int64_t>(c4) -
             4 * static_cast<std::int64_t>(c6) - 6 * static_cast<std::int64_t>(cusps);
  if (num % 12 != 0 || num < -12) {
    throw std::logic_error("genus formula gives a non-integral or negative genus");
  }
  return static_cast<std::uint64_t>(1 + num / 12);
}

CoverData cover_data(FiniteGroup const& group, OrbitAction const& orbit, bool check_all_points) {
  auto const& ct = group.classes();
  auto cls_of = [&](ExteriorPair const& p) { return ct.class_of(group.commutator(p.a, p.b)); };
  CoverData c;
  c.nielsen_class = cls_of(orbit.points.front());
  c.e = ct.element_order(c.nielsen_class);
  if (check_all_points) {
    for (auto const& p : orbit.points) {
      if (cls_of(p) != c.nielsen_class) throw std::logic_error("cover_data: Nielsen class not constant on orbit");
    }
  }
  std::uint64_t n = group.order();
  if ((n * (c.e - 1)) % (2 * c.e) != 0) throw std::logic_error("cover_data: non-integral cover genus");
  c.genus_cover = 1 + n * (c.e - 1) / (2 * c.e);
  return c;
}

bool is_fine(Signature const& sig) { return sig.c4 == 0 && sig.c6 == 0 && sig.c_neg1 == 0; }

std::uint64_t congruence_modulus(Signature const& sig) {
  std::uint64_t l = geometric_level(sig.cusp_widths);
  return sig.c_neg1 ? l : 2 * l;
}

CongruenceVerdict is_congruence(OrbitAction const& orbit, Signature const& sig,
                                CongruenceOptions const& options) {
  return test_congruence(orbit.perm_E, orbit.perm_T, congruence_modulus(sig), options);
}

std::vector<std::uint32_t> canonical_code(OrbitAction const& orbit) {
  std::size_t d = orbit.size();
  std::vector<std::uint32_t> best, code;
  std::vector<std::int64_t> label(d);
  std::vector<Point> order;
  for (Point start = 0; start < d; ++start) {
    std::fill(label.begin(), label.end(), -1);
    order.assign(1, start);
    label[start] = 0;
    code.clear();
    bool worse = false, better = best.empty();
    for (std::size_t head = 0; head < order.size() && !worse; ++head) {
      for (Point next : {orbit.perm_E[order[head]], orbit.perm_T[order[head]]}) {
        if (label[next] < 0) {
          label[next] = static_cast<std::int64_t>(order.size());
          order.push_back(next);
        }
        auto v = static_cast<std::uint32_t>(label[next]);
        if (!better) {
          std::uint32_t b = best[code.size()];
          if (v > b) {
            worse = true;
            break;
          }
          if (v < b) better = true;
        }
        code.push_back(v);
      }
    }
    if (!worse && better) best = code;
  }
  return best;
}

std::vector<std::size_t> group_by_conjugate_stabilizers(std::vector<OrbitAction> const& orbits,
                                                        unsigned jobs) {
  std::vector<std::vector<std::uint32_t>> codes(orbits.size());
  parallel_for(orbits.size(), jobs, [&](std::size_t i, unsigned) {
    codes[i] = canonical_code(orbits[i]);
  }, 1);
  std::map<std::vector<std::uint32_t>, std::size_t> block_of;
  std::vector<std::size_t> out;
  for (auto const& c : codes) {
    auto [it, inserted] = block_of.emplace(c, block_of.size());
    out.push_back(it->second);
  }
  return out;
}

std::optional<ExteriorPair> coprime_witness(FiniteGroup const& group, Fiber const& fiber) {
  if (group.order() == 1) return std::nullopt;
  std::optional<ExteriorPair> best;
  std::array<std::uint64_t, 3> best_orders{};
  for (auto const& p : fiber.pairs()) {
    std::uint64_t oa = group.element_order(p.a), ob = group.element_order(p.b);
    std::uint64_t oab = group.element_order(group.multiply(p.a, p.b));
    if (std::gcd(oa, ob) != 1 || std::gcd(oa, oab) != 1 || std::gcd(ob, oab) != 1) continue;
    std::array<std::uint64_t, 3> orders{oa, ob, oab};
    std::sort(orders.begin(), orders.end());
    if (!best || orders < best_orders) {
      best = p;
      best_orders = orders;
    }
  }
  return best;
}

ComponentRecord component_record(FiniteGroup const& group, OrbitAction const& orbit,
                                 CongruenceOptions const& options) {
  ComponentRecord r;
  r.sig = signature(orbit);
  r.level = geometric_level(r.sig.cusp_widths);
  r.genus_curve = genus_modular_curve(r.sig.mu, r.sig.c4, r.sig.c6, r.sig.cusp_widths.size());
  r.fine = is_fine(r.sig);
  r.cover = cover_data(group, orbit);
  r.nielsen_label = group.classes().label(r.cover.nielsen_class);
  r.congruence = is_congruence(orbit, r.sig, options);
  return r;
}

}  // namespace gstruct
