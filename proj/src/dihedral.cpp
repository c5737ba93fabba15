#include "gstruct/dihedral.hpp"

#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gstruct/builtin_groups.hpp"
#include "gstruct/curve_invariants.hpp"
#include "gstruct/sl2_orbit.hpp"

namespace gstruct {

namespace {

std::uint64_t euler_phi(std::uint64_t k) {
  std::uint64_t r = 0;
  for (std::uint64_t i = 1; i <= k; ++i) r += std::gcd(i, k) == 1;
  return r;
}

std::uint64_t fold(std::uint64_t x, std::uint64_t k) {
  x %= k;
  return std::min(x, k - x);
}

}  // namespace

Permutation dihedral_permutation(std::uint64_t k, DihedralElement x) {
  std::vector<Point> affine(k);
  for (std::uint64_t i = 0; i < k; ++i) {
    affine[i] = static_cast<Point>((x.n + (x.reflection ? k - i : i)) % k);
  }
  return Permutation(std::move(affine)).inverse();
}

DihedralElement decode_dihedral(std::uint64_t k, Permutation const& p) {
  if (k < 3 || p.degree() != k) throw std::invalid_argument("decode_dihedral: wrong degree");
  auto q = p.inverse();
  DihedralElement x{q[0], false};
  std::uint64_t step = (q[1] + k - q[0]) % k;
  if (step == k - 1) {
    x.reflection = true;
  } else if (step != 1) {
    throw std::invalid_argument("decode_dihedral: not a dihedral element");
  }
  if (dihedral_permutation(k, x) != p) throw std::invalid_argument("decode_dihedral: not a dihedral element");
  return x;
}

std::string to_string(DihedralAbType const& t) {
  std::string s = "(";
  s += t.a_reflection ? "-" : "+";
  s += ",";
  s += t.b_reflection ? "-" : "+";
  if (t.parity) s += "," + std::to_string(*t.parity);
  return s + ")";
}

DihedralPairClass classify_dihedral_pair(FiniteGroup const& group, std::uint64_t k,
                                         ExteriorPair const& p) {
  auto a = decode_dihedral(k, group.element(p.a));
  auto b = decode_dihedral(k, group.element(p.b));
  DihedralPairClass c;
  c.k = k;
  c.ab_type.a_reflection = a.reflection;
  c.ab_type.b_reflection = b.reflection;
  std::uint64_t unit = 0;
  std::uint64_t parity_source = 0;
  if (!a.reflection && b.reflection) {
    unit = a.n;
    parity_source = b.n;
  } else if (a.reflection && !b.reflection) {
    unit = b.n;
    parity_source = a.n;
  } else if (a.reflection && b.reflection) {
    unit = (a.n + k - b.n) % k;
    parity_source = b.n;
  } else {
    throw std::invalid_argument("classify_dihedral_pair: two rotations do not generate");
  }
  if (std::gcd(unit, k) != 1) throw std::invalid_argument("classify_dihedral_pair: pair does not generate");
  if (k % 2 == 0) c.ab_type.parity = static_cast<int>(parity_source % 2);
  c.inv_exponent = fold(unit, k);
  return c;
}

DihedralAbType dihedral_E_transition(DihedralAbType t) {
  DihedralAbType r = t;
  if (t.a_reflection != t.b_reflection) {
    std::swap(r.a_reflection, r.b_reflection);
  } else if (t.parity) {
    // (-,-,p) -> (-,-,1-p): the two reflections swap and have opposite parity
    r.parity = 1 - *t.parity;
  }
  return r;
}

DihedralAbType dihedral_T_transition(DihedralAbType t) {
  DihedralAbType r = t;
  if (!t.a_reflection) {
    // (+,-,p) -> (+,-,1-p)
  } else if (!t.b_reflection) {
    r.b_reflection = true;  // (-,+,p) -> (-,-,1-p)
  } else {
    r.b_reflection = false;  // (-,-,p) -> (-,+,1-p)
  }
  if (t.parity) r.parity = 1 - *t.parity;
  return r;
}

DihedralReport verify_dihedral_theorem(std::uint64_t k, unsigned jobs) {
  if (k < 3) throw std::invalid_argument("verify_dihedral_theorem: k must be at least 3");
  DihedralReport rep;
  rep.k = k;
  rep.expected_orbits = euler_phi(k) / 2;
  auto fail = [&](std::string const& msg) { rep.failures.push_back(msg); };

  auto group = builtin_group("D" + std::to_string(2 * k));
  PairCanonicalizer canon(*group);
  auto fiber = enumerate_exterior_surjections(canon, jobs);
  auto orbits = orbit_decompose(canon, fiber, jobs);
  rep.orbit_count = orbits.size();
  if (rep.orbit_count != rep.expected_orbits) {
    fail("orbit count " + std::to_string(rep.orbit_count) + " != phi(k)/2 = " +
         std::to_string(rep.expected_orbits));
  }

  std::set<std::uint64_t> seen_invs;
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    auto const& orbit = orbits[o];
    std::string where = "orbit " + std::to_string(o + 1) + ": ";
    std::set<std::uint64_t> invs;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      auto const& p = orbit.points[i];
      DihedralPairClass c;
      try {
        c = classify_dihedral_pair(*group, k, p);
      } catch (std::exception const& e) {
        fail(where + e.what());
        continue;
      }
      invs.insert(c.inv_exponent);
      auto ce = classify_dihedral_pair(*group, k, orbit.points[orbit.perm_E[static_cast<Point>(i)]]);
      auto ct = classify_dihedral_pair(*group, k, orbit.points[orbit.perm_T[static_cast<Point>(i)]]);
      if (ce.ab_type != dihedral_E_transition(c.ab_type)) {
        fail(where + "E sends " + to_string(c.ab_type) + " to " + to_string(ce.ab_type));
      }
      if (ct.ab_type != dihedral_T_transition(c.ab_type)) {
        fail(where + "T sends " + to_string(c.ab_type) + " to " + to_string(ct.ab_type));
      }
      auto comm = decode_dihedral(k, commutator(*group, p));
      std::uint64_t twice = 2 * c.inv_exponent % k;
      if (comm.reflection || (comm.n != twice && comm.n != (k - twice) % k)) {
        fail(where + "commutator is not a rotation by +-2 Inv");
      }
    }
    if (invs.size() != 1) {
      fail(where + "invariant not constant");
    } else if (!seen_invs.insert(*invs.begin()).second) {
      fail(where + "invariant " + std::to_string(*invs.begin()) + " shared with another orbit");
    }

    auto sig = signature(orbit);
    Signature want;
    if (k % 2) {
      want = {3, 3, 1, 0, 1, {1, 2}};
    } else {
      want = {6, 6, 0, 0, 1, {2, 2, 2}};
    }
    if (sig != want) fail(where + "signature differs from " + std::string(k % 2 ? "Gamma_1(2)" : "Gamma(2)"));
  }
  return rep;
}

}  // namespace gstruct
