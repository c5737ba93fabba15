#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gstruct {

using Point = std::uint32_t;

// A bijection on {0, ..., n-1}, stored by its image array.
//
// Products follow the right-action convention used throughout the library:
// (p * q)(i) = q(p(i)), i.e. p is applied first. Conjugation g x g^-1 and the
// commutator a b a^-1 b^-1 are both read left to right in that convention.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  // Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation from_cycles(std::size_t degree,
                                 std::vector<std::vector<Point>> const& cycles);

  // Disjoint-cycle notation with 1-based points, e.g. "(1,2)(3,4)"; "()" is
  // the identity. Whitespace is ignored.
  static Permutation parse(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point i) const noexcept { return images_[i]; }
  std::span<Point const> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  // Nontrivial cycles, each starting at its least point, ordered by that point.
  std::vector<std::vector<Point>> cycles() const;
  // All cycle lengths including fixed points, ascending.
  std::vector<std::size_t> cycle_type() const;
  std::size_t fixed_point_count() const noexcept;

  // 1-based cycle notation, "()" for the identity.
  std::string to_string() const;

  friend bool operator==(Permutation const&, Permutation const&) = default;
  friend std::strong_ordering operator<=>(Permutation const& a,
                                          Permutation const& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

// p then q. Throws std::invalid_argument on degree mismatch.
Permutation compose(Permutation const& p, Permutation const& q);
inline Permutation operator*(Permutation const& p, Permutation const& q) {
  return compose(p, q);
}

Permutation power(Permutation const& p, std::int64_t exponent);
// g x g^-1
Permutation conjugate(Permutation const& g, Permutation const& x);
// a b a^-1 b^-1
Permutation commutator(Permutation const& a, Permutation const& b);

// Least k >= 1 with p^k = 1, i.e. the lcm of the cycle lengths.
std::uint64_t element_order(Permutation const& p);

}  // namespace gstruct

template <>
struct std::hash<gstruct::Permutation> {
  std::size_t operator()(gstruct::Permutation const& p) const noexcept;
};
