#include "gstruct/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace gstruct {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw std::invalid_argument("Permutation: image array is not a bijection");
    }
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::vector<std::vector<Point>> const& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (auto const& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point from = cycle[i];
      if (from >= degree) {
        throw std::invalid_argument("Permutation: cycle point out of range");
      }
      if (used[from]) {
        throw std::invalid_argument("Permutation: cycles are not disjoint");
      }
      used[from] = true;
      images[from] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  while (i < compact.size()) {
    if (compact[i] != '(') {
      throw std::invalid_argument("Permutation: expected '(' in \"" + compact + "\"");
    }
    ++i;
    std::vector<Point> cycle;
    while (i < compact.size() && compact[i] != ')') {
      std::size_t start = i;
      while (i < compact.size() && std::isdigit(static_cast<unsigned char>(compact[i]))) ++i;
      if (start == i) {
        throw std::invalid_argument("Permutation: expected a point in \"" + compact + "\"");
      }
      unsigned long value = std::stoul(compact.substr(start, i - start));
      if (value == 0 || value > degree) {
        throw std::invalid_argument("Permutation: point " + std::to_string(value) +
                                    " outside 1.." + std::to_string(degree));
      }
      cycle.push_back(static_cast<Point>(value - 1));
      if (i < compact.size() && compact[i] == ',') ++i;
    }
    if (i >= compact.size()) {
      throw std::invalid_argument("Permutation: unterminated cycle in \"" + compact + "\"");
    }
    ++i;
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
  }
  return from_cycles(degree, cycles);
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  Permutation result;
  result.images_ = std::move(inv);
  return result;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (Point x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::size_t Permutation::fixed_point_count() const noexcept {
  std::size_t count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) count += images_[i] == i;
  return count;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string out;
  for (auto const& cycle : cs) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(cycle[i] + 1);
    }
    out += ')';
  }
  return out;
}

Permutation compose(Permutation const& p, Permutation const& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("compose: degree mismatch");
  }
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = q[p[i]];
  return Permutation(std::move(images));
}

Permutation power(Permutation const& p, std::int64_t exponent) {
  Permutation base = exponent < 0 ? p.inverse() : p;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-exponent)
                                 : static_cast<std::uint64_t>(exponent);
  // Walk cycles directly: O(n) regardless of the exponent.
  std::vector<Point> images(p.degree());
  std::vector<bool> seen(p.degree(), false);
  std::vector<Point> cycle;
  for (Point start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    cycle.clear();
    for (Point x = start; !seen[x]; x = base[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    std::size_t shift = e % cycle.size();
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i]] = cycle[(i + shift) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation conjugate(Permutation const& g, Permutation const& x) {
  return g * x * g.inverse();
}

Permutation commutator(Permutation const& a, Permutation const& b) {
  return a * b * a.inverse() * b.inverse();
}

std::uint64_t element_order(Permutation const& p) {
  std::uint64_t order = 1;
  for (std::size_t len : p.cycle_type()) order = std::lcm(order, std::uint64_t{len});
  return order;
}

}  // namespace gstruct

std::size_t std::hash<gstruct::Permutation>::operator()(
    gstruct::Permutation const& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}
