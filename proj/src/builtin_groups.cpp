#include "gstruct/builtin_groups.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#ifndef GSTRUCT_DATA_DIR
#define GSTRUCT_DATA_DIR "data"
#endif

namespace gstruct {

namespace {

struct Factor {
  std::vector<Permutation> generators;
  std::size_t degree = 1;
  std::optional<std::uint64_t> expected_order;
};

[[noreturn]] void bad(std::string_view descriptor, std::string const& why) {
  throw std::invalid_argument("group descriptor \"" + std::string(descriptor) + "\": " + why);
}

std::uint64_t parse_count(std::string_view whole, std::string_view digits) {
  if (digits.empty() || digits.size() > 9) bad(whole, "expected a positive integer");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) bad(whole, "expected a positive integer");
  }
  std::uint64_t n = std::stoull(std::string(digits));
  if (n == 0) bad(whole, "order must be positive");
  return n;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Permutation cycle_on(std::size_t degree, std::vector<Point> points) {
  return Permutation::from_cycles(degree, {std::move(points)});
}

std::vector<Point> range_points(Point from, Point to) {  // [from, to)
  std::vector<Point> pts;
  for (Point i = from; i < to; ++i) pts.push_back(i);
  return pts;
}

// Right regular representation of an abstract group on {0..n-1}:
// element g acts by h -> h * g.
Factor regular(std::size_t n, std::vector<std::size_t> const& gens,
               std::function<std::size_t(std::size_t, std::size_t)> const& mul) {
  Factor f;
  f.degree = n;
  for (std::size_t g : gens) {
    std::vector<Point> images(n);
    for (std::size_t h = 0; h < n; ++h) images[h] = static_cast<Point>(mul(h, g));
    f.generators.emplace_back(std::move(images));
  }
  f.expected_order = n;
  return f;
}

Factor cyclic(std::uint64_t n) {
  Factor f;
  f.degree = n;
  f.generators.push_back(n == 1 ? Permutation(1) : cycle_on(n, range_points(0, static_cast<Point>(n))));
  f.expected_order = n;
  return f;
}

Factor dihedral(std::string_view whole, std::uint64_t n) {
  if (n % 2 != 0) bad(whole, "dihedral order must be even");
  std::uint64_t k = n / 2;
  if (k <= 2) {
    // D2 = C2, D4 = C2 x C2: elements (i, e) = r^i s^e with s r s = r^-1.
    auto mul = [k](std::size_t a, std::size_t b) {
      std::size_t ia = a / 2, ea = a % 2, ib = b / 2, eb = b % 2;
      std::size_t i = (ea ? ia + k - ib : ia + ib) % k;
      return i * 2 + (ea ^ eb);
    };
    std::vector<std::size_t> gens{1};
    if (k == 2) gens.push_back(2);
    return regular(n, gens, mul);
  }
  Factor f;
  f.degree = k;
  std::vector<Point> rot(k), refl(k);
  for (Point i = 0; i < k; ++i) {
    rot[i] = static_cast<Point>((i + 1) % k);
    refl[i] = static_cast<Point>((k - i) % k);
  }
  f.generators.emplace_back(std::move(rot));
  f.generators.emplace_back(std::move(refl));
  f.expected_order = n;
  return f;
}

Factor dicyclic(std::string_view whole, std::uint64_t n) {
  if (n % 4 != 0) bad(whole, "dicyclic order must be divisible by 4");
  std::uint64_t m = n / 4;
  std::uint64_t two_m = 2 * m;
  // x^i y^j encoded as 2i + j; y x y^-1 = x^-1, y^2 = x^m.
  auto mul = [m, two_m](std::size_t a, std::size_t b) {
    std::size_t ia = a / 2, ja = a % 2, ib = b / 2, jb = b % 2;
    std::size_t i = (ja ? ia + two_m - ib : ia + ib) % two_m;
    std::size_t j = ja ^ jb;
    if (ja && jb) i = (i + m) % two_m;
    return 2 * i + j;
  };
  return regular(n, {2, 1}, mul);
}

Factor symmetric(std::uint64_t n) {
  Factor f;
  f.degree = n;
  if (n == 1) {
    f.generators.emplace_back(1);
  } else {
    f.generators.push_back(cycle_on(n, {0, 1}));
    if (n > 2) f.generators.push_back(cycle_on(n, range_points(0, static_cast<Point>(n))));
  }
  std::uint64_t order = 1;
  for (std::uint64_t i = 2; i <= n; ++i) order *= i;
  f.expected_order = order;
  return f;
}

Factor alternating(std::uint64_t n) {
  Factor f;
  f.degree = n;
  if (n < 3) {
    f.generators.emplace_back(n);
  } else {
    f.generators.push_back(cycle_on(n, {0, 1, 2}));
    if (n > 3) {
      f.generators.push_back(n % 2 ? cycle_on(n, range_points(0, static_cast<Point>(n)))
                                   : cycle_on(n, range_points(1, static_cast<Point>(n))));
    }
  }
  std::uint64_t order = 1;
  for (std::uint64_t i = 3; i <= n; ++i) order *= i;
  f.expected_order = order;
  return f;
}

Factor psl2(std::string_view whole, std::uint64_t p) {
  if (!is_prime(p)) bad(whole, "PSL(2,p) needs p prime");
  // Points 0..p-1 are field elements, p is infinity.
  std::size_t n = p + 1;
  auto inv_mod = [p](std::uint64_t a) {
    std::uint64_t r = 1, base = a % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  };
  std::vector<Point> shift(n), invert(n);
  for (std::uint64_t z = 0; z < p; ++z) {
    shift[z] = static_cast<Point>((z + 1) % p);
    invert[z] = z == 0 ? static_cast<Point>(p) : static_cast<Point>((p - inv_mod(z)) % p);
  }
  shift[p] = static_cast<Point>(p);
  invert[p] = 0;
  Factor f;
  f.degree = n;
  f.generators.emplace_back(std::move(shift));
  f.generators.emplace_back(std::move(invert));
  f.expected_order = p * (p * p - 1) / std::gcd<std::uint64_t>(2, p - 1);
  return f;
}

Factor from_file(std::string const& path) {
  Factor f;
  f.generators = load_generator_file(path);
  f.degree = f.generators.front().degree();
  return f;
}

Factor single(std::string_view whole, std::string_view d) {
  if (d.starts_with("PSL(2,") && d.ends_with(")")) {
    return psl2(whole, parse_count(whole, d.substr(6, d.size() - 7)));
  }
  if (d == "Sz(8)") {
    Factor f = from_file(data_directory() + "/sz8.gens");
    f.expected_order = 29120;
    return f;
  }
  if (d.size() >= 2) {
    std::string_view rest = d.substr(1);
    switch (d[0]) {
      case 'C': return cyclic(parse_count(whole, rest));
      case 'D': return dihedral(whole, parse_count(whole, rest));
      case 'Q': return dicyclic(whole, parse_count(whole, rest));
      case 'S': return symmetric(parse_count(whole, rest));
      case 'A': return alternating(parse_count(whole, rest));
      default: break;
    }
  }
  bad(whole, "unknown group family \"" + std::string(d) + "\"");
}

std::vector<std::string_view> split_product(std::string_view d) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == '(') ++depth;
    if (d[i] == ')') --depth;
    if (d[i] == 'x' && depth == 0) {
      parts.push_back(d.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(d.substr(start));
  return parts;
}

}  // namespace

std::string data_directory() {
  if (char const* env = std::getenv("GSTRUCT_DATA_DIR"); env && *env) return env;
  return GSTRUCT_DATA_DIR;
}

std::vector<Permutation> parse_generator_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::size_t> degree;
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!degree) {
      std::istringstream header(line);
      std::string keyword;
      long long n = 0;
      if (!(header >> keyword >> n) || keyword != "degree" || n <= 0) {
        throw std::invalid_argument("generator file: expected `degree <n>` header");
      }
      degree = static_cast<std::size_t>(n);
      continue;
    }
    gens.push_back(Permutation::parse(line, *degree));
  }
  if (!degree) throw std::invalid_argument("generator file: missing `degree <n>` header");
  if (gens.empty()) gens.emplace_back(*degree);
  return gens;
}

std::vector<Permutation> load_generator_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open generator file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_generator_text(buffer.str());
}

std::string normalize_descriptor(std::string_view descriptor) {
  std::string compact;
  for (char c : descriptor) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  return compact;
}

std::unique_ptr<FiniteGroup> builtin_group(std::string_view descriptor,
                                           std::uint64_t enumeration_cap) {
  std::string compact = normalize_descriptor(descriptor);
  if (compact.empty()) bad(descriptor, "empty descriptor");

  std::vector<Factor> factors;
  if (compact.starts_with("file:")) {
    factors.push_back(from_file(compact.substr(5)));
  } else {
    for (auto part : split_product(compact)) factors.push_back(single(compact, part));
  }

  std::size_t degree = 0;
  for (auto const& f : factors) degree += f.degree;
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  std::optional<std::uint64_t> expected = 1;
  for (auto const& f : factors) {
    for (auto const& g : f.generators) {
      std::vector<Point> images(degree);
      std::iota(images.begin(), images.end(), Point{0});
      for (std::size_t i = 0; i < f.degree; ++i) {
        images[offset + i] = static_cast<Point>(offset + g[static_cast<Point>(i)]);
      }
      gens.emplace_back(std::move(images));
    }
    offset += f.degree;
    if (expected && f.expected_order) {
      *expected *= *f.expected_order;
    } else {
      expected.reset();
    }
  }

  auto group = std::make_unique<FiniteGroup>(std::move(gens), compact, enumeration_cap);
  if (expected && group->order() != *expected) {
    bad(descriptor, "generators produce order " + std::to_string(group->order()) +
                        ", expected " + std::to_string(*expected));
  }
  return group;
}

}  // namespace gstruct
