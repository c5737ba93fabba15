#include "gstruct/congruence.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace gstruct {

namespace {

std::uint64_t mod(std::int64_t x, std::uint64_t n) {
  auto m = static_cast<std::int64_t>(n);
  return static_cast<std::uint64_t>(((x % m) + m) % m);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t n) {
  if (n == 1) return 0;
  std::int64_t t = 0, new_t = 1;
  auto r = static_cast<std::int64_t>(n), new_r = static_cast<std::int64_t>(a % n);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::invalid_argument("inverse_mod: not a unit");
  return mod(t, n);
}

int letter_inverse(int x) { return -x; }

Word inverse(Word const& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& x : out) x = letter_inverse(x);
  return out;
}

Word cat(std::initializer_list<Word> parts) {
  Word out;
  for (auto const& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Word pow(Word const& w, std::int64_t k) {
  Word base = k < 0 ? inverse(w) : w;
  Word out;
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

// Free and cyclic reduction, with T-runs taken mod N and E-runs mod 4. Valid
// because T^N and E^4 are relators.
Word normalize(Word const& w, std::uint64_t n, bool cyclic) {
  std::vector<std::pair<int, std::int64_t>> runs;  // generator (1 or 2), exponent
  auto canon = [n](int g, std::int64_t k) {
    std::int64_t period = g == 1 ? 4 : static_cast<std::int64_t>(n);
    k = ((k % period) + period) % period;
    if (2 * k > period) k -= period;
    return k;
  };
  auto push = [&](int g, std::int64_t k) {
    if (!runs.empty() && runs.back().first == g) {
      k += runs.back().second;
      runs.pop_back();
    }
    k = canon(g, k);
    if (k != 0) runs.emplace_back(g, k);
  };
  for (int x : w) push(x < 0 ? -x : x, x < 0 ? -1 : 1);
  if (cyclic) {
    while (runs.size() > 1 && runs.front().first == runs.back().first) {
      auto [g, k] = runs.back();
      runs.pop_back();
      runs.front().second = canon(g, runs.front().second + k);
      if (runs.front().second == 0) runs.erase(runs.begin());
    }
  }
  Word out;
  for (auto [g, k] : runs) out.insert(out.end(), static_cast<std::size_t>(k < 0 ? -k : k), k < 0 ? -g : g);
  return out;
}

// Builds L^k and R^k with exponents reduced mod N.
struct Letters {
  std::uint64_t n;
  Word L(std::int64_t k) const {
    std::uint64_t r = mod(k, n);
    if (r == 0) return {};
    if (r <= n / 2) return Word(r, 2);
    return Word(n - r, -2);
  }
  // R = E T^-1 E^-1
  Word R(std::int64_t k) const { return cat({{1}, L(-k), {-1}}); }
};

// Columns of the coset table: E, E^-1, T, T^-1.
int column(int letter) {
  switch (letter) {
    case 1: return 0;
    case -1: return 1;
    case 2: return 2;
    case -2: return 3;
    default: throw std::invalid_argument("word letter out of range");
  }
}

class CosetTable {
 public:
  using Coset = std::int32_t;

  explicit CosetTable(std::size_t cap) : cap_(cap) { new_coset(); }

  bool full() const { return full_; }
  std::size_t defined() const { return parent_.size(); }
  bool live(std::size_t c) const { return parent_[c] == static_cast<Coset>(c); }
  Coset at(Coset c, int x) const { return table_[4 * static_cast<std::size_t>(c) + x]; }

  // HLT scan; defines new cosets when `fill` is set. Stops early when full.
  void scan(Coset c, std::vector<int> const& w, bool fill) {
    if (w.empty()) return;
    Coset f = c, b = c;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    for (;;) {
      while (i <= j && at(f, w[i]) >= 0) f = at(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, w[j] ^ 1) >= 0) b = at(b, w[j--] ^ 1);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        set(f, w[i], b);
        set(b, w[i] ^ 1, f);
        return;
      }
      if (!fill || !define(f, w[i])) return;
    }
  }

  bool define(Coset c, int x) {
    if (defined() >= cap_) {
      full_ = true;
      return false;
    }
    Coset d = new_coset();
    set(c, x, d);
    set(d, x ^ 1, c);
    return true;
  }

  // Renumbers live cosets consecutively; returns the new number of the first
  // live coset at or after `c` (or the new size if none).
  std::size_t compact(std::size_t c) {
    std::vector<Coset> renum(defined(), -1);
    Coset next = 0;
    std::size_t resume = std::string::npos;
    for (std::size_t k = 0; k < defined(); ++k) {
      if (!live(k)) continue;
      if (k >= c && resume == std::string::npos) resume = static_cast<std::size_t>(next);
      renum[k] = next++;
    }
    std::vector<Coset> table(4 * static_cast<std::size_t>(next), -1);
    for (std::size_t k = 0; k < defined(); ++k) {
      if (renum[k] < 0) continue;
      for (int x = 0; x < 4; ++x) {
        Coset t = at(static_cast<Coset>(k), x);
        if (t >= 0) table[4 * static_cast<std::size_t>(renum[k]) + x] = renum[rep(t)];
      }
    }
    table_ = std::move(table);
    parent_.resize(static_cast<std::size_t>(next));
    std::iota(parent_.begin(), parent_.end(), Coset{0});
    full_ = false;
    return resume == std::string::npos ? static_cast<std::size_t>(next) : resume;
  }

 private:
  Coset new_coset() {
    auto d = static_cast<Coset>(parent_.size());
    parent_.push_back(d);
    table_.insert(table_.end(), 4, -1);
    return d;
  }
  void set(Coset c, int x, Coset d) { table_[4 * static_cast<std::size_t>(c) + x] = d; }

  Coset rep(Coset k) {
    Coset r = k;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[k] != r) k = std::exchange(parent_[k], r);
    return r;
  }

  void merge(Coset k, Coset l, std::vector<Coset>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[l] = k;
    queue.push_back(l);
  }

  void coincidence(Coset a, Coset b) {
    std::vector<Coset> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Coset e = queue[i];
      for (int x = 0; x < 4; ++x) {
        Coset f = at(e, x);
        if (f < 0) continue;
        set(f, x ^ 1, -1);
        Coset e1 = rep(e), f1 = rep(f);
        if (at(e1, x) >= 0) {
          merge(f1, at(e1, x), queue);
        } else if (at(f1, x ^ 1) >= 0) {
          merge(e1, at(f1, x ^ 1), queue);
        } else {
          set(e1, x, f1);
          set(f1, x ^ 1, e1);
        }
      }
    }
  }

  std::size_t cap_;
  bool full_ = false;
  std::vector<Coset> parent_;
  std::vector<Coset> table_;
};

}  // namespace

Mat2 mat_mul(Mat2 const& x, Mat2 const& y, std::uint64_t n) {
  auto const& a = x.m;
  auto const& b = y.m;
  return {{(a[0] * b[0] + a[1] * b[2]) % n, (a[0] * b[1] + a[1] * b[3]) % n,
           (a[2] * b[0] + a[3] * b[2]) % n, (a[2] * b[1] + a[3] * b[3]) % n}};
}

Mat2 mat_identity(std::uint64_t n) { return {{1 % n, 0, 0, 1 % n}}; }
Mat2 mat_E(std::uint64_t n) { return {{0, 1 % n, mod(-1, n), 0}}; }
Mat2 mat_T(std::uint64_t n) { return {{1 % n, 1 % n, 0, 1 % n}}; }

bool mat_is_minus_identity(Mat2 const& x, std::uint64_t n) {
  return x == Mat2{{mod(-1, n), 0, 0, mod(-1, n)}};
}

std::uint64_t sl2_order(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("sl2_order: modulus must be positive");
  std::uint64_t order = n * n * n;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p) continue;
    while (rest % p == 0) rest /= p;
    order = order / (p * p) * (p * p - 1);
  }
  if (rest > 1) order = order / (rest * rest) * (rest * rest - 1);
  return order;
}

Mat2 evaluate_word(Word const& w, std::uint64_t n) {
  Mat2 e = mat_E(n), t = mat_T(n);
  Mat2 einv = mat_mul(mat_mul(e, e, n), e, n);
  Mat2 tinv{{1 % n, mod(-1, n), 0, 1 % n}};
  Mat2 acc = mat_identity(n);
  for (int x : w) {
    switch (x) {
      case 1: acc = mat_mul(acc, e, n); break;
      case -1: acc = mat_mul(acc, einv, n); break;
      case 2: acc = mat_mul(acc, t, n); break;
      case -2: acc = mat_mul(acc, tinv, n); break;
      default: throw std::invalid_argument("word letter out of range");
    }
  }
  return acc;
}

Permutation evaluate_word(Word const& w, Permutation const& e, Permutation const& t) {
  Permutation acc(e.degree());
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    auto run = static_cast<std::int64_t>(j - i);
    Permutation const& g = (w[i] == 1 || w[i] == -1) ? e : t;
    acc = acc * power(g, w[i] < 0 ? -run : run);
    i = j;
  }
  return acc;
}

std::vector<Word> sl2z_relators() {
  return {{1, 1, 1, 1}, {1, 1, -1, 2, -1, 2, -1, 2}};
}

std::vector<Word> congruence_relators(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("congruence_relators: modulus must be positive");
  Letters lt{n};
  std::vector<Word> raw;

  std::uint64_t e = 1;
  while (n % (2 * e) == 0) e *= 2;
  std::uint64_t m = n / e;

  if (e == 1) {
    if (m > 1) {
      auto half = static_cast<std::int64_t>(inverse_mod(2, n));
      raw.push_back(pow(cat({lt.R(2), lt.L(-half)}), 3));
    }
  } else if (m == 1) {
    auto fifth = static_cast<std::int64_t>(inverse_mod(5, n));
    Word s = cat({lt.L(20), lt.R(fifth), lt.L(-4), lt.R(-1)});
    Word lrl = cat({lt.L(1), lt.R(-1), lt.L(1)});
    raw.push_back(cat({inverse(lrl), s, lrl, s}));
    raw.push_back(cat({inverse(s), lt.R(1), s, lt.R(-25)}));
    raw.push_back(pow(cat({s, lt.R(5), lt.L(1), lt.R(-1), lt.L(1)}), 3));
  } else {
    // CRT idempotents: c = 0 mod e, 1 mod m; d = 1 mod e, 0 mod m.
    std::uint64_t cc = e * inverse_mod(e % m, m) % n;
    std::uint64_t dd = (n + 1 - cc) % n;
    auto ci = static_cast<std::int64_t>(cc), di = static_cast<std::int64_t>(dd);
    Word a = lt.L(ci), b = lt.R(ci), l = lt.L(di), r = lt.R(di);
    auto fifth = static_cast<std::int64_t>(inverse_mod(5, e));
    auto half = static_cast<std::int64_t>(inverse_mod(2, m));
    Word s = cat({pow(l, 20), pow(r, fifth), pow(l, -4), inverse(r)});
    Word aba = cat({a, inverse(b), a});
    Word lrl = cat({l, inverse(r), l});
    raw.push_back(cat({inverse(a), inverse(r), a, r}));
    raw.push_back(pow(aba, 4));
    raw.push_back(cat({pow(aba, 2), pow(cat({inverse(a), b}), 3)}));
    raw.push_back(cat({pow(aba, 2), pow(cat({pow(b, 2), pow(a, -half)}), -3)}));
    raw.push_back(cat({inverse(lrl), s, lrl, s}));
    raw.push_back(cat({inverse(s), r, s, pow(r, -25)}));
    raw.push_back(cat({pow(lrl, 2), pow(cat({s, pow(r, 5), lrl}), -3)}));
  }

  std::vector<Word> out;
  for (auto& w : raw) {
    w = normalize(w, n, false);
    Mat2 v = evaluate_word(w, n);
    if (v == mat_identity(n)) {
      out.push_back(normalize(w, n, true));
    } else if (mat_is_minus_identity(v, n)) {
      w.push_back(1);
      w.push_back(1);
      out.push_back(normalize(w, n, true));
    } else {
      throw std::logic_error("congruence_relators: relator is not central mod " + std::to_string(n));
    }
  }
  out.push_back(Word(n, 2));
  if (n <= 2) out.push_back({1, 1});
  return out;
}

CosetEnumerationResult enumerate_cosets_of_T(std::vector<Word> const& relators,
                                             std::size_t coset_cap) {
  std::vector<std::vector<int>> rels;
  for (auto const& w : relators) {
    std::vector<int> cols;
    for (int x : w) cols.push_back(column(x));
    rels.push_back(std::move(cols));
  }
  coset_cap = std::min<std::size_t>(coset_cap, std::numeric_limits<std::int32_t>::max() / 4);
  CosetTable table(coset_cap);
  std::size_t peak = 1;
  table.scan(0, {column(2)}, true);
  std::size_t c = 0;
  while (c < table.defined()) {
    auto cc = static_cast<CosetTable::Coset>(c);
    for (auto const& r : rels) {
      if (!table.live(c) || table.full()) break;
      table.scan(cc, r, true);
    }
    for (int x = 0; x < 4 && table.live(c) && !table.full(); ++x) {
      if (table.at(cc, x) < 0) table.define(cc, x);
    }
    peak = std::max(peak, table.defined());
    if (!table.full()) {
      ++c;
      continue;
    }
    // lookahead: deductions only, then drop dead cosets
    for (std::size_t k = 0; k < table.defined(); ++k) {
      for (auto const& r : rels) {
        if (!table.live(k)) break;
        table.scan(static_cast<CosetTable::Coset>(k), r, false);
      }
    }
    c = table.compact(c);
    if (table.defined() * 10 > coset_cap * 9) {
      CosetEnumerationResult result;
      result.max_cosets = peak;
      return result;
    }
  }
  CosetEnumerationResult result;
  result.max_cosets = peak;
  result.completed = true;
  for (std::size_t c = 0; c < table.defined(); ++c) result.index += table.live(c);
  return result;
}

std::optional<bool> validate_relator_family(std::uint64_t n, std::size_t coset_cap) {
  static std::mutex mutex;
  static std::map<std::uint64_t, std::pair<std::size_t, std::optional<bool>>> memo;
  std::lock_guard lock(mutex);
  if (auto it = memo.find(n); it != memo.end()) {
    // an overflow under a smaller cap may succeed under a larger one
    if (it->second.second.has_value() || it->second.first >= coset_cap) return it->second.second;
  }
  auto family = congruence_relators(n);
  std::optional<bool> valid;
  bool central = true;
  for (auto const& w : family) central = central && evaluate_word(w, n) == mat_identity(n);
  if (!central) {
    valid = false;
  } else {
    auto rels = sl2z_relators();
    rels.insert(rels.end(), family.begin(), family.end());
    auto res = enumerate_cosets_of_T(rels, coset_cap);
    if (res.completed) valid = res.index == sl2_order(n) / n;
  }
  memo[n] = {coset_cap, valid};
  return valid;
}

std::string to_string(Congruence c) {
  switch (c) {
    case Congruence::congruence: return "cong";
    case Congruence::noncongruence: return "ncng";
    case Congruence::undetermined: return "undetermined";
    case Congruence::not_tested: return "not-tested";
  }
  return "?";
}

std::string to_string(CongruenceMethod m) {
  switch (m) {
    case CongruenceMethod::oracle: return "oracle";
    case CongruenceMethod::relations: return "relations";
    case CongruenceMethod::both: return "both";
    case CongruenceMethod::skip: return "skip";
  }
  return "?";
}

std::optional<CongruenceMethod> parse_congruence_method(std::string const& s) {
  for (auto m : {CongruenceMethod::oracle, CongruenceMethod::relations, CongruenceMethod::both,
                 CongruenceMethod::skip}) {
    if (to_string(m) == s) return m;
  }
  return std::nullopt;
}

Congruence diagonal_oracle(Permutation const& e, Permutation const& t, std::uint64_t n,
                           std::uint64_t cap) {
  std::uint64_t target = sl2_order(n);
  if (target > cap) return Congruence::undetermined;
  auto key = [n](Mat2 const& x) { return ((x.m[0] * n + x.m[1]) * n + x.m[2]) * n + x.m[3]; };
  std::unordered_map<std::uint64_t, Point> seen;
  seen.reserve(target);
  std::vector<std::pair<Mat2, Point>> queue{{mat_identity(n), 0}};
  seen.emplace(key(queue[0].first), 0);
  Mat2 me = mat_E(n), mt = mat_T(n);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto [x, p] = queue[head];
    for (auto [mx, q] : {std::pair{mat_mul(x, me, n), e[p]}, std::pair{mat_mul(x, mt, n), t[p]}}) {
      auto [it, inserted] = seen.emplace(key(mx), q);
      if (inserted) {
        queue.emplace_back(mx, q);
      } else if (it->second != q) {
        return Congruence::noncongruence;
      }
    }
  }
  if (seen.size() != target) throw std::logic_error("diagonal_oracle: E, T do not generate SL2(Z/N)");
  return Congruence::congruence;
}

Congruence relation_check(Permutation const& e, Permutation const& t, std::uint64_t n,
                          std::size_t coset_cap) {
  for (auto const& w : congruence_relators(n)) {
    if (!evaluate_word(w, e, t).is_identity()) return Congruence::noncongruence;
  }
  auto valid = validate_relator_family(n, coset_cap);
  return valid.value_or(false) ? Congruence::congruence : Congruence::undetermined;
}

CongruenceVerdict test_congruence(Permutation const& e, Permutation const& t, std::uint64_t n,
                                  CongruenceOptions const& options) {
  CongruenceVerdict v;
  v.tested_modulus = n;
  v.method = options.method;
  if (options.method == CongruenceMethod::skip) return v;
  bool want_oracle = options.method != CongruenceMethod::relations;
  bool want_relations = options.method != CongruenceMethod::oracle;
  auto determined = [](Congruence c) {
    return c == Congruence::congruence || c == Congruence::noncongruence;
  };
  if (want_relations) v.relations = relation_check(e, t, n, options.coset_cap);
  if (want_oracle) v.oracle = diagonal_oracle(e, t, n, options.oracle_cap);
  if (determined(v.oracle) && determined(v.relations)) {
    if (v.oracle != v.relations) {
      throw std::logic_error("congruence: oracle and relation check disagree at N = " +
                             std::to_string(n));
    }
    v.verdict = v.oracle;
    v.method = CongruenceMethod::both;
  } else if (determined(v.oracle)) {
    v.verdict = v.oracle;
    v.method = CongruenceMethod::oracle;
  } else if (determined(v.relations)) {
    v.verdict = v.relations;
    v.method = CongruenceMethod::relations;
  } else {
    v.verdict = Congruence::undetermined;
  }
  return v;
}

}  // namespace gstruct
