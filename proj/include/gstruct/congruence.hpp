#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gstruct/permutation.hpp"

namespace gstruct {

// 2x2 matrices over Z/N, entries in [0, N).
struct Mat2 {
  std::array<std::uint64_t, 4> m{1, 0, 0, 1};  // row-major a b c d
  friend bool operator==(Mat2 const&, Mat2 const&) = default;
};
Mat2 mat_mul(Mat2 const& x, Mat2 const& y, std::uint64_t n);
Mat2 mat_identity(std::uint64_t n);
Mat2 mat_E(std::uint64_t n);
Mat2 mat_T(std::uint64_t n);
bool mat_is_minus_identity(Mat2 const& x, std::uint64_t n);

// N^3 * prod_{p | N} (1 - p^-2)
std::uint64_t sl2_order(std::uint64_t n);

// Words in E, T. Letters: 1 = E, -1 = E^-1, 2 = T, -2 = T^-1. Read left to
// right as a matrix product, which acts on orbits as "first letter first".
using Word = std::vector<int>;

Mat2 evaluate_word(Word const& w, std::uint64_t n);
// Permutation of a word given the images of E and T.
Permutation evaluate_word(Word const& w, Permutation const& e, Permutation const& t);

// E^4 and E^2 (E^-1 T)^3, which present SL2(Z).
std::vector<Word> sl2z_relators();

// Words that are trivial in SL2(Z/N) and, together with sl2z_relators(),
// are intended to present SL2(Z/N). Built from Hsu's relations for the
// level-N quotient of the modular group, sign-corrected so that each word is
// the identity matrix (not -I) mod N, plus T^N. Whether the family really
// presents SL2(Z/N) is decided by validate_relator_family().
std::vector<Word> congruence_relators(std::uint64_t n);

struct CosetEnumerationResult {
  bool completed = false;
  std::size_t index = 0;       // number of cosets when completed
  std::size_t max_cosets = 0;  // peak table size
};

// Todd-Coxeter enumeration of the cosets of <T> in <E, T | relators>.
CosetEnumerationResult enumerate_cosets_of_T(std::vector<Word> const& relators,
                                             std::size_t coset_cap);

inline constexpr std::size_t kDefaultCosetCap = std::size_t{1} << 21;

// True iff sl2z_relators() + congruence_relators(n) present SL2(Z/N):
// every relator is the identity mod N and <T> (of order N in SL2(Z/N)) has
// index |SL2(Z/N)|/N. nullopt when enumeration exceeds the coset cap.
// Results are memoised per (n); thread-safe.
std::optional<bool> validate_relator_family(std::uint64_t n,
                                            std::size_t coset_cap = kDefaultCosetCap);

// --- congruence test for one orbit ---

enum class Congruence { congruence, noncongruence, undetermined, not_tested };
enum class CongruenceMethod { oracle, relations, both, skip };

std::string to_string(Congruence c);
std::string to_string(CongruenceMethod m);
std::optional<CongruenceMethod> parse_congruence_method(std::string const& s);

inline constexpr std::uint64_t kDefaultOracleCap = 1'000'000;

struct CongruenceOptions {
  CongruenceMethod method = CongruenceMethod::both;
  std::uint64_t oracle_cap = kDefaultOracleCap;
  std::size_t coset_cap = kDefaultCosetCap;
};

struct CongruenceVerdict {
  Congruence verdict = Congruence::not_tested;
  std::uint64_t tested_modulus = 0;
  CongruenceMethod method = CongruenceMethod::skip;
  // Sub-results (not_tested when a method did not run).
  Congruence oracle = Congruence::not_tested;
  Congruence relations = Congruence::not_tested;
  friend bool operator==(CongruenceVerdict const&, CongruenceVerdict const&) = default;
};

// Does the action with these E, T images factor through SL2(Z/N)? BFS over
// (matrix mod N, point) pairs from (I, 0). undetermined when |SL2(Z/N)|
// exceeds `cap`.
Congruence diagonal_oracle(Permutation const& e, Permutation const& t, std::uint64_t n,
                           std::uint64_t cap);

// Evaluates congruence_relators(n) on the action. Any nontrivial relator
// proves noncongruence; all trivial proves congruence only when the family is
// validated for n.
Congruence relation_check(Permutation const& e, Permutation const& t, std::uint64_t n,
                          std::size_t coset_cap = kDefaultCosetCap);

// Runs the requested methods at modulus n. With `both`, disagreement between
// two determined sub-results throws std::logic_error.
CongruenceVerdict test_congruence(Permutation const& e, Permutation const& t, std::uint64_t n,
                                  CongruenceOptions const& options);

}  // namespace gstruct
