#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gstruct/congruence.hpp"
#include "gstruct/curve_invariants.hpp"
#include "gstruct/finite_group.hpp"
#include "gstruct/pair_enum.hpp"
#include "gstruct/sl2_orbit.hpp"

namespace gstruct {

inline constexpr int kTableSchemaVersion = 1;

// One printed row: a block of orbits with conjugate stabilizers.
struct ComponentRow {
  std::string label;  // "Γ(G)_i" by table position
  std::size_t m = 0;
  std::size_t d = 0;
  std::size_t c4 = 0;
  std::size_t c6 = 0;
  std::size_t c_neg1 = 0;
  std::vector<std::uint64_t> cusp_widths;  // ascending, with repetition
  std::uint64_t genus = 0;
  std::uint64_t level = 1;
  Congruence congruence = Congruence::not_tested;
  std::uint64_t tested_modulus = 0;
  CongruenceMethod method = CongruenceMethod::skip;
  bool fine = false;
  std::vector<std::uint64_t> e;            // one per orbit, ascending
  std::vector<std::uint64_t> genus_cover;  // one per orbit, ascending
  std::vector<std::string> nielsen;        // one per orbit, sorted
  friend bool operator==(ComponentRow const&, ComponentRow const&) = default;
};

struct ComponentTable {
  std::string descriptor;
  std::uint64_t group_order = 0;
  std::size_t fiber_size = 0;
  std::vector<ComponentRow> rows;  // sorted by (genus, d, orbit code)
  friend bool operator==(ComponentTable const&, ComponentTable const&) = default;

  bool any_undetermined() const;
};

struct ComputeOptions {
  CongruenceOptions congruence;
  unsigned jobs = 1;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
};

// Everything computed for one group, kept for property checks.
struct GroupAnalysis {
  explicit GroupAnalysis(FiniteGroup const& g) : group(g), canon(g) {}
  FiniteGroup const& group;
  PairCanonicalizer canon;
  Fiber fiber;
  std::vector<OrbitAction> orbits;
  std::vector<ComponentRecord> records;  // parallel to orbits
};

std::unique_ptr<GroupAnalysis> analyze(FiniteGroup const& group, ComputeOptions const& options);
ComponentTable make_table(GroupAnalysis const& analysis);
ComponentTable run_compute(std::string const& descriptor, ComputeOptions const& options);

enum class TableFormat { md, csv, json };
std::optional<TableFormat> parse_table_format(std::string const& s);

// "2^1 3^2 5^2"
std::string format_multiset(std::vector<std::uint64_t> const& values);
// A single value when all entries agree, else the multiset form.
std::string format_per_orbit(std::vector<std::uint64_t> const& values);
std::string format_congruence(Congruence c);

std::string emit_table(ComponentTable const& table, TableFormat format);
std::string table_to_json(ComponentTable const& table);
// Throws std::runtime_error on malformed input or a schema version mismatch.
ComponentTable table_from_json(std::string const& text);

// Result cache keyed by descriptor and the options that affect the output.
class TableCache {
 public:
  explicit TableCache(std::filesystem::path dir);
  // $GSTRUCT_CACHE_DIR, if set.
  static std::optional<std::filesystem::path> default_directory();

  std::optional<ComponentTable> load(std::string const& descriptor, ComputeOptions const& options) const;
  void store(ComponentTable const& table, ComputeOptions const& options) const;
  std::filesystem::path entry_path(std::string const& descriptor, ComputeOptions const& options) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace gstruct
