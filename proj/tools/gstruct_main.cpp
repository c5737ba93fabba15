#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gstruct/builtin_groups.hpp"
#include "gstruct/dihedral.hpp"
#include "gstruct/report.hpp"
#include "gstruct/tate.hpp"

using namespace gstruct;

namespace {

int run_compute_command(std::string const& group, std::string const& format_name,
                        std::string const& method_name, std::uint64_t oracle_cap, unsigned jobs,
                        std::string const& cache_dir) {
  auto format = parse_table_format(format_name);
  auto method = parse_congruence_method(method_name);
  if (!format || !method) {
    std::cerr << "error: bad --format or --congruence value\n";
    return 1;
  }
  ComputeOptions options;
  options.jobs = jobs;
  options.congruence.method = *method;
  options.congruence.oracle_cap = oracle_cap;

  std::string descriptor = normalize_descriptor(group);
  std::optional<TableCache> cache;
  if (!cache_dir.empty()) {
    cache.emplace(cache_dir);
  } else if (auto dir = TableCache::default_directory()) {
    cache.emplace(*dir);
  }

  std::optional<ComponentTable> table;
  if (cache) table = cache->load(descriptor, options);
  if (!table) {
    table = run_compute(descriptor, options);
    if (cache) {
      try {
        cache->store(*table, options);
      } catch (std::exception const& e) {
        std::cerr << "warning: " << e.what() << "\n";
      }
    }
  }
  std::cout << emit_table(*table, *format);
  return table->any_undetermined() ? 2 : 0;
}

int run_dihedral_command(unsigned k_max, unsigned jobs) {
  bool all = true;
  for (unsigned k = 3; k <= k_max; ++k) {
    auto report = verify_dihedral_theorem(k, jobs);
    all = all && report.passed();
    std::cout << "k=" << k << " " << (report.passed() ? "PASS" : "FAIL") << " components="
              << report.orbit_count << " expected=" << report.expected_orbits;
    for (auto const& f : report.failures) std::cout << "\n  " << f;
    std::cout << "\n";
  }
  return all ? 0 : 1;
}

int run_tate_command(int precision, std::string const& which) {
  auto series = parse_tate_series(which);
  if (!series) {
    std::cerr << "error: --emit must be one of B, C, delta, j\n";
    return 1;
  }
  std::cout << format_series_lines(tate_series(*series, precision));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Components of moduli of elliptic curves with G-structures"};
  app.require_subcommand(1);

  std::string group, format = "md", method = "both", cache_dir;
  std::uint64_t oracle_cap = kDefaultOracleCap;
  unsigned jobs = 1;
  auto* compute = app.add_subcommand("compute", "Tabulate the components of M(G)");
  compute->add_option("--group", group, "Group descriptor, e.g. A5, PSL(2,7), C3xC3, file:gens.txt")->required();
  compute->add_option("--format", format, "md, csv or json")->check(CLI::IsMember({"md", "csv", "json"}));
  compute->add_option("--congruence", method, "oracle, relations, both or skip")
      ->check(CLI::IsMember({"oracle", "relations", "both", "skip"}));
  compute->add_option("--oracle-cap", oracle_cap, "Largest |SL2(Z/N)| for the diagonal oracle");
  compute->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
  compute->add_option("--cache-dir", cache_dir, "Result cache directory (default $GSTRUCT_CACHE_DIR)");

  unsigned k_max = 40;
  auto* dihedral = app.add_subcommand("dihedral-check", "Check the dihedral structure theorem for k = 3..K");
  dihedral->add_option("--k-max", k_max, "Largest k")->check(CLI::Range(3u, 100000u));
  dihedral->add_option("--jobs", jobs, "Worker threads (0 = all cores)");

  int precision = 64;
  std::string which = "j";
  auto* tate = app.add_subcommand("tate", "Tate curve q-expansions");
  tate->add_option("--precision", precision, "Highest exponent to print")->check(CLI::Range(1, 100000));
  tate->add_option("--emit", which, "B, C, delta or j")->check(CLI::IsMember({"B", "C", "delta", "j"}));

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*compute) return run_compute_command(group, format, method, oracle_cap, jobs, cache_dir);
    if (*dihedral) return run_dihedral_command(k_max, jobs);
    if (*tate) return run_tate_command(precision, which);
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
