#include "gstruct/report.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gstruct/builtin_groups.hpp"
#include "gstruct/parallel.hpp"

namespace gstruct {

namespace {

using nlohmann::json;

std::uint64_t fnv1a(std::string const& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string cache_key_material(std::string const& descriptor, ComputeOptions const& o) {
  std::ostringstream k;
  k << "v" << kTableSchemaVersion << "|" << descriptor << "|" << to_string(o.congruence.method)
    << "|" << o.congruence.oracle_cap << "|" << o.congruence.coset_cap;
  return k.str();
}

Congruence parse_congruence(std::string const& s) {
  for (auto c : {Congruence::congruence, Congruence::noncongruence, Congruence::undetermined,
                 Congruence::not_tested}) {
    if (to_string(c) == s) return c;
  }
  throw std::runtime_error("unknown congruence value " + s);
}

std::string csv_field(std::string const& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(std::vector<std::string> const& parts, char const* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::vector<std::string> row_fields(ComponentRow const& r) {
  return {r.label,
          std::to_string(r.m),
          std::to_string(r.d),
          std::to_string(r.c4),
          std::to_string(r.c6),
          std::to_string(r.c_neg1),
          format_multiset(r.cusp_widths),
          std::to_string(r.genus),
          format_congruence(r.congruence),
          r.fine ? "fine" : "crse",
          format_per_orbit(r.e),
          format_per_orbit(r.genus_cover),
          std::to_string(r.level),
          std::to_string(r.tested_modulus),
          join(r.nielsen, " ")};
}

std::vector<std::string> const kHeader{"label", "m",  "d",     "c4", "c6", "c-1", "cusp widths", "genus",
                                       "c/nc",  "c/f", "e",    "g",  "level", "N", "nielsen"};

}  // namespace

bool ComponentTable::any_undetermined() const {
  return std::any_of(rows.begin(), rows.end(),
                     [](ComponentRow const& r) { return r.congruence == Congruence::undetermined; });
}

std::unique_ptr<GroupAnalysis> analyze(FiniteGroup const& group, ComputeOptions const& options) {
  auto a = std::make_unique<GroupAnalysis>(group);
  a->fiber = enumerate_exterior_surjections(a->canon, options.jobs);
  a->orbits = orbit_decompose(a->canon, a->fiber, options.jobs);
  a->records.resize(a->orbits.size());
  parallel_for(a->orbits.size(), options.jobs, [&](std::size_t i, unsigned) {
    a->records[i] = component_record(group, a->orbits[i], options.congruence);
  }, 1);
  auto blocks = group_by_conjugate_stabilizers(a->orbits, options.jobs);
  for (std::size_t i = 0; i < blocks.size(); ++i) a->records[i].multiplicity_group = blocks[i];
  return a;
}

ComponentTable make_table(GroupAnalysis const& a) {
  ComponentTable t;
  t.descriptor = a.group.descriptor();
  t.group_order = a.group.order();
  t.fiber_size = a.fiber.size();

  std::map<std::size_t, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < a.records.size(); ++i) members[a.records[i].multiplicity_group].push_back(i);

  struct Keyed {
    std::uint64_t genus;
    std::size_t d;
    std::vector<std::uint32_t> code;
    ComponentRow row;
  };
  std::vector<Keyed> keyed;
  for (auto const& [block, idx] : members) {
    auto const& first = a.records[idx.front()];
    ComponentRow r;
    r.m = idx.size();
    r.d = first.sig.d;
    r.c4 = first.sig.c4;
    r.c6 = first.sig.c6;
    r.c_neg1 = first.sig.c_neg1;
    r.cusp_widths = first.sig.cusp_widths;
    r.genus = first.genus_curve;
    r.level = first.level;
    r.fine = first.fine;
    r.congruence = first.congruence.verdict;
    r.tested_modulus = first.congruence.tested_modulus;
    r.method = first.congruence.method;
    for (auto i : idx) {
      auto const& rec = a.records[i];
      if (rec.sig != first.sig) throw std::logic_error("make_table: conjugate stabilizers with different signatures");
      auto v = rec.congruence.verdict;
      bool determined = v == Congruence::congruence || v == Congruence::noncongruence;
      if (determined && r.congruence != v) {
        if (r.congruence == Congruence::undetermined) {
          r.congruence = v;
          r.method = rec.congruence.method;
        } else {
          throw std::logic_error("make_table: conjugate stabilizers with different congruence verdicts");
        }
      }
      r.e.push_back(rec.cover.e);
      r.genus_cover.push_back(rec.cover.genus_cover);
      r.nielsen.push_back(rec.nielsen_label);
    }
    std::sort(r.e.begin(), r.e.end());
    std::sort(r.genus_cover.begin(), r.genus_cover.end());
    std::sort(r.nielsen.begin(), r.nielsen.end());
    keyed.push_back({r.genus, r.d, canonical_code(a.orbits[idx.front()]), std::move(r)});
  }
  std::sort(keyed.begin(), keyed.end(), [](Keyed const& x, Keyed const& y) {
    return std::tie(x.genus, x.d, x.code) < std::tie(y.genus, y.d, y.code);
  });
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    keyed[i].row.label = "Γ(" + t.descriptor + ")_" + std::to_string(i + 1);
    t.rows.push_back(std::move(keyed[i].row));
  }
  return t;
}

ComponentTable run_compute(std::string const& descriptor, ComputeOptions const& options) {
  auto group = builtin_group(descriptor, options.enumeration_cap);
  auto analysis = analyze(*group, options);
  return make_table(*analysis);
}

std::optional<TableFormat> parse_table_format(std::string const& s) {
  if (s == "md") return TableFormat::md;
  if (s == "csv") return TableFormat::csv;
  if (s == "json") return TableFormat::json;
  return std::nullopt;
}

std::string format_multiset(std::vector<std::uint64_t> const& values) {
  std::map<std::uint64_t, std::size_t> counts;
  for (auto v : values) ++counts[v];
  std::string out;
  for (auto const& [v, c] : counts) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v) + "^" + std::to_string(c);
  }
  return out;
}

std::string format_per_orbit(std::vector<std::uint64_t> const& values) {
  if (values.empty()) return "";
  if (std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) == values.end()) {
    return std::to_string(values.front());
  }
  return format_multiset(values);
}

std::string format_congruence(Congruence c) {
  switch (c) {
    case Congruence::congruence: return "cong";
    case Congruence::noncongruence: return "ncng";
    case Congruence::undetermined: return "undet";
    case Congruence::not_tested: return "-";
  }
  return "?";
}

std::string emit_table(ComponentTable const& table, TableFormat format) {
  std::ostringstream out;
  switch (format) {
    case TableFormat::json:
      return table_to_json(table);
    case TableFormat::csv:
      out << join(kHeader, ",") << "\n";
      for (auto const& r : table.rows) {
        auto fields = row_fields(r);
        for (auto& f : fields) f = csv_field(f);
        out << join(fields, ",") << "\n";
      }
      return out.str();
    case TableFormat::md: {
      out << "| " << join(kHeader, " | ") << " |\n|";
      for (std::size_t i = 0; i < kHeader.size(); ++i) out << "---|";
      out << "\n";
      for (auto const& r : table.rows) out << "| " << join(row_fields(r), " | ") << " |\n";
      return out.str();
    }
  }
  throw std::invalid_argument("emit_table: unknown format");
}

std::string table_to_json(ComponentTable const& table) {
  json rows = json::array();
  for (auto const& r : table.rows) {
    rows.push_back({{"label", r.label},
                    {"m", r.m},
                    {"d", r.d},
                    {"c4", r.c4},
                    {"c6", r.c6},
                    {"c_neg1", r.c_neg1},
                    {"cusp_widths", r.cusp_widths},
                    {"genus", r.genus},
                    {"level", r.level},
                    {"congruence", to_string(r.congruence)},
                    {"tested_modulus", r.tested_modulus},
                    {"method", to_string(r.method)},
                    {"fine", r.fine},
                    {"e", r.e},
                    {"genus_cover", r.genus_cover},
                    {"nielsen", r.nielsen}});
  }
  json doc = {{"schema_version", kTableSchemaVersion},
              {"descriptor", table.descriptor},
              {"group_order", table.group_order},
              {"fiber_size", table.fiber_size},
              {"rows", rows}};
  return doc.dump(2) + "\n";
}

ComponentTable table_from_json(std::string const& text) {
  try {
    json doc = json::parse(text);
    if (doc.at("schema_version").get<int>() != kTableSchemaVersion) {
      throw std::runtime_error("table json: schema version mismatch");
    }
    ComponentTable t;
    doc.at("descriptor").get_to(t.descriptor);
    doc.at("group_order").get_to(t.group_order);
    doc.at("fiber_size").get_to(t.fiber_size);
    for (auto const& j : doc.at("rows")) {
      ComponentRow r;
      j.at("label").get_to(r.label);
      j.at("m").get_to(r.m);
      j.at("d").get_to(r.d);
      j.at("c4").get_to(r.c4);
      j.at("c6").get_to(r.c6);
      j.at("c_neg1").get_to(r.c_neg1);
      j.at("cusp_widths").get_to(r.cusp_widths);
      j.at("genus").get_to(r.genus);
      j.at("level").get_to(r.level);
      r.congruence = parse_congruence(j.at("congruence").get<std::string>());
      j.at("tested_modulus").get_to(r.tested_modulus);
      auto method = parse_congruence_method(j.at("method").get<std::string>());
      if (!method) throw std::runtime_error("table json: unknown method");
      r.method = *method;
      j.at("fine").get_to(r.fine);
      j.at("e").get_to(r.e);
      j.at("genus_cover").get_to(r.genus_cover);
      j.at("nielsen").get_to(r.nielsen);
      t.rows.push_back(std::move(r));
    }
    return t;
  } catch (json::exception const& e) {
    throw std::runtime_error(std::string("table json: ") + e.what());
  }
}

TableCache::TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::optional<std::filesystem::path> TableCache::default_directory() {
  if (char const* env = std::getenv("GSTRUCT_CACHE_DIR"); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

std::filesystem::path TableCache::entry_path(std::string const& descriptor,
                                             ComputeOptions const& options) const {
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.json",
                static_cast<unsigned long long>(fnv1a(cache_key_material(descriptor, options))));
  return dir_ / name;
}

std::optional<ComponentTable> TableCache::load(std::string const& descriptor,
                                               ComputeOptions const& options) const {
  auto path = entry_path(descriptor, options);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    json doc = json::parse(buf.str());
    if (doc.value("schema_version", -1) != kTableSchemaVersion) return std::nullopt;
    if (doc.value("cache_key", std::string()) != cache_key_material(descriptor, options)) return std::nullopt;
    doc.erase("cache_key");
    return table_from_json(doc.dump());
  } catch (std::exception const& e) {
    std::cerr << "warning: ignoring corrupt cache entry " << path << ": " << e.what() << "\n";
    return std::nullopt;
  }
}

void TableCache::store(ComponentTable const& table, ComputeOptions const& options) const {
  std::filesystem::create_directories(dir_);
  auto path = entry_path(table.descriptor, options);
  json doc = json::parse(table_to_json(table));
  doc["cache_key"] = cache_key_material(table.descriptor, options);
  auto tmp = path;
  tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache entry " + tmp.string());
    out << doc.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace gstruct
