#include "gzoo/report.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <map>
#include "json.hpp"
#include <sstream>

#include "gzoo/error.hpp"
#include "gzoo/textio.hpp"

#ifndef GZOO_CATALOG_DIR
#define GZOO_CATALOG_DIR "catalog"
#endif

namespace gzoo {

using nlohmann::ordered_json;

namespace {

std::string class_label(std::size_t k) { return "class " + std::to_string(k); }

}  // namespace

GeometryRecord describe_geometry(const IncidenceGeometry& geom, std::size_t class_index,
                                 StabilizerKind kind, const std::optional<CosetTable>& table,
                                 const PipelineOptions& options) {
  GeometryRecord rec;
  rec.class_index = class_index;
  rec.mode = geom.mode;
  rec.kind = kind;
  rec.config = configuration(geom);
  rec.partial_linear_space = geom.partial_linear_space;
  if (!geom.partial_linear_space) rec.flags.push_back("not a partial linear space");
  if (!rec.config->uniform) rec.flags.push_back("non-uniform");
  const GraphStats stats = graph_stats(geom);
  rec.srg = stats.srg;
  rec.spectrum = stats.spectrum;
  rec.diameter = stats.diameter;
  rec.girth = stats.girth;
  if (stats.diameter) {
    rec.gu = classify_gu(geom);
    rec.polygon = classify_generalized_polygon(geom);
  } else {
    rec.flags.push_back("disconnected collinearity graph");
  }
  if (options.kappa && table) {
    const KappaReport k = kappa(*table, geom);
    rec.kappa = KappaSummary{k.edges, k.contextual_edges, k.formatted()};
  }
  return rec;
}

PermutationInput display_permutations(const CosetTable& t) {
  auto gens = t.generator_permutations();
  return PermutationInput{t.index(), {gens[1], gens[0]}};
}

ReportRow analyze_representation(const std::string& group, const std::string& label,
                                 const PermutationInput& dessin_input,
                                 const PermutationGroup& g,
                                 const std::optional<CosetTable>& table,
                                 const PipelineOptions& options) {
  ReportRow row;
  row.group = group;
  row.label = label;
  row.index = g.degree();
  row.order = g.order();
  if (dessin_input.generators.size() == 2) {
    try {
      row.signature = signature(dessin_input);
      row.passport = passport(dessin_input);
      row.modular = modular_invariants(dessin_input);
    } catch (const NotModularQuotient&) {
    } catch (const DomainError& e) {
      row.flags.push_back(std::string("dessin: ") + e.what());
    }
  } else {
    row.flags.push_back("dessin needs two generators");
  }
  if (!g.is_transitive()) {
    row.flags.push_back("not transitive");
    return row;
  }
  if (g.degree() < 2) {
    row.rank = 1;
    row.subdegrees = {1};
    row.flags.push_back("no non-trivial geometry");
    return row;
  }
  const StabilizerClassification cls = classify_two_point_stabilizers(g);
  row.rank = cls.rank;
  row.subdegrees = rank_profile(g).subdegrees;
  row.m = cls.m_with_point_stabilizer();
  row.m_pairs = cls.m();
  Orbitals orb(g);
  for (const auto& c : cls.classes) {
    ClassSummary s;
    s.order = c.fingerprint.order;
    s.fingerprint_only = c.fingerprint.fingerprint_only;
    for (const auto& m : c.members) {
      s.subdegrees.push_back(orb.suborbits()[m.suborbits[0]].size());
      s.unordered_pairs += m.unordered_pairs;
    }
    row.classes.push_back(std::move(s));
  }
  if (cls.any_fingerprint_only()) row.flags.push_back("fingerprint-only");
  if (cls.rank < 3) {
    row.flags.push_back("no non-trivial geometry");
    return row;
  }
  if (options.kappa && !table) row.flags.push_back("no coset table: contextuality unavailable");

  for (std::size_t k = 0; k < cls.classes.size(); ++k) {
    const StabilizerClass& c = cls.classes[k];
    if (options.stabilized) {
      try {
        row.geometries.push_back(describe_geometry(
            build_stabilized_geometry(g, cls, k, {StabilizerKind::pointwise, false}), k,
            StabilizerKind::pointwise, table, options));
      } catch (const TrivialClass&) {
        row.flags.push_back(class_label(k) + ": trivial two-point stabilizer");
      }
    }
    const bool any_self_paired = std::any_of(c.members.begin(), c.members.end(),
                                             [](const auto& m) { return m.self_paired; });
    if (options.setwise && any_self_paired) {
      try {
        row.geometries.push_back(describe_geometry(
            build_stabilized_geometry(g, cls, k, {StabilizerKind::setwise, false}), k,
            StabilizerKind::setwise, table, options));
      } catch (const TrivialClass&) {
        row.flags.push_back(class_label(k) + ": trivial setwise stabilizer");
      }
    }
    if (options.defined) {
      try {
        row.geometries.push_back(
            describe_geometry(build_defined_geometry(g, cls, k, options.clique_budget), k,
                     StabilizerKind::pointwise, table, options));
      } catch (const BudgetExceeded& e) {
        row.flags.push_back(class_label(k) + ": budget exceeded: " + e.what());
      }
    }
  }
  return row;
}

std::vector<ReportRow> pipeline(const std::string& group, const Presentation& p,
                                const PipelineOptions& options) {
  auto tables = low_index_subgroups(p, LowIndexOptions{options.max_index, options.node_budget});
  std::stable_sort(tables.begin(), tables.end(),
                   [](const CosetTable& x, const CosetTable& y) { return x.index() < y.index(); });
  std::map<std::size_t, std::size_t> per_index;
  for (const auto& t : tables) ++per_index[t.index()];
  std::map<std::size_t, std::size_t> seen;
  std::vector<ReportRow> rows;
  for (const auto& t : tables) {
    const std::size_t n = t.index();
    const std::size_t ordinal = seen[n]++;
    if (n < options.min_index) continue;
    std::string label = std::to_string(n);
    if (per_index[n] > 1) label += "_" + std::string(1, static_cast<char>('a' + ordinal % 26));
    CosetTable table = t;
    bool reenumerated = true;
    try {
      table = reenumerate(p, t, options.max_cosets);
    } catch (const EnumerationOverflow&) {
      reenumerated = false;
    }
    ReportRow row;
    try {
      const PermutationGroup g = group_from(table_to_permutations(table));
      row = analyze_representation(group, label, display_permutations(table), g, table, options);
    } catch (const Error& e) {
      row.group = group;
      row.label = label;
      row.index = n;
      row.flags.push_back(std::string("error: ") + e.what());
    }
    if (!reenumerated) row.flags.push_back("re-enumeration overflow: scan-order representatives");
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ReportRow> pipeline(const std::string& group, const PermutationInput& input,
                                const PipelineOptions& options) {
  const PermutationGroup g = group_from(input);
  return {analyze_representation(group, group, input, g, std::nullopt, options)};
}

// ---------------------------------------------------------------------------
// Emission

namespace {

ordered_json multiset_json(const std::vector<std::size_t>& values) {
  std::map<std::size_t, std::size_t, std::greater<>> counts;
  for (auto v : values) ++counts[v];
  ordered_json out = ordered_json::array();
  for (auto [v, c] : counts) out.push_back({v, c});
  return out;
}

ordered_json spectrum_json(const Spectrum& s) {
  ordered_json out = ordered_json::array();
  for (const auto& e : s) {
    if (e.integer) {
      out.push_back({*e.integer, e.multiplicity});
    } else {
      out.push_back({e.value, e.multiplicity});
    }
  }
  return out;
}

ordered_json geometry_json(const GeometryRecord& g) {
  ordered_json j;
  j["class"] = g.class_index;
  j["mode"] = to_string(g.mode);
  if (g.mode == GeometryMode::stabilized) j["kind"] = to_string(g.kind);
  if (g.config) {
    j["config"] = {{"p", g.config->p},
                   {"degrees", multiset_json(g.config->point_degrees)},
                   {"l", g.config->l},
                   {"sizes", multiset_json(g.config->line_sizes)},
                   {"uniform", g.config->uniform}};
    j["configuration"] = format_configuration(*g.config);
  }
  j["partial_linear_space"] = g.partial_linear_space;
  if (g.srg) j["srg"] = {g.srg->n, g.srg->k, g.srg->lambda, g.srg->mu};
  j["spectrum"] = spectrum_json(g.spectrum);
  if (g.diameter) j["diameter"] = *g.diameter;
  if (g.girth) j["girth"] = *g.girth;
  if (g.gu) {
    ordered_json gu;
    gu["u"] = g.gu->u ? ordered_json(*g.gu->u) : ordered_json(nullptr);
    ordered_json hist = ordered_json::array();
    for (auto [k, v] : g.gu->histogram) hist.push_back({k, v});
    gu["histogram"] = hist;
    gu["near_polygon"] = g.gu->near_polygon;
    j["gu"] = gu;
  }
  if (g.polygon) {
    j["polygon"] = {{"n", g.polygon->n}, {"s", g.polygon->s}, {"t", g.polygon->t},
                    {"label", g.polygon->label}};
  }
  if (g.kappa) {
    j["kappa"] = {{"E", g.kappa->edges}, {"E_c", g.kappa->contextual_edges},
                  {"value", g.kappa->value}};
  }
  j["flags"] = g.flags;
  return j;
}

ordered_json row_json(const ReportRow& r) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["group"] = r.group;
  j["label"] = r.label;
  j["index"] = r.index;
  j["order"] = r.order.str();
  j["rank"] = r.rank;
  j["subdegrees"] = r.subdegrees;
  j["m"] = r.m;
  j["m_pairs"] = r.m_pairs;
  if (r.signature) {
    j["signature"] = {{"B", r.signature->black},
                      {"W", r.signature->white},
                      {"F", r.signature->faces},
                      {"g", r.signature->genus}};
  }
  if (r.passport) j["passport"] = {r.passport->black, r.passport->white, r.passport->faces};
  if (r.modular) {
    j["modular"] = {{"n", r.modular->n},         {"g", r.modular->genus},
                    {"nu2", r.modular->nu2},     {"nu3", r.modular->nu3},
                    {"c", r.modular->cusps},     {"f", r.modular->fractions}};
  }
  ordered_json classes = ordered_json::array();
  for (const auto& c : r.classes) {
    classes.push_back({{"order", c.order.str()},
                       {"fingerprint_only", c.fingerprint_only},
                       {"subdegrees", c.subdegrees},
                       {"unordered_pairs", c.unordered_pairs}});
  }
  j["classes"] = classes;
  ordered_json geoms = ordered_json::array();
  for (const auto& g : r.geometries) geoms.push_back(geometry_json(g));
  j["geometries"] = geoms;
  j["flags"] = r.flags;
  return j;
}

std::string signature_text(const ReportRow& r) {
  if (!r.signature) return "-";
  const auto& s = *r.signature;
  return "(" + std::to_string(s.black) + "," + std::to_string(s.white) + "," +
         std::to_string(s.faces) + "," + std::to_string(s.genus) + ")";
}

}  // namespace

std::string emit_json(const std::vector<ReportRow>& rows) {
  ordered_json out = ordered_json::array();
  for (const auto& r : rows) out.push_back(row_json(r));
  return out.dump(2) + "\n";
}

std::string emit_json(const GeometryRecord& geometry) {
  ordered_json j = geometry_json(geometry);
  j["schema_version"] = kReportSchemaVersion;
  return j.dump(2) + "\n";
}

std::string emit_text(const GeometryRecord& g) {
  std::ostringstream out;
  out << "class          " << g.class_index << "\n";
  out << "mode           " << to_string(g.mode);
  if (g.mode == GeometryMode::stabilized) out << " (" << to_string(g.kind) << ")";
  out << "\n";
  if (g.config) out << "configuration  " << format_configuration(*g.config) << "\n";
  out << "partial linear " << (g.partial_linear_space ? "yes" : "no") << "\n";
  if (g.srg) out << "srg            " << format_srg(*g.srg) << "\n";
  if (!g.spectrum.empty()) out << "spectrum       " << format_spectrum(g.spectrum) << "\n";
  if (g.diameter) out << "diameter       " << *g.diameter << "\n";
  if (g.girth) out << "girth          " << *g.girth << "\n";
  if (g.gu) {
    out << "G_u            ";
    if (g.gu->u) {
      out << "u=" << *g.gu->u << (g.gu->near_polygon ? " (near polygon)" : "");
    } else {
      out << "none:";
      for (auto [k, v] : g.gu->histogram) out << " " << k << "x" << v;
    }
    out << "\n";
  }
  if (g.polygon) out << "polygon        " << g.polygon->label << "\n";
  if (g.kappa) {
    out << "kappa          " << g.kappa->contextual_edges << "/" << g.kappa->edges << " = "
        << g.kappa->value << "\n";
  }
  for (const auto& f : g.flags) out << "flag           " << f << "\n";
  return out.str();
}

std::string emit_text(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << std::left << std::setw(10) << "group" << std::setw(8) << "label" << std::setw(6) << "n"
      << std::setw(4) << "r" << std::setw(4) << "m" << std::setw(16) << "signature"
      << std::setw(14) << "classes" << "geometries\n";
  for (const auto& r : rows) {
    std::string classes;
    for (const auto& c : r.classes) {
      if (!classes.empty()) classes += ",";
      classes += c.order.str();
    }
    out << std::left << std::setw(10) << r.group << std::setw(8) << r.label << std::setw(6)
        << r.index << std::setw(4) << r.rank << std::setw(4) << r.m << std::setw(16)
        << signature_text(r) << std::setw(14) << (classes.empty() ? "-" : classes);
    bool first = true;
    for (const auto& g : r.geometries) {
      if (!first) out << "; ";
      first = false;
      out << "c" << g.class_index << " "
          << (g.mode == GeometryMode::defined ? "def" : (g.kind == StabilizerKind::setwise ? "set" : "stab"))
          << " " << (g.config ? format_configuration(*g.config) : "-");
      if (g.gu && g.gu->u) out << " G" << *g.gu->u;
      if (g.polygon) out << " " << g.polygon->label;
      if (g.kappa) out << " k=" << g.kappa->value;
    }
    if (r.geometries.empty()) out << "-";
    for (const auto& f : r.flags) out << " [" << f << "]";
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

template <class T>
std::optional<T> get_opt(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  return j.at(key).get<T>();
}

GeometryMode parse_mode(const std::string& s) {
  if (s == "stabilized") return GeometryMode::stabilized;
  if (s == "defined") return GeometryMode::defined;
  throw InputError("unknown geometry mode '" + s + "'");
}

StabilizerKind parse_kind(const std::string& s) {
  if (s == "pointwise") return StabilizerKind::pointwise;
  if (s == "setwise") return StabilizerKind::setwise;
  throw InputError("unknown stabilizer kind '" + s + "'");
}

}  // namespace

const CatalogEntry& Catalog::find(const std::string& name) const {
  for (const auto& e : entries) {
    if (e.name == name) return e;
  }
  throw InputError("no catalog entry named '" + name + "'");
}

std::filesystem::path default_catalog_directory() {
  if (const char* env = std::getenv("GZOO_CATALOG")) return env;
#ifdef GZOO_SOURCE_CATALOG_DIR
  if (std::filesystem::exists(GZOO_SOURCE_CATALOG_DIR "/catalog.json")) {
    return GZOO_SOURCE_CATALOG_DIR;
  }
#endif
  return GZOO_CATALOG_DIR;
}

Catalog load_catalog(const std::filesystem::path& directory) {
  Catalog catalog;
  catalog.directory = directory;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(textio::read_file((directory / "catalog.json").string()));
    for (const auto& e : j.at("entries")) {
      CatalogEntry entry;
      entry.name = e.at("name").get<std::string>();
      entry.description = e.value("description", "");
      if (e.contains("presentation")) entry.presentation = e.at("presentation").get<std::string>();
      if (e.contains("permutations")) entry.permutations = e.at("permutations").get<std::string>();
      if (!entry.presentation && !entry.permutations) {
        throw InputError("catalog entry '" + entry.name + "' has no input");
      }
      entry.max_index = e.value("max_index", std::size_t{0});
      entry.extended = e.value("extended", false);
      for (const auto& x : e.value("expected", nlohmann::json::array())) {
        ExpectedRow row;
        row.tag = x.at("tag").get<std::string>();
        row.index = x.at("index").get<std::size_t>();
        row.rank = get_opt<std::size_t>(x, "rank");
        row.m = get_opt<std::size_t>(x, "m");
        row.subdegrees = get_opt<std::vector<std::size_t>>(x, "subdegrees");
        row.signature = get_opt<std::array<std::size_t, 4>>(x, "signature");
        row.passport = get_opt<std::string>(x, "passport");
        row.class_orders = get_opt<std::vector<std::string>>(x, "class_orders");
        for (const auto& gx : x.value("geometries", nlohmann::json::array())) {
          ExpectedGeometry g;
          g.class_index = gx.at("class").get<std::size_t>();
          g.mode = parse_mode(gx.at("mode").get<std::string>());
          g.kind = parse_kind(gx.value("kind", "pointwise"));
          g.configuration = get_opt<std::string>(gx, "configuration");
          g.spectrum = get_opt<std::string>(gx, "spectrum");
          g.u = get_opt<std::size_t>(gx, "u");
          g.polygon = get_opt<std::string>(gx, "polygon");
          g.kappa = get_opt<std::string>(gx, "kappa");
          row.geometries.push_back(std::move(g));
        }
        entry.expected.push_back(std::move(row));
      }
      catalog.entries.push_back(std::move(entry));
    }
    for (const auto& x : j.value("not_computable", nlohmann::json::array())) {
      catalog.not_computable.push_back(NotComputable{x.at("name").get<std::string>(),
                                                     x.at("tag").get<std::string>(),
                                                     x.value("reason", "")});
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed catalog: " + std::string(e.what()));
  }
  return catalog;
}

std::vector<ReportRow> run_entry(const Catalog& catalog, const CatalogEntry& entry,
                                 PipelineOptions options) {
  if (entry.presentation) {
    if (entry.max_index) options.max_index = entry.max_index;
    const auto file =
        textio::parse_group_file(textio::read_file((catalog.directory / *entry.presentation).string()));
    return pipeline(entry.name, file.presentation, options);
  }
  const auto input =
      textio::parse_permutations(textio::read_file((catalog.directory / *entry.permutations).string()));
  return pipeline(entry.name, input, options);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::match: return "match";
    case Verdict::mismatch: return "mismatch";
    case Verdict::warn: return "warn";
    case Verdict::not_computable: return "not-computable-at-budget";
  }
  return "?";
}

namespace {

struct Comparison {
  std::vector<std::string> hard;
  std::vector<std::string> soft;
};

template <class T>
void compare(Comparison& c, const std::string& what, const std::optional<T>& expected,
             const T& actual, const std::function<std::string(const T&)>& show) {
  if (expected && !(*expected == actual)) {
    c.hard.push_back(what + " " + show(actual) + " (expected " + show(*expected) + ")");
  }
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (auto x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
  return "{" + out + "}";
}

Comparison compare_row(const ExpectedRow& e, const ReportRow& r) {
  Comparison c;
  auto num = [](const std::size_t& x) { return std::to_string(x); };
  compare<std::size_t>(c, "rank", e.rank, r.rank, num);
  compare<std::size_t>(c, "m", e.m, r.m, num);
  compare<std::vector<std::size_t>>(c, "subdegrees", e.subdegrees, r.subdegrees, join);
  if (e.signature) {
    const std::array<std::size_t, 4> actual =
        r.signature ? std::array<std::size_t, 4>{r.signature->black, r.signature->white,
                                                 r.signature->faces, r.signature->genus}
                    : std::array<std::size_t, 4>{0, 0, 0, 0};
    compare<std::array<std::size_t, 4>>(c, "signature", e.signature, actual, [](const auto& s) {
      return "(" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "," +
             std::to_string(s[2]) + "," + std::to_string(s[3]) + ")";
    });
  }
  if (e.passport) {
    const std::string actual = r.passport ? format_passport(*r.passport) : "-";
    compare<std::string>(c, "passport", e.passport, actual, [](const auto& s) { return s; });
  }
  if (e.class_orders) {
    std::vector<std::string> actual;
    for (const auto& k : r.classes) actual.push_back(k.order.str());
    auto expected = *e.class_orders;
    std::sort(actual.begin(), actual.end());
    std::sort(expected.begin(), expected.end());
    compare<std::vector<std::string>>(c, "class orders", expected, actual, [](const auto& v) {
      std::string out;
      for (const auto& x : v) out += (out.empty() ? "" : ",") + x;
      return "{" + out + "}";
    });
  }
  for (const auto& eg : e.geometries) {
    const GeometryRecord* found = nullptr;
    for (const auto& g : r.geometries) {
      if (g.class_index == eg.class_index && g.mode == eg.mode &&
          (g.mode == GeometryMode::defined || g.kind == eg.kind)) {
        found = &g;
      }
    }
    const std::string where = "class " + std::to_string(eg.class_index) + " " +
                              to_string(eg.mode) +
                              (eg.mode == GeometryMode::stabilized ? "/" + to_string(eg.kind) : "");
    if (!found) {
      c.hard.push_back(where + ": geometry not computed");
      continue;
    }
    auto str = [](const std::string& s) { return s; };
    compare<std::string>(c, where + " configuration", eg.configuration,
                         found->config ? format_configuration(*found->config) : "-", str);
    compare<std::string>(c, where + " spectrum", eg.spectrum, format_spectrum(found->spectrum),
                         str);
    if (eg.u) {
      const std::size_t actual = found->gu && found->gu->u ? *found->gu->u : 0;
      compare<std::size_t>(c, where + " u", eg.u, actual, num);
    }
    compare<std::string>(c, where + " polygon", eg.polygon,
                         found->polygon ? found->polygon->label : "-", str);
    if (eg.kappa) {
      const std::string actual = found->kappa ? found->kappa->value : "-";
      if (actual != *eg.kappa) {
        c.soft.push_back(where + " kappa " + actual + " (expected " + *eg.kappa + ")");
      }
    }
  }
  return c;
}

std::string join_lines(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : "; ") + s;
  return out;
}

}  // namespace

std::vector<CheckResult> check_entry(const CatalogEntry& entry,
                                     const std::vector<ReportRow>& rows) {
  std::vector<CheckResult> out;
  std::vector<bool> used(rows.size(), false);
  for (const auto& e : entry.expected) {
    CheckResult result{entry.name, e.tag, "index " + std::to_string(e.index), Verdict::mismatch,
                       ""};
    std::optional<std::size_t> best;
    Comparison best_cmp;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (used[i] || rows[i].index != e.index) continue;
      Comparison cmp = compare_row(e, rows[i]);
      const bool better = !best || cmp.hard.size() < best_cmp.hard.size() ||
                          (cmp.hard.size() == best_cmp.hard.size() &&
                           cmp.soft.size() < best_cmp.soft.size());
      if (better) {
        best = i;
        best_cmp = std::move(cmp);
      }
    }
    if (!best) {
      result.detail = "no representation of this index was computed";
    } else {
      result.subject = "index " + std::to_string(e.index) + " (" + rows[*best].label + ")";
      if (best_cmp.hard.empty()) {
        used[*best] = true;
        result.verdict = best_cmp.soft.empty() ? Verdict::match : Verdict::warn;
        result.detail = join_lines(best_cmp.soft);
      } else {
        result.detail = join_lines(best_cmp.hard);
        if (!best_cmp.soft.empty()) result.detail += "; " + join_lines(best_cmp.soft);
      }
    }
    out.push_back(std::move(result));
  }
  return out;
}

std::vector<CheckResult> check_not_computable(const Catalog& catalog) {
  std::vector<CheckResult> out;
  for (const auto& n : catalog.not_computable) {
    out.push_back(CheckResult{n.name, n.tag, n.name, Verdict::not_computable, n.reason});
  }
  return out;
}

}  // namespace gzoo
