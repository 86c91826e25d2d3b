#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gzoo/contextuality.hpp"
#include "gzoo/coset_enum.hpp"
#include "gzoo/dessin.hpp"
#include "gzoo/geometry.hpp"
#include "gzoo/perm_group.hpp"

namespace gzoo {

inline constexpr int kReportSchemaVersion = 1;

struct PipelineOptions {
  std::size_t max_index = 15;
  std::size_t min_index = 1;
  std::size_t max_cosets = kDefaultMaxCosets;
  std::uint64_t node_budget = kDefaultLowIndexNodeBudget;
  std::uint64_t clique_budget = kDefaultCliqueBudget;
  bool stabilized = true;
  bool setwise = true;
  bool defined = true;
  bool kappa = true;
};

struct ClassSummary {
  BigInt order;
  bool fingerprint_only = false;
  std::vector<std::size_t> subdegrees;  // one per member pair orbit
  std::size_t unordered_pairs = 0;
};

struct KappaSummary {
  std::size_t edges = 0;
  std::size_t contextual_edges = 0;
  std::string value;  // three decimals
};

struct GeometryRecord {
  std::size_t class_index = 0;
  GeometryMode mode = GeometryMode::stabilized;
  StabilizerKind kind = StabilizerKind::pointwise;
  std::optional<ConfigurationParams> config;
  bool partial_linear_space = true;
  std::optional<Srg> srg;
  Spectrum spectrum;
  std::optional<std::size_t> diameter;
  std::optional<std::size_t> girth;
  std::optional<GuClassification> gu;
  std::optional<GeneralizedPolygon> polygon;
  std::optional<KappaSummary> kappa;
  std::vector<std::string> flags;
};

struct ReportRow {
  std::string group;
  std::string label;  // "10_a", or the entry name for permutation input
  std::size_t index = 0;
  BigInt order;
  std::size_t rank = 0;
  std::vector<std::size_t> subdegrees;
  std::size_t m = 0;        // stabilizer classes counting the point stabilizer
  std::size_t m_pairs = 0;  // classes of two-point stabilizers of distinct points
  std::optional<DessinSignature> signature;
  std::optional<Passport> passport;
  std::optional<ModularInvariants> modular;
  std::vector<ClassSummary> classes;
  std::vector<GeometryRecord> geometries;
  std::vector<std::string> flags;
};

/// Statistics, classification and (when a table is given and enabled)
/// contextuality of one geometry.
GeometryRecord describe_geometry(const IncidenceGeometry& geom, std::size_t class_index,
                                 StabilizerKind kind, const std::optional<CosetTable>& table,
                                 const PipelineOptions& options);

/// Analysis of one transitive permutation representation. The table, when
/// given, supplies coset representatives for contextuality. The dessin uses
/// `dessin_input` (the generators in display order).
ReportRow analyze_representation(const std::string& group, const std::string& label,
                                 const PermutationInput& dessin_input,
                                 const PermutationGroup& g,
                                 const std::optional<CosetTable>& table,
                                 const PipelineOptions& options);

/// Display order of a coset table's generators: b first, then a.
PermutationInput display_permutations(const CosetTable& t);

/// Low-index search, re-enumeration of every class, one row per subgroup
/// class with index in [min_index, max_index]. Labels are n_a, n_b, ... in
/// output order.
std::vector<ReportRow> pipeline(const std::string& group, const Presentation& p,
                                const PipelineOptions& options);
std::vector<ReportRow> pipeline(const std::string& group, const PermutationInput& input,
                                const PipelineOptions& options);

std::string emit_text(const std::vector<ReportRow>& rows);
std::string emit_json(const std::vector<ReportRow>& rows);
std::string emit_json(const GeometryRecord& geometry);
std::string emit_text(const GeometryRecord& geometry);

// ---------------------------------------------------------------------------
// Catalog

struct ExpectedGeometry {
  std::size_t class_index = 0;
  GeometryMode mode = GeometryMode::defined;
  StabilizerKind kind = StabilizerKind::pointwise;
  std::optional<std::string> configuration;  // as format_configuration prints it
  std::optional<std::string> spectrum;       // as format_spectrum prints it
  std::optional<std::size_t> u;
  std::optional<std::string> polygon;
  std::optional<std::string> kappa;  // soft
};

struct ExpectedRow {
  std::string tag;
  std::size_t index = 0;
  std::optional<std::size_t> rank;
  std::optional<std::size_t> m;
  std::optional<std::vector<std::size_t>> subdegrees;
  std::optional<std::array<std::size_t, 4>> signature;
  std::optional<std::string> passport;
  std::optional<std::vector<std::string>> class_orders;
  std::vector<ExpectedGeometry> geometries;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  std::optional<std::filesystem::path> presentation;
  std::optional<std::filesystem::path> permutations;
  std::size_t max_index = 0;
  bool extended = false;  // only run on request
  std::vector<ExpectedRow> expected;
};

struct NotComputable {
  std::string name;
  std::string tag;
  std::string reason;
};

struct Catalog {
  std::filesystem::path directory;
  std::vector<CatalogEntry> entries;
  std::vector<NotComputable> not_computable;

  const CatalogEntry& find(const std::string& name) const;
};

/// Reads `catalog.json` in `directory`. Throws InputError.
Catalog load_catalog(const std::filesystem::path& directory);
/// The catalog shipped with the sources, or $GZOO_CATALOG when set.
std::filesystem::path default_catalog_directory();

std::vector<ReportRow> run_entry(const Catalog& catalog, const CatalogEntry& entry,
                                 PipelineOptions options);

enum class Verdict { match, mismatch, warn, not_computable };
std::string to_string(Verdict v);

struct CheckResult {
  std::string entry;
  std::string tag;
  std::string subject;  // "index 10", ...
  Verdict verdict = Verdict::match;
  std::string detail;
};

/// Compares computed rows with the entry's expected rows. Expected rows are
/// matched to computed rows of the same index by content, not by label.
/// Mismatches of soft fields (contextuality) are reported as warn.
std::vector<CheckResult> check_entry(const CatalogEntry& entry,
                                     const std::vector<ReportRow>& rows);
std::vector<CheckResult> check_not_computable(const Catalog& catalog);

}  // namespace gzoo
