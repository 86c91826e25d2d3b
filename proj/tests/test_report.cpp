#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "gzoo/error.hpp"
#include "gzoo/report.hpp"
#include "support.hpp"

using namespace gzoo;

namespace {

bool has_flag(const std::vector<std::string>& flags, const std::string& f) {
  return std::find(flags.begin(), flags.end(), f) != flags.end();
}

Catalog catalog() { return load_catalog(GZOO_TEST_CATALOG); }

}  // namespace

TEST_CASE("A5 batch emits six rows sorted by index") {
  const auto rows = pipeline("A5", support::catalog_grp("A5.grp"), {.max_index = 15});
  const auto doc = nlohmann::json::parse(emit_json(rows));
  REQUIRE(doc.is_array());
  CHECK(doc.size() == 6);
  std::size_t last = 0;
  for (const auto& r : doc) {
    CHECK(r.at("schema_version") == kReportSchemaVersion);
    CHECK(r.at("index").get<std::size_t>() >= last);
    last = r.at("index").get<std::size_t>();
    CHECK(r.contains("signature"));
    CHECK(r.contains("flags"));
  }
  CHECK(has_flag(rows[1].flags, "no non-trivial geometry"));  // index 5, rank 2
}

TEST_CASE("output is byte-identical across runs") {
  const Presentation p = support::catalog_grp("A6.grp");
  const auto a = pipeline("A6", p, {.max_index = 20});
  const auto b = pipeline("A6", p, {.max_index = 20});
  CHECK(emit_json(a) == emit_json(b));
  CHECK(emit_text(a) == emit_text(b));
}

TEST_CASE("single row emission") {
  const auto rows = pipeline("A8-35", support::catalog_perm("A8-35.perm"), {});
  REQUIRE(rows.size() == 1);
  const std::string text = emit_text(rows);
  CHECK(text.find("signature") != std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '\n') >= 2);
  const auto doc = nlohmann::json::parse(emit_json(rows));
  CHECK(doc[0].at("schema_version") == kReportSchemaVersion);
  CHECK(doc[0].at("rank") == 3);

  const ReportRow& r = rows[0];
  CHECK(r.signature == DessinSignature{9, 15, 5, 4, 35});
  CHECK(r.m_pairs == 2);
  REQUIRE(r.classes.size() == 2);
  CHECK(r.classes[0].order == 36);
  CHECK(r.classes[1].order == 32);
  std::set<std::string> configs;
  for (const auto& g : r.geometries) {
    if (g.mode == GeometryMode::defined && g.config) configs.insert(format_configuration(*g.config));
  }
  CHECK(configs == std::set<std::string>{"[35_8, 56_5]", "[35_6, 30_7]"});
}

TEST_CASE("rank-2 input is flagged") {
  const PermutationInput s3{3,
                            {Permutation::from_cycles(3, {{0, 1, 2}}),
                             Permutation::from_cycles(3, {{0, 1}})}};
  const auto rows = pipeline("S3", s3, {});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].rank == 2);
  CHECK(has_flag(rows[0].flags, "no non-trivial geometry"));
  CHECK(rows[0].geometries.empty());
}

TEST_CASE("intransitive input is flagged, not fatal") {
  const PermutationInput in{4,
                            {Permutation::from_cycles(4, {{0, 1}}),
                             Permutation::from_cycles(4, {{2, 3}})}};
  const auto rows = pipeline("split", in, {});
  REQUIRE(rows.size() == 1);
  CHECK_FALSE(rows[0].flags.empty());
}

TEST_CASE("catalog loads and checks") {
  const Catalog c = catalog();
  CHECK_NOTHROW(c.find("A6"));
  CHECK_THROWS_AS(c.find("no-such-entry"), InputError);
  const CatalogEntry& a6 = c.find("A6");
  for (const auto& r : check_entry(a6, run_entry(c, a6, {}))) {
    CAPTURE(r.subject);
    CAPTURE(r.detail);
    CHECK(r.verdict == Verdict::match);
  }
  const CatalogEntry& a8 = c.find("A8-35");
  for (const auto& r : check_entry(a8, run_entry(c, a8, {}))) {
    CAPTURE(r.subject);
    CAPTURE(r.detail);
    CHECK(r.verdict == Verdict::match);
  }
  const auto nc = check_not_computable(c);
  CHECK_FALSE(nc.empty());
  for (const auto& r : nc) CHECK(r.verdict == Verdict::not_computable);
  CHECK(to_string(Verdict::not_computable) == "not-computable-at-budget");
}

TEST_CASE("every expected row carries a tag") {
  for (const auto& e : catalog().entries) {
    CHECK((e.presentation || e.permutations));
    for (const auto& r : e.expected) CHECK_FALSE(r.tag.empty());
  }
}

TEST_CASE("missing catalog is an input error") {
  CHECK_THROWS_AS(load_catalog("/nonexistent/catalog"), InputError);
}

TEST_CASE("budget overruns become flags") {
  PipelineOptions opt{.max_index = 10};
  opt.clique_budget = 1;
  const auto rows = pipeline("A5", support::catalog_grp("A5.grp"), opt);
  bool flagged = false;
  for (const auto& r : rows) {
    for (const auto& f : r.flags) flagged = flagged || f.find("budget") != std::string::npos;
  }
  CHECK(flagged);
}

TEST_CASE("derived S6(2) representation on 63 points") {
  const PermutationInput in = support::catalog_perm("S6_2-63.perm");
  // Listed b first; a is the involution.
  const Permutation& a = in.generators[1];
  const Permutation& b = in.generators[0];
  for (const auto& r : support::catalog_grp("S6_2.grp").relators) {
    Permutation w(in.degree);
    for (auto l : r) {
      const Permutation& g = l.generator() == 0 ? a : b;
      w = w * (l.is_inverse() ? g.inverse() : g);
    }
    CHECK(w.is_identity());
  }
  CHECK(group_from(in).order() == 1451520);

  const Catalog c = catalog();
  const CatalogEntry& e = c.find("S6_2-63");
  for (const auto& r : check_entry(e, run_entry(c, e, {}))) {
    CAPTURE(r.detail);
    CHECK(r.verdict == Verdict::match);
  }
}
