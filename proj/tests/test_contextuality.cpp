#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gzoo/contextuality.hpp"
#include "gzoo/error.hpp"
#include "support.hpp"

using namespace gzoo;

namespace {

Permutation evaluate(const Word& w, const std::array<Permutation, 2>& gens) {
  Permutation out(gens[0].degree());
  for (auto l : w) {
    const Permutation& g = gens[static_cast<std::size_t>(l.generator())];
    out = out * (l.is_inverse() ? g.inverse() : g);
  }
  return out;
}

struct Fixture {
  CosetTable table;
  IncidenceGeometry geom;
};

Fixture a6_gq() {
  const Presentation p = support::catalog_grp("A6.grp");
  for (const auto& t : low_index_subgroups(p, {.max_index = 15})) {
    if (t.index() != 15) continue;
    const CosetTable h = reenumerate(p, t);
    const PermutationGroup g = group_from(table_to_permutations(h));
    const auto cls = classify_two_point_stabilizers(g);
    return {h, build_defined_geometry(g, cls, 0)};
  }
  throw std::logic_error("no index-15 class");
}

}  // namespace

TEST_CASE("summary formatting") {
  KappaReport r;
  r.edges = 10;
  r.contextual_edges = 6;
  CHECK(r.formatted() == "0.600");
  CHECK(r.exact() == std::pair<std::size_t, std::size_t>{3, 5});
  const auto rows = kappa_summary({{"x", r}});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].kappa == "0.600");
  CHECK(rows[0].edges == 10);
  CHECK(rows[0].contextual_edges == 6);
}

TEST_CASE("kappa on GQ(2,2) from A6 agrees with direct evaluation") {
  const Fixture f = a6_gq();
  const KappaReport r = kappa(f.table, f.geom);
  const auto gens = f.table.generator_permutations();
  const Graph graph = collinearity_graph(f.geom);
  CHECK(r.edges == graph.edge_count());
  std::size_t contextual = 0;
  for (auto [x, y] : graph.edges()) {
    const Permutation px = evaluate(f.table.representatives()[x], gens);
    const Permutation py = evaluate(f.table.representatives()[y], gens);
    contextual += !px.commutes_with(py);
  }
  CHECK(r.contextual_edges == contextual);
  for (const auto& e : r.per_edge) {
    if (e.x == 0) CHECK_FALSE(e.contextual);
  }
  CHECK(r.value() < 1.0);
  CHECK(kappa(f.table, f.geom).formatted() == r.formatted());
}

TEST_CASE("errors") {
  const Fixture f = a6_gq();
  const IncidenceGeometry other = make_geometry(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK_THROWS_AS(kappa(f.table, other), DegreeMismatch);
  CHECK_THROWS_AS(kappa(std::optional<CosetTable>{}, f.geom), NoCosetTable);
}
