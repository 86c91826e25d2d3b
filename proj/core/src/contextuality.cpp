#include "gzoo/contextuality.hpp"

#include <cstdio>
#include <numeric>

#include "gzoo/error.hpp"

namespace gzoo {
namespace {

Permutation image_of(const Word& w, const std::array<Permutation, 2>& gens,
                     const std::array<Permutation, 2>& inverses) {
  Permutation out(gens[0].degree());
  for (Letter x : w) {
    const auto& g = x.is_inverse() ? inverses[x.generator()] : gens[x.generator()];
    out = out * g;
  }
  return out;
}

}  // namespace

std::pair<std::size_t, std::size_t> KappaReport::exact() const {
  if (edges == 0) return {0, 1};
  const std::size_t d = std::gcd(contextual_edges, edges);
  return {contextual_edges / d, edges / d};
}

double KappaReport::value() const {
  return edges == 0 ? 0.0 : static_cast<double>(contextual_edges) / static_cast<double>(edges);
}

std::string KappaReport::formatted() const {
  // Rounded half-up on the exact rational.
  const std::size_t thousandths = edges == 0 ? 0 : (contextual_edges * 2000 + edges) / (2 * edges);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%zu.%03zu", thousandths / 1000, thousandths % 1000);
  return buf;
}

KappaReport kappa(const CosetTable& table, const Graph& graph) {
  if (graph.order() != table.index()) {
    throw DegreeMismatch("geometry has " + std::to_string(graph.order()) +
                         " points but the coset table has " + std::to_string(table.index()) +
                         " cosets");
  }
  const auto gens = table.generator_permutations();
  const std::array<Permutation, 2> inverses{gens[0].inverse(), gens[1].inverse()};
  std::vector<Permutation> images;
  images.reserve(table.index());
  for (const auto& w : table.representatives()) images.push_back(image_of(w, gens, inverses));

  KappaReport report;
  for (auto [x, y] : graph.edges()) {
    const bool contextual = !images[x].commutes_with(images[y]);
    report.per_edge.push_back(EdgeVerdict{x, y, contextual});
    ++report.edges;
    report.contextual_edges += contextual;
  }
  return report;
}

KappaReport kappa(const CosetTable& table, const IncidenceGeometry& geom) {
  if (geom.points != table.index()) {
    throw DegreeMismatch("geometry has " + std::to_string(geom.points) +
                         " points but the coset table has " + std::to_string(table.index()) +
                         " cosets");
  }
  return kappa(table, collinearity_graph(geom));
}

KappaReport kappa(const std::optional<CosetTable>& table, const IncidenceGeometry& geom) {
  if (!table) throw NoCosetTable("contextuality needs coset representatives");
  return kappa(*table, geom);
}

std::vector<KappaRow> kappa_summary(
    const std::vector<std::pair<std::string, KappaReport>>& reports) {
  std::vector<KappaRow> rows;
  for (const auto& [label, r] : reports) {
    rows.push_back(KappaRow{label, r.edges, r.contextual_edges, r.formatted()});
  }
  return rows;
}

}  // namespace gzoo
