#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gzoo/coset_enum.hpp"
#include "gzoo/geometry.hpp"

namespace gzoo {

struct EdgeVerdict {
  Point x = 0;
  Point y = 0;
  bool contextual = false;
};

struct KappaReport {
  std::size_t edges = 0;
  std::size_t contextual_edges = 0;
  std::vector<EdgeVerdict> per_edge;  // sorted by (x, y), x < y

  /// E_c / E in lowest terms.
  std::pair<std::size_t, std::size_t> exact() const;
  double value() const;
  /// Three decimals, e.g. "0.785".
  std::string formatted() const;
};

/// Edges of the collinearity graph whose coset representatives have
/// non-commuting images in the permutation group of the table. Throws
/// DegreeMismatch when the geometry is not on the table's cosets.
KappaReport kappa(const CosetTable& table, const IncidenceGeometry& geom);
/// Same, on an explicit edge list.
KappaReport kappa(const CosetTable& table, const Graph& graph);
/// Throws NoCosetTable when no table is available.
KappaReport kappa(const std::optional<CosetTable>& table, const IncidenceGeometry& geom);

struct KappaRow {
  std::string label;
  std::size_t edges = 0;
  std::size_t contextual_edges = 0;
  std::string kappa;
};

/// One row per report, in input order.
std::vector<KappaRow> kappa_summary(const std::vector<std::pair<std::string, KappaReport>>& reports);

}  // namespace gzoo
