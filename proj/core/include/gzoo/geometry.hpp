#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gzoo/perm_group.hpp"

namespace gzoo {

enum class GeometryMode { stabilized, defined };

/// How a pair is keyed when grouping pairs into lines in stabilized mode:
/// by the subgroup fixing both points, or by the subgroup fixing the pair
/// as a set (which may swap the two points).
enum class StabilizerKind { pointwise, setwise };

std::string to_string(GeometryMode mode);
std::string to_string(StabilizerKind kind);

/// Points 0..points-1 and lines as sorted point lists.
struct IncidenceGeometry {
  std::size_t points = 0;
  std::vector<std::vector<Point>> lines;
  GeometryMode mode = GeometryMode::stabilized;
  std::optional<std::size_t> source_class;
  bool partial_linear_space = true;

  friend bool operator==(const IncidenceGeometry&, const IncidenceGeometry&) = default;
};

/// Sorts each line, drops duplicate lines and lines with fewer than two
/// points, sorts the line list and computes the partial-linear-space flag.
IncidenceGeometry make_geometry(std::size_t points, std::vector<std::vector<Point>> lines,
                                GeometryMode mode = GeometryMode::stabilized);

struct StabilizedOptions {
  StabilizerKind kind = StabilizerKind::pointwise;
  bool allow_trivial = false;
};

/// Pairs of the class with the same stabilizer form one line (the union of
/// their points). Throws TrivialClass for an order-1 stabilizer unless
/// allowed, DomainError for a bad class index.
IncidenceGeometry build_stabilized_geometry(const PermutationGroup& g,
                                            const StabilizerClassification& cls,
                                            std::size_t class_index,
                                            const StabilizedOptions& options = {});

inline constexpr std::uint64_t kDefaultCliqueBudget = 1'000'000;

/// Lines are the maximal cliques of the class graph. Throws BudgetExceeded
/// past clique_budget cliques.
IncidenceGeometry build_defined_geometry(const PermutationGroup& g,
                                         const StabilizerClassification& cls,
                                         std::size_t class_index,
                                         std::uint64_t clique_budget = kDefaultCliqueBudget);

/// Simple undirected graph as sorted adjacency lists.
struct Graph {
  std::vector<std::vector<Point>> adjacency;

  std::size_t order() const { return adjacency.size(); }
  std::size_t edge_count() const;
  bool adjacent(Point x, Point y) const;
  std::vector<std::pair<Point, Point>> edges() const;  // x < y
};

Graph graph_from_edges(std::size_t n, const std::vector<std::pair<Point, Point>>& edges);
/// Two points adjacent iff some line holds both.
Graph collinearity_graph(const IncidenceGeometry& geom);
/// All unordered pairs lying in the class's pair orbits.
Graph class_graph(const PermutationGroup& g, const StabilizerClassification& cls,
                  std::size_t class_index);

/// BFS distances from `source`; unreachable points hold -1.
std::vector<int> distances_from(const Graph& graph, Point source);

struct ConfigurationParams {
  std::size_t p = 0;
  std::vector<std::size_t> point_degrees;  // sorted descending
  std::size_t l = 0;
  std::vector<std::size_t> line_sizes;  // sorted descending
  bool uniform = false;
};

ConfigurationParams configuration(const IncidenceGeometry& geom);
/// "[27_5, 45_3]", "[40_4]" when both sides agree, ranges as "35_{6..8}".
std::string format_configuration(const ConfigurationParams& c);

struct Srg {
  std::size_t n = 0, k = 0, lambda = 0, mu = 0;
  friend bool operator==(const Srg&, const Srg&) = default;
};

struct SpectrumEntry {
  double value = 0;
  std::size_t multiplicity = 0;
  std::optional<long long> integer;  // set when within 1e-6 of an integer
};

using Spectrum = std::vector<SpectrumEntry>;  // values descending

inline constexpr double kSpectrumTolerance = 1e-6;
inline constexpr std::size_t kEigenSolverLimit = 3000;

struct GraphStats {
  std::vector<std::size_t> degrees;
  std::optional<std::size_t> diameter;  // absent when disconnected
  std::optional<std::size_t> girth;     // absent when acyclic
  std::optional<Srg> srg;
  Spectrum spectrum;  // empty when too large for the eigensolver and not srg
  bool spectrum_from_formula = false;
};

/// Exact srg parameters by counting common neighbours; nullopt unless the
/// graph is regular, not complete, not empty.
std::optional<Srg> strongly_regular_parameters(const Graph& graph);
/// Closed-form spectrum of an srg.
Spectrum srg_spectrum(const Srg& s);
/// Adjacency spectrum from a dense symmetric eigensolver, eigenvalues
/// grouped within the tolerance.
Spectrum numerical_spectrum(const Graph& graph);
std::optional<std::size_t> graph_diameter(const Graph& graph);
std::optional<std::size_t> graph_girth(const Graph& graph);

GraphStats graph_stats(const Graph& graph);
GraphStats graph_stats(const IncidenceGeometry& geom);

/// "[16^1, 2^20, -4^14]"
std::string format_spectrum(const Spectrum& s);
std::string format_srg(const Srg& s);

struct GuClassification {
  std::optional<std::size_t> u;
  std::map<std::size_t, std::size_t> histogram;  // nearest count -> frequency
  std::size_t diameter = 0;
  bool near_polygon = false;
};

/// Throws Disconnected.
GuClassification classify_gu(const IncidenceGeometry& geom);

struct GeneralizedPolygon {
  std::size_t n = 0;
  std::size_t s = 0;
  std::size_t t = 0;
  std::string label;  // "GQ(2,2)", "GH(2,2)", ...
};

/// Generalized N-gon test on the point-line incidence graph: diameter N,
/// girth 2N, thick (s, t > 1), near polygon for N >= 4.
std::optional<GeneralizedPolygon> classify_generalized_polygon(const IncidenceGeometry& geom);

/// Points become lines and lines become points. Dual line i lists the
/// original lines through point i, in line order.
IncidenceGeometry dual_geometry(const IncidenceGeometry& geom);

using PointSet = boost::dynamic_bitset<std::uint64_t>;

enum class HyperplaneRule {
  /// {x} and its neighbours, plus the points at maximal distance.
  perp_and_farthest,
  /// neighbours of x (not x) plus the points at maximal distance.
  open_perp_and_farthest,
  /// {x} and its neighbours only.
  perp_only,
};

std::string to_string(HyperplaneRule rule);

/// One set per point, duplicates removed, sorted. Throws Disconnected.
std::vector<PointSet> basic_hyperplanes(const IncidenceGeometry& geom,
                                        HyperplaneRule rule = HyperplaneRule::perp_and_farthest);

/// Complement of the symmetric difference.
PointSet veldkamp_sum(const PointSet& x, const PointSet& y);

inline constexpr std::uint64_t kDefaultClosureBudget = std::uint64_t{1} << 20;

struct HyperplaneFamily {
  std::size_t size = 0;
  /// (k, number of points of the set lying on exactly k lines inside the
  /// set); empty when classified by size only.
  std::vector<std::pair<std::size_t, std::size_t>> profile;
  std::uint64_t count = 0;
  bool universe = false;
};

struct VeldkampClosure {
  std::size_t rank = 0;  // GF(2) rank of the complements
  std::uint64_t total = 0;
  std::vector<HyperplaneFamily> families;  // by size, then profile
  /// Families other than the full point set.
  std::size_t class_count() const;
};

/// Closure of the basics under the Veldkamp sum. Families are split by size
/// and, when `geom` is given, by the line profile. Throws BudgetExceeded if
/// the closure would exceed `budget` sets.
VeldkampClosure veldkamp_closure(const std::vector<PointSet>& basics, std::size_t universe,
                                 const IncidenceGeometry* geom = nullptr,
                                 std::uint64_t budget = kDefaultClosureBudget);

/// Closure computed literally: add x (+) y for every pair until nothing new
/// appears. Quadratic per round; for checking small cases.
std::vector<PointSet> literal_veldkamp_closure(const std::vector<PointSet>& basics,
                                               std::uint64_t budget = kDefaultClosureBudget);

struct PolarPrediction {
  std::uint64_t p = 0;
  std::uint64_t n = 0;
  BigInt points;          // (p^2n - 1)/(p - 1)
  BigInt b;               // (p^(2n-2) - 1)/(p - 1)
  BigInt generators;      // prod (1 + p^i), i = 1..n
  BigInt lines_per_point; // generators of rank n - 1
  BigInt points_per_generator;  // (p^n - 1)/(p - 1)
  BigInt spread;          // p^n + 1
  BigInt generator_vectors;  // p^n - 1
  BigInt srg_k, srg_lambda, srg_mu;
};

/// Throws DomainError unless p is prime and n >= 1.
PolarPrediction predict_polar_space(std::uint64_t p, std::uint64_t n);
/// srg parameters of the prediction when they fit in 64 bits.
std::optional<Srg> predicted_srg(const PolarPrediction& pred);
std::string format_predicted_configuration(const PolarPrediction& pred);

}  // namespace gzoo
