#include "gzoo/geometry.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <set>

#include "gzoo/error.hpp"

namespace gzoo {

std::string to_string(GeometryMode mode) {
  return mode == GeometryMode::stabilized ? "stabilized" : "defined";
}

std::string to_string(StabilizerKind kind) {
  return kind == StabilizerKind::pointwise ? "pointwise" : "setwise";
}

std::string to_string(HyperplaneRule rule) {
  switch (rule) {
    case HyperplaneRule::perp_and_farthest: return "perp-and-farthest";
    case HyperplaneRule::open_perp_and_farthest: return "open-perp-and-farthest";
    case HyperplaneRule::perp_only: return "perp-only";
  }
  return "?";
}

IncidenceGeometry make_geometry(std::size_t points, std::vector<std::vector<Point>> lines,
                                GeometryMode mode) {
  IncidenceGeometry geom;
  geom.points = points;
  geom.mode = mode;
  for (auto& line : lines) {
    std::sort(line.begin(), line.end());
    line.erase(std::unique(line.begin(), line.end()), line.end());
    if (!line.empty() && line.back() >= points) throw InputError("line point out of range");
  }
  std::erase_if(lines, [](const auto& line) { return line.size() < 2; });
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  geom.lines = std::move(lines);

  std::vector<std::uint8_t> shared(points * points, 0);
  for (const auto& line : geom.lines) {
    for (std::size_t i = 0; i < line.size() && geom.partial_linear_space; ++i) {
      for (std::size_t j = i + 1; j < line.size(); ++j) {
        if (++shared[line[i] * points + line[j]] > 1) {
          geom.partial_linear_space = false;
          break;
        }
      }
    }
  }
  return geom;
}

namespace {

const StabilizerClass& class_at(const StabilizerClassification& cls, std::size_t index) {
  if (index >= cls.classes.size()) {
    throw DomainError("class index " + std::to_string(index) + " out of range (" +
                      std::to_string(cls.classes.size()) + " classes)");
  }
  return cls.classes[index];
}

std::vector<bool> class_suborbits(const Orbitals& orb, const StabilizerClass& c) {
  std::vector<bool> in_class(orb.suborbit_count(), false);
  for (const auto& m : c.members) {
    for (std::size_t s : m.suborbits) in_class[s] = true;
  }
  return in_class;
}

std::vector<Point> fixed_points(std::size_t degree, const std::vector<Permutation>& gens) {
  std::vector<Point> out;
  for (Point x = 0; x < degree; ++x) {
    if (std::all_of(gens.begin(), gens.end(), [&](const auto& s) { return s[x] == x; })) {
      out.push_back(x);
    }
  }
  return out;
}

/// Element exchanging 0 and `rep`, if one exists.
std::optional<Permutation> swapping_element(const Orbitals& orb, Point rep) {
  const PermutationGroup& g = orb.group();
  const Permutation& c = orb.carrier(rep);
  const Point z = c[rep];
  std::vector<Permutation> stab_rep;
  if (g.levels().size() > 1) {
    for (const auto& s : g.levels()[1].generators) stab_rep.push_back(s.conjugate_by(c));
  }
  auto tr = orbit_transversal(g.degree(), stab_rep, z);
  if (!tr[0]) return std::nullopt;
  return c * *tr[0];
}

std::vector<std::vector<Point>> orbit_of_line(const PermutationGroup& g,
                                              std::vector<Point> line) {
  std::sort(line.begin(), line.end());
  std::set<std::vector<Point>> seen{line};
  std::vector<std::vector<Point>> queue{line};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (const auto& s : g.generators()) {
      std::vector<Point> image;
      image.reserve(queue[k].size());
      for (Point x : queue[k]) image.push_back(s[x]);
      std::sort(image.begin(), image.end());
      if (seen.insert(image).second) queue.push_back(std::move(image));
    }
  }
  return queue;
}

}  // namespace

IncidenceGeometry build_stabilized_geometry(const PermutationGroup& g,
                                            const StabilizerClassification& cls,
                                            std::size_t class_index,
                                            const StabilizedOptions& options) {
  const StabilizerClass& c = class_at(cls, class_index);
  Orbitals orb(g);
  const std::vector<bool> in_class = class_suborbits(orb, c);
  const std::size_t n = g.degree();

  std::vector<std::vector<Point>> lines;
  for (const auto& member : c.members) {
    const Point rep = member.representative;
    const PermutationGroup k = orb.group().pointwise_stabilizer({0, rep});
    std::vector<Point> base_line;
    std::vector<bool> on_line(n, false);
    auto take = [&](Point x, Point y) {
      if (!in_class[orb.suborbit_of(orb.carrier_inverse(x)[y])]) return false;
      on_line[x] = on_line[y] = true;
      return true;
    };

    if (options.kind == StabilizerKind::pointwise) {
      if (k.is_trivial() && !options.allow_trivial) {
        throw TrivialClass("two-point stabilizer of the class is trivial");
      }
      const auto fix = fixed_points(n, k.generators());
      for (std::size_t i = 0; i < fix.size(); ++i) {
        for (std::size_t j = i + 1; j < fix.size(); ++j) take(fix[i], fix[j]);
      }
    } else {
      std::vector<Permutation> gens = k.generators();
      if (member.self_paired) {
        auto swap = swapping_element(orb, rep);
        if (!swap) throw Error("self-paired orbital without a swapping element");
        gens.push_back(*swap);
      }
      if (gens.empty() && !options.allow_trivial) {
        throw TrivialClass("setwise stabilizer of the class is trivial");
      }
      const PermutationGroup s(n, gens);
      // {x, y} is stabilized by S iff it is a union of S-orbits.
      std::vector<std::size_t> orbit_size(n, 0);
      std::vector<Point> partner(n, 0);
      for (const auto& o : s.orbits()) {
        for (Point x : o) orbit_size[x] = o.size();
        if (o.size() == 2) {
          partner[o[0]] = o[1];
          partner[o[1]] = o[0];
        }
      }
      auto same_kind = [&](Point x, Point y) {
        const std::size_t so = orb.suborbit_of(orb.carrier_inverse(x)[y]);
        return (orb.paired(so) == so) == member.self_paired;
      };
      for (Point x = 0; x < n; ++x) {
        if (orbit_size[x] == 2 && x < partner[x] && same_kind(x, partner[x])) {
          take(x, partner[x]);
        }
        if (orbit_size[x] != 1) continue;
        for (Point y = x + 1; y < n; ++y) {
          if (orbit_size[y] == 1 && same_kind(x, y)) take(x, y);
        }
      }
    }
    for (Point x = 0; x < n; ++x) {
      if (on_line[x]) base_line.push_back(x);
    }
    for (auto& line : orbit_of_line(g, base_line)) lines.push_back(std::move(line));
  }
  IncidenceGeometry geom = make_geometry(n, std::move(lines), GeometryMode::stabilized);
  geom.source_class = class_index;
  return geom;
}

namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;

class CliqueSearch {
 public:
  CliqueSearch(const Graph& graph, std::uint64_t budget) : budget_(budget) {
    const std::size_t n = graph.order();
    rows_.assign(n, Bits(n));
    for (Point x = 0; x < n; ++x) {
      for (Point y : graph.adjacency[x]) rows_[x].set(y);
    }
  }

  std::vector<std::vector<Point>> run() {
    const std::size_t n = rows_.size();
    Bits p(n), x(n);
    p.set();
    std::vector<Point> r;
    expand(r, p, x);
    return std::move(cliques_);
  }

 private:
  void expand(std::vector<Point>& r, Bits& p, Bits& x) {
    if (p.none()) {
      if (x.none()) {
        if (++found_ > budget_) {
          throw BudgetExceeded("more than " + std::to_string(budget_) + " maximal cliques");
        }
        cliques_.push_back(r);
      }
      return;
    }
    // Pivot maximizing |P & N(u)| over P | X.
    std::size_t pivot = 0, best = 0;
    bool first = true;
    for (const Bits* set : {&p, &x}) {
      for (auto u = set->find_first(); u != Bits::npos; u = set->find_next(u)) {
        const std::size_t c = (p & rows_[u]).count();
        if (first || c > best) {
          pivot = u;
          best = c;
          first = false;
        }
      }
    }
    Bits candidates = p - rows_[pivot];
    for (auto v = candidates.find_first(); v != Bits::npos; v = candidates.find_next(v)) {
      r.push_back(static_cast<Point>(v));
      Bits p2 = p & rows_[v];
      Bits x2 = x & rows_[v];
      expand(r, p2, x2);
      r.pop_back();
      p.reset(v);
      x.set(v);
    }
  }

  std::vector<Bits> rows_;
  std::uint64_t budget_;
  std::uint64_t found_ = 0;
  std::vector<std::vector<Point>> cliques_;
};

}  // namespace

IncidenceGeometry build_defined_geometry(const PermutationGroup& g,
                                         const StabilizerClassification& cls,
                                         std::size_t class_index,
                                         std::uint64_t clique_budget) {
  const Graph graph = class_graph(g, cls, class_index);
  auto cliques = CliqueSearch(graph, clique_budget).run();
  IncidenceGeometry geom = make_geometry(g.degree(), std::move(cliques), GeometryMode::defined);
  geom.source_class = class_index;
  return geom;
}

// ---------------------------------------------------------------------------

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (const auto& a : adjacency) total += a.size();
  return total / 2;
}

bool Graph::adjacent(Point x, Point y) const {
  return std::binary_search(adjacency[x].begin(), adjacency[x].end(), y);
}

std::vector<std::pair<Point, Point>> Graph::edges() const {
  std::vector<std::pair<Point, Point>> out;
  for (Point x = 0; x < adjacency.size(); ++x) {
    for (Point y : adjacency[x]) {
      if (x < y) out.emplace_back(x, y);
    }
  }
  return out;
}

Graph graph_from_edges(std::size_t n, const std::vector<std::pair<Point, Point>>& edges) {
  Graph graph;
  graph.adjacency.resize(n);
  for (auto [x, y] : edges) {
    if (x == y) continue;
    graph.adjacency[x].push_back(y);
    graph.adjacency[y].push_back(x);
  }
  for (auto& a : graph.adjacency) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return graph;
}

Graph collinearity_graph(const IncidenceGeometry& geom) {
  std::vector<std::pair<Point, Point>> edges;
  for (const auto& line : geom.lines) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      for (std::size_t j = i + 1; j < line.size(); ++j) edges.emplace_back(line[i], line[j]);
    }
  }
  return graph_from_edges(geom.points, edges);
}

Graph class_graph(const PermutationGroup& g, const StabilizerClassification& cls,
                  std::size_t class_index) {
  const StabilizerClass& c = class_at(cls, class_index);
  Orbitals orb(g);
  const std::vector<bool> in_class = class_suborbits(orb, c);
  Graph graph;
  graph.adjacency.resize(g.degree());
  for (Point x = 0; x < g.degree(); ++x) {
    const Permutation& back = orb.carrier_inverse(x);
    for (Point y = 0; y < g.degree(); ++y) {
      if (x != y && in_class[orb.suborbit_of(back[y])]) graph.adjacency[x].push_back(y);
    }
  }
  return graph;
}

std::vector<int> distances_from(const Graph& graph, Point source) {
  std::vector<int> dist(graph.order(), -1);
  std::vector<Point> queue{source};
  dist[source] = 0;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const Point x = queue[k];
    for (Point y : graph.adjacency[x]) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

ConfigurationParams configuration(const IncidenceGeometry& geom) {
  ConfigurationParams c;
  c.p = geom.points;
  c.l = geom.lines.size();
  c.point_degrees.assign(geom.points, 0);
  for (const auto& line : geom.lines) {
    c.line_sizes.push_back(line.size());
    for (Point x : line) ++c.point_degrees[x];
  }
  std::sort(c.point_degrees.rbegin(), c.point_degrees.rend());
  std::sort(c.line_sizes.rbegin(), c.line_sizes.rend());
  c.uniform = !c.point_degrees.empty() && !c.line_sizes.empty() &&
              c.point_degrees.front() == c.point_degrees.back() &&
              c.line_sizes.front() == c.line_sizes.back();
  return c;
}

std::string format_configuration(const ConfigurationParams& c) {
  auto side = [](std::size_t count, const std::vector<std::size_t>& values) {
    std::string out = std::to_string(count) + "_";
    if (values.empty()) return out + "0";
    if (values.front() == values.back()) return out + std::to_string(values.front());
    return out + "{" + std::to_string(values.back()) + ".." + std::to_string(values.front()) + "}";
  };
  const std::string left = side(c.p, c.point_degrees);
  const std::string right = side(c.l, c.line_sizes);
  if (left == right) return "[" + left + "]";
  return "[" + left + ", " + right + "]";
}

std::optional<Srg> strongly_regular_parameters(const Graph& graph) {
  const std::size_t n = graph.order();
  if (n < 2) return std::nullopt;
  const std::size_t k = graph.adjacency[0].size();
  for (const auto& a : graph.adjacency) {
    if (a.size() != k) return std::nullopt;
  }
  if (k == 0 || k == n - 1) return std::nullopt;
  std::vector<Bits> rows(n, Bits(n));
  for (Point x = 0; x < n; ++x) {
    for (Point y : graph.adjacency[x]) rows[x].set(y);
  }
  std::optional<std::size_t> lambda, mu;
  for (Point x = 0; x < n; ++x) {
    for (Point y = x + 1; y < n; ++y) {
      const std::size_t common = (rows[x] & rows[y]).count();
      auto& slot = rows[x].test(y) ? lambda : mu;
      if (!slot) {
        slot = common;
      } else if (*slot != common) {
        return std::nullopt;
      }
    }
  }
  return Srg{n, k, lambda.value_or(0), mu.value_or(0)};
}

namespace {

std::optional<long long> near_integer(double v) {
  const double r = std::round(v);
  if (std::abs(v - r) < kSpectrumTolerance) return static_cast<long long>(r);
  return std::nullopt;
}

void add_eigenvalue(Spectrum& s, double value, std::size_t multiplicity) {
  if (multiplicity == 0) return;
  for (auto& e : s) {
    if (std::abs(e.value - value) < kSpectrumTolerance) {
      e.multiplicity += multiplicity;
      return;
    }
  }
  SpectrumEntry e;
  e.integer = near_integer(value);
  e.value = e.integer ? static_cast<double>(*e.integer) : value;
  e.multiplicity = multiplicity;
  s.push_back(e);
}

void sort_spectrum(Spectrum& s) {
  std::sort(s.begin(), s.end(), [](const auto& x, const auto& y) { return x.value > y.value; });
}

}  // namespace

Spectrum srg_spectrum(const Srg& s) {
  const double n = static_cast<double>(s.n), k = static_cast<double>(s.k);
  const double diff = static_cast<double>(s.lambda) - static_cast<double>(s.mu);
  const double delta = std::sqrt(diff * diff + 4.0 * (k - static_cast<double>(s.mu)));
  const double r = (diff + delta) / 2.0;
  const double t = (diff - delta) / 2.0;
  const double skew = (2.0 * k + (n - 1.0) * diff) / delta;
  const auto f = static_cast<std::size_t>(std::llround(((n - 1.0) - skew) / 2.0));
  const auto g = static_cast<std::size_t>(std::llround(((n - 1.0) + skew) / 2.0));
  Spectrum out;
  add_eigenvalue(out, k, 1);
  add_eigenvalue(out, r, f);
  add_eigenvalue(out, t, g);
  sort_spectrum(out);
  return out;
}

Spectrum numerical_spectrum(const Graph& graph) {
  const auto n = static_cast<Eigen::Index>(graph.order());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Point x = 0; x < graph.order(); ++x) {
    for (Point y : graph.adjacency[x]) a(x, y) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd values = solver.eigenvalues();
  Spectrum out;
  // Eigenvalues come ascending; group runs within the tolerance.
  Eigen::Index i = 0;
  while (i < n) {
    Eigen::Index j = i;
    double sum = 0;
    while (j < n && values(j) - values(i) < kSpectrumTolerance) sum += values(j++);
    add_eigenvalue(out, sum / static_cast<double>(j - i), static_cast<std::size_t>(j - i));
    i = j;
  }
  sort_spectrum(out);
  return out;
}

std::optional<std::size_t> graph_diameter(const Graph& graph) {
  std::size_t diameter = 0;
  for (Point x = 0; x < graph.order(); ++x) {
    for (int d : distances_from(graph, x)) {
      if (d < 0) return std::nullopt;
      diameter = std::max(diameter, static_cast<std::size_t>(d));
    }
  }
  return diameter;
}

std::optional<std::size_t> graph_girth(const Graph& graph) {
  std::optional<std::size_t> girth;
  const std::size_t n = graph.order();
  std::vector<int> dist(n), parent(n);
  for (Point s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::vector<Point> queue{s};
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const Point x = queue[k];
      if (girth && static_cast<std::size_t>(2 * dist[x] + 1) >= *girth) break;
      for (Point y : graph.adjacency[x]) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = static_cast<int>(x);
          queue.push_back(y);
        } else if (parent[x] != static_cast<int>(y)) {
          const auto len = static_cast<std::size_t>(dist[x] + dist[y] + 1);
          if (!girth || len < *girth) girth = len;
        }
      }
    }
  }
  return girth;
}

GraphStats graph_stats(const Graph& graph) {
  GraphStats stats;
  for (const auto& a : graph.adjacency) stats.degrees.push_back(a.size());
  std::sort(stats.degrees.rbegin(), stats.degrees.rend());
  stats.diameter = graph_diameter(graph);
  stats.girth = graph_girth(graph);
  stats.srg = strongly_regular_parameters(graph);
  if (stats.srg) {
    stats.spectrum = srg_spectrum(*stats.srg);
    stats.spectrum_from_formula = true;
  } else if (graph.order() <= kEigenSolverLimit && graph.order() > 0) {
    stats.spectrum = numerical_spectrum(graph);
  }
  return stats;
}

GraphStats graph_stats(const IncidenceGeometry& geom) {
  return graph_stats(collinearity_graph(geom));
}

std::string format_spectrum(const Spectrum& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    if (s[i].integer) {
      out += std::to_string(*s[i].integer);
    } else {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", s[i].value);
      out += buf;
    }
    out += "^" + std::to_string(s[i].multiplicity);
  }
  return out + "]";
}

std::string format_srg(const Srg& s) {
  return "srg(" + std::to_string(s.n) + "," + std::to_string(s.k) + "," +
         std::to_string(s.lambda) + "," + std::to_string(s.mu) + ")";
}

GuClassification classify_gu(const IncidenceGeometry& geom) {
  const Graph graph = collinearity_graph(geom);
  GuClassification out;
  for (Point x = 0; x < geom.points; ++x) {
    const auto dist = distances_from(graph, x);
    for (int d : dist) {
      if (d < 0) throw Disconnected("collinearity graph is disconnected");
      out.diameter = std::max(out.diameter, static_cast<std::size_t>(d));
    }
    for (const auto& line : geom.lines) {
      int nearest = -1;
      std::size_t count = 0;
      for (Point y : line) {
        if (dist[y] == 0) {
          nearest = -2;
          break;
        }
        if (nearest < 0 || dist[y] < nearest) {
          nearest = dist[y];
          count = 1;
        } else if (dist[y] == nearest) {
          ++count;
        }
      }
      if (nearest == -2) continue;
      ++out.histogram[count];
    }
  }
  if (out.histogram.size() == 1) out.u = out.histogram.begin()->first;
  out.near_polygon = out.u == 1;
  return out;
}

std::optional<GeneralizedPolygon> classify_generalized_polygon(const IncidenceGeometry& geom) {
  const ConfigurationParams c = configuration(geom);
  if (!c.uniform || !geom.partial_linear_space) return std::nullopt;
  const std::size_t s = c.line_sizes.front() - 1;
  const std::size_t t = c.point_degrees.front() - 1;
  if (s < 2 || t < 2) return std::nullopt;

  std::vector<std::pair<Point, Point>> edges;
  for (std::size_t i = 0; i < geom.lines.size(); ++i) {
    for (Point x : geom.lines[i]) {
      edges.emplace_back(x, static_cast<Point>(geom.points + i));
    }
  }
  const Graph incidence = graph_from_edges(geom.points + geom.lines.size(), edges);
  const auto diameter = graph_diameter(incidence);
  const auto girth = graph_girth(incidence);
  if (!diameter || !girth || *girth != 2 * *diameter || *diameter < 3) return std::nullopt;
  const std::size_t n = *diameter;
  if (n >= 4 && !classify_gu(geom).near_polygon) return std::nullopt;

  GeneralizedPolygon out{n, s, t, ""};
  const std::string st = "(" + std::to_string(s) + "," + std::to_string(t) + ")";
  switch (n) {
    case 3: out.label = "projective plane" + st; break;
    case 4: out.label = "GQ" + st; break;
    case 6: out.label = "GH" + st; break;
    case 8: out.label = "GO" + st; break;
    default: out.label = "generalized " + std::to_string(n) + "-gon" + st;
  }
  return out;
}

IncidenceGeometry dual_geometry(const IncidenceGeometry& geom) {
  IncidenceGeometry out;
  out.points = geom.lines.size();
  out.mode = geom.mode;
  out.source_class = geom.source_class;
  out.partial_linear_space = geom.partial_linear_space;
  out.lines.resize(geom.points);
  for (std::size_t i = 0; i < geom.lines.size(); ++i) {
    for (Point x : geom.lines[i]) out.lines[x].push_back(static_cast<Point>(i));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<PointSet> basic_hyperplanes(const IncidenceGeometry& geom, HyperplaneRule rule) {
  const Graph graph = collinearity_graph(geom);
  std::vector<std::vector<int>> dist;
  int diameter = 0;
  for (Point x = 0; x < geom.points; ++x) {
    dist.push_back(distances_from(graph, x));
    for (int d : dist.back()) {
      if (d < 0) throw Disconnected("collinearity graph is disconnected");
      diameter = std::max(diameter, d);
    }
  }
  std::vector<PointSet> out;
  for (Point x = 0; x < geom.points; ++x) {
    PointSet h(geom.points);
    for (Point y = 0; y < geom.points; ++y) {
      const int d = dist[x][y];
      bool in = false;
      switch (rule) {
        case HyperplaneRule::perp_and_farthest: in = d <= 1 || d == diameter; break;
        case HyperplaneRule::open_perp_and_farthest:
          in = (d == 1) || (d == diameter && d > 0);
          break;
        case HyperplaneRule::perp_only: in = d <= 1; break;
      }
      h[y] = in;
    }
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PointSet veldkamp_sum(const PointSet& x, const PointSet& y) {
  PointSet out = x ^ y;
  out.flip();
  return out;
}

std::size_t VeldkampClosure::class_count() const {
  return static_cast<std::size_t>(
      std::count_if(families.begin(), families.end(), [](const auto& f) { return !f.universe; }));
}

VeldkampClosure veldkamp_closure(const std::vector<PointSet>& basics, std::size_t universe,
                                 const IncidenceGeometry* geom, std::uint64_t budget) {
  if (basics.empty()) throw DomainError("no basic hyperplanes");
  // In complement coordinates the sum is XOR, so the closure is a span.
  std::vector<PointSet> basis;
  std::vector<std::size_t> pivots;
  for (const auto& h : basics) {
    if (h.size() != universe) throw InputError("hyperplane size differs from universe");
    PointSet v = ~h;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (v.test(pivots[i])) v ^= basis[i];
    }
    const auto p = v.find_first();
    if (p == PointSet::npos) continue;
    for (auto& b : basis) {
      if (b.test(p)) b ^= v;
    }
    basis.push_back(std::move(v));
    pivots.push_back(p);
  }
  VeldkampClosure out;
  out.rank = basis.size();
  if (out.rank >= 64 || (std::uint64_t{1} << out.rank) > budget) {
    throw BudgetExceeded("Veldkamp closure has 2^" + std::to_string(out.rank) +
                         " members, above the budget of " + std::to_string(budget));
  }
  out.total = std::uint64_t{1} << out.rank;

  std::vector<std::vector<std::size_t>> lines_through;
  if (geom) {
    lines_through.resize(geom->points);
    for (std::size_t i = 0; i < geom->lines.size(); ++i) {
      for (Point x : geom->lines[i]) lines_through[x].push_back(i);
    }
  }
  using Key = std::pair<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>>;
  std::map<Key, std::uint64_t> counts;
  std::vector<std::uint8_t> inside;
  PointSet current(universe);
  for (std::uint64_t i = 0; i < out.total; ++i) {
    if (i > 0) current ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
    const PointSet h = ~current;
    Key key{h.count(), {}};
    if (geom) {
      inside.assign(geom->lines.size(), 0);
      for (std::size_t l = 0; l < geom->lines.size(); ++l) {
        inside[l] = std::all_of(geom->lines[l].begin(), geom->lines[l].end(),
                                [&](Point x) { return h.test(x); });
      }
      std::map<std::size_t, std::size_t> profile;
      for (auto x = h.find_first(); x != PointSet::npos; x = h.find_next(x)) {
        std::size_t k = 0;
        for (std::size_t l : lines_through[x]) k += inside[l];
        ++profile[k];
      }
      key.second.assign(profile.begin(), profile.end());
    }
    ++counts[key];
  }
  for (auto& [key, count] : counts) {
    out.families.push_back(HyperplaneFamily{key.first, key.second, count, key.first == universe});
  }
  return out;
}

std::vector<PointSet> literal_veldkamp_closure(const std::vector<PointSet>& basics,
                                               std::uint64_t budget) {
  std::set<PointSet> closure(basics.begin(), basics.end());
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<PointSet> snapshot(closure.begin(), closure.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = i; j < snapshot.size(); ++j) {
        if (closure.insert(veldkamp_sum(snapshot[i], snapshot[j])).second) {
          grew = true;
          if (closure.size() > budget) throw BudgetExceeded("literal closure over budget");
        }
      }
    }
  }
  return {closure.begin(), closure.end()};
}

// ---------------------------------------------------------------------------

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

PolarPrediction predict_polar_space(std::uint64_t p, std::uint64_t n) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (n < 1) throw DomainError("qudit count must be at least 1");
  using boost::multiprecision::pow;
  const BigInt bp = p;
  const auto un = static_cast<unsigned>(n);
  PolarPrediction out;
  out.p = p;
  out.n = n;
  out.points = (pow(bp, 2 * un) - 1) / (bp - 1);
  out.b = (pow(bp, 2 * un - 2) - 1) / (bp - 1);
  out.generators = 1;
  out.lines_per_point = 1;
  for (unsigned i = 1; i <= un; ++i) {
    out.generators *= 1 + pow(bp, i);
    if (i < un) out.lines_per_point *= 1 + pow(bp, i);
  }
  out.points_per_generator = (pow(bp, un) - 1) / (bp - 1);
  out.spread = pow(bp, un) + 1;
  out.generator_vectors = pow(bp, un) - 1;
  out.srg_k = bp * out.b;
  out.srg_lambda = out.b - 2;
  out.srg_mu = out.b;
  return out;
}

std::optional<Srg> predicted_srg(const PolarPrediction& pred) {
  const BigInt limit = BigInt(1) << 62;
  if (pred.points >= limit || pred.srg_k >= limit) return std::nullopt;
  if (pred.srg_lambda < 0) return std::nullopt;
  return Srg{pred.points.convert_to<std::size_t>(), pred.srg_k.convert_to<std::size_t>(),
             pred.srg_lambda.convert_to<std::size_t>(), pred.srg_mu.convert_to<std::size_t>()};
}

std::string format_predicted_configuration(const PolarPrediction& pred) {
  const std::string left = pred.points.str() + "_" + pred.lines_per_point.str();
  const std::string right = pred.generators.str() + "_" + pred.points_per_generator.str();
  if (left == right) return "[" + left + "]";
  return "[" + left + ", " + right + "]";
}

}  // namespace gzoo
