#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gzoo/coset_enum.hpp"
#include "gzoo/error.hpp"
#include "gzoo/geometry.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace gzoo;

namespace {

PermutationGroup a6_on_15() {
  const Presentation p = support::catalog_grp("A6.grp");
  for (const auto& t : low_index_subgroups(p, {.max_index = 15})) {
    if (t.index() == 15) return group_from(table_to_permutations(t));
  }
  throw std::logic_error("A6 has no subgroup of index 15");
}

std::vector<std::pair<Point, Point>> class_pairs(const PermutationGroup& g,
                                                 const StabilizerClassification& cls,
                                                 std::size_t c) {
  const Orbitals orb(g);
  std::set<std::size_t> subs;
  for (const auto& m : cls.classes[c].members) subs.insert(m.suborbits.begin(), m.suborbits.end());
  std::vector<std::pair<Point, Point>> out;
  for (Point x = 0; x < g.degree(); ++x) {
    for (Point y = x + 1; y < g.degree(); ++y) {
      if (subs.count(orb.orbital(x, y))) out.emplace_back(x, y);
    }
  }
  return out;
}

std::vector<std::vector<Point>> as_lists(const std::vector<PointSet>& sets) {
  std::vector<std::vector<Point>> out;
  for (const auto& s : sets) {
    std::vector<Point> v;
    for (auto i = s.find_first(); i != PointSet::npos; i = s.find_next(i)) v.push_back(static_cast<Point>(i));
    out.push_back(v);
  }
  return out;
}

void check_spectrum_identities(const Spectrum& s, std::size_t n, std::size_t k) {
  std::size_t mult = 0;
  double trace = 0, energy = 0;
  for (const auto& e : s) {
    mult += e.multiplicity;
    trace += e.value * static_cast<double>(e.multiplicity);
    energy += e.value * e.value * static_cast<double>(e.multiplicity);
  }
  CHECK(mult == n);
  CHECK(std::abs(trace) < 1e-6);
  CHECK(std::abs(energy - static_cast<double>(n * k)) < 1e-6);
}

}  // namespace

TEST_CASE("A5 on 10 points: Petersen and the Desargues-free [10_2, 5_4]") {
  const PermutationGroup g = group_from(support::catalog_perm("A5-10.perm"));
  const auto cls = classify_two_point_stabilizers(g);
  const IncidenceGeometry petersen = build_stabilized_geometry(g, cls, 0);
  CHECK(format_configuration(configuration(petersen)) == "[10_3, 15_2]");
  const GraphStats st = graph_stats(petersen);
  CHECK(format_spectrum(st.spectrum) == "[3^1, 1^5, -2^4]");
  CHECK(st.girth == 5u);

  const IncidenceGeometry k5 =
      build_stabilized_geometry(g, cls, 1, {.kind = StabilizerKind::setwise});
  CHECK(format_configuration(configuration(k5)) == "[10_2, 5_4]");
  CHECK(classify_gu(k5).u == 2u);
}

TEST_CASE("stabilized lines agree with grouping pairs by stabilizer") {
  for (const char* name : {"A5-10.perm", "A8-35.perm"}) {
    const PermutationGroup g = group_from(support::catalog_perm(name));
    const auto elements = oracle::closure(g.generators());
    const auto cls = classify_two_point_stabilizers(g);
    for (std::size_t c = 0; c < cls.classes.size(); ++c) {
      if (cls.classes[c].fingerprint.order == 1) {
        CHECK_THROWS_AS(build_stabilized_geometry(g, cls, c), TrivialClass);
        continue;
      }
      const auto geom = build_stabilized_geometry(g, cls, c);
      auto expected = oracle::group_pairs_by_stabilizer(elements, class_pairs(g, cls, c));
      CHECK(geom.lines == expected);
    }
  }
}

TEST_CASE("defined lines are the maximal cliques of the class graph") {
  for (const char* name : {"A5-10.perm", "A8-35.perm"}) {
    const PermutationGroup g = group_from(support::catalog_perm(name));
    const auto cls = classify_two_point_stabilizers(g);
    for (std::size_t c = 0; c < cls.classes.size(); ++c) {
      const auto geom = build_defined_geometry(g, cls, c);
      auto cliques = oracle::maximal_cliques(class_graph(g, cls, c));
      std::erase_if(cliques, [](const auto& l) { return l.size() < 2; });
      CHECK(geom.lines == cliques);
    }
  }
}

TEST_CASE("A8 on 35 points") {
  const PermutationGroup g = group_from(support::catalog_perm("A8-35.perm"));
  const auto cls = classify_two_point_stabilizers(g);
  const IncidenceGeometry g36 = build_defined_geometry(g, cls, 0);
  CHECK(format_configuration(configuration(g36)) == "[35_8, 56_5]");
  CHECK(classify_gu(g36).u == 2u);
  CHECK(format_spectrum(graph_stats(g36).spectrum) == "[16^1, 2^20, -4^14]");
  const IncidenceGeometry g32 = build_defined_geometry(g, cls, 1);
  CHECK(format_configuration(configuration(g32)) == "[35_6, 30_7]");
  CHECK(classify_gu(g32).u == 3u);

  const IncidenceGeometry d = dual_geometry(g36);
  CHECK(format_configuration(configuration(d)) == "[56_5, 35_8]");
  CHECK(dual_geometry(d) == g36);
}

TEST_CASE("A6 on 15 points is GQ(2,2)") {
  const PermutationGroup g = a6_on_15();
  const auto cls = classify_two_point_stabilizers(g);
  const IncidenceGeometry gq = build_defined_geometry(g, cls, 0);
  CHECK(format_configuration(configuration(gq)) == "[15_3]");
  const GraphStats st = graph_stats(gq);
  REQUIRE(st.srg);
  CHECK(*st.srg == Srg{15, 6, 1, 3});
  CHECK(format_spectrum(st.spectrum) == "[6^1, 1^9, -3^5]");
  const auto poly = classify_generalized_polygon(gq);
  REQUIRE(poly);
  CHECK(poly->label == "GQ(2,2)");
  CHECK(classify_gu(gq).u == 1u);
  CHECK(classify_gu(gq).near_polygon);

  const auto pred = predict_polar_space(2, 2);
  CHECK(predicted_srg(pred) == *st.srg);
  CHECK(format_predicted_configuration(pred) == "[15_3]");

  const auto perps = basic_hyperplanes(gq, HyperplaneRule::perp_only);
  CHECK(perps.size() == 15);
  for (const auto& h : perps) CHECK(h.count() == 7);
}

TEST_CASE("srg parameters and spectra against counting") {
  const PermutationGroup a8 = group_from(support::catalog_perm("A8-35.perm"));
  const PermutationGroup a5 = group_from(support::catalog_perm("A5-10.perm"));
  for (const auto* g : {&a8, &a5}) {
    const auto cls = classify_two_point_stabilizers(*g);
    for (std::size_t c = 0; c < cls.classes.size(); ++c) {
      const Graph graph = class_graph(*g, cls, c);
      const auto brute = oracle::srg_counts(graph);
      const auto srg = strongly_regular_parameters(graph);
      CHECK(srg.has_value() == brute.strongly_regular);
      if (!srg) continue;
      CHECK(*srg == Srg{brute.n, brute.k, brute.lambda, brute.mu});
      CHECK(srg->k * (srg->k - srg->lambda - 1) == (srg->n - srg->k - 1) * srg->mu);
      const Spectrum closed = srg_spectrum(*srg);
      const Spectrum numeric = numerical_spectrum(graph);
      CHECK(format_spectrum(closed) == format_spectrum(numeric));
      check_spectrum_identities(numeric, srg->n, srg->k);
    }
  }
}

TEST_CASE("polar space predictions") {
  const auto p22 = predict_polar_space(2, 2);
  CHECK(p22.points == 15);
  CHECK(p22.generators == 15);
  CHECK(predicted_srg(p22) == Srg{15, 6, 1, 3});

  const auto p23 = predict_polar_space(2, 3);
  CHECK(p23.points == 63);
  CHECK(predicted_srg(p23) == Srg{63, 30, 13, 15});
  CHECK(format_predicted_configuration(p23) == "[63_15, 135_7]");

  CHECK(predicted_srg(predict_polar_space(3, 2)) == Srg{40, 12, 2, 4});

  const auto p33 = predict_polar_space(3, 3);
  CHECK(p33.points == 364);
  CHECK(predicted_srg(p33) == Srg{364, 120, 38, 40});
  CHECK(format_predicted_configuration(p33) == "[364_40, 1120_13]");

  CHECK(predict_polar_space(2, 4).generators == 2295);

  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (std::uint64_t n = 1; n <= 6; ++n) {
      const auto pred = predict_polar_space(p, n);
      CHECK(pred.spread * pred.generator_vectors == pred.points * (p - 1));
    }
  }
  CHECK_THROWS_AS(predict_polar_space(4, 2), DomainError);
  CHECK_THROWS_AS(predict_polar_space(2, 0), DomainError);
}

TEST_CASE("geometry construction helpers") {
  const IncidenceGeometry g = make_geometry(4, {{3, 1}, {0, 1}, {1, 3}, {2}});
  CHECK(g.lines == std::vector<std::vector<Point>>{{0, 1}, {1, 3}});
  CHECK(g.partial_linear_space);
  const IncidenceGeometry bad = make_geometry(3, {{0, 1, 2}, {0, 1}});
  CHECK_FALSE(bad.partial_linear_space);
  CHECK(format_configuration(configuration(g)) == "[4_{0..2}, 2_2]");
}

TEST_CASE("degenerate hyperplanes and disconnection") {
  const IncidenceGeometry line = make_geometry(4, {{0, 1, 2, 3}});
  const auto hs = basic_hyperplanes(line);
  REQUIRE(hs.size() == 1);
  CHECK(hs[0].all());

  const IncidenceGeometry two = make_geometry(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(basic_hyperplanes(two), Disconnected);
  CHECK_THROWS_AS(classify_gu(two), Disconnected);
  CHECK_FALSE(graph_stats(two).diameter);
}

TEST_CASE("Veldkamp closure") {
  PointSet h(6);
  h.set(0);
  h.set(3);
  const VeldkampClosure single = veldkamp_closure({h}, 6);
  CHECK(single.total == 2);
  CHECK(literal_veldkamp_closure({h}).size() == 2);

  const PermutationGroup g = group_from(support::catalog_perm("A5-10.perm"));
  const auto cls = classify_two_point_stabilizers(g);
  const IncidenceGeometry petersen = build_stabilized_geometry(g, cls, 0);
  for (auto rule : {HyperplaneRule::perp_and_farthest, HyperplaneRule::perp_only,
                    HyperplaneRule::open_perp_and_farthest}) {
    const auto basics = basic_hyperplanes(petersen, rule);
    std::vector<std::vector<bool>> raw;
    for (const auto& l : as_lists(basics)) {
      std::vector<bool> v(10);
      for (auto x : l) v[x] = true;
      raw.push_back(v);
    }
    const auto brute = oracle::veldkamp_closure(raw);
    const VeldkampClosure fast = veldkamp_closure(basics, 10, &petersen);
    CHECK(fast.total == brute.size());
    CHECK(literal_veldkamp_closure(basics).size() == brute.size());
    std::uint64_t sum = 0;
    for (const auto& f : fast.families) sum += f.count;
    CHECK(sum == fast.total);
  }

  CHECK_THROWS_AS(
      veldkamp_closure(basic_hyperplanes(petersen, HyperplaneRule::perp_only), 10, nullptr, 4),
      BudgetExceeded);
}

TEST_CASE("U3(4) orthogonal-basis configuration") {
  const IncidenceGeometry geom = oracle::u34_orthogonal_bases();
  CHECK(format_configuration(configuration(geom)) == "[208_6, 416_3]");
  const auto basics = basic_hyperplanes(geom);
  CHECK(basics.size() == 208);
  const VeldkampClosure closure = veldkamp_closure(basics, geom.points, &geom);
  CHECK(closure.rank == 16);
  CHECK(closure.total == (std::uint64_t{1} << 16));
  CHECK(closure.class_count() == 10);
}
