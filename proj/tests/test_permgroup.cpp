#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "gzoo/error.hpp"
#include "gzoo/perm_group.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace gzoo;

namespace {

Permutation random_perm(std::size_t n, std::mt19937& rng) {
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), Point{0});
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> as_pairs(
    const std::map<std::size_t, std::size_t>& h) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (auto [k, v] : h) out.emplace_back(k, v);
  return out;
}

std::set<oracle::Images> images_of(const PermutationGroup& g) {
  std::set<oracle::Images> out;
  for (const auto& e : g.elements(1'000'000)) out.emplace(e.images().begin(), e.images().end());
  return out;
}

}  // namespace

TEST_CASE("permutation arithmetic") {
  const Permutation p = Permutation::from_cycles(5, {{0, 1, 2}});
  const Permutation q = Permutation::from_cycles(5, {{2, 3}});
  CHECK((p * q)[1] == 3);  // left to right: 1 -> 2 -> 3
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.power(3).is_identity());
  CHECK(p.power(-1) == p.inverse());
  CHECK(p.order() == 3);
  CHECK(p.cycle_type() == std::vector<std::size_t>{3, 1, 1});
  CHECK(format_cycles(p) == "(1,2,3)");
  CHECK(format_cycles(Permutation(4)) == "()");
  CHECK(p.conjugate_by(q) == q.inverse() * p * q);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0}), InputError);
}

TEST_CASE("Schreier-Sims order equals brute-force closure") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    std::vector<Permutation> gens;
    const std::size_t k = 1 + rng() % 3;
    for (std::size_t i = 0; i < k; ++i) {
      Permutation g = random_perm(n, rng);
      // Bias toward proper subgroups.
      if (rng() % 2) g = g.power(static_cast<long>(1 + rng() % 3));
      gens.push_back(g);
    }
    const PermutationGroup g(n, gens);
    const auto all = oracle::closure(gens);
    CHECK(g.order() == all.size());
    for (const auto& e : all) CHECK(g.contains(Permutation(e)));
    std::set<oracle::Images> from_chain = images_of(g);
    CHECK(from_chain.size() == all.size());
  }
}

TEST_CASE("membership rejects outsiders") {
  const std::size_t n = 6;
  const PermutationGroup a(n, {Permutation::from_cycles(n, {{0, 1, 2}}),
                               Permutation::from_cycles(n, {{1, 2, 3}})});
  CHECK(a.order() == 12);
  CHECK_FALSE(a.contains(Permutation::from_cycles(n, {{0, 1}})));
  CHECK_FALSE(a.contains(Permutation::from_cycles(n, {{4, 5}})));
  CHECK_FALSE(a.is_transitive());
  CHECK(a.orbits().size() == 3);
}

TEST_CASE("A8 on 35 points") {
  const PermutationGroup g = group_from(support::catalog_perm("A8-35.perm"));
  CHECK(g.order() == 20160);
  CHECK(g.is_transitive());
  const RankProfile r = rank_profile(g);
  CHECK(r.rank == 3);
  CHECK(r.subdegrees == std::vector<std::size_t>{1, 16, 18});
  CHECK(r.rank == oracle::rank_by_pair_orbits(g.generators()));

  const Orbitals orb(g);
  for (std::size_t s = 1; s < orb.suborbit_count(); ++s) {
    const Point y = orb.suborbits()[s].front();
    const auto stab = two_point_stabilizer(g, 0, y);
    if (orb.suborbits()[s].size() == 16) CHECK(stab.order() == 36);
    if (orb.suborbits()[s].size() == 18) CHECK(stab.order() == 32);
  }

  const StabilizerClassification cls = classify_two_point_stabilizers(g);
  CHECK(cls.m() == 2);
  CHECK(cls.classes[0].fingerprint.order == 36);
  CHECK(cls.classes[1].fingerprint.order == 32);
}

TEST_CASE("rank, subdegrees and stabilizers against brute force") {
  for (const char* name : {"A5-10.perm", "A8-35.perm"}) {
    const PermutationInput in = support::catalog_perm(name);
    const PermutationGroup g = group_from(in);
    const auto elements = oracle::closure(g.generators());
    CHECK(rank_profile(g).rank == oracle::rank_by_pair_orbits(g.generators()));
    CHECK(rank_profile(g).subdegrees == oracle::subdegrees(elements));
    for (Point y = 1; y < g.degree(); y += 3) {
      const auto brute = oracle::two_point_stabilizer(elements, 0, y);
      const auto stab = two_point_stabilizer(g, 0, y);
      CHECK(images_of(stab) == brute);
      CHECK(fingerprint(stab).element_orders == as_pairs(oracle::order_histogram(brute)));
    }
  }
}

TEST_CASE("A5 on 10 points") {
  const PermutationGroup g = group_from(support::catalog_perm("A5-10.perm"));
  CHECK(g.order() == 60);
  const auto cls = classify_two_point_stabilizers(g);
  CHECK(cls.rank == 3);
  CHECK(cls.m_with_point_stabilizer() == 3);
}

TEST_CASE("orbitals") {
  const PermutationGroup g = group_from(support::catalog_perm("A8-35.perm"));
  const Orbitals orb(g);
  CHECK(orb.suborbit_count() == 3);
  for (Point x = 0; x < g.degree(); ++x) {
    CHECK(orb.carrier(x)[0] == x);
    CHECK(orb.carrier_inverse(x)[x] == 0);
    for (Point y = 0; y < g.degree(); ++y) {
      if (x == y) continue;
      CHECK(orb.orbital(x, y) == orb.suborbit_of(orb.carrier_inverse(x)[y]));
      CHECK(orb.orbital(y, x) == orb.paired(orb.orbital(x, y)));
    }
  }
}

TEST_CASE("errors") {
  const std::size_t n = 4;
  const PermutationGroup g(n, {Permutation::from_cycles(n, {{0, 1}})});
  CHECK_THROWS_AS(rank_profile(g), NotTransitive);
  const PermutationGroup s4(n, {Permutation::from_cycles(n, {{0, 1, 2, 3}}),
                                Permutation::from_cycles(n, {{0, 1}})});
  CHECK_THROWS_AS(two_point_stabilizer(s4, 2, 2), SamePoint);
  CHECK(two_point_stabilizer(s4, 0, 1).order() == 2);
}

TEST_CASE("base prefix, conjugation and subgroup equality") {
  const PermutationGroup g = group_from(support::catalog_perm("A5-10.perm"));
  const PermutationGroup h = g.with_base_prefix({7, 3});
  CHECK(h.base().front() == 7);
  CHECK(subgroups_equal(g, h));
  const Permutation c = g.generators()[0];
  CHECK(subgroups_equal(g.conjugate(c), g));
  const PermutationGroup st = g.pointwise_stabilizer({0});
  const PermutationGroup moved = st.conjugate(c);
  CHECK(moved.order() == st.order());
  for (const auto& e : moved.elements(100)) CHECK(e[c[0]] == c[0]);
}
