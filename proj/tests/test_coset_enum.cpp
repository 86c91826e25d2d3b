#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "gzoo/coset_enum.hpp"
#include "gzoo/error.hpp"
#include "support.hpp"

using namespace gzoo;

namespace {

const char* kA5 = "gens: a b\nrels: a^2 b^3 (ab)^5";

std::vector<std::size_t> indices(const std::vector<CosetTable>& tables) {
  std::vector<std::size_t> out;
  for (const auto& t : tables) out.push_back(t.index());
  return out;
}

// Relabel so coset c becomes coset 0, then standardize.
CosetTable rebase(const CosetTable& t, Point c) {
  std::vector<Point> swap(t.index());
  std::iota(swap.begin(), swap.end(), Point{0});
  std::swap(swap[0], swap[c]);
  std::vector<CosetTable::Row> rows(t.index());
  for (Point i = 0; i < t.index(); ++i) {
    for (int x = 0; x < Letter::kCount; ++x) rows[swap[i]][x] = swap[t.rows()[i][x]];
  }
  return CosetTable(std::move(rows));
}

// Distinct subgroups in the conjugacy class of the table's coset stabilizer.
std::size_t class_size(const CosetTable& t) {
  std::set<CosetTable> seen;
  for (Point c = 0; c < t.index(); ++c) seen.insert(rebase(t, c));
  return seen.size();
}

bool satisfies(const Permutation& x, const Permutation& y, const Presentation& p) {
  for (const auto& r : p.relators) {
    Permutation w(x.degree());
    for (auto l : r) {
      const Permutation& g = l.generator() == 0 ? x : y;
      w = w * (l.is_inverse() ? g.inverse() : g);
    }
    if (!w.is_identity()) return false;
  }
  return true;
}

bool transitive(const Permutation& x, const Permutation& y) {
  std::vector<bool> seen(x.degree());
  std::vector<Point> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Point p = stack.back();
    stack.pop_back();
    for (Point q : {x[p], y[p]}) {
      if (!seen[q]) {
        seen[q] = true;
        ++count;
        stack.push_back(q);
      }
    }
  }
  return count == x.degree();
}

std::vector<Permutation> symmetric_group(std::size_t n) {
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), Point{0});
  std::vector<Permutation> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// Subgroups of index n = transitive actions on n points / (n-1)!.
std::size_t subgroups_by_brute_force(const Presentation& p, std::size_t n) {
  const auto sn = symmetric_group(n);
  std::size_t homs = 0;
  for (const auto& x : sn) {
    for (const auto& y : sn) homs += transitive(x, y) && satisfies(x, y, p);
  }
  std::size_t fact = 1;
  for (std::size_t i = 2; i < n; ++i) fact *= i;
  return homs / fact;
}

}  // namespace

TEST_CASE("A5 over the trivial subgroup has 60 cosets") {
  const Presentation p = support::presentation(kA5);
  const CosetTable t = todd_coxeter(p, {});
  CHECK(t.index() == 60);
  CHECK(check_table(t, p, {}).empty());
}

TEST_CASE("A5 over <b> and <a, bab>") {
  const Presentation p = support::presentation(kA5);
  const SubgroupSpec b{{textio::parse_word("b", p)}};
  CHECK(todd_coxeter(p, b).index() == 20);
  const SubgroupSpec h{{textio::parse_word("a", p), textio::parse_word("b", p)}};
  CHECK(todd_coxeter(p, h).index() == 1);
}

TEST_CASE("HLT keeps definition order and representatives trace") {
  const Presentation p = support::catalog_grp("A6.grp");
  const SubgroupSpec h{{textio::parse_word("a", p), textio::parse_word("bab", p)}};
  const CosetTable t = todd_coxeter(p, h);
  CHECK(check_table(t, p, h).empty());
  for (Point c = 0; c < t.index(); ++c) CHECK(t.trace(0, t.representatives()[c]) == c);
}

TEST_CASE("overflow is a typed error") {
  const Presentation p = support::presentation(kA5);
  CHECK_THROWS_AS(todd_coxeter(p, {}, 20), EnumerationOverflow);
}

TEST_CASE("free group index 2") {
  const Presentation p = support::presentation("gens: a b\nrels:");
  const auto tables = low_index_subgroups(p, {.max_index = 2});
  CHECK(std::count_if(tables.begin(), tables.end(),
                      [](const CosetTable& t) { return t.index() == 2; }) == 3);
  CHECK(tables.front().index() == 1);
}

TEST_CASE("A5 low-index classes") {
  const Presentation p = support::presentation(kA5);
  const auto tables = low_index_subgroups(p, {.max_index = 15});
  CHECK(indices(tables) == std::vector<std::size_t>{1, 5, 6, 10, 12, 15});
  for (const auto& t : tables) {
    CHECK(check_table(t, p, schreier_generators(t)).empty());
    CHECK(t.index() * todd_coxeter(p, schreier_generators(t)).index() > 0);
  }
  CHECK(std::is_sorted(tables.begin(), tables.end(), [](const auto& x, const auto& y) {
    return x.index() < y.index() || (x.index() == y.index() && x < y);
  }));
}

TEST_CASE("subgroup counts agree with brute force") {
  for (const char* text : {kA5, "gens: a b\nrels: a^2 b^3", "gens: a b\nrels:",
                           "gens: a b\nrels: a^2 b^4 (ab)^5 (ab^2)^5"}) {
    const Presentation p = support::presentation(text);
    const auto tables = low_index_subgroups(p, {.max_index = 5});
    for (std::size_t n = 2; n <= 5; ++n) {
      std::size_t total = 0;
      for (const auto& t : tables) {
        if (t.index() == n) total += class_size(t);
      }
      CAPTURE(text);
      CAPTURE(n);
      CHECK(total == subgroups_by_brute_force(p, n));
    }
  }
}

TEST_CASE("classes are pairwise non-conjugate") {
  const Presentation p = support::catalog_grp("A6.grp");
  const auto tables = low_index_subgroups(p, {.max_index = 20});
  for (std::size_t i = 0; i < tables.size(); ++i) {
    for (std::size_t j = i + 1; j < tables.size(); ++j) {
      if (tables[i].index() != tables[j].index()) continue;
      for (Point c = 0; c < tables[j].index(); ++c) CHECK(rebase(tables[j], c) != tables[i]);
    }
  }
}

TEST_CASE("contains restricts to classes meeting the words") {
  const Presentation p = support::catalog_grp("A6.grp");
  const auto all = low_index_subgroups(p, {.max_index = 20});
  std::size_t expected = 0;
  for (const auto& t : all) expected += t.generator_permutations()[0].fixed_point_count() > 0;
  LowIndexOptions opt{.max_index = 20};
  opt.contains.generators.push_back(textio::parse_word("a", p));
  const auto some = low_index_subgroups(p, opt);
  CHECK(some.size() == expected);
  for (const auto& t : some) CHECK(t.act(0, Letter(0)) == 0);
}

TEST_CASE("node budget") {
  const Presentation p = support::presentation("gens: a b\nrels:");
  CHECK_THROWS_AS(low_index_subgroups(p, {.max_index = 6, .node_budget = 100}), BudgetExceeded);
}

TEST_CASE("reenumeration keeps the subgroup") {
  const Presentation p = support::catalog_grp("A6.grp");
  for (const auto& t : low_index_subgroups(p, {.max_index = 15})) {
    const CosetTable h = reenumerate(p, t);
    CHECK(h.index() == t.index());
    CHECK(CosetTable(h.rows()) == t);
    CHECK(check_table(h, p, schreier_generators(t)).empty());
  }
}

TEST_CASE("as_given numbering demands a definition path") {
  std::vector<CosetTable::Row> rows{{1, 1, 0, 0}, {0, 0, 1, 1}};
  CHECK(CosetTable(rows, CosetTable::Numbering::as_given).index() == 2);
  std::vector<CosetTable::Row> split{{0, 0, 0, 0}, {1, 1, 1, 1}};
  CHECK_THROWS_AS(CosetTable{split}, InputError);
}

TEST_CASE("table to permutations") {
  const Presentation p = support::presentation(kA5);
  const auto tables = low_index_subgroups(p, {.max_index = 6});
  const PermutationInput in = table_to_permutations(tables.back());
  CHECK(in.degree == 6);
  CHECK(in.generators[0].order() == 2);
  CHECK(in.generators[1].order() == 3);
}
