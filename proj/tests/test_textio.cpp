#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "gzoo/error.hpp"
#include "gzoo/textio.hpp"
#include "support.hpp"

using namespace gzoo;

namespace {

Letter a{0}, A{1}, b{2}, B{3};

std::size_t lcm_of_cycles(const Permutation& p) {
  std::uint64_t l = 1;
  for (auto c : p.cycle_type()) l = std::lcm(l, std::uint64_t{c});
  return l;
}

}  // namespace

TEST_CASE("presentation relators are expanded") {
  const Presentation p = textio::parse_presentation("gens: a b\nrels: a^2 b^3 (a*b)^5");
  REQUIRE(p.relators.size() == 3);
  CHECK(p.relators[0] == Word{a, a});
  CHECK(p.relators[1] == Word{b, b, b});
  CHECK(p.relators[2] == Word{a, b, a, b, a, b, a, b, a, b});
}

TEST_CASE("empty relator list gives the free group") {
  const Presentation p = textio::parse_presentation("gens: a b\nrels:");
  CHECK(p.relators.empty());
}

TEST_CASE("commutator power") {
  const Presentation p = textio::parse_presentation("gens: a b\nrels: [a,b]^3");
  REQUIRE(p.relators.size() == 1);
  CHECK(p.relators[0].size() == 12);
  CHECK(p.relators[0] == Word{A, B, a, b}.power(3));
}

TEST_CASE("bracket without comma is grouping") {
  const Presentation p = textio::parse_presentation("gens: a b\nrels: [ab^2]^12");
  CHECK(p.relators[0] == Word{a, b, b}.power(12));
}

TEST_CASE("syntax errors carry a position") {
  CHECK_THROWS_AS(textio::parse_presentation("gens: a b\nrels: (ab"), ParseError);
  CHECK_THROWS_AS(textio::parse_presentation("gens: a b\nrels: c^2"), InputError);
  CHECK_THROWS_AS(textio::parse_presentation("gens: a b c\nrels: a"), InputError);
  try {
    textio::parse_presentation("gens: a b\nrels: a^2 (ab");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("words") {
  const Presentation p = textio::parse_presentation("gens: a b\nrels:");
  CHECK(textio::parse_word("a*b^-1", p) == Word{a, B});
  CHECK(textio::parse_word("aA", p).empty());
  const Word w = textio::parse_word("[a,bab]", p);
  CHECK(w.size() == 8);
  CHECK(w == Word{A, B, A, B, a, b, a, b});
  CHECK(textio::parse_word("[a,bab]", p) == Word::commutator(Word{a}, Word{b, a, b}));
}

TEST_CASE("permutation files") {
  const PermutationInput a5 =
      textio::parse_permutations("degree: 10\n(2,3,4)(5,7,8)(6,9,10)\n(1,2)(3,5)(4,6)(7,10)\n");
  REQUIRE(a5.generators.size() == 2);
  CHECK(a5.degree == 10);
  CHECK(a5.generators[0].order() == 3);
  CHECK(a5.generators[1].order() == 2);

  const PermutationInput id = textio::parse_permutations("degree: 5\n()\n");
  CHECK(id.generators[0].is_identity());
  CHECK(id.generators[0].degree() == 5);

  const PermutationInput spaced = textio::parse_permutations("degree: 4\n(1 2)(3 4)\n");
  CHECK(spaced.generators[0] == Permutation::from_cycles(4, {{0, 1}, {2, 3}}));

  const PermutationInput a8 = support::catalog_perm("A8-35.perm");
  CHECK(a8.degree == 35);
  CHECK(lcm_of_cycles(a8.generators[0]) == 6);
  CHECK(lcm_of_cycles(a8.generators[1]) == 3);
}

TEST_CASE("permutation errors") {
  CHECK_THROWS_AS(textio::parse_permutations("degree: 4\n(1,2,1)\n"), InputError);
  CHECK_THROWS_AS(textio::parse_permutations("degree: 4\n(1,5)\n"), InputError);
  CHECK_THROWS_AS(textio::parse_permutations("degree: 4\n"), InputError);
}

TEST_CASE("catalog generators have their order as exponent of the identity") {
  for (const char* name : {"A5-10.perm", "A8-35.perm"}) {
    for (const auto& g : support::catalog_perm(name).generators) {
      CHECK(g.power(static_cast<long>(g.order())).is_identity());
    }
  }
}

TEST_CASE("round trips") {
  for (const char* name : {"A5.grp", "A6.grp", "S4_3.grp", "S6_2.grp", "Hurwitz.grp"}) {
    const GroupFile f = textio::parse_group_file(textio::read_file(support::catalog_path(name)));
    const std::string text = textio::format_presentation(f.presentation);
    CHECK(textio::parse_presentation(text) == f.presentation);
  }
  for (const char* name : {"A5-10.perm", "A8-35.perm"}) {
    const PermutationInput in = support::catalog_perm(name);
    CHECK(textio::parse_permutations(textio::format_permutations(in)) == in);
  }
  const GroupFile with_sub = textio::parse_group_file("gens: a b\nrels: a^2 b^3\nsub: a bab\n");
  REQUIRE(with_sub.subgroup);
  const std::string text = textio::format_presentation(with_sub.presentation, with_sub.subgroup);
  const GroupFile again = textio::parse_group_file(text);
  CHECK(again.presentation == with_sub.presentation);
  CHECK(again.subgroup == with_sub.subgroup);
}

TEST_CASE("free reduction is idempotent and never lengthens") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Letter> raw(rng() % 30);
    for (auto& l : raw) l = Letter(static_cast<std::uint8_t>(rng() % 4));
    const auto once = freely_reduce(raw);
    CHECK(once.size() <= raw.size());
    CHECK(freely_reduce(once) == once);
    for (std::size_t i = 0; i + 1 < once.size(); ++i) CHECK(once[i] != once[i + 1].inverse());
  }
}
