#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gzoo/permutation.hpp"
#include "gzoo/word.hpp"

namespace gzoo {

/// Two-generator finite presentation <a, b | relators>.
struct Presentation {
  std::array<char, 2> generator_names{'a', 'b'};
  std::vector<Word> relators;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Generators of a subgroup H of the group defined by a Presentation.
struct SubgroupSpec {
  std::vector<Word> generators;

  friend bool operator==(const SubgroupSpec&, const SubgroupSpec&) = default;
};

/// Contents of a `.grp` file: the presentation plus an optional `sub:` block.
struct GroupFile {
  Presentation presentation;
  std::optional<SubgroupSpec> subgroup;
};

/// A raw permutation representation as read from a `.perm` file.
struct PermutationInput {
  std::size_t degree = 0;
  std::vector<Permutation> generators;

  friend bool operator==(const PermutationInput&,
                         const PermutationInput&) = default;
};

namespace textio {

/// `.grp` grammar, line oriented:
///
///     # comment
///     gens: a b
///     rels: a^2 b^3 (a*b)^5
///     sub:  a b*a*B
///
/// Tokens at bracket depth 0 are separated by whitespace. Inside a token:
/// a declared letter (uppercase = inverse), `1` for the identity, `x^k` with
/// k a signed integer, `(..)` grouping, `[x,y]` = x^-1 y^-1 x y and `[x]` as
/// plain grouping. `*` between factors is optional. A line without a header
/// continues the previous section.
GroupFile parse_group_file(std::string_view text);
Presentation parse_presentation(std::string_view text);

/// Reads a subgroup generator list, with or without a `sub:` header.
SubgroupSpec parse_subgroup(std::string_view text, const Presentation& p);

/// Parses a single word (whitespace ignored).
Word parse_word(std::string_view text, const Presentation& p);

/// `.perm` grammar: `degree: n`, then one generator per line in cycle
/// notation; points may be comma or space separated; `()` is the identity.
PermutationInput parse_permutations(std::string_view text);

std::string format_word(const Word& w, const Presentation& p);
std::string format_presentation(const Presentation& p,
                                const std::optional<SubgroupSpec>& sub = {});
std::string format_subgroup(const SubgroupSpec& s, const Presentation& p);
std::string format_permutations(const PermutationInput& input);

std::string read_file(const std::string& path);

}  // namespace textio
}  // namespace gzoo
