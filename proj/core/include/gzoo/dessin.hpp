#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gzoo/textio.hpp"

namespace gzoo {

/// Bicolored map of a two-generator permutation representation: black
/// vertices are cycles of the first generator, white vertices cycles of the
/// second, faces cycles of their product.
struct DessinSignature {
  std::size_t black = 0;
  std::size_t white = 0;
  std::size_t faces = 0;
  std::size_t genus = 0;
  std::size_t edges = 0;

  friend bool operator==(const DessinSignature&, const DessinSignature&) = default;
};

/// Cycle types of the first generator, the second and their product, each
/// sorted descending.
struct Passport {
  std::vector<std::size_t> black;
  std::vector<std::size_t> white;
  std::vector<std::size_t> faces;

  friend bool operator==(const Passport&, const Passport&) = default;
};

struct ModularInvariants {
  std::size_t n = 0;
  std::size_t genus = 0;
  std::size_t nu2 = 0;
  std::size_t nu3 = 0;
  std::size_t cusps = 0;
  std::size_t fractions = 0;

  friend bool operator==(const ModularInvariants&, const ModularInvariants&) = default;
};

/// Throws InputError unless there are exactly two generators, OddEuler if
/// B + W + F - n is odd or exceeds 2.
DessinSignature signature(const PermutationInput& input);
Passport passport(const PermutationInput& input);
/// The involution plays a and the order-3 generator plays b, whichever
/// order they are listed in. Black points B of the polygon are the cycles of
/// b, so f = B + 1 - nu3. Throws NotModularQuotient unless a^2 = b^3 = 1.
ModularInvariants modular_invariants(const PermutationInput& input);

/// "6^4 3^3 1^2"
std::string format_partition(const std::vector<std::size_t>& parts);
/// "[6^4 3^3 1^2, 3^10 1^5, 7^5]"
std::string format_passport(const Passport& p);

}  // namespace gzoo
