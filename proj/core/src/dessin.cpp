#include "gzoo/dessin.hpp"

#include "gzoo/error.hpp"

namespace gzoo {
namespace {

void require_pair(const PermutationInput& input) {
  if (input.generators.size() != 2) {
    throw InputError("a dessin needs exactly two generators, got " +
                     std::to_string(input.generators.size()));
  }
}

}  // namespace

DessinSignature signature(const PermutationInput& input) {
  require_pair(input);
  const Permutation& x = input.generators[0];
  const Permutation& y = input.generators[1];
  DessinSignature s;
  s.edges = input.degree;
  s.black = x.cycle_count();
  s.white = y.cycle_count();
  s.faces = (x * y).cycle_count();
  const auto chi = static_cast<long long>(s.black + s.white + s.faces) -
                   static_cast<long long>(s.edges);
  if (chi % 2 != 0 || chi > 2) {
    throw OddEuler("Euler characteristic " + std::to_string(chi) +
                   " is not of the form 2 - 2g");
  }
  s.genus = static_cast<std::size_t>((2 - chi) / 2);
  return s;
}

Passport passport(const PermutationInput& input) {
  require_pair(input);
  const Permutation& x = input.generators[0];
  const Permutation& y = input.generators[1];
  return Passport{x.cycle_type(), y.cycle_type(), (x * y).cycle_type()};
}

ModularInvariants modular_invariants(const PermutationInput& input) {
  require_pair(input);
  auto satisfies = [](const Permutation& two, const Permutation& three) {
    return two.power(2).is_identity() && three.power(3).is_identity();
  };
  std::size_t involution = 0;
  if (!satisfies(input.generators[0], input.generators[1])) {
    if (!satisfies(input.generators[1], input.generators[0])) {
      throw NotModularQuotient("no generator pair satisfies a^2 = b^3 = 1");
    }
    involution = 1;
  }
  const Permutation& x = input.generators[involution];
  const Permutation& y = input.generators[1 - involution];
  const DessinSignature s = signature(input);
  ModularInvariants m;
  m.n = input.degree;
  m.genus = s.genus;
  m.nu2 = x.fixed_point_count();
  m.nu3 = y.fixed_point_count();
  m.cusps = s.faces;
  m.fractions = y.cycle_count() + 1 - m.nu3;
  return m;
}

std::string format_partition(const std::vector<std::size_t>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (!out.empty()) out += ' ';
    out += std::to_string(parts[i]) + '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string format_passport(const Passport& p) {
  return "[" + format_partition(p.black) + ", " + format_partition(p.white) + ", " +
         format_partition(p.faces) + "]";
}

}  // namespace gzoo
