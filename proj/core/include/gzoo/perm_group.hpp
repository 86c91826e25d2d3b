#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "gzoo/permutation.hpp"
#include "gzoo/textio.hpp"

namespace gzoo {

using BigInt = boost::multiprecision::cpp_int;

/// One level of a stabilizer chain: the strong generators fixing all earlier
/// base points, the fundamental orbit of this level's base point and an
/// explicit transversal (u[b] maps the base point to b).
struct ChainLevel {
  Point base_point = 0;
  std::vector<Permutation> generators;
  std::vector<Point> orbit;
  std::vector<std::int32_t> slot;        // point -> index in transversal, or -1
  std::vector<Permutation> transversal;  // base_point^u = point
  std::vector<Permutation> transversal_inverse;
};

/// Permutation group with a base and strong generating set computed by
/// deterministic Schreier-Sims. Immutable after construction.
class PermutationGroup {
 public:
  PermutationGroup() = default;
  /// `base_prefix` is honoured in order; further base points are the
  /// smallest points moved by the residues that need them. When
  /// `known_order` is given, construction stops as soon as the chain
  /// reaches it.
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators,
                   std::vector<Point> base_prefix = {},
                   std::optional<BigInt> known_order = std::nullopt);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<ChainLevel>& levels() const { return levels_; }
  std::vector<Point> base() const;
  const BigInt& order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }

  bool contains(const Permutation& p) const;
  bool is_transitive() const;
  std::vector<Point> orbit(Point x) const;
  /// Orbits sorted by smallest element; each orbit sorted.
  std::vector<std::vector<Point>> orbits() const;

  /// Subgroup fixing the first `depth` base points, sharing this chain.
  PermutationGroup chain_tail(std::size_t depth) const;
  /// g^-1 H g, with the chain conjugated (no recomputation).
  PermutationGroup conjugate(const Permutation& g) const;
  /// Same group, chain rebuilt so the base begins with `prefix`.
  PermutationGroup with_base_prefix(std::vector<Point> prefix) const;
  /// Pointwise stabilizer of the points in `points`.
  PermutationGroup pointwise_stabilizer(const std::vector<Point>& points) const;

  /// Every element, by walking the transversals. Throws BudgetExceeded if
  /// the order is above `limit`.
  std::vector<Permutation> elements(std::uint64_t limit) const;

 private:
  std::pair<Permutation, std::size_t> sift(Permutation h, std::size_t from) const;
  void rebuild_level(std::size_t i);
  void schreier_sims(const std::optional<BigInt>& known_order);
  void compute_order();

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<ChainLevel> levels_;
  BigInt order_ = 1;
};

/// Transversal of the orbit of `x` under `generators`: for each reached
/// point y, a permutation g with x^g = y. Points not in the orbit map to
/// std::nullopt.
std::vector<std::optional<Permutation>> orbit_transversal(
    std::size_t degree, const std::vector<Permutation>& generators, Point x);

PermutationGroup group_from(const PermutationInput& input);

struct RankProfile {
  std::size_t rank = 0;
  std::vector<std::size_t> subdegrees;  // sorted ascending
};

/// Rank and subdegrees from the orbits of the stabilizer of point 1.
/// Throws NotTransitive.
RankProfile rank_profile(const PermutationGroup& g);

/// Pointwise stabilizer of alpha and beta. Throws SamePoint.
PermutationGroup two_point_stabilizer(const PermutationGroup& g, Point alpha,
                                      Point beta);

/// Isomorphism-invariant used in place of an isomorphism test: the order
/// plus the multiset of element orders when the group has at most
/// kFingerprintEnumerationLimit elements, otherwise the order plus the
/// orbit-length partition (flagged `fingerprint_only`).
struct Fingerprint {
  BigInt order;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> element_orders;
  std::vector<std::size_t> orbit_lengths;
  bool fingerprint_only = false;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  friend std::strong_ordering operator<=>(const Fingerprint& x, const Fingerprint& y) {
    if (x.order != y.order) {
      return x.order < y.order ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (auto c = x.element_orders <=> y.element_orders; c != 0) return c;
    if (auto c = x.orbit_lengths <=> y.orbit_lengths; c != 0) return c;
    return x.fingerprint_only <=> y.fingerprint_only;
  }
};

inline constexpr std::uint64_t kFingerprintEnumerationLimit = 20000;

Fingerprint fingerprint(const PermutationGroup& g);

/// Orbits of a transitive group on ordered pairs of distinct points, indexed
/// through the stabilizer of point 0.
class Orbitals {
 public:
  /// Throws NotTransitive.
  explicit Orbitals(const PermutationGroup& g);

  std::size_t suborbit_count() const { return suborbits_.size(); }
  /// Suborbits ordered by smallest point; suborbit 0 is {0}.
  const std::vector<std::vector<Point>>& suborbits() const { return suborbits_; }
  std::size_t suborbit_of(Point x) const { return suborbit_of_[x]; }
  /// Index of the paired suborbit (the orbital of reversed pairs).
  std::size_t paired(std::size_t s) const { return paired_[s]; }
  /// Orbital (as a suborbit index) containing the ordered pair (x, y).
  std::size_t orbital(Point x, Point y) const;
  /// Element of g mapping 0 to x.
  const Permutation& carrier(Point x) const;
  /// Element of g mapping x to 0.
  const Permutation& carrier_inverse(Point x) const;
  /// The group, with a chain whose base starts at 0.
  const PermutationGroup& group() const { return group_; }

 private:
  PermutationGroup group_;
  std::vector<std::vector<Point>> suborbits_;
  std::vector<std::size_t> suborbit_of_;
  std::vector<std::size_t> paired_;
};

/// An orbit of G on unordered pairs of distinct points: one suborbit, or a
/// suborbit merged with its paired suborbit.
struct PairOrbit {
  std::vector<std::size_t> suborbits;  // one or two suborbit indices
  Point representative = 0;            // (0, representative) lies in it
  std::size_t unordered_pairs = 0;
  bool self_paired = true;
};

struct StabilizerClass {
  Fingerprint fingerprint;
  std::vector<PairOrbit> members;
  /// Stabilizer of (0, members[0].representative).
  PermutationGroup stabilizer;
};

/// Two-point stabilizer classes. Classes are sorted by stabilizer order
/// (largest first), then by fingerprint, then by representative.
struct StabilizerClassification {
  std::vector<StabilizerClass> classes;
  Fingerprint point_stabilizer;
  std::size_t rank = 0;

  std::size_t m() const { return classes.size(); }
  /// Distinct fingerprints when the point stabilizer (the stabilizer of the
  /// diagonal pair) is counted alongside the pair classes.
  std::size_t m_with_point_stabilizer() const;
  bool any_fingerprint_only() const;
};

/// Throws NotTransitive; requires degree >= 2.
StabilizerClassification classify_two_point_stabilizers(const PermutationGroup& g);

bool subgroups_equal(const PermutationGroup& g1, const PermutationGroup& g2);

}  // namespace gzoo
