#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gzoo {

using Point = std::uint32_t;

/// Bijection of {0..n-1}. Points are 0-based internally and 1-based in every
/// textual form. Composition is left to right: (p * q)(x) = q(p(x)), so
/// x^(pq) = (x^p)^q as in the usual right-action convention.
class Permutation {
 public:
  Permutation() = default;
  /// Identity on n points.
  explicit Permutation(std::size_t degree);
  /// Throws InputError if `images` is not a bijection of {0..n-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  Point image(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation operator*(const Permutation& rhs) const;
  Permutation power(long k) const;
  /// g^-1 * this * g
  Permutation conjugate_by(const Permutation& g) const;

  /// Cycle decomposition including fixed points, each cycle starting at its
  /// smallest point, cycles ordered by that point.
  std::vector<std::vector<Point>> cycles() const;
  /// Cycle lengths sorted descending (fixed points included).
  std::vector<std::size_t> cycle_type() const;
  std::size_t cycle_count() const;
  std::size_t fixed_point_count() const;
  /// lcm of cycle lengths; fits 64 bits for any degree the library handles.
  std::uint64_t order() const;

  bool commutes_with(const Permutation& other) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// "(1,2,3)(4,5)" with 1-based points; identity prints as "()".
std::string format_cycles(const Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace gzoo
