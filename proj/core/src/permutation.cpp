#include "gzoo/permutation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "gzoo/error.hpp"

namespace gzoo {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point y : images_) {
    if (y >= images_.size() || seen[y]) {
      throw InputError("image list is not a bijection");
    }
    seen[y] = true;
  }
}

Permutation Permutation::from_cycles(
    std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Point x = cycle[i];
      if (x >= degree) {
        throw InputError("point " + std::to_string(x + 1) +
                         " out of range 1.." + std::to_string(degree));
      }
      if (used[x]) {
        throw InputError("point " + std::to_string(x + 1) +
                         " repeated within one permutation");
      }
      used[x] = true;
      p.images_[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv.images_[images_[i]] = static_cast<Point>(i);
  }
  return inv;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out.images_[i] = rhs.images_[images_[i]];
  }
  return out;
}

Permutation Permutation::power(long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k)
                          : static_cast<unsigned long>(k);
  Permutation result(degree());
  while (e != 0) {
    if (e & 1UL) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Permutation Permutation::conjugate_by(const Permutation& g) const {
  // x^(g^-1 p g): relabel every cycle of p through g.
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out.images_[g.images_[i]] = g.images_[images_[i]];
  }
  return out;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Point> cycle;
    Point x = static_cast<Point>(start);
    while (!seen[x]) {
      seen[x] = true;
      cycle.push_back(x);
      x = images_[x];
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  for (const auto& c : cycles()) lengths.push_back(c.size());
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::size_t Permutation::cycle_count() const { return cycles().size(); }

std::size_t Permutation::fixed_point_count() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] == i) ++count;
  }
  return count;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (const auto& c : cycles()) {
    result = std::lcm(result, static_cast<std::uint64_t>(c.size()));
  }
  return result;
}

bool Permutation::commutes_with(const Permutation& other) const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (other.images_[images_[i]] != images_[other.images_[i]]) return false;
  }
  return true;
}

std::string format_cycles(const Permutation& p) {
  std::string out;
  for (const auto& c : p.cycles()) {
    if (c.size() < 2) continue;
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(c[i] + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace gzoo
