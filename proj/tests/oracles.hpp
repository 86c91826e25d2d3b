// Brute-force reference computations. Independent of the library algorithms;
// they only share the Permutation value type and the geometry containers.
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gzoo/geometry.hpp"
#include "gzoo/permutation.hpp"
#include "gzoo/textio.hpp"

namespace oracle {

using gzoo::Permutation;
using gzoo::Point;
using Images = std::vector<Point>;

/// Every element of <gens>, by breadth-first closure. Throws past `limit`.
std::vector<Images> closure(const std::vector<Permutation>& gens, std::size_t limit = 200000);

/// Orbits of <gens> on ordered pairs (x, y).
std::size_t rank_by_pair_orbits(const std::vector<Permutation>& gens);

/// Orbit lengths of the stabilizer of point 0, from the element list.
std::vector<std::size_t> subdegrees(const std::vector<Images>& elements);

/// Elements fixing both points.
std::set<Images> two_point_stabilizer(const std::vector<Images>& elements, Point x, Point y);

/// Sorted multiset of element orders of a set of permutations.
std::map<std::size_t, std::size_t> order_histogram(const std::set<Images>& group);

/// Lines obtained by grouping the pairs whose stabilizer (as an element set)
/// coincides: every pair in `pairs` keyed by its stabilizer, each key's
/// point union becomes a line.
std::vector<std::vector<Point>> group_pairs_by_stabilizer(
    const std::vector<Images>& elements, const std::vector<std::pair<Point, Point>>& pairs);

/// Maximal cliques by exhaustive subset growth; for graphs up to ~40 points
/// with small cliques.
std::vector<std::vector<Point>> maximal_cliques(const gzoo::Graph& g);

/// Adjacency-matrix srg test.
struct SrgCounts {
  bool regular = false;
  bool strongly_regular = false;
  std::size_t n = 0, k = 0, lambda = 0, mu = 0;
};
SrgCounts srg_counts(const gzoo::Graph& g);

/// Cycle count of a permutation by marking.
std::size_t cycle_count(const Permutation& p);

/// Closure of a family under x (+) y = NOT(x XOR y), by repeated passes.
std::set<std::vector<bool>> veldkamp_closure(const std::vector<std::vector<bool>>& basics);

/// Hermitian unital-complement geometry of U3(4): the 208 non-isotropic
/// points of PG(2,16) and the 416 orthonormal-basis triples.
gzoo::IncidenceGeometry u34_orthogonal_bases();

}  // namespace oracle
