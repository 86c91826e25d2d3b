#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gzoo/textio.hpp"

namespace gzoo {

/// Closed coset table of a subgroup H of finite index n in a two-generator
/// finitely presented group. Cosets are 0-based (coset 0 is H itself) and
/// the table is in standard form: cosets are numbered in the order a
/// row-major scan (rows ascending, columns a, a^-1, b, b^-1) first reaches
/// them. representatives()[i] is the word along that scan tree, so it is a
/// shortest word carrying coset 0 to coset i.
class CosetTable {
 public:
  using Row = std::array<Point, Letter::kCount>;

  /// standard: renumber by the row-major scan described above.
  /// as_given: keep the numbering; the representative of coset d > 0 is
  /// rep(c)x for the first entry (c, x), c < d, in row-major order with
  /// c^x = d. This is the definition path of an HLT enumeration.
  enum class Numbering { standard, as_given };

  CosetTable() = default;
  /// Takes a complete action table, renumbers it and derives
  /// representatives. Throws InputError if a column is not a bijection, the
  /// action is not transitive, or (as_given) some coset d > 0 has no entry
  /// from a smaller coset.
  explicit CosetTable(std::vector<Row> action, Numbering numbering = Numbering::standard);

  std::size_t index() const { return action_.size(); }
  Point act(Point coset, Letter x) const { return action_[coset][x.code()]; }
  Point trace(Point coset, const Word& w) const;
  const std::vector<Row>& rows() const { return action_; }
  const std::vector<Word>& representatives() const { return representatives_; }

  /// The two generator columns as permutations of the cosets.
  std::array<Permutation, 2> generator_permutations() const;

  friend bool operator==(const CosetTable&, const CosetTable&) = default;
  /// Lexicographic on the row table; used for deterministic output order.
  friend auto operator<=>(const CosetTable& x, const CosetTable& y) {
    return x.action_ <=> y.action_;
  }

 private:
  std::vector<Row> action_;
  std::vector<Word> representatives_;
};

/// Default number of coset-table rows (live + dead) before overflow.
inline constexpr std::size_t kDefaultMaxCosets = 2'000'000;
inline constexpr std::uint64_t kDefaultLowIndexNodeBudget = 200'000'000;

/// HLT coset enumeration with a full lookahead pass on overflow. Surviving
/// cosets keep their order of definition (Numbering::as_given). Throws
/// EnumerationOverflow when the table cannot be closed within max_cosets rows.
CosetTable todd_coxeter(const Presentation& p, const SubgroupSpec& h,
                        std::size_t max_cosets = kDefaultMaxCosets);

/// Schreier generators of the subgroup fixing coset 0: rep(c) x rep(c^x)^-1
/// for every non-tree entry, identities dropped.
SubgroupSpec schreier_generators(const CosetTable& t);

/// The same subgroup enumerated again by todd_coxeter from its Schreier
/// generators, so the table carries HLT definition-order representatives.
CosetTable reenumerate(const Presentation& p, const CosetTable& t,
                       std::size_t max_cosets = kDefaultMaxCosets);

PermutationInput table_to_permutations(const CosetTable& t);

struct LowIndexOptions {
  std::size_t max_index = 1;
  std::uint64_t node_budget = kDefaultLowIndexNodeBudget;
  /// Restrict to subgroups having a conjugate that contains these words.
  SubgroupSpec contains;
};

/// One standardized coset table per conjugacy class of subgroups of index
/// at most max_index, sorted by index and then lexicographically. With
/// `contains`, one table per class of subgroups with a conjugate containing
/// the words, coset 0 fixed by every word. Throws BudgetExceeded when the
/// search visits more than node_budget nodes.
std::vector<CosetTable> low_index_subgroups(const Presentation& p,
                                            const LowIndexOptions& options);

/// Checks every structural invariant of a closed table against the
/// presentation and subgroup: inverse columns, relator closure at every
/// coset, subgroup generators fixing coset 0, representatives. Returns an
/// empty string when valid, otherwise a description of the first failure.
std::string check_table(const CosetTable& t, const Presentation& p,
                        const SubgroupSpec& h);

}  // namespace gzoo
