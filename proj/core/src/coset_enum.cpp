#include "gzoo/coset_enum.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "gzoo/error.hpp"

namespace gzoo {
namespace {

constexpr std::int32_t kUndefined = -1;
constexpr Point kUnset = std::numeric_limits<Point>::max();

std::vector<std::uint8_t> codes_of(const Word& w) {
  std::vector<std::uint8_t> out;
  out.reserve(w.size());
  for (Letter x : w) out.push_back(static_cast<std::uint8_t>(x.code()));
  return out;
}

// ---------------------------------------------------------------------------
// HLT enumeration

/// Thrown by define() when the table is full; caught by the main loop which
/// runs a lookahead pass and compacts before retrying.
struct TableFull {};

class HltEnumerator {
 public:
  HltEnumerator(const Presentation& p, const SubgroupSpec& h, std::size_t max)
      : max_(max) {
    for (const Word& r : p.relators) {
      if (!r.empty()) relators_.push_back(codes_of(r));
    }
    for (const Word& w : h.generators) {
      if (!w.empty()) subgroup_.push_back(codes_of(w));
    }
  }

  CosetTable run() {
    if (max_ < 1) throw EnumerationOverflow("max_cosets must be at least 1");
    new_coset();
    while (!with_room([&] {
      for (const auto& w : subgroup_) scan_and_fill(0, w);
    })) {
      compact(0);
    }
    std::size_t c = 0;
    while (c < table_.size()) {
      if (live(c)) {
        const bool ok = with_room([&] {
          for (const auto& r : relators_) {
            scan_and_fill(static_cast<std::int32_t>(c), r);
            if (!live(c)) return;
          }
          for (int x = 0; x < Letter::kCount && live(c); ++x) {
            if (table_[c][x] == kUndefined) define(static_cast<std::int32_t>(c), x);
          }
        });
        if (!ok) {
          c = compact(c);
          continue;
        }
      }
      ++c;
    }

    std::vector<CosetTable::Row> rows;
    std::vector<Point> number(table_.size(), kUnset);
    for (std::size_t i = 0; i < table_.size(); ++i) {
      if (live(i)) number[i] = static_cast<Point>(rows.size()), rows.emplace_back();
    }
    for (std::size_t i = 0; i < table_.size(); ++i) {
      if (!live(i)) continue;
      for (int x = 0; x < Letter::kCount; ++x) {
        rows[number[i]][x] = number[static_cast<std::size_t>(rep(table_[i][x]))];
      }
    }
    return CosetTable(std::move(rows), CosetTable::Numbering::as_given);
  }

 private:
  /// Runs `body`; on TableFull performs lookahead and reports false so the
  /// caller can compact and retry the current coset.
  template <class F>
  bool with_room(F&& body) {
    try {
      body();
      return true;
    } catch (const TableFull&) {
      lookahead();
      return false;
    }
  }

  bool live(std::size_t c) const {
    return parent_[c] == static_cast<std::int32_t>(c);
  }

  std::int32_t rep(std::int32_t c) {
    std::int32_t root = c;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[c] != root) {
      const std::int32_t next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  std::int32_t new_coset() {
    if (table_.size() >= max_) throw TableFull{};
    const auto c = static_cast<std::int32_t>(table_.size());
    table_.push_back({kUndefined, kUndefined, kUndefined, kUndefined});
    parent_.push_back(c);
    return c;
  }

  void define(std::int32_t c, int x) {
    const std::int32_t d = new_coset();
    table_[c][x] = d;
    table_[d][x ^ 1] = c;
  }

  void scan_and_fill(std::int32_t c, const std::vector<std::uint8_t>& w) {
    std::int32_t f = c, b = c;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    while (true) {
      while (i <= j && table_[f][w[i]] != kUndefined) f = table_[f][w[i++]];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && table_[b][w[j] ^ 1] != kUndefined) b = table_[b][w[j--] ^ 1];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        table_[f][w[i]] = b;
        table_[b][w[i] ^ 1] = f;
        return;
      }
      define(f, w[i]);
    }
  }

  /// scan_and_fill without definitions.
  void scan(std::int32_t c, const std::vector<std::uint8_t>& w) {
    std::int32_t f = c, b = c;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    while (i <= j && table_[f][w[i]] != kUndefined) f = table_[f][w[i++]];
    if (i > j) {
      if (f != b) coincidence(f, b);
      return;
    }
    while (j >= i && table_[b][w[j] ^ 1] != kUndefined) b = table_[b][w[j--] ^ 1];
    if (j < i) {
      coincidence(f, b);
    } else if (i == j) {
      table_[f][w[i]] = b;
      table_[b][w[i] ^ 1] = f;
    }
  }

  void lookahead() {
    for (std::size_t c = 0; c < table_.size(); ++c) {
      for (const auto& r : relators_) {
        if (!live(c)) break;
        scan(static_cast<std::int32_t>(c), r);
      }
    }
  }

  void merge(std::int32_t k, std::int32_t l) {
    const std::int32_t phi = rep(k), psi = rep(l);
    if (phi == psi) return;
    const std::int32_t mu = std::min(phi, psi), nu = std::max(phi, psi);
    parent_[nu] = mu;
    queue_.push_back(nu);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      const std::int32_t gamma = queue_[i];
      for (int x = 0; x < Letter::kCount; ++x) {
        const std::int32_t delta = table_[gamma][x];
        if (delta == kUndefined) continue;
        table_[delta][x ^ 1] = kUndefined;
        const std::int32_t mu = rep(gamma), nu = rep(delta);
        if (table_[mu][x] != kUndefined) {
          merge(nu, table_[mu][x]);
        } else if (table_[nu][x ^ 1] != kUndefined) {
          merge(mu, table_[nu][x ^ 1]);
        } else {
          table_[mu][x] = nu;
          table_[nu][x ^ 1] = mu;
        }
      }
    }
  }

  /// Drops dead rows, preserving order. Returns the new position of the
  /// first live coset at or after `cursor`. Throws if no room was freed.
  std::size_t compact(std::size_t cursor) {
    std::vector<std::int32_t> number(table_.size(), kUndefined);
    std::size_t live_count = 0;
    std::size_t new_cursor = 0;
    for (std::size_t i = 0; i < table_.size(); ++i) {
      if (i == cursor) new_cursor = live_count;
      if (live(i)) number[i] = static_cast<std::int32_t>(live_count++);
    }
    if (cursor >= table_.size()) new_cursor = live_count;
    if (live_count >= max_) {
      throw EnumerationOverflow("coset enumeration exceeded " +
                                std::to_string(max_) + " cosets");
    }
    std::vector<std::array<std::int32_t, Letter::kCount>> next;
    next.reserve(live_count);
    for (std::size_t i = 0; i < table_.size(); ++i) {
      if (!live(i)) continue;
      auto row = table_[i];
      for (auto& e : row) {
        if (e != kUndefined) e = number[static_cast<std::size_t>(rep(e))];
      }
      next.push_back(row);
    }
    table_ = std::move(next);
    parent_.resize(table_.size());
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      parent_[i] = static_cast<std::int32_t>(i);
    }
    return new_cursor;
  }

  std::size_t max_;
  std::vector<std::vector<std::uint8_t>> relators_;
  std::vector<std::vector<std::uint8_t>> subgroup_;
  std::vector<std::array<std::int32_t, Letter::kCount>> table_;
  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> queue_;
};

// ---------------------------------------------------------------------------
// Low-index search

class LowIndexSearch {
 public:
  LowIndexSearch(const Presentation& p, const LowIndexOptions& options)
      : max_index_(static_cast<std::int32_t>(options.max_index)),
        budget_(options.node_budget),
        table_(static_cast<std::size_t>(options.max_index) * Letter::kCount,
               kUndefined),
        stamp_of_(options.max_index, 0),
        number_(options.max_index, 0),
        order_(options.max_index, 0) {
    // Cyclic conjugates of every relator and its inverse, grouped by first
    // letter, so a new entry c^x only needs the words starting with x.
    std::set<std::vector<std::uint8_t>> seen;
    for (const Word& r : p.relators) {
      for (const Word& w : {r, r.inverse()}) {
        auto codes = codes_of(w);
        for (std::size_t s = 0; s < codes.size(); ++s) {
          std::vector<std::uint8_t> rotated(codes.begin() + static_cast<std::ptrdiff_t>(s),
                                            codes.end());
          rotated.insert(rotated.end(), codes.begin(),
                         codes.begin() + static_cast<std::ptrdiff_t>(s));
          if (seen.insert(rotated).second) by_first_[rotated.front()].push_back(rotated);
        }
      }
    }
    for (const Word& w : options.contains.generators) {
      if (!w.empty()) contained_.push_back(codes_of(w));
    }
  }

  std::vector<CosetTable> run() {
    if (max_index_ < 1) throw InputError("max_index must be at least 1");
    cosets_ = 1;
    if (deduce()) search(0);
    std::sort(results_.begin(), results_.end(),
              [](const CosetTable& x, const CosetTable& y) {
                if (x.index() != y.index()) return x.index() < y.index();
                return x < y;
              });
    return std::move(results_);
  }

 private:
  std::int32_t& cell(std::int32_t c, int x) {
    return table_[static_cast<std::size_t>(c) * Letter::kCount + static_cast<std::size_t>(x)];
  }

  void assign(std::int32_t c, int x, std::int32_t d) {
    cell(c, x) = d;
    cell(d, x ^ 1) = c;
    trail_.push_back(c * Letter::kCount + x);
    trail_.push_back(d * Letter::kCount + (x ^ 1));
    pending_.emplace_back(c, x);
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      table_[static_cast<std::size_t>(trail_.back())] = kUndefined;
      trail_.pop_back();
    }
    pending_.clear();
  }

  /// Felsch-style scan of a relator conjugate from c. Returns false on a
  /// contradiction; fills a single-gap scan as a deduction.
  bool scan(std::int32_t c, const std::vector<std::uint8_t>& w) {
    std::int32_t f = c, b = c;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    while (i <= j && cell(f, w[i]) != kUndefined) f = cell(f, w[i++]);
    if (i > j) return f == b;
    while (j >= i && cell(b, w[j] ^ 1) != kUndefined) b = cell(b, w[j--] ^ 1);
    if (j < i) return f == b;
    if (i == j) assign(f, w[i], b);
    return true;
  }

  bool deduce() {
    do {
      while (!pending_.empty()) {
        const auto [c, x] = pending_.back();
        pending_.pop_back();
        for (const auto& w : by_first_[x]) {
          if (!scan(c, w)) return false;
        }
      }
      for (const auto& w : contained_) {
        if (!scan(0, w)) return false;
      }
    } while (!pending_.empty());
    return true;
  }

  /// Every contained word is fully traced from alpha and returns to it.
  bool fixes_contained(std::int32_t alpha) {
    for (const auto& w : contained_) {
      std::int32_t c = alpha;
      for (auto x : w) {
        c = cell(c, x);
        if (c == kUndefined) return false;
      }
      if (c != alpha) return false;
    }
    return true;
  }

  /// True unless renumbering the partial table from some other base coset
  /// yields a lexicographically smaller standard table.
  bool canonical() {
    for (std::int32_t alpha = 1; alpha < cosets_; ++alpha) {
      if (!contained_.empty() && !fixes_contained(alpha)) continue;
      ++stamp_;
      stamp_of_[static_cast<std::size_t>(alpha)] = stamp_;
      number_[static_cast<std::size_t>(alpha)] = 0;
      order_[0] = alpha;
      std::int32_t next = 1;
      bool decided = false;
      for (std::int32_t nu = 0; nu < next && !decided; ++nu) {
        const std::int32_t old = order_[static_cast<std::size_t>(nu)];
        for (int x = 0; x < Letter::kCount; ++x) {
          const std::int32_t target = cell(old, x);
          const std::int32_t original = cell(nu, x);
          if (target == kUndefined || original == kUndefined) {
            decided = true;
            break;
          }
          const auto t = static_cast<std::size_t>(target);
          if (stamp_of_[t] != stamp_) {
            stamp_of_[t] = stamp_;
            number_[t] = next;
            order_[static_cast<std::size_t>(next++)] = target;
          }
          const std::int32_t renumbered = number_[t];
          if (renumbered < original) return false;
          if (renumbered > original) {
            decided = true;
            break;
          }
        }
      }
    }
    return true;
  }

  void emit() {
    std::vector<CosetTable::Row> rows(static_cast<std::size_t>(cosets_));
    for (std::int32_t c = 0; c < cosets_; ++c) {
      for (int x = 0; x < Letter::kCount; ++x) {
        rows[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)] =
            static_cast<Point>(cell(c, x));
      }
    }
    results_.emplace_back(std::move(rows));
  }

  void search(std::size_t from) {
    if (++nodes_ > budget_) {
      throw BudgetExceeded("low-index search exceeded " + std::to_string(budget_) +
                           " nodes");
    }
    const std::size_t used = static_cast<std::size_t>(cosets_) * Letter::kCount;
    std::size_t pos = from;
    while (pos < used && table_[pos] != kUndefined) ++pos;
    if (pos == used) {
      emit();
      return;
    }
    const auto c = static_cast<std::int32_t>(pos / Letter::kCount);
    const int x = static_cast<int>(pos % Letter::kCount);

    auto attempt = [&](std::int32_t d) {
      const std::size_t mark = trail_.size();
      assign(c, x, d);
      if (deduce() && canonical()) search(pos + 1);
      undo(mark);
    };

    for (std::int32_t d = 0; d < cosets_; ++d) {
      if (cell(d, x ^ 1) == kUndefined) attempt(d);
    }
    if (cosets_ < max_index_) {
      ++cosets_;
      attempt(cosets_ - 1);
      --cosets_;
    }
  }

  std::int32_t max_index_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::int32_t cosets_ = 0;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> trail_;
  std::vector<std::pair<std::int32_t, int>> pending_;
  std::array<std::vector<std::vector<std::uint8_t>>, Letter::kCount> by_first_;
  std::vector<std::vector<std::uint8_t>> contained_;
  std::uint64_t stamp_ = 0;
  std::vector<std::uint64_t> stamp_of_;
  std::vector<std::int32_t> number_;
  std::vector<std::int32_t> order_;
  std::vector<CosetTable> results_;
};

}  // namespace

CosetTable::CosetTable(std::vector<Row> action, Numbering numbering) {
  const std::size_t n = action.size();
  if (n == 0) throw InputError("coset table has no rows");
  for (int x = 0; x < Letter::kCount; ++x) {
    for (std::size_t c = 0; c < n; ++c) {
      const Point d = action[c][static_cast<std::size_t>(x)];
      if (d >= n || action[d][static_cast<std::size_t>(x ^ 1)] != c) {
        throw InputError("coset table columns are not mutually inverse bijections");
      }
    }
  }
  if (numbering == Numbering::as_given) {
    representatives_.assign(n, Word{});
    std::vector<bool> reached(n, false);
    reached[0] = true;
    for (std::size_t c = 0; c < n; ++c) {
      if (!reached[c]) throw InputError("coset " + std::to_string(c + 1) +
                                        " has no entry from a smaller coset");
      for (int x = 0; x < Letter::kCount; ++x) {
        const Point d = action[c][static_cast<std::size_t>(x)];
        if (d > c && !reached[d]) {
          reached[d] = true;
          representatives_[d] =
              representatives_[c] * Word{Letter(static_cast<std::uint8_t>(x))};
        }
      }
    }
    action_ = std::move(action);
    return;
  }
  std::vector<Point> number(n, kUnset);
  std::vector<Point> order{0};
  number[0] = 0;
  representatives_.assign(1, Word{});
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (int x = 0; x < Letter::kCount; ++x) {
      const Point y = action[order[k]][static_cast<std::size_t>(x)];
      if (number[y] == kUnset) {
        number[y] = static_cast<Point>(order.size());
        order.push_back(y);
        representatives_.push_back(representatives_[k] *
                                   Word{Letter(static_cast<std::uint8_t>(x))});
      }
    }
  }
  if (order.size() != n) throw InputError("coset table action is not transitive");
  action_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (int x = 0; x < Letter::kCount; ++x) {
      action_[k][static_cast<std::size_t>(x)] =
          number[action[order[k]][static_cast<std::size_t>(x)]];
    }
  }
}

Point CosetTable::trace(Point coset, const Word& w) const {
  for (Letter x : w) coset = act(coset, x);
  return coset;
}

std::array<Permutation, 2> CosetTable::generator_permutations() const {
  std::array<Permutation, 2> out;
  for (int g = 0; g < 2; ++g) {
    std::vector<Point> images(index());
    for (std::size_t c = 0; c < index(); ++c) {
      images[c] = action_[c][static_cast<std::size_t>(2 * g)];
    }
    out[static_cast<std::size_t>(g)] = Permutation(std::move(images));
  }
  return out;
}

CosetTable todd_coxeter(const Presentation& p, const SubgroupSpec& h,
                        std::size_t max_cosets) {
  return HltEnumerator(p, h, max_cosets).run();
}

SubgroupSpec schreier_generators(const CosetTable& t) {
  SubgroupSpec h;
  for (Point c = 0; c < t.index(); ++c) {
    for (std::uint8_t x = 0; x < Letter::kCount; x += 2) {
      const Letter l(x);
      const Point d = t.act(c, l);
      Word w = t.representatives()[c] * Word{l} * t.representatives()[d].inverse();
      if (!w.empty() && std::find(h.generators.begin(), h.generators.end(), w) ==
                            h.generators.end()) {
        h.generators.push_back(std::move(w));
      }
    }
  }
  return h;
}

CosetTable reenumerate(const Presentation& p, const CosetTable& t, std::size_t max_cosets) {
  return todd_coxeter(p, schreier_generators(t), max_cosets);
}

PermutationInput table_to_permutations(const CosetTable& t) {
  auto gens = t.generator_permutations();
  return PermutationInput{t.index(), {gens[0], gens[1]}};
}

std::vector<CosetTable> low_index_subgroups(const Presentation& p,
                                            const LowIndexOptions& options) {
  return LowIndexSearch(p, options).run();
}

std::string check_table(const CosetTable& t, const Presentation& p,
                        const SubgroupSpec& h) {
  const std::size_t n = t.index();
  for (std::size_t c = 0; c < n; ++c) {
    for (int x = 0; x < Letter::kCount; ++x) {
      const Letter l(static_cast<std::uint8_t>(x));
      if (t.act(t.act(static_cast<Point>(c), l), l.inverse()) != c) {
        return "columns not inverse at coset " + std::to_string(c + 1);
      }
    }
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
      if (t.trace(static_cast<Point>(c), p.relators[r]) != c) {
        return "relator " + std::to_string(r + 1) + " does not close at coset " +
               std::to_string(c + 1);
      }
    }
  }
  for (const Word& w : h.generators) {
    if (t.trace(0, w) != 0) return "subgroup generator does not fix coset 1";
  }
  if (t.representatives().size() != n) return "representative count mismatch";
  if (!t.representatives()[0].empty()) return "representative of coset 1 not empty";
  for (std::size_t c = 0; c < n; ++c) {
    if (t.trace(0, t.representatives()[c]) != c) {
      return "representative of coset " + std::to_string(c + 1) + " is wrong";
    }
  }
  return {};
}

}  // namespace gzoo
