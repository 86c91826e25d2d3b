#include "gzoo/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "gzoo/error.hpp"

namespace gzoo {
namespace {

std::optional<Point> first_moved_point(const Permutation& p) {
  for (Point x = 0; x < p.degree(); ++x) {
    if (p[x] != x) return x;
  }
  return std::nullopt;
}

bool fixes_all(const Permutation& p, const std::vector<ChainLevel>& levels,
               std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    if (p[levels[i].base_point] != levels[i].base_point) return false;
  }
  return true;
}

}  // namespace

PermutationGroup::PermutationGroup(std::size_t degree,
                                   std::vector<Permutation> generators,
                                   std::vector<Point> base_prefix,
                                   std::optional<BigInt> known_order)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.degree() != degree_) throw InputError("generator degree mismatch");
  }
  std::vector<bool> in_base(degree_, false);
  for (Point b : base_prefix) {
    if (b >= degree_) throw InputError("base point out of range");
    if (in_base[b]) continue;
    in_base[b] = true;
    ChainLevel level;
    level.base_point = b;
    levels_.push_back(std::move(level));
  }
  std::vector<Permutation> strong;
  for (const auto& g : generators_) {
    if (!g.is_identity() && std::find(strong.begin(), strong.end(), g) == strong.end()) {
      strong.push_back(g);
    }
  }
  for (const auto& g : strong) {
    if (fixes_all(g, levels_, levels_.size())) {
      ChainLevel level;
      level.base_point = *first_moved_point(g);
      levels_.push_back(std::move(level));
    }
  }
  for (const auto& g : strong) {
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      if (!fixes_all(g, levels_, i)) break;
      levels_[i].generators.push_back(g);
    }
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) rebuild_level(i);
  schreier_sims(known_order);
}

void PermutationGroup::rebuild_level(std::size_t i) {
  ChainLevel& level = levels_[i];
  level.orbit.assign(1, level.base_point);
  level.slot.assign(degree_, -1);
  level.transversal.assign(1, Permutation(degree_));
  level.transversal_inverse.assign(1, Permutation(degree_));
  level.slot[level.base_point] = 0;
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    const Point x = level.orbit[k];
    for (const auto& s : level.generators) {
      const Point y = s[x];
      if (level.slot[y] >= 0) continue;
      level.slot[y] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(y);
      Permutation u = level.transversal[k] * s;
      level.transversal_inverse.push_back(u.inverse());
      level.transversal.push_back(std::move(u));
    }
  }
}

std::pair<Permutation, std::size_t> PermutationGroup::sift(Permutation h,
                                                           std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const ChainLevel& level = levels_[l];
    const Point beta = h[level.base_point];
    const std::int32_t s = level.slot[beta];
    if (s < 0) return {std::move(h), l};
    if (s > 0) h = h * level.transversal_inverse[static_cast<std::size_t>(s)];
  }
  return {std::move(h), levels_.size()};
}

void PermutationGroup::compute_order() {
  order_ = 1;
  for (const auto& level : levels_) order_ *= level.orbit.size();
}

void PermutationGroup::schreier_sims(const std::optional<BigInt>& known_order) {
  auto complete = [&] {
    compute_order();
    return known_order && order_ == *known_order;
  };
  if (levels_.empty() || complete()) return;

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool extended = false;
    const auto ui = static_cast<std::size_t>(i);
    for (std::size_t k = 0; k < levels_[ui].orbit.size() && !extended; ++k) {
      const Point beta = levels_[ui].orbit[k];
      for (std::size_t s = 0; s < levels_[ui].generators.size(); ++s) {
        const ChainLevel& level = levels_[ui];
        const Permutation& gen = level.generators[s];
        const Point gamma = gen[beta];
        const auto gslot = static_cast<std::size_t>(level.slot[gamma]);
        Permutation h = level.transversal[k] * gen * level.transversal_inverse[gslot];
        if (h.is_identity()) continue;
        auto [residue, j] = sift(std::move(h), ui + 1);
        if (residue.is_identity()) continue;
        if (j == levels_.size()) {
          ChainLevel fresh;
          fresh.base_point = *first_moved_point(residue);
          levels_.push_back(std::move(fresh));
        }
        for (std::size_t l = ui + 1; l <= j; ++l) {
          levels_[l].generators.push_back(residue);
          rebuild_level(l);
        }
        if (complete()) return;
        i = static_cast<std::ptrdiff_t>(j);
        extended = true;
        break;
      }
    }
    if (!extended) --i;
  }
  compute_order();
}

std::vector<Point> PermutationGroup::base() const {
  std::vector<Point> out;
  for (const auto& level : levels_) out.push_back(level.base_point);
  return out;
}

bool PermutationGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  return sift(p, 0).first.is_identity();
}

std::vector<Point> PermutationGroup::orbit(Point x) const {
  std::vector<bool> seen(degree_, false);
  std::vector<Point> out{x};
  seen[x] = true;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& g : generators_) {
      const Point y = g[out[k]];
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Point>> PermutationGroup::orbits() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(degree_, false);
  for (Point x = 0; x < degree_; ++x) {
    if (seen[x]) continue;
    auto o = orbit(x);
    for (Point y : o) seen[y] = true;
    out.push_back(std::move(o));
  }
  return out;
}

bool PermutationGroup::is_transitive() const {
  return degree_ > 0 && orbit(0).size() == degree_;
}

PermutationGroup PermutationGroup::chain_tail(std::size_t depth) const {
  PermutationGroup out;
  out.degree_ = degree_;
  if (depth < levels_.size()) {
    out.generators_ = levels_[depth].generators;
    out.levels_.assign(levels_.begin() + static_cast<std::ptrdiff_t>(depth),
                       levels_.end());
  }
  out.compute_order();
  return out;
}

PermutationGroup PermutationGroup::conjugate(const Permutation& g) const {
  PermutationGroup out;
  out.degree_ = degree_;
  const Permutation g_inv = g.inverse();
  for (const auto& x : generators_) out.generators_.push_back(x.conjugate_by(g));
  for (const auto& level : levels_) {
    ChainLevel c;
    c.base_point = g[level.base_point];
    for (const auto& s : level.generators) c.generators.push_back(s.conjugate_by(g));
    c.slot.assign(degree_, -1);
    for (std::size_t k = 0; k < level.orbit.size(); ++k) {
      c.orbit.push_back(g[level.orbit[k]]);
      c.slot[g[level.orbit[k]]] = static_cast<std::int32_t>(k);
      c.transversal.push_back(level.transversal[k].conjugate_by(g));
      c.transversal_inverse.push_back(level.transversal_inverse[k].conjugate_by(g));
    }
    out.levels_.push_back(std::move(c));
  }
  (void)g_inv;
  out.order_ = order_;
  return out;
}

PermutationGroup PermutationGroup::with_base_prefix(std::vector<Point> prefix) const {
  std::vector<Permutation> strong =
      levels_.empty() ? std::vector<Permutation>{} : levels_[0].generators;
  return PermutationGroup(degree_, std::move(strong), std::move(prefix), order_);
}

PermutationGroup PermutationGroup::pointwise_stabilizer(
    const std::vector<Point>& points) const {
  std::vector<Point> distinct;
  for (Point p : points) {
    if (std::find(distinct.begin(), distinct.end(), p) == distinct.end()) {
      distinct.push_back(p);
    }
  }
  return with_base_prefix(distinct).chain_tail(distinct.size());
}

std::vector<Permutation> PermutationGroup::elements(std::uint64_t limit) const {
  if (order_ > limit) {
    throw BudgetExceeded("group of order " + order_.str() +
                         " is too large to enumerate");
  }
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(order_));
  // g = v_{k-1} ... v_1 v_0 with v_i in the level-i transversal.
  std::vector<Permutation> prefix{Permutation(degree_)};
  std::vector<std::size_t> choice(levels_.size(), 0);
  if (levels_.empty()) {
    out.push_back(Permutation(degree_));
    return out;
  }
  std::ptrdiff_t level = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  prefix.resize(levels_.size() + 1, Permutation(degree_));
  // prefix[i] holds the product of the choices for levels k-1 .. i.
  const std::size_t k = levels_.size();
  prefix[k] = Permutation(degree_);
  while (true) {
    const auto ul = static_cast<std::size_t>(level);
    prefix[ul] = prefix[ul + 1] * levels_[ul].transversal[choice[ul]];
    if (level == 0) {
      out.push_back(prefix[0]);
      // advance
      std::size_t l = 0;
      while (l < k && ++choice[l] == levels_[l].orbit.size()) {
        choice[l] = 0;
        ++l;
      }
      if (l == k) break;
      level = static_cast<std::ptrdiff_t>(l);
    } else {
      --level;
    }
  }
  return out;
}

std::vector<std::optional<Permutation>> orbit_transversal(
    std::size_t degree, const std::vector<Permutation>& generators, Point x) {
  std::vector<std::optional<Permutation>> out(degree);
  out[x] = Permutation(degree);
  std::vector<Point> queue{x};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const Point y = queue[k];
    for (const auto& s : generators) {
      const Point z = s[y];
      if (!out[z]) {
        out[z] = *out[y] * s;
        queue.push_back(z);
      }
    }
  }
  return out;
}

PermutationGroup group_from(const PermutationInput& input) {
  if (input.degree == 0) throw InputError("degree must be positive");
  for (const auto& g : input.generators) {
    if (g.degree() != input.degree) throw InputError("generator degree mismatch");
  }
  return PermutationGroup(input.degree, input.generators);
}

// ---------------------------------------------------------------------------

Orbitals::Orbitals(const PermutationGroup& g) {
  if (!g.is_transitive()) throw NotTransitive("group is not transitive");
  const std::size_t n = g.degree();
  auto base = g.base();
  const PermutationGroup rebased =
      (!base.empty() && base[0] == 0) ? g : g.with_base_prefix({0});
  group_ = rebased;

  std::vector<Permutation> stab_gens;
  if (group_.levels().size() > 1) stab_gens = group_.levels()[1].generators;
  suborbit_of_.assign(n, static_cast<std::size_t>(-1));
  for (Point x = 0; x < n; ++x) {
    if (suborbit_of_[x] != static_cast<std::size_t>(-1)) continue;
    const std::size_t id = suborbits_.size();
    std::vector<Point> orbit{x};
    suborbit_of_[x] = id;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const auto& s : stab_gens) {
        const Point y = s[orbit[k]];
        if (suborbit_of_[y] == static_cast<std::size_t>(-1)) {
          suborbit_of_[y] = id;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    suborbits_.push_back(std::move(orbit));
  }
  paired_.resize(suborbits_.size());
  for (std::size_t s = 0; s < suborbits_.size(); ++s) {
    const Point beta = suborbits_[s][0];
    // (0, beta)^(u^-1) = (u^-1(0), 0) with u: 0 -> beta.
    const Point back = carrier_inverse(beta)[0];
    paired_[s] = suborbit_of_[back];
  }
}

const Permutation& Orbitals::carrier(Point x) const {
  const ChainLevel& level = group_.levels()[0];
  return level.transversal[static_cast<std::size_t>(level.slot[x])];
}

const Permutation& Orbitals::carrier_inverse(Point x) const {
  const ChainLevel& level = group_.levels()[0];
  return level.transversal_inverse[static_cast<std::size_t>(level.slot[x])];
}

std::size_t Orbitals::orbital(Point x, Point y) const {
  return suborbit_of_[carrier_inverse(x)[y]];
}

RankProfile rank_profile(const PermutationGroup& g) {
  Orbitals orb(g);
  RankProfile out;
  out.rank = orb.suborbit_count();
  for (const auto& s : orb.suborbits()) out.subdegrees.push_back(s.size());
  std::sort(out.subdegrees.begin(), out.subdegrees.end());
  return out;
}

PermutationGroup two_point_stabilizer(const PermutationGroup& g, Point alpha,
                                      Point beta) {
  if (alpha == beta) throw SamePoint("two-point stabilizer needs distinct points");
  if (alpha >= g.degree() || beta >= g.degree()) {
    throw InputError("point out of range");
  }
  return g.pointwise_stabilizer({alpha, beta});
}

Fingerprint fingerprint(const PermutationGroup& g) {
  Fingerprint fp;
  fp.order = g.order();
  if (g.order() <= kFingerprintEnumerationLimit) {
    std::map<std::uint64_t, std::uint64_t> hist;
    for (const auto& e : g.elements(kFingerprintEnumerationLimit)) ++hist[e.order()];
    fp.element_orders.assign(hist.begin(), hist.end());
  } else {
    for (const auto& o : g.orbits()) fp.orbit_lengths.push_back(o.size());
    std::sort(fp.orbit_lengths.begin(), fp.orbit_lengths.end());
    fp.fingerprint_only = true;
  }
  return fp;
}

std::size_t StabilizerClassification::m_with_point_stabilizer() const {
  for (const auto& c : classes) {
    if (c.fingerprint == point_stabilizer) return classes.size();
  }
  return classes.size() + 1;
}

bool StabilizerClassification::any_fingerprint_only() const {
  if (point_stabilizer.fingerprint_only) return true;
  return std::any_of(classes.begin(), classes.end(),
                     [](const auto& c) { return c.fingerprint.fingerprint_only; });
}

StabilizerClassification classify_two_point_stabilizers(const PermutationGroup& g) {
  if (g.degree() < 2) throw DomainError("classification needs at least two points");
  Orbitals orb(g);
  const std::size_t n = g.degree();
  const PermutationGroup base0 = g.with_base_prefix({0});
  const PermutationGroup point_stab = base0.chain_tail(1);

  StabilizerClassification out;
  out.rank = orb.suborbit_count();
  out.point_stabilizer = fingerprint(point_stab);

  std::vector<bool> done(orb.suborbit_count(), false);
  std::vector<std::pair<PairOrbit, PermutationGroup>> pair_orbits;
  for (std::size_t s = 1; s < orb.suborbit_count(); ++s) {
    if (done[s]) continue;
    const std::size_t t = orb.paired(s);
    done[s] = done[t] = true;
    PairOrbit po;
    po.representative = orb.suborbits()[s][0];
    po.self_paired = s == t;
    po.suborbits = po.self_paired ? std::vector<std::size_t>{s}
                                  : std::vector<std::size_t>{s, t};
    const std::size_t len = orb.suborbits()[s].size();
    po.unordered_pairs = po.self_paired ? n * len / 2 : n * len;
    PermutationGroup stab = point_stab.pointwise_stabilizer({po.representative});
    pair_orbits.emplace_back(std::move(po), std::move(stab));
  }

  for (auto& [po, stab] : pair_orbits) {
    Fingerprint fp = fingerprint(stab);
    auto it = std::find_if(out.classes.begin(), out.classes.end(),
                           [&](const auto& c) { return c.fingerprint == fp; });
    if (it == out.classes.end()) {
      out.classes.push_back(StabilizerClass{std::move(fp), {std::move(po)}, std::move(stab)});
    } else {
      it->members.push_back(std::move(po));
    }
  }
  std::sort(out.classes.begin(), out.classes.end(), [](const auto& x, const auto& y) {
    if (x.fingerprint.order != y.fingerprint.order) {
      return x.fingerprint.order > y.fingerprint.order;
    }
    if (x.fingerprint != y.fingerprint) return x.fingerprint < y.fingerprint;
    return x.members[0].representative < y.members[0].representative;
  });
  return out;
}

bool subgroups_equal(const PermutationGroup& g1, const PermutationGroup& g2) {
  if (g1.degree() != g2.degree() || g1.order() != g2.order()) return false;
  for (const auto& x : g1.generators()) {
    if (!g2.contains(x)) return false;
  }
  for (const auto& x : g2.generators()) {
    if (!g1.contains(x)) return false;
  }
  return true;
}

}  // namespace gzoo
