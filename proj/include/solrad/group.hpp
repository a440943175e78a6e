#pragma once

// Permutation groups backed by a deterministic Schreier-Sims stabilizer
// chain, plus the subgroup plumbing (joins, normality, normal closures) the
// rest of the library builds on.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <random>
#include <unordered_set>
#include <utility>
#include <vector>

#include "solrad/error.hpp"
#include "solrad/perm.hpp"

namespace solrad {

/// Upper bound on group orders for which element lists are materialized.
inline constexpr std::uint64_t kEnumerationBound = 200000;

namespace detail {

/// One level of a stabilizer chain. `reps[rep_index[x]]` maps `base` to `x`.
struct ChainLevel {
  point_t base = 0;
  std::vector<Permutation> gens;
  std::vector<std::int32_t> rep_index;
  std::vector<Permutation> reps;
  std::vector<Permutation> reps_inv;
  std::vector<point_t> orbit;
};

/// Incremental (Knuth-style) Schreier-Sims. Each new level takes as base
/// the smallest point moved by the first generator that reaches it, so the
/// chain is a deterministic function of the generator sequence.
class Chain {
 public:
  explicit Chain(std::size_t degree) : degree_(degree) {}

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<ChainLevel>& levels() const noexcept { return levels_; }

  /// Strips `g` through the chain starting at `level`. Returns the residue
  /// and the level at which stripping stopped (levels().size() on success
  /// through every level).
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t level = 0) const {
    for (std::size_t k = level; k < levels_.size(); ++k) {
      const auto& lv = levels_[k];
      std::int32_t idx = lv.rep_index[g[lv.base]];
      if (idx < 0) return {std::move(g), k};
      g = g * lv.reps_inv[static_cast<std::size_t>(idx)];
    }
    return {std::move(g), levels_.size()};
  }

  bool contains_from(const Permutation& g, std::size_t level) const {
    auto [residue, stop] = strip(g, level);
    return stop == levels_.size() && residue.is_identity();
  }

  void extend(std::size_t level, const Permutation& g) {
    if (contains_from(g, level)) return;
    if (level == levels_.size()) {
      ChainLevel lv;
      lv.base = *g.smallest_moved_point();
      lv.rep_index.assign(degree_, -1);
      lv.rep_index[lv.base] = 0;
      lv.reps.emplace_back(degree_);
      lv.reps_inv.emplace_back(degree_);
      lv.orbit.push_back(lv.base);
      levels_.push_back(std::move(lv));
    }
    levels_[level].gens.push_back(g);
    // Existing orbit points only need the new generator; points discovered
    // during the update are closed under every generator by update().
    const std::vector<point_t> snapshot = levels_[level].orbit;
    for (point_t x : snapshot) {
      const auto& lv = levels_[level];
      update(level, lv.reps[static_cast<std::size_t>(lv.rep_index[x])] * g);
    }
  }

 private:
  void update(std::size_t level, const Permutation& h) {
    auto& lv = levels_[level];
    point_t y = h[lv.base];
    std::int32_t idx = lv.rep_index[y];
    if (idx >= 0) {
      Permutation schreier = h * lv.reps_inv[static_cast<std::size_t>(idx)];
      if (!schreier.is_identity()) extend(level + 1, schreier);
      return;
    }
    lv.rep_index[y] = static_cast<std::int32_t>(lv.reps.size());
    lv.reps.push_back(h);
    lv.reps_inv.push_back(h.inverse());
    lv.orbit.push_back(y);
    // Index-based loop: recursive calls may append to gens of deeper levels only.
    for (std::size_t s = 0; s < levels_[level].gens.size(); ++s) {
      Permutation next = h * levels_[level].gens[s];
      update(level, next);
    }
  }

  std::size_t degree_;
  std::vector<ChainLevel> levels_;
};

}  // namespace detail

class PermGroup {
 public:
  /// Builds the group generated by `generators` on `degree` points. Identity
  /// generators are dropped; an all-identity list yields the trivial group.
  PermGroup(std::size_t degree, const std::vector<Permutation>& generators) : degree_(degree) {
    if (degree == 0) throw Error(ErrorCode::PointOutOfRange, "degree must be positive");
    auto chain = std::make_shared<detail::Chain>(degree);
    for (const auto& g : generators) {
      if (g.degree() != degree)
        throw Error(ErrorCode::DegreeMismatch,
                    "generator of degree " + std::to_string(g.degree()) + " in group of degree " + std::to_string(degree));
      if (g.is_identity()) continue;
      gens_.push_back(g);
      chain->extend(0, g);
    }
    chain_ = std::move(chain);
  }

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const noexcept { return degree_; }

  /// Non-identity generators; empty for the trivial group.
  const std::vector<Permutation>& generators() const noexcept { return gens_; }

  /// Generator list as the user-facing contract describes it: the trivial
  /// group reports the identity as its sole generator.
  std::vector<Permutation> generator_list() const {
    if (gens_.empty()) return {Permutation(degree_)};
    return gens_;
  }

  std::uint64_t order() const {
    std::uint64_t n = 1;
    for (const auto& lv : chain_->levels()) {
      std::uint64_t s = lv.orbit.size();
      if (n > std::numeric_limits<std::uint64_t>::max() / s)
        throw Error(ErrorCode::GroupTooLarge, "group order overflows 64 bits");
      n *= s;
    }
    return n;
  }

  bool is_trivial() const noexcept { return chain_->levels().empty(); }

  bool contains(const Permutation& p) const {
    if (p.degree() != degree_) throw Error(ErrorCode::DegreeMismatch, "membership test with wrong degree");
    return chain_->contains_from(p, 0);
  }

  std::vector<point_t> base() const {
    std::vector<point_t> b;
    for (const auto& lv : chain_->levels()) b.push_back(lv.base);
    return b;
  }

  std::vector<std::size_t> transversal_sizes() const {
    std::vector<std::size_t> s;
    for (const auto& lv : chain_->levels()) s.push_back(lv.orbit.size());
    return s;
  }

  std::vector<Permutation> strong_generators() const {
    std::vector<Permutation> out;
    for (const auto& lv : chain_->levels()) out.insert(out.end(), lv.gens.begin(), lv.gens.end());
    return out;
  }

  /// Uniform element: one uniformly chosen coset representative per level.
  template <class URBG>
  Permutation random_element(URBG& rng) const {
    Permutation g(degree_);
    const auto& lv = chain_->levels();
    for (std::size_t k = lv.size(); k-- > 0;) {
      std::uniform_int_distribution<std::size_t> pick(0, lv[k].reps.size() - 1);
      g = g * lv[k].reps[pick(rng)];
    }
    return g;
  }

  /// Visits every element exactly once (as products of coset representatives).
  template <class F>
  void for_each_element(F&& f) const {
    const auto& lv = chain_->levels();
    Permutation id(degree_);
    visit(lv.size(), id, f);
  }

  std::vector<Permutation> elements(std::uint64_t bound = kEnumerationBound) const {
    if (order() > bound)
      throw Error(ErrorCode::GroupTooLarge,
                  "order " + std::to_string(order()) + " exceeds enumeration bound " + std::to_string(bound));
    std::vector<Permutation> out;
    out.reserve(order());
    for_each_element([&](const Permutation& p) { out.push_back(p); });
    return out;
  }

  /// The group generated by this group's generators together with `extra`.
  PermGroup with_generators(const std::vector<Permutation>& extra) const {
    PermGroup r = *this;
    std::shared_ptr<detail::Chain> chain;
    for (const auto& g : extra) {
      if (g.degree() != degree_) throw Error(ErrorCode::DegreeMismatch, "generator degree mismatch");
      if (g.is_identity() || r.chain_->contains_from(g, 0)) continue;
      if (!chain) chain = std::make_shared<detail::Chain>(*chain_);
      chain->extend(0, g);
      r.gens_.push_back(g);
      r.chain_ = chain;
    }
    return r;
  }

 private:
  template <class F>
  void visit(std::size_t level, const Permutation& prefix, F& f) const {
    if (level == 0) {
      f(prefix);
      return;
    }
    const auto& lv = chain_->levels()[level - 1];
    for (const auto& u : lv.reps) visit(level - 1, prefix * u, f);
  }

  std::size_t degree_;
  std::vector<Permutation> gens_;
  std::shared_ptr<const detail::Chain> chain_;
};

/// Group generated by a nonempty generator list; the degree comes from the
/// generators.
inline PermGroup group_from_generators(const std::vector<Permutation>& gens) {
  if (gens.empty()) throw Error(ErrorCode::EmptyGeneratorList, "no generators given");
  return PermGroup(gens.front().degree(), gens);
}

inline bool is_subgroup(const PermGroup& h, const PermGroup& g) {
  if (h.degree() != g.degree()) return false;
  for (const auto& x : h.generators())
    if (!g.contains(x)) return false;
  return true;
}

inline bool same_group(const PermGroup& a, const PermGroup& b) {
  return a.degree() == b.degree() && a.order() == b.order() && is_subgroup(a, b);
}

inline PermGroup join(const PermGroup& a, const PermGroup& b) { return a.with_generators(b.generators()); }

/// True when every conjugate of a generator of `h` by a generator of `g`
/// lies in `h`.
inline bool is_normal_in(const PermGroup& g, const PermGroup& h) {
  for (const auto& x : g.generators())
    for (const auto& s : h.generators())
      if (!h.contains(conjugate(s, x))) return false;
  return true;
}

inline PermGroup intersection(const PermGroup& a, const PermGroup& b) {
  const PermGroup& small = a.order() <= b.order() ? a : b;
  const PermGroup& other = a.order() <= b.order() ? b : a;
  PermGroup r = PermGroup::trivial(a.degree());
  for (const auto& x : small.elements())
    if (other.contains(x) && !r.contains(x)) r = r.with_generators({x});
  return r;
}

/// A subgroup together with the group it lives in.
class SubgroupHandle {
 public:
  /// Throws NotNormal when `verify_normal` is set and the check fails;
  /// throws ElementNotInGroup when a generator lies outside `parent`.
  SubgroupHandle(PermGroup parent, PermGroup group, bool verify_normal = false)
      : parent_(std::move(parent)), group_(std::move(group)) {
    if (!is_subgroup(group_, parent_)) throw Error(ErrorCode::ElementNotInGroup, "subgroup generator outside parent");
    if (verify_normal) {
      if (!is_normal_in(parent_, group_)) throw Error(ErrorCode::NotNormal, "subgroup is not normal in parent");
      normal_ = true;
    }
  }

  const PermGroup& parent() const noexcept { return parent_; }
  const PermGroup& group() const noexcept { return group_; }
  const std::vector<Permutation>& generators() const noexcept { return group_.generators(); }
  std::uint64_t order() const { return group_.order(); }
  bool contains(const Permutation& p) const { return group_.contains(p); }
  bool is_normal() const noexcept { return normal_; }

  friend bool operator==(const SubgroupHandle& a, const SubgroupHandle& b) { return same_group(a.group_, b.group_); }

 private:
  PermGroup parent_;
  PermGroup group_;
  bool normal_ = false;
};

/// Smallest subgroup of `g` containing `s` and normalized by `g`: keep
/// conjugating generators by the generators of `g` until nothing new appears.
inline PermGroup normal_closure_group(const PermGroup& g, const PermGroup& s) {
  PermGroup n = s;
  std::vector<Permutation> pending = s.generators();
  while (!pending.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : pending) {
      for (const auto& y : g.generators()) {
        Permutation c = conjugate(x, y);
        if (!n.contains(c)) {
          n = n.with_generators({c});
          next.push_back(std::move(c));
        }
      }
    }
    pending = std::move(next);
  }
  return n;
}

inline SubgroupHandle normal_closure(const PermGroup& g, const PermGroup& s) {
  return SubgroupHandle(g, normal_closure_group(g, s), true);
}

inline SubgroupHandle normal_closure(const PermGroup& g, const SubgroupHandle& s) { return normal_closure(g, s.group()); }

inline PermGroup cyclic_subgroup(const Permutation& x) { return PermGroup(x.degree(), {x}); }

}  // namespace solrad
