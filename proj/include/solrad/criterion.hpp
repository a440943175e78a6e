#pragma once

// Conjugacy-class generation criteria: k-conjugate solvability tests,
// minimal nonsolvable witnesses, the radical recovered from the criterion,
// the pair criteria for nilpotency and for classes of prime order >= 5, and
// the search for five-conjugate subgroups of maximal Fitting height.
//
// A suspected counterexample to any of the theorems is thrown as
// TheoremViolationSuspected, never returned as an ordinary "false".

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "solrad/classes.hpp"
#include "solrad/height.hpp"
#include "solrad/numeric.hpp"
#include "solrad/series.hpp"

namespace solrad {

inline constexpr std::uint64_t kTupleBudget = 100000000;
inline constexpr std::uint64_t kDefaultSamples = 100000;

/// Number of multisets of size r drawn from n items, saturating.
inline std::uint64_t multiset_count(std::uint64_t n, std::uint64_t r) {
  if (r == 0) return 1;
  if (n == 0) return 0;
  // C(n + r - 1, r), built incrementally; each partial product is a binomial.
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - 1 + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

/// Subgroups generated by members of one conjugacy class, memoized. Such a
/// subgroup H is generated by H ∩ C, so the bitset of class members it
/// contains identifies it exactly.
class ClassLattice {
 public:
  ClassLattice(PermGroup g, ConjugacyClass c) : g_(std::move(g)), cls_(std::move(c)) {
    if (cls_.elements.empty()) throw Error(ErrorCode::EmptyClass, "empty conjugacy class");
    for (std::size_t i = 0; i < cls_.elements.size(); ++i) single_.push_back(kNone);
  }

  const PermGroup& parent() const noexcept { return g_; }
  const ConjugacyClass& cls() const noexcept { return cls_; }
  std::size_t class_size() const noexcept { return cls_.elements.size(); }
  std::size_t node_count() const noexcept { return nodes_.size(); }

  /// Node for <C[i]>.
  std::size_t single(std::size_t i) {
    if (single_[i] == kNone) single_[i] = intern(cyclic_subgroup(cls_.elements[i]));
    return single_[i];
  }

  /// Node for <H, C[i]>.
  std::size_t join(std::size_t node, std::size_t i) {
    if (nodes_[node].members[i]) return node;
    std::uint64_t key = static_cast<std::uint64_t>(node) * cls_.elements.size() + i;
    auto it = steps_.find(key);
    if (it != steps_.end()) return it->second;
    std::size_t r = intern(nodes_[node].group.with_generators({cls_.elements[i]}));
    steps_.emplace(key, r);
    return r;
  }

  const PermGroup& group(std::size_t node) const { return nodes_[node].group; }
  bool has_member(std::size_t node, std::size_t i) const { return nodes_[node].members[i]; }

  bool solvable(std::size_t node) {
    auto& n = nodes_[node];
    if (!n.solvable) n.solvable = is_solvable(n.group);
    return *n.solvable;
  }

  bool nilpotent(std::size_t node) {
    auto& n = nodes_[node];
    if (!n.nilpotent) n.nilpotent = is_nilpotent(n.group);
    return *n.nilpotent;
  }

  std::size_t fitting_height(std::size_t node) {
    auto& n = nodes_[node];
    if (!n.height) n.height = solrad::fitting_height(n.group);
    return *n.height;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  struct Node {
    PermGroup group;
    std::vector<bool> members;
    std::optional<bool> solvable;
    std::optional<bool> nilpotent;
    std::optional<std::size_t> height;
  };

  std::size_t intern(PermGroup h) {
    std::vector<bool> members(cls_.elements.size());
    for (std::size_t i = 0; i < members.size(); ++i) members[i] = h.contains(cls_.elements[i]);
    auto [it, inserted] = index_.emplace(members, nodes_.size());
    if (inserted) nodes_.push_back(Node{std::move(h), std::move(members), {}, {}, {}});
    return it->second;
  }

  PermGroup g_;
  ConjugacyClass cls_;
  std::deque<Node> nodes_;
  std::unordered_map<std::vector<bool>, std::size_t> index_;
  std::unordered_map<std::uint64_t, std::size_t> steps_;
  std::vector<std::size_t> single_;
};

enum class SearchMode { exhaustive, randomized };

struct ModeSpec {
  SearchMode kind = SearchMode::exhaustive;
  std::uint64_t samples = kDefaultSamples;
  std::uint64_t seed = 0;

  static ModeSpec exhaustive() { return {}; }
  static ModeSpec randomized(std::uint64_t samples, std::uint64_t seed) {
    return {SearchMode::randomized, samples, seed};
  }
};

struct CriterionVerdict {
  Permutation class_rep;
  std::size_t k = 0;
  ModeSpec mode;
  bool all_solvable = true;
  std::optional<std::vector<Permutation>> witness;
  std::uint64_t tuples_checked = 0;
};

namespace detail {

// Sorted multisets of size `depth_left` over indices >= `start`, extending
// `node`. Returns true when a nonsolvable subgroup was found; `tuple` then
// holds the lexicographically first witness.
inline bool solvable_dfs(ClassLattice& lat, std::size_t node, std::size_t start, std::size_t depth_left,
                         std::vector<std::size_t>& tuple, std::uint64_t& checked) {
  if (!lat.solvable(node)) {
    // Every extension of this prefix is nonsolvable; the first one in
    // canonical order repeats the last index.
    for (std::size_t d = 0; d < depth_left; ++d) tuple.push_back(start);
    ++checked;
    return true;
  }
  if (depth_left == 0) {
    ++checked;
    return false;
  }
  for (std::size_t j = start; j < lat.class_size(); ++j) {
    tuple.push_back(j);
    if (solvable_dfs(lat, lat.join(node, j), j, depth_left - 1, tuple, checked)) return true;
    tuple.pop_back();
  }
  return false;
}

}  // namespace detail

/// Checks whether every k members of the class generate a solvable subgroup.
/// Exhaustive mode fixes the first entry to the representative and walks
/// sorted multisets for the rest; this loses nothing because solvability of
/// the generated subgroup is invariant under simultaneous conjugation.
inline CriterionVerdict class_k_test(ClassLattice& lat, std::size_t k, ModeSpec mode,
                                     std::uint64_t budget = kTupleBudget) {
  if (k == 0) throw Error(ErrorCode::ParameterOutOfRange, "k must be at least 1");
  const ConjugacyClass& c = lat.cls();
  const std::size_t rep = static_cast<std::size_t>(c.index_of(c.representative));
  CriterionVerdict v;
  v.class_rep = c.representative;
  v.k = k;
  v.mode = mode;

  if (mode.kind == SearchMode::exhaustive) {
    std::uint64_t total = multiset_count(c.size(), k - 1);
    if (total > budget)
      throw Error(ErrorCode::BudgetExceeded, std::to_string(total) + " canonical tuples exceed budget " + std::to_string(budget));
    std::vector<std::size_t> tuple;
    if (detail::solvable_dfs(lat, lat.single(rep), 0, k - 1, tuple, v.tuples_checked)) {
      v.all_solvable = false;
      std::vector<Permutation> w{c.representative};
      for (std::size_t i : tuple) w.push_back(c.elements[i]);
      v.witness = std::move(w);
    }
    return v;
  }

  std::mt19937_64 rng(mode.seed);
  const PermGroup& g = lat.parent();
  for (std::uint64_t s = 0; s < mode.samples; ++s) {
    std::size_t node = lat.single(rep);
    std::vector<Permutation> tuple{c.representative};
    for (std::size_t j = 1; j < k; ++j) {
      Permutation x = conjugate(c.representative, g.random_element(rng));
      node = lat.join(node, static_cast<std::size_t>(c.index_of(x)));
      tuple.push_back(std::move(x));
    }
    ++v.tuples_checked;
    if (!lat.solvable(node)) {
      v.all_solvable = false;
      v.witness = std::move(tuple);
      return v;
    }
  }
  return v;
}

inline CriterionVerdict class_k_test(const PermGroup& g, const ConjugacyClass& c, std::size_t k, ModeSpec mode,
                                     std::uint64_t budget = kTupleBudget) {
  ClassLattice lat(g, c);
  return class_k_test(lat, k, mode, budget);
}

/// Independent re-check of a witness: class membership and nonsolvability.
inline bool verify_witness(const PermGroup& g, const ConjugacyClass& c, const std::vector<Permutation>& w) {
  if (w.empty()) return false;
  for (const auto& x : w)
    if (c.index_of(x) < 0 || !g.contains(x)) return false;
  return !is_solvable(PermGroup(g.degree(), w));
}

struct WitnessProfile {
  Permutation class_rep;
  std::size_t class_size = 0;
  bool generates_solvable = true;
  std::optional<std::size_t> min_witness_k;
  std::optional<std::vector<Permutation>> witness;
  /// True when every k below min_witness_k was ruled out exhaustively.
  bool minimality_exhaustive = true;
};

inline constexpr std::size_t kMaxWitnessK = 4;

/// Least k for which some k class members generate a nonsolvable subgroup.
/// Each k is searched exhaustively when its canonical tuple count fits in
/// `budget`, otherwise by `samples` random conjugate tuples.
inline WitnessProfile min_witness(ClassLattice& lat, std::uint64_t budget = kTupleBudget,
                                  std::uint64_t samples = kDefaultSamples, std::uint64_t seed = 0) {
  const ConjugacyClass& c = lat.cls();
  WitnessProfile p;
  p.class_rep = c.representative;
  p.class_size = c.size();
  p.generates_solvable = is_solvable(normal_closure_group(lat.parent(), cyclic_subgroup(c.representative)));
  if (p.generates_solvable) return p;

  bool all_exhaustive = true;
  for (std::size_t k = 1; k <= kMaxWitnessK; ++k) {
    bool exhaustive = multiset_count(c.size(), k - 1) <= budget;
    ModeSpec mode = exhaustive ? ModeSpec::exhaustive() : ModeSpec::randomized(samples, seed);
    CriterionVerdict v = class_k_test(lat, k, mode, budget);
    if (!v.all_solvable) {
      p.min_witness_k = k;
      p.witness = std::move(v.witness);
      p.minimality_exhaustive = all_exhaustive;
      return p;
    }
    all_exhaustive = all_exhaustive && exhaustive;
  }
  throw Error(ErrorCode::TheoremViolationSuspected,
              "class of " + c.representative.to_string() + " generates a nonsolvable subgroup but no witness of size " +
                  std::to_string(kMaxWitnessK) + " was found" + (all_exhaustive ? " (exhaustive)" : " (randomized)"));
}

inline WitnessProfile min_witness(const PermGroup& g, const ConjugacyClass& c, std::uint64_t budget = kTupleBudget,
                                  std::uint64_t samples = kDefaultSamples, std::uint64_t seed = 0) {
  ClassLattice lat(g, c);
  return min_witness(lat, budget, samples, seed);
}

/// The subgroup generated by the classes passing the k-criterion. It must
/// coincide with the solvable radical; a mismatch is thrown.
inline SubgroupHandle radical_by_criterion(const PermGroup& g, const std::vector<ConjugacyClass>& classes,
                                           std::size_t k = 4, std::uint64_t budget = kTupleBudget) {
  PermGroup acc = PermGroup::trivial(g.degree());
  for (const auto& c : classes) {
    ClassLattice lat(g, c);
    if (class_k_test(lat, k, ModeSpec::exhaustive(), budget).all_solvable)
      acc = join(acc, normal_closure_group(g, cyclic_subgroup(c.representative)));
  }
  SubgroupHandle r = solvable_radical(g, classes);
  if (!same_group(acc, r.group()))
    throw Error(ErrorCode::TheoremViolationSuspected,
                "criterion radical has order " + std::to_string(acc.order()) + ", solvable radical has order " +
                    std::to_string(r.order()));
  return SubgroupHandle(g, acc, true);
}

inline SubgroupHandle radical_by_criterion(const PermGroup& g, std::size_t k = 4, std::uint64_t budget = kTupleBudget) {
  return radical_by_criterion(g, conjugacy_classes(g), k, budget);
}

struct BaerSuzukiReport {
  Permutation element;
  std::uint64_t element_order = 0;
  bool pairs_all_nilpotent = true;
  bool closure_nilpotent = true;
  std::optional<Permutation> non_nilpotent_partner;  // some g^h with <g, g^h> not nilpotent
  std::uint64_t pairs_checked = 0;
};

/// For g of prime order: <g, g^h> nilpotent for all h iff the normal closure
/// of g is nilpotent. The conjugates g^h range over the class of g, so the
/// pairs are enumerated over that class.
inline BaerSuzukiReport baer_suzuki_check(ClassLattice& lat, const Permutation& g) {
  BaerSuzukiReport r;
  r.element = g;
  r.element_order = element_order(g);
  if (!is_prime(r.element_order))
    throw Error(ErrorCode::NotPrimeOrder, g.to_string() + " has order " + std::to_string(r.element_order));
  const ConjugacyClass& c = lat.cls();
  std::ptrdiff_t gi = c.index_of(g);
  if (gi < 0) throw Error(ErrorCode::ElementNotInGroup, "element is not in the lattice's class");
  std::size_t base = lat.single(static_cast<std::size_t>(gi));
  for (std::size_t j = 0; j < c.size(); ++j) {
    ++r.pairs_checked;
    if (!lat.nilpotent(lat.join(base, j))) {
      r.pairs_all_nilpotent = false;
      r.non_nilpotent_partner = c.elements[j];
      break;
    }
  }
  r.closure_nilpotent = is_nilpotent(normal_closure_group(lat.parent(), cyclic_subgroup(g)));
  if (r.pairs_all_nilpotent != r.closure_nilpotent)
    throw Error(ErrorCode::TheoremViolationSuspected, "pair nilpotency and normal closure disagree for " + g.to_string());
  return r;
}

inline BaerSuzukiReport baer_suzuki_check(const PermGroup& g, const Permutation& x) {
  if (!g.contains(x)) throw Error(ErrorCode::ElementNotInGroup, x.to_string() + " is not in the group");
  ConjugacyClass c = conjugacy_class_of(g, x);
  ClassLattice lat(g, c);
  return baer_suzuki_check(lat, x);
}

struct PairTestReport {
  Permutation class_rep;
  std::uint64_t element_order = 0;
  bool closure_solvable = true;
  bool all_pairs_solvable = true;
  std::optional<std::vector<Permutation>> witness;
  std::uint64_t pairs_checked = 0;
};

/// For a class of elements of prime order p >= 5: <C> solvable iff every pair
/// from C generates a solvable subgroup. Pairs are checked exhaustively.
inline PairTestReport pair_test_prime_ge5(ClassLattice& lat, std::uint64_t budget = kTupleBudget) {
  const ConjugacyClass& c = lat.cls();
  PairTestReport r;
  r.class_rep = c.representative;
  r.element_order = element_order(c.representative);
  if (r.element_order < 5 || !is_prime(r.element_order))
    throw Error(ErrorCode::OrderConditionViolated,
                "class elements have order " + std::to_string(r.element_order) + ", need a prime >= 5");
  CriterionVerdict v = class_k_test(lat, 2, ModeSpec::exhaustive(), budget);
  r.all_pairs_solvable = v.all_solvable;
  r.witness = v.witness;
  r.pairs_checked = v.tuples_checked;
  r.closure_solvable = is_solvable(normal_closure_group(lat.parent(), cyclic_subgroup(c.representative)));
  if (r.closure_solvable != r.all_pairs_solvable)
    throw Error(ErrorCode::TheoremViolationSuspected,
                "pair solvability and class solvability disagree for " + c.representative.to_string());
  return r;
}

inline PairTestReport pair_test_prime_ge5(const PermGroup& g, const ConjugacyClass& c,
                                          std::uint64_t budget = kTupleBudget) {
  ClassLattice lat(g, c);
  return pair_test_prime_ge5(lat, budget);
}

struct MaxFhSearchResult {
  SubgroupHandle subgroup;                  // first maximizer in canonical order
  std::size_t fitting_height = 0;
  std::vector<Permutation> tuple;           // (a, a^g2, ..., a^gm) generating it
  std::vector<SubgroupHandle> maximizers;   // every distinct maximizer seen
  bool exhaustive = true;
  std::uint64_t tuples_checked = 0;
  std::uint64_t tuples_qualifying = 0;
};

/// Searches subgroups A = <a_1, ..., a_m> with a_1 = a, every a_i conjugate to
/// a in G, and the a_i mutually conjugate inside A; returns one of maximal
/// Fitting height. Mutual conjugacy is checked after the fact: the orbit of
/// a under conjugation by A must contain every entry.
inline MaxFhSearchResult max_fh_subgroup_search(const PermGroup& g, const Permutation& a, std::size_t m = 5,
                                                std::uint64_t budget = kTupleBudget,
                                                std::uint64_t samples = kDefaultSamples, std::uint64_t seed = 0) {
  if (m == 0) throw Error(ErrorCode::ParameterOutOfRange, "m must be at least 1");
  if (!is_solvable(g)) throw Error(ErrorCode::NotSolvable, "max Fitting height search needs a solvable group");
  if (!g.contains(a)) throw Error(ErrorCode::ElementNotInGroup, a.to_string() + " is not in the group");

  ConjugacyClass c = conjugacy_class_of(g, a);
  ClassLattice lat(g, c);
  const std::size_t ai = static_cast<std::size_t>(c.index_of(a));
  std::unordered_map<std::size_t, std::vector<bool>> orbit_memo;
  auto orbit_of_a = [&](std::size_t node) -> const std::vector<bool>& {
    auto it = orbit_memo.find(node);
    if (it != orbit_memo.end()) return it->second;
    std::vector<bool> in(c.size(), false);
    std::vector<std::size_t> queue{ai};
    in[ai] = true;
    const auto& gens = lat.group(node).generators();
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (const auto& y : gens) {
        auto idx = static_cast<std::size_t>(c.index_of(conjugate(c.elements[queue[q]], y)));
        if (!in[idx]) {
          in[idx] = true;
          queue.push_back(idx);
        }
      }
    return orbit_memo.emplace(node, std::move(in)).first->second;
  };

  std::optional<std::size_t> best_node;
  std::size_t best_fh = 0;
  std::vector<std::size_t> best_tuple;
  std::vector<std::size_t> maximizer_nodes;
  std::uint64_t checked = 0;
  std::uint64_t qualifying = 0;

  auto consider = [&](std::size_t node, const std::vector<std::size_t>& tuple) {
    ++checked;
    const auto& orb = orbit_of_a(node);
    for (std::size_t i : tuple)
      if (!orb[i]) return;
    ++qualifying;
    std::size_t fh = lat.fitting_height(node);
    if (!best_node || fh > best_fh) {
      best_node = node;
      best_fh = fh;
      best_tuple = tuple;
      maximizer_nodes = {node};
    } else if (fh == best_fh && std::find(maximizer_nodes.begin(), maximizer_nodes.end(), node) == maximizer_nodes.end()) {
      maximizer_nodes.push_back(node);
    }
  };

  const bool exhaustive = multiset_count(c.size(), m - 1) <= budget;
  if (exhaustive) {
    std::vector<std::size_t> tuple{ai};
    auto walk = [&](auto&& self, std::size_t node, std::size_t start, std::size_t left) -> void {
      if (left == 0) {
        consider(node, tuple);
        return;
      }
      for (std::size_t j = start; j < c.size(); ++j) {
        tuple.push_back(j);
        self(self, lat.join(node, j), j, left - 1);
        tuple.pop_back();
      }
    };
    walk(walk, lat.single(ai), 0, m - 1);
  } else {
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
      std::vector<std::size_t> tuple{ai};
      std::size_t node = lat.single(ai);
      for (std::size_t j = 1; j < m; ++j) {
        auto idx = static_cast<std::size_t>(c.index_of(conjugate(a, g.random_element(rng))));
        tuple.push_back(idx);
        node = lat.join(node, idx);
      }
      consider(node, tuple);
    }
  }

  std::vector<Permutation> tuple_perms;
  for (std::size_t i : best_tuple) tuple_perms.push_back(c.elements[i]);
  std::vector<SubgroupHandle> maxes;
  for (std::size_t n : maximizer_nodes) maxes.emplace_back(g, lat.group(n));
  return MaxFhSearchResult{SubgroupHandle(g, lat.group(*best_node)), best_fh, std::move(tuple_perms), std::move(maxes),
                           exhaustive, checked, qualifying};
}

struct LemmaT2Report {
  Permutation element;
  std::size_t max_fitting_height = 0;
  std::uint64_t sfit_order = 0;     // of the returned maximizer; 0 when it is trivial
  std::uint64_t fitting_order = 0;  // |F(G)|
  std::size_t maximizers_checked = 0;
  bool holds = true;
};

/// For every maximizer A of the exhaustive five-conjugate search,
/// sfit(A) <= F(G).
inline LemmaT2Report lemma_t2_property(const PermGroup& g, const Permutation& a, std::uint64_t budget = kTupleBudget) {
  if (!is_solvable(g)) throw Error(ErrorCode::NotSolvable, "lemma check needs a solvable group");
  if (multiset_count(conjugacy_class_of(g, a).size(), 4) > budget)
    throw Error(ErrorCode::BudgetExceeded, "exhaustive five-conjugate search exceeds budget");
  MaxFhSearchResult res = max_fh_subgroup_search(g, a, 5, budget);
  SubgroupHandle fit = fitting_subgroup(g);
  LemmaT2Report r;
  r.element = a;
  r.max_fitting_height = res.fitting_height;
  r.fitting_order = fit.order();
  if (!res.subgroup.group().is_trivial()) r.sfit_order = sfit(res.subgroup.group()).order();
  for (const auto& m : res.maximizers) {
    ++r.maximizers_checked;
    if (m.group().is_trivial()) continue;
    if (!is_subgroup(sfit(m.group()).group(), fit.group())) {
      r.holds = false;
      throw Error(ErrorCode::TheoremViolationSuspected,
                  "sfit(A) is not contained in F(G) for a = " + a.to_string());
    }
  }
  return r;
}

}  // namespace solrad
