#pragma once

// Commutator series and the elementwise Fitting subgroup / solvable radical.

#include <string>
#include <vector>

#include "solrad/classes.hpp"
#include "solrad/group.hpp"

namespace solrad {

/// [A, B] as the normal closure in <A, B> of the commutators of generators.
inline PermGroup commutator_group(const PermGroup& a, const PermGroup& b) {
  std::vector<Permutation> comms;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) {
      Permutation c = commutator(x, y);
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  return normal_closure_group(join(a, b), PermGroup::trivial(a.degree()).with_generators(comms));
}

inline SubgroupHandle commutator_subgroup(const PermGroup& g, const PermGroup& a, const PermGroup& b) {
  return SubgroupHandle(g, commutator_group(a, b));
}

inline PermGroup derived_subgroup(const PermGroup& x) { return commutator_group(x, x); }

enum class SeriesKind { derived, lower_central, lower_fitting, mod_n_lower_fitting };

inline std::string to_string(SeriesKind k) {
  switch (k) {
    case SeriesKind::derived: return "derived";
    case SeriesKind::lower_central: return "lower_central";
    case SeriesKind::lower_fitting: return "lower_fitting";
    case SeriesKind::mod_n_lower_fitting: return "mod_n_lower_fitting";
  }
  return "unknown";
}

/// A descending chain of subgroups of one parent.
struct SeriesReport {
  SeriesKind kind;
  std::vector<SubgroupHandle> terms;
  bool stabilized = false;

  std::vector<std::uint64_t> orders() const {
    std::vector<std::uint64_t> o;
    for (const auto& t : terms) o.push_back(t.order());
    return o;
  }
  const SubgroupHandle& last() const { return terms.back(); }
};

inline SeriesReport derived_series(const PermGroup& g) {
  SeriesReport r{SeriesKind::derived, {SubgroupHandle(g, g)}, false};
  PermGroup cur = g;
  while (!cur.is_trivial()) {
    PermGroup next = derived_subgroup(cur);
    const bool stalled = next.order() == cur.order();
    r.terms.emplace_back(g, next, true);
    if (stalled) break;
    cur = std::move(next);
  }
  r.stabilized = true;
  return r;
}

inline bool is_solvable(const PermGroup& g) {
  PermGroup cur = g;
  while (!cur.is_trivial()) {
    PermGroup next = derived_subgroup(cur);
    if (next.order() == cur.order()) return false;
    cur = std::move(next);
  }
  return true;
}
inline bool is_solvable(const SubgroupHandle& s) { return is_solvable(s.group()); }

inline SeriesReport lower_central_series(const PermGroup& g) {
  SeriesReport r{SeriesKind::lower_central, {SubgroupHandle(g, g)}, false};
  PermGroup cur = g;
  while (!cur.is_trivial()) {
    PermGroup next = commutator_group(cur, g);
    const bool stalled = next.order() == cur.order();
    r.terms.emplace_back(g, next, true);
    if (stalled) break;
    cur = std::move(next);
  }
  r.stabilized = true;
  return r;
}

inline bool is_nilpotent(const PermGroup& g) {
  PermGroup cur = g;
  while (!cur.is_trivial()) {
    PermGroup next = commutator_group(cur, g);
    if (next.order() == cur.order()) return false;
    cur = std::move(next);
  }
  return true;
}
inline bool is_nilpotent(const SubgroupHandle& s) { return is_nilpotent(s.group()); }

/// Stable term of K_1 = G, K_{j+1} = <[K_j, G], base>. Its image in G/base
/// is the nilpotent residual of the quotient. `base` must be normal in `g`.
inline PermGroup nilpotent_residual_group(const PermGroup& g, const PermGroup& base) {
  if (!is_subgroup(base, g) || !is_normal_in(g, base))
    throw Error(ErrorCode::NotNormal, "residual base is not a normal subgroup");
  PermGroup cur = g;
  while (true) {
    PermGroup next = join(commutator_group(cur, g), base);
    if (next.order() == cur.order()) return cur;
    cur = std::move(next);
  }
}

inline SubgroupHandle nilpotent_residual(const PermGroup& g, const PermGroup& base) {
  return SubgroupHandle(g, nilpotent_residual_group(g, base), true);
}
inline SubgroupHandle nilpotent_residual(const PermGroup& g) {
  return nilpotent_residual(g, PermGroup::trivial(g.degree()));
}

namespace detail {

template <class Pred>
PermGroup join_qualifying_closures(const PermGroup& g, const std::vector<ConjugacyClass>& classes, Pred pred) {
  PermGroup acc = PermGroup::trivial(g.degree());
  for (const auto& c : classes) {
    if (acc.contains(c.representative)) continue;
    PermGroup n = normal_closure_group(g, cyclic_subgroup(c.representative));
    if (pred(n)) acc = join(acc, n);
  }
  return acc;
}

}  // namespace detail

/// F(G): generated by the elements whose normal closure is nilpotent.
inline SubgroupHandle fitting_subgroup(const PermGroup& g, const std::vector<ConjugacyClass>& classes) {
  return SubgroupHandle(
      g, detail::join_qualifying_closures(g, classes, [](const PermGroup& n) { return is_nilpotent(n); }), true);
}
inline SubgroupHandle fitting_subgroup(const PermGroup& g) { return fitting_subgroup(g, conjugacy_classes(g)); }

/// R(G): generated by the elements whose normal closure is solvable.
inline SubgroupHandle solvable_radical(const PermGroup& g, const std::vector<ConjugacyClass>& classes) {
  return SubgroupHandle(
      g, detail::join_qualifying_closures(g, classes, [](const PermGroup& n) { return is_solvable(n); }), true);
}
inline SubgroupHandle solvable_radical(const PermGroup& g) { return solvable_radical(g, conjugacy_classes(g)); }

}  // namespace solrad
