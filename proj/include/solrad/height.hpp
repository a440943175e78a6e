#pragma once

// Fitting height, sfit, heights relative to a normal subgroup, normal
// subgroup enumeration and complements to a minimal normal subgroup.
//
// Quotients are never built. A statement about G/N is evaluated on the
// subgroups of G that contain N.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "solrad/classes.hpp"
#include "solrad/series.hpp"

namespace solrad {

inline constexpr std::uint64_t kNormalSubgroupBound = 2000;
inline constexpr std::uint64_t kComplementCandidateCap = 1000000;

struct FittingProfile {
  std::size_t height = 0;
  std::vector<SubgroupHandle> lower_fitting_terms;  // D_0 = G, ..., D_height = 1
  std::optional<SubgroupHandle> sfit;                // absent for the trivial group

  std::vector<std::uint64_t> term_orders() const {
    std::vector<std::uint64_t> o;
    for (const auto& t : lower_fitting_terms) o.push_back(t.order());
    return o;
  }
};

/// Lower Fitting series of G relative to N: X_0 = G, X_{i+1} the nilpotent
/// residual of X_i modulo N, down to N. Throws QuotientNotSolvable when it
/// stalls above N.
inline SeriesReport lower_fitting_series_mod(const PermGroup& g, const PermGroup& n) {
  if (!is_subgroup(n, g) || !is_normal_in(g, n)) throw Error(ErrorCode::NotNormal, "N is not normal in G");
  SeriesReport r{n.is_trivial() ? SeriesKind::lower_fitting : SeriesKind::mod_n_lower_fitting,
                 {SubgroupHandle(g, g, true)},
                 false};
  PermGroup cur = g;
  while (cur.order() != n.order()) {
    PermGroup next = nilpotent_residual_group(cur, n);
    if (next.order() == cur.order())
      throw Error(ErrorCode::QuotientNotSolvable, "lower Fitting series stalls at order " + std::to_string(cur.order()));
    r.terms.emplace_back(g, next, true);
    cur = std::move(next);
  }
  r.stabilized = true;
  return r;
}

inline SeriesReport lower_fitting_series(const PermGroup& g) {
  try {
    return lower_fitting_series_mod(g, PermGroup::trivial(g.degree()));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::QuotientNotSolvable) throw Error(ErrorCode::NotSolvable, "group is not solvable");
    throw;
  }
}

inline FittingProfile fitting_profile(const PermGroup& g) {
  SeriesReport s = lower_fitting_series(g);
  FittingProfile p;
  p.height = s.terms.size() - 1;
  if (p.height > 0) p.sfit = s.terms[p.height - 1];
  p.lower_fitting_terms = std::move(s.terms);
  return p;
}

inline std::size_t fitting_height(const PermGroup& g) { return lower_fitting_series(g).terms.size() - 1; }

/// Last nontrivial term of the lower Fitting series.
inline SubgroupHandle sfit(const PermGroup& g) {
  if (g.is_trivial()) throw Error(ErrorCode::TrivialGroup, "sfit of the trivial group");
  SeriesReport s = lower_fitting_series(g);
  return s.terms[s.terms.size() - 2];
}

/// Fitting height of G/N.
inline std::size_t fitting_height_mod(const PermGroup& g, const PermGroup& n) {
  return lower_fitting_series_mod(g, n).terms.size() - 1;
}

/// Every normal subgroup, as joins of class normal closures. Subgroups are
/// keyed by which classes they contain, which identifies a normal subgroup.
inline std::vector<SubgroupHandle> enumerate_normal_subgroups(const PermGroup& g,
                                                              std::uint64_t bound = kNormalSubgroupBound) {
  if (g.order() > bound)
    throw Error(ErrorCode::GroupTooLarge, "normal subgroup enumeration limited to order " + std::to_string(bound));
  auto classes = conjugacy_classes(g, bound);
  auto key_of = [&](const PermGroup& n) {
    std::vector<bool> k(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) k[i] = n.contains(classes[i].representative);
    return k;
  };

  std::vector<PermGroup> closures;
  for (const auto& c : classes) closures.push_back(normal_closure_group(g, cyclic_subgroup(c.representative)));

  std::map<std::vector<bool>, std::size_t> seen;
  std::vector<PermGroup> found{PermGroup::trivial(g.degree())};
  seen.emplace(key_of(found.front()), 0);
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (found[i].contains(classes[c].representative)) continue;
      PermGroup j = join(found[i], closures[c]);
      if (seen.emplace(key_of(j), found.size()).second) found.push_back(std::move(j));
    }
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const PermGroup& a, const PermGroup& b) { return a.order() < b.order(); });
  std::vector<SubgroupHandle> out;
  for (auto& n : found) out.emplace_back(g, std::move(n), true);
  return out;
}

inline bool is_minimal_normal(const PermGroup& g, const PermGroup& v) {
  if (v.is_trivial() || !is_subgroup(v, g) || !is_normal_in(g, v)) return false;
  // A nontrivial normal subgroup is minimal iff the normal closure of each of
  // its nonidentity elements is all of it.
  bool minimal = true;
  v.for_each_element([&](const Permutation& x) {
    if (!minimal || x.is_identity()) return;
    if (normal_closure_group(g, cyclic_subgroup(x)).order() != v.order()) minimal = false;
  });
  return minimal;
}

/// All complements to the minimal normal subgroup V of the solvable group G.
inline std::vector<SubgroupHandle> find_complements(const PermGroup& g, const PermGroup& v,
                                                    std::uint64_t cap = kComplementCandidateCap) {
  if (!is_solvable(g)) throw Error(ErrorCode::NotSolvable, "complement search needs a solvable group");
  if (!is_minimal_normal(g, v)) throw Error(ErrorCode::VNotMinimalNormal, "V is not a minimal normal subgroup");

  // Generators of G modulo V, greedily thinned.
  std::vector<Permutation> gens = g.generators();
  for (std::size_t i = gens.size(); i-- > 0;) {
    std::vector<Permutation> rest = gens;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (v.with_generators(rest).order() == g.order()) gens = std::move(rest);
  }

  const std::vector<Permutation> velems = v.elements();
  std::uint64_t candidates = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (candidates > cap / velems.size())
      throw Error(ErrorCode::SearchBudgetExceeded, "complement candidates exceed cap " + std::to_string(cap));
    candidates *= velems.size();
  }

  const std::uint64_t target = g.order() / v.order();
  std::vector<PermGroup> found;
  std::vector<std::size_t> choice(gens.size(), 0);
  for (std::uint64_t t = 0; t < candidates; ++t) {
    std::vector<Permutation> lifted;
    for (std::size_t i = 0; i < gens.size(); ++i) lifted.push_back(gens[i] * velems[choice[i]]);
    PermGroup a(g.degree(), lifted);
    if (a.order() == target) {
      bool dup = false;
      for (const auto& f : found)
        if (same_group(f, a)) {
          dup = true;
          break;
        }
      if (!dup) found.push_back(std::move(a));
    }
    for (std::size_t i = 0; i < choice.size(); ++i) {
      if (++choice[i] < velems.size()) break;
      choice[i] = 0;
    }
  }
  std::vector<SubgroupHandle> out;
  for (auto& a : found) out.emplace_back(g, std::move(a));
  return out;
}

}  // namespace solrad
