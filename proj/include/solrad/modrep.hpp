#pragma once

// Linear representations of permutation groups over prime fields: fixed
// spaces, spinning, irreducibility, and the splitting of permutation modules
// in coprime characteristic.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "solrad/gf.hpp"
#include "solrad/group.hpp"
#include "solrad/series.hpp"

namespace solrad {

inline constexpr std::uint64_t kSpinExhaustiveBound = 10000000;
inline constexpr std::size_t kSampledSpinVectors = 200;
inline constexpr std::uint64_t kQuickSpinBound = 100000;

struct GModule {
  PermGroup group;
  gf_t p = 2;
  std::size_t dim = 0;
  std::vector<GfMatrix> action;          // one matrix per group.generators()
  bool irreducible_certified = false;    // set only after an exact irreducibility proof
  bool trivial_action = false;
  std::optional<GfMatrix> embedding;     // basis rows inside the module it was split from
};

using ElementMatrixMap = std::unordered_map<Permutation, GfMatrix, PermutationHash>;

/// Matrix of every group element, by breadth-first search over the Cayley
/// graph. Throws if two words for the same element disagree, i.e. when the
/// generator assignment does not extend to a homomorphism.
inline ElementMatrixMap element_matrices(const GModule& m, std::uint64_t bound = kEnumerationBound) {
  if (m.group.order() > bound) throw Error(ErrorCode::GroupTooLarge, "too many elements for an element-matrix table");
  ElementMatrixMap map;
  Permutation id(m.group.degree());
  map.emplace(id, GfMatrix::identity(m.p, m.dim));
  std::vector<Permutation> queue{id};
  const auto& gens = m.group.generators();
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const GfMatrix mx = map.at(queue[q]);
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Permutation y = queue[q] * gens[s];
      GfMatrix my = mx * m.action[s];
      auto [it, inserted] = map.emplace(y, my);
      if (inserted)
        queue.push_back(std::move(y));
      else if (it->second != my)
        throw Error(ErrorCode::ParameterOutOfRange, "generator matrices do not define a homomorphism");
    }
  }
  return map;
}

/// Validates shapes, invertibility and the homomorphism property.
inline GModule make_module(PermGroup g, gf_t p, std::vector<GfMatrix> action, std::size_t dim) {
  if (action.size() != g.generators().size())
    throw Error(ErrorCode::DegreeMismatch, "need one matrix per group generator");
  for (const auto& a : action) {
    if (a.modulus() != p || a.rows() != dim || a.cols() != dim)
      throw Error(ErrorCode::DegreeMismatch, "generator matrix has the wrong shape or field");
    if (determinant(a) == 0) throw Error(ErrorCode::ParameterOutOfRange, "generator matrix is singular");
  }
  GModule m{std::move(g), p, dim, std::move(action), false, false, std::nullopt};
  m.trivial_action = true;
  for (const auto& a : m.action) m.trivial_action = m.trivial_action && a.is_identity();
  if (m.group.order() <= kEnumerationBound) element_matrices(m);
  return m;
}

/// The natural permutation module: e_i * g = e_{i^g}.
inline GModule permutation_module(const PermGroup& g, gf_t p) {
  std::vector<GfMatrix> action;
  const std::size_t n = g.degree();
  for (const auto& x : g.generators()) {
    GfMatrix a(p, n, n);
    for (std::size_t i = 0; i < n; ++i) a(i, x[i]) = 1;
    action.push_back(std::move(a));
  }
  GModule m = make_module(g, p, std::move(action), n);
  m.embedding = GfMatrix::identity(p, n);
  return m;
}

/// Matrix of a group element, found as a word in the generators.
inline GfMatrix element_matrix(const GModule& m, const Permutation& a) {
  if (a.degree() != m.group.degree() || !m.group.contains(a)) throw Error(ErrorCode::ElementNotInGroup, a.to_string() + " is not in the module's group");
  ElementMatrixMap seen;
  Permutation id(m.group.degree());
  seen.emplace(id, GfMatrix::identity(m.p, m.dim));
  std::vector<Permutation> queue{id};
  const auto& gens = m.group.generators();
  for (std::size_t q = 0; q < queue.size(); ++q) {
    if (queue[q] == a) return seen.at(a);
    const GfMatrix mx = seen.at(queue[q]);
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Permutation y = queue[q] * gens[s];
      if (seen.emplace(y, mx * m.action[s]).second) queue.push_back(std::move(y));
    }
  }
  throw Error(ErrorCode::ElementNotInGroup, a.to_string() + " not reached from the generators");
}

/// dim C_V(a): nullity of rho(a) - 1.
inline std::size_t fixed_space_dim(const GModule& m, const Permutation& a) {
  GfMatrix d = element_matrix(m, a) - GfMatrix::identity(m.p, m.dim);
  return m.dim - rank(d);
}

/// Echelon basis of the smallest invariant subspace containing v.
inline EchelonBasis spin(const GModule& m, const GfVector& v) {
  if (v.size() != m.dim) throw Error(ErrorCode::DegreeMismatch, "vector length differs from module dimension");
  bool zero = true;
  for (gf_t e : v) zero = zero && (e % m.p == 0);
  if (zero) throw Error(ErrorCode::ZeroVector, "cannot spin the zero vector");
  EchelonBasis basis(m.p, m.dim);
  std::vector<GfVector> queue{v};
  basis.add(v);
  for (std::size_t q = 0; q < queue.size() && basis.dim() < m.dim; ++q)
    for (const auto& a : m.action) {
      GfVector w = times(queue[q], a);
      if (basis.add(w)) queue.push_back(std::move(w));
    }
  return basis;
}

/// Module with the transposed-inverse action.
inline GModule dual_module(const GModule& m) {
  GModule d = m;
  for (auto& a : d.action) a = inverse(a).transpose();
  d.embedding.reset();
  d.irreducible_certified = false;
  return d;
}

/// Basis of End_G(V) = {X : A X = X A for every generator matrix A}.
inline std::vector<GfMatrix> endomorphism_basis(const GModule& m) {
  const std::size_t d = m.dim;
  const gf_t p = m.p;
  GfMatrix sys(p, std::max<std::size_t>(1, m.action.size()) * d * d, d * d);
  std::size_t row = 0;
  for (const auto& a : m.action) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j, ++row)
        for (std::size_t k = 0; k < d; ++k) {
          // (X A)_{ij} - (A X)_{ij}
          sys(row, i * d + k) = (sys(row, i * d + k) + a(k, j)) % p;
          sys(row, k * d + j) = (sys(row, k * d + j) + p - a(i, k)) % p;
        }
  }
  GfMatrix ns = right_nullspace(sys);
  std::vector<GfMatrix> out;
  for (std::size_t r = 0; r < ns.rows(); ++r) {
    GfMatrix x(p, d, d);
    for (std::size_t e = 0; e < d * d; ++e) x(e / d, e % d) = ns(r, e);
    out.push_back(std::move(x));
  }
  return out;
}

struct IrreducibilityVerdict {
  bool irreducible = false;
  bool certified = false;   // false: the sampled test passed but proves nothing
  bool trivial_action = false;
  std::string method;       // "dimension-one", "exhaustive-spin", "endomorphism-ring", "sampled-spin"
};

namespace detail {

inline std::uint64_t checked_power(std::uint64_t base, std::size_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

// Calls f on one representative per line (first nonzero coordinate 1) of
// GF(p)^n until f returns false.
template <class F>
void for_each_projective_point(gf_t p, std::size_t n, F&& f) {
  for (std::size_t lead = 0; lead < n; ++lead) {
    GfVector v(n, 0);
    v[lead] = 1;
    while (true) {
      if (!f(v)) return;
      std::size_t i = n;
      while (i-- > lead + 1) {
        if (++v[i] < p) break;
        v[i] = 0;
      }
      if (i == lead) break;
    }
  }
}

// Nonzero singular element of the endomorphism ring, if one turns up.
inline std::optional<GfMatrix> find_singular_endomorphism(const GModule& m, const std::vector<GfMatrix>& basis,
                                                          std::uint64_t exhaustive_bound) {
  const GfMatrix id = GfMatrix::identity(m.p, m.dim);
  auto try_shifts = [&](const GfMatrix& x) -> std::optional<GfMatrix> {
    for (gf_t lambda = 0; lambda < m.p; ++lambda) {
      GfMatrix y = x - id.scaled(lambda);
      if (!y.is_zero() && rank(y) < m.dim) return y;
    }
    return std::nullopt;
  };
  for (const auto& b : basis)
    if (auto y = try_shifts(b)) return y;
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<gf_t> coef(0, m.p - 1);
  for (int t = 0; t < 256; ++t) {
    GfMatrix x(m.p, m.dim, m.dim);
    for (const auto& b : basis) x = x + b.scaled(coef(rng));
    if (auto y = try_shifts(x)) return y;
  }
  if (checked_power(m.p, basis.size(), exhaustive_bound) <= exhaustive_bound) {
    std::vector<gf_t> c(basis.size(), 0);
    while (true) {
      std::size_t i = 0;
      while (i < c.size() && ++c[i] == m.p) c[i++] = 0;
      if (i == c.size()) break;
      GfMatrix x(m.p, m.dim, m.dim);
      for (std::size_t k = 0; k < basis.size(); ++k)
        if (c[k]) x = x + basis[k].scaled(c[k]);
      if (!x.is_zero() && rank(x) < m.dim) return x;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Irreducibility. Exact when p^dim <= bound (every line is spun), or when
/// p is coprime to |G| and the endomorphism ring is small enough to scan
/// (a semisimple module is irreducible iff its endomorphisms form a
/// division ring); the ring scan is preferred once the space has more than
/// kQuickSpinBound vectors. Otherwise falls back to spinning random vectors
/// in the module and its dual, and reports the answer as uncertified.
inline IrreducibilityVerdict is_irreducible(const GModule& m, std::uint64_t bound = kSpinExhaustiveBound,
                                            std::uint64_t seed = 0) {
  IrreducibilityVerdict v;
  v.trivial_action = m.trivial_action;
  if (m.dim == 0) throw Error(ErrorCode::ParameterOutOfRange, "zero-dimensional module");
  if (m.dim == 1) {
    v.irreducible = v.certified = true;
    v.method = "dimension-one";
    return v;
  }
  auto exhaustive_spin = [&] {
    bool irreducible = true;
    detail::for_each_projective_point(m.p, m.dim, [&](const GfVector& x) {
      if (spin(m, x).dim() < m.dim) irreducible = false;
      return irreducible;
    });
    v.irreducible = irreducible;
    v.certified = true;
    v.method = "exhaustive-spin";
    return v;
  };
  const std::uint64_t space = detail::checked_power(m.p, m.dim, std::max(bound, kQuickSpinBound));
  if (space <= std::min(bound, kQuickSpinBound)) return exhaustive_spin();
  auto basis = endomorphism_basis(m);
  if (m.group.order() % m.p != 0 && detail::checked_power(m.p, basis.size(), bound) <= bound) {
    v.irreducible = !detail::find_singular_endomorphism(m, basis, bound).has_value();
    v.certified = true;
    v.method = "endomorphism-ring";
    return v;
  }
  if (space <= bound) return exhaustive_spin();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<gf_t> coef(0, m.p - 1);
  GModule dual = dual_module(m);
  v.irreducible = true;
  for (std::size_t t = 0; t < kSampledSpinVectors && v.irreducible; ++t) {
    GfVector x(m.dim);
    do {
      for (auto& e : x) e = coef(rng);
    } while (std::all_of(x.begin(), x.end(), [](gf_t e) { return e == 0; }));
    if (spin(m, x).dim() < m.dim || spin(dual, x).dim() < m.dim) v.irreducible = false;
  }
  v.certified = !v.irreducible;  // a proper submodule is a proof; its absence is not
  v.method = "sampled-spin";
  return v;
}

namespace detail {

// Restricts the module to the invariant decomposition given by the rows of
// `basis`: the first `split` rows span one summand, the rest the other.
inline std::pair<GModule, GModule> restrict_split(const GModule& w, const GfMatrix& basis, std::size_t split) {
  const GfMatrix binv = inverse(basis);
  const std::size_t d = w.dim;
  GModule a{w.group, w.p, split, {}, false, false, std::nullopt};
  GModule b{w.group, w.p, d - split, {}, false, false, std::nullopt};
  for (const auto& g : w.action) {
    GfMatrix t = basis * g * binv;
    GfMatrix ta(w.p, split, split), tb(w.p, d - split, d - split);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        bool ia = i < split, ja = j < split;
        if (ia != ja && t(i, j) != 0) throw Error(ErrorCode::OrderMismatch, "decomposition is not invariant");
        if (ia && ja) ta(i, j) = t(i, j);
        if (!ia && !ja) tb(i - split, j - split) = t(i, j);
      }
    a.action.push_back(std::move(ta));
    b.action.push_back(std::move(tb));
  }
  if (w.embedding) {
    GfMatrix full = basis * *w.embedding;
    GfMatrix ea(w.p, split, full.cols()), eb(w.p, d - split, full.cols());
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < full.cols(); ++j) (i < split ? ea(i, j) : eb(i - split, j)) = full(i, j);
    a.embedding = std::move(ea);
    b.embedding = std::move(eb);
  }
  for (GModule* x : {&a, &b}) {
    x->trivial_action = true;
    for (const auto& g : x->action) x->trivial_action = x->trivial_action && g.is_identity();
  }
  return {std::move(a), std::move(b)};
}

inline void split_semisimple(const GModule& w, const ElementMatrixMap& elems, std::vector<GModule>& out) {
  if (w.dim > 1) {
    auto ends = endomorphism_basis(w);
    if (ends.size() > 1) {
      if (auto x = find_singular_endomorphism(w, ends, kSpinExhaustiveBound)) {
        // U = image of x, a proper submodule.
        GfMatrix u = *x;
        auto pivots = row_reduce(u);
        const std::size_t k = pivots.size();
        GfMatrix b(w.p, w.dim, w.dim);
        std::vector<bool> used(w.dim, false);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < w.dim; ++j) b(i, j) = u(i, j);
        for (auto c : pivots) used[c] = true;
        std::size_t r = k;
        for (std::size_t c = 0; c < w.dim; ++c)
          if (!used[c]) b(r++, c) = 1;
        // Projection onto U along the coordinate complement, then averaged
        // over the group to make it equivariant.
        GfMatrix diag(w.p, w.dim, w.dim);
        for (std::size_t i = 0; i < k; ++i) diag(i, i) = 1;
        GfMatrix pi0 = inverse(b) * diag * b;
        GfMatrix sum(w.p, w.dim, w.dim);
        for (const auto& [g, mg] : elems) sum = sum + inverse(mg) * pi0 * mg;
        GfMatrix pi = sum.scaled(gf_inverse(static_cast<gf_t>(w.group.order() % w.p), w.p));
        GfMatrix kernel = left_nullspace(pi);
        GfMatrix basis(w.p, w.dim, w.dim);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < w.dim; ++j) basis(i, j) = u(i, j);
        for (std::size_t i = 0; i < kernel.rows(); ++i)
          for (std::size_t j = 0; j < w.dim; ++j) basis(k + i, j) = kernel(i, j);
        auto [a, c] = restrict_split(w, basis, k);
        ElementMatrixMap ea, ec;
        for (const auto& [g, mg] : elems) {
          GfMatrix t = basis * mg * inverse(basis);
          GfMatrix ta(w.p, a.dim, a.dim), tc(w.p, c.dim, c.dim);
          for (std::size_t i = 0; i < w.dim; ++i)
            for (std::size_t j = 0; j < w.dim; ++j) {
              if (i < k && j < k) ta(i, j) = t(i, j);
              if (i >= k && j >= k) tc(i - k, j - k) = t(i, j);
            }
          ea.emplace(g, std::move(ta));
          ec.emplace(g, std::move(tc));
        }
        split_semisimple(a, ea, out);
        split_semisimple(c, ec, out);
        return;
      }
    }
  }
  out.push_back(w);
}

}  // namespace detail

/// Irreducible constituents of the natural permutation module over GF(p),
/// p coprime to |G|. Each constituent carries its embedding into GF(p)^n and
/// the outcome of is_irreducible().
inline std::vector<GModule> permutation_module_constituents(const PermGroup& g, gf_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::ParameterOutOfRange, std::to_string(p) + " is not prime");
  if (g.order() % p == 0)
    throw Error(ErrorCode::ModularCharacteristic, std::to_string(p) + " divides the group order " + std::to_string(g.order()));
  GModule v = permutation_module(g, p);
  std::vector<GModule> out;
  detail::split_semisimple(v, element_matrices(v), out);
  for (auto& c : out) {
    auto verdict = is_irreducible(c);
    if (!verdict.irreducible) throw Error(ErrorCode::OrderMismatch, "constituent failed the irreducibility check");
    c.irreducible_certified = verdict.certified;
  }
  return out;
}

struct T1BoundReport {
  Permutation element;
  gf_t p = 0;
  std::size_t dim = 0;
  std::size_t fixed_dim = 0;
  double ratio = 0.0;  // fixed_dim / dim
  bool holds = true;
};

/// For G solvable with G = <a^G>, acting irreducibly and nontrivially on V:
/// 4 dim C_V(a) <= 3 dim V.
inline T1BoundReport check_t1_bound(const GModule& m, const Permutation& a) {
  if (!is_solvable(m.group)) throw Error(ErrorCode::HypothesisNotMet, "group is not solvable");
  if (normal_closure_group(m.group, cyclic_subgroup(a)).order() != m.group.order())
    throw Error(ErrorCode::HypothesisNotMet, "normal closure of the element is not the whole group");
  auto verdict = is_irreducible(m);
  if (!verdict.irreducible) throw Error(ErrorCode::HypothesisNotMet, "module is reducible");
  if (m.trivial_action) throw Error(ErrorCode::HypothesisNotMet, "action is trivial");
  T1BoundReport r;
  r.element = a;
  r.p = m.p;
  r.dim = m.dim;
  r.fixed_dim = fixed_space_dim(m, a);
  r.ratio = static_cast<double>(r.fixed_dim) / static_cast<double>(r.dim);
  r.holds = 4 * r.fixed_dim <= 3 * r.dim;
  if (!r.holds)
    throw Error(ErrorCode::TheoremViolationSuspected, "fixed space of " + a.to_string() + " has dimension " +
                                                          std::to_string(r.fixed_dim) + " in a module of dimension " +
                                                          std::to_string(r.dim));
  return r;
}

}  // namespace solrad
