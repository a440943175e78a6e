#pragma once

// Brute-force reference computations on explicit element lists. Only
// Permutation arithmetic is shared with the library; no chains, no lattices.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "solrad/perm.hpp"

namespace oracle {

using solrad::Permutation;
using Elems = std::vector<Permutation>;  // sorted, duplicate free

inline Permutation identity(std::size_t degree) { return Permutation(degree); }

inline bool has(const Elems& s, const Permutation& x) { return std::binary_search(s.begin(), s.end(), x); }

inline bool subset(const Elems& a, const Elems& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

/// All products of the generators, by breadth-first search.
inline Elems closure(const std::vector<Permutation>& gens, std::size_t degree) {
  std::unordered_set<Permutation, solrad::PermutationHash> seen{identity(degree)};
  std::deque<Permutation> queue{identity(degree)};
  while (!queue.empty()) {
    Permutation x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Permutation y = x * g;
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  Elems out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

inline Elems intersect(const Elems& a, const Elems& b) {
  Elems out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::vector<Elems> classes(const Elems& g) {
  std::vector<Elems> out;
  std::unordered_set<Permutation, solrad::PermutationHash> done;
  for (const auto& x : g) {
    if (done.count(x)) continue;
    std::unordered_set<Permutation, solrad::PermutationHash> cls;
    for (const auto& h : g) cls.insert(h.inverse() * x * h);
    Elems c(cls.begin(), cls.end());
    std::sort(c.begin(), c.end());
    done.insert(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

/// Subgroup generated by every commutator [x, y], x in A, y in B.
inline Elems commutators(const Elems& a, const Elems& b, std::size_t degree) {
  std::unordered_set<Permutation, solrad::PermutationHash> comms;
  for (const auto& x : a)
    for (const auto& y : b) comms.insert(x.inverse() * y.inverse() * x * y);
  return closure(std::vector<Permutation>(comms.begin(), comms.end()), degree);
}

inline bool solvable(Elems g, std::size_t degree) {
  while (g.size() > 1) {
    Elems d = commutators(g, g, degree);
    if (d.size() == g.size()) return false;
    g = std::move(d);
  }
  return true;
}

inline bool nilpotent(const Elems& g, std::size_t degree) {
  Elems cur = g;
  while (cur.size() > 1) {
    Elems next = commutators(cur, g, degree);
    if (next.size() == cur.size()) return false;
    cur = std::move(next);
  }
  return true;
}

inline std::vector<std::size_t> derived_orders(Elems g, std::size_t degree) {
  std::vector<std::size_t> o{g.size()};
  while (g.size() > 1) {
    Elems d = commutators(g, g, degree);
    o.push_back(d.size());
    if (d.size() == g.size()) break;
    g = std::move(d);
  }
  return o;
}

inline Elems normal_closure(const Elems& g, const std::vector<Permutation>& s, std::size_t degree) {
  std::unordered_set<Permutation, solrad::PermutationHash> conj;
  for (const auto& x : s)
    for (const auto& h : g) conj.insert(h.inverse() * x * h);
  return closure(std::vector<Permutation>(conj.begin(), conj.end()), degree);
}

inline bool is_normal(const Elems& g, const Elems& n) {
  for (const auto& x : n)
    for (const auto& h : g)
      if (!has(n, h.inverse() * x * h)) return false;
  return true;
}

inline Elems center(const Elems& g) {
  Elems z;
  for (const auto& x : g) {
    bool central = true;
    for (const auto& h : g)
      if (x * h != h * x) {
        central = false;
        break;
      }
    if (central) z.push_back(x);
  }
  return z;
}

/// Every normal subgroup, found as the unions of classes (containing the
/// identity) that are closed under multiplication. Sorted by order.
inline std::vector<Elems> normal_subgroups(const Elems& g) {
  auto cls = classes(g);  // cls[0] is the class of the first element; find identity's
  std::size_t id_class = 0;
  for (std::size_t i = 0; i < cls.size(); ++i)
    if (cls[i].front().is_identity()) id_class = i;
  std::vector<Elems> rest;
  for (std::size_t i = 0; i < cls.size(); ++i)
    if (i != id_class) rest.push_back(cls[i]);
  if (rest.size() > 22) throw std::length_error("too many classes for subset enumeration");

  std::vector<Elems> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rest.size()); ++mask) {
    std::size_t size = 1;
    for (std::size_t i = 0; i < rest.size(); ++i)
      if (mask >> i & 1u) size += rest[i].size();
    if (g.size() % size != 0) continue;
    Elems u = cls[id_class];
    for (std::size_t i = 0; i < rest.size(); ++i)
      if (mask >> i & 1u) u.insert(u.end(), rest[i].begin(), rest[i].end());
    std::sort(u.begin(), u.end());
    bool closed = true;
    for (std::size_t i = 0; i < u.size() && closed; ++i)
      for (std::size_t j = 0; j < u.size() && closed; ++j) closed = has(u, u[i] * u[j]);
    if (closed) out.push_back(std::move(u));
  }
  std::stable_sort(out.begin(), out.end(), [](const Elems& a, const Elems& b) { return a.size() < b.size(); });
  return out;
}

/// Largest normal subgroup satisfying `pred`, scanning the list of all normal
/// subgroups.
template <class Pred>
Elems largest_normal(const std::vector<Elems>& normals, Pred pred) {
  Elems best = normals.front();
  for (const auto& n : normals)
    if (n.size() > best.size() && pred(n)) best = n;
  return best;
}

/// Action of G on the right cosets Nx, as permutations of the coset list.
/// Returns the images of `gens` on |G:N| points.
inline std::vector<Permutation> coset_action(const Elems& g, const Elems& n, const std::vector<Permutation>& gens) {
  auto key = [&](const Permutation& x) {
    Permutation best = n.front() * x;
    for (const auto& y : n) best = std::min(best, y * x);
    return best;
  };
  Elems keys;
  for (const auto& x : g) keys.push_back(key(x));
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  if (keys.size() > 65535) throw std::length_error("index too large");
  std::vector<Permutation> out;
  for (const auto& h : gens) {
    std::vector<solrad::point_t> img(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
      auto it = std::lower_bound(keys.begin(), keys.end(), key(keys[i] * h));
      img[i] = static_cast<solrad::point_t>(it - keys.begin());
    }
    out.push_back(Permutation::from_images(std::move(img)));
  }
  return out;
}

/// Fitting height by fh(G) = 1 + fh(G / F(G)), with F(G) found among all
/// normal subgroups and the quotient built as a coset action.
inline std::size_t fitting_height(const std::vector<Permutation>& gens, std::size_t degree) {
  Elems g = closure(gens, degree);
  if (g.size() == 1) return 0;
  if (!solvable(g, degree)) throw std::domain_error("not solvable");
  auto normals = normal_subgroups(g);
  Elems f = largest_normal(normals, [&](const Elems& n) { return nilpotent(n, degree); });
  auto q = coset_action(g, f, gens);
  return 1 + fitting_height(q, g.size() / f.size());
}

/// Fitting height of G/N through the coset action.
inline std::size_t fitting_height_mod(const std::vector<Permutation>& gens, std::size_t degree, const Elems& n) {
  Elems g = closure(gens, degree);
  return fitting_height(coset_action(g, n, gens), g.size() / n.size());
}

/// Generators of G as an element list, for closure calls.
inline std::vector<Permutation> as_gens(const Elems& e) { return e; }

}  // namespace oracle
