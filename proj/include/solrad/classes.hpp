#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "solrad/group.hpp"

namespace solrad {

struct ConjugacyClass {
  Permutation representative;          // lexicographically least member
  std::vector<Permutation> elements;   // sorted
  std::size_t size() const noexcept { return elements.size(); }

  /// Position of `p` in `elements`, or -1.
  std::ptrdiff_t index_of(const Permutation& p) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), p);
    if (it == elements.end() || *it != p) return -1;
    return it - elements.begin();
  }
};

/// Orbit of `x` under conjugation by `g`, as a class with sorted members.
inline ConjugacyClass conjugacy_class_of(const PermGroup& g, const Permutation& x,
                                         std::uint64_t bound = kEnumerationBound) {
  std::unordered_set<Permutation, PermutationHash> seen{x};
  std::vector<Permutation> queue{x};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& y : g.generators()) {
      Permutation c = conjugate(queue[i], y);
      if (seen.insert(c).second) {
        if (seen.size() > bound) throw Error(ErrorCode::GroupTooLarge, "conjugacy class exceeds enumeration bound");
        queue.push_back(std::move(c));
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  ConjugacyClass cls;
  cls.representative = queue.front();
  cls.elements = std::move(queue);
  return cls;
}

/// All conjugacy classes by explicit orbit enumeration, ordered by their
/// representatives (so the identity class comes first).
inline std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g, std::uint64_t bound = kEnumerationBound) {
  if (g.order() > bound)
    throw Error(ErrorCode::GroupTooLarge,
                "order " + std::to_string(g.order()) + " exceeds class enumeration bound " + std::to_string(bound));
  std::vector<Permutation> elems = g.elements(bound);
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  index.reserve(elems.size() * 2);
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);

  std::vector<bool> done(elems.size(), false);
  std::vector<ConjugacyClass> out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (done[i]) continue;
    std::vector<Permutation> orbit{elems[i]};
    done[i] = true;
    for (std::size_t j = 0; j < orbit.size(); ++j) {
      for (const auto& y : g.generators()) {
        Permutation c = conjugate(orbit[j], y);
        std::size_t k = index.at(c);
        if (!done[k]) {
          done[k] = true;
          orbit.push_back(std::move(c));
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    ConjugacyClass cls;
    cls.representative = orbit.front();
    cls.elements = std::move(orbit);
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(),
            [](const ConjugacyClass& a, const ConjugacyClass& b) { return a.representative < b.representative; });
  return out;
}

/// Centre computed elementwise: elements commuting with every generator.
inline PermGroup center(const PermGroup& g) {
  PermGroup z = PermGroup::trivial(g.degree());
  g.for_each_element([&](const Permutation& x) {
    for (const auto& y : g.generators())
      if (x * y != y * x) return;
    if (!z.contains(x)) z = z.with_generators({x});
  });
  return z;
}

}  // namespace solrad
