#pragma once

// Permutations on {0, ..., n-1} stored as image sequences. Externally, and in
// every string form, points are 1-based.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "solrad/error.hpp"

namespace solrad {

using point_t = std::uint16_t;

class Permutation {
 public:
  Permutation() = default;

  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), point_t{0});
  }

  /// From 0-based images; throws if `images` is not a bijection.
  static Permutation from_images(std::vector<point_t> images) {
    std::vector<bool> seen(images.size(), false);
    for (point_t x : images) {
      if (x >= images.size())
        throw Error(ErrorCode::PointOutOfRange, "image " + std::to_string(x + 1) + " exceeds degree");
      if (seen[x]) throw Error(ErrorCode::MalformedCycle, "images do not form a bijection");
      seen[x] = true;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  std::size_t degree() const noexcept { return images_.size(); }
  point_t operator[](std::size_t x) const noexcept { return images_[x]; }
  std::span<const point_t> images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  std::optional<point_t> smallest_moved_point() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return static_cast<point_t>(i);
    return std::nullopt;
  }

  Permutation inverse() const {
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<point_t>(i);
    return r;
  }

  /// `a * b` applies `a` first, then `b`.
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw Error(ErrorCode::DegreeMismatch, "composing permutations of different degree");
    Permutation r;
    r.images_.resize(a.images_.size());
    for (std::size_t i = 0; i < a.images_.size(); ++i) r.images_[i] = b.images_[a.images_[i]];
    return r;
  }

  Permutation pow(std::int64_t e) const {
    Permutation base = e < 0 ? inverse() : *this;
    std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
    Permutation acc(degree());
    while (n != 0) {
      if (n & 1u) acc = acc * base;
      base = base * base;
      n >>= 1u;
    }
    return acc;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

  /// Disjoint cycles of length >= 2, each starting at its least point, sorted
  /// by that point.
  std::vector<std::vector<point_t>> cycles() const {
    std::vector<std::vector<point_t>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      std::vector<point_t> cyc;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        cyc.push_back(static_cast<point_t>(j));
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  /// Canonical 1-based cycle notation; identity is "()".
  std::string to_string() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::string s;
    for (const auto& c : cs) {
      s += '(';
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (k) s += ' ';
        s += std::to_string(c[k] + 1);
      }
      s += ')';
    }
    return s;
  }

  std::size_t hash() const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (point_t x : images_) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }

 private:
  std::vector<point_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept { return p.hash(); }
};

/// g^h = h^-1 g h.
inline Permutation conjugate(const Permutation& g, const Permutation& h) { return h.inverse() * g * h; }

/// [a, b] = a^-1 b^-1 a b.
inline Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

inline std::uint64_t element_order(const Permutation& p) {
  std::uint64_t m = 1;
  for (const auto& c : p.cycles()) m = std::lcm(m, static_cast<std::uint64_t>(c.size()));
  return m;
}

/// Parses disjoint-cycle notation such as "(1 2)(3 4 5)"; separators may be
/// whitespace or commas, "()" is the identity.
inline Permutation parse_permutation(std::string_view text, std::size_t degree) {
  if (degree == 0 || degree > 65535) throw Error(ErrorCode::PointOutOfRange, "degree must be in 1..65535");
  std::vector<point_t> images(degree);
  std::iota(images.begin(), images.end(), point_t{0});
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (i == text.size()) throw Error(ErrorCode::MalformedCycle, "empty permutation text");

  while (true) {
    skip_space();
    if (i == text.size()) break;
    if (text[i] != '(') throw Error(ErrorCode::MalformedCycle, "expected '(' in \"" + std::string(text) + "\"");
    ++i;
    std::vector<point_t> cyc;
    bool closed = false;
    while (i < text.size()) {
      char ch = text[i];
      if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
        ++i;
      } else if (ch == ')') {
        ++i;
        closed = true;
        break;
      } else if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::uint64_t v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
          if (v > 1000000) break;
          ++i;
        }
        if (v == 0 || v > degree)
          throw Error(ErrorCode::PointOutOfRange, "point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
        auto pt = static_cast<point_t>(v - 1);
        if (used[pt]) throw Error(ErrorCode::MalformedCycle, "point " + std::to_string(v) + " repeated");
        used[pt] = true;
        cyc.push_back(pt);
      } else {
        throw Error(ErrorCode::MalformedCycle, std::string("unexpected character '") + ch + "'");
      }
    }
    if (!closed) throw Error(ErrorCode::MalformedCycle, "unbalanced parentheses in \"" + std::string(text) + "\"");
    for (std::size_t k = 0; k + 1 < cyc.size(); ++k) images[cyc[k]] = cyc[k + 1];
    if (cyc.size() > 1) images[cyc.back()] = cyc.front();
  }
  return Permutation::from_images(std::move(images));
}

}  // namespace solrad
