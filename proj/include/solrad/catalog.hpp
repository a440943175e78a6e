#pragma once

// Named constructors for the small groups the verification corpus is built
// from, the text spec syntax used on the command line, and the group file
// format.

#include <cstdint>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "solrad/error.hpp"
#include "solrad/group.hpp"
#include "solrad/numeric.hpp"
#include "solrad/perm.hpp"

namespace solrad {

enum class GroupKind { sym, alt, cyclic, dihedral, psl2, frobenius20, sl23, gl23, direct, wreath_small, file };

struct GroupSpec {
  GroupKind kind = GroupKind::sym;
  std::uint64_t n = 0;                         // parameter of sym/alt/cyclic/dihedral/psl2
  std::vector<std::shared_ptr<const GroupSpec>> factors;  // direct, wreath_small
  std::string path;                            // file
};

inline constexpr std::uint64_t kProductOrderBound = 100000;

inline std::string to_string(const GroupSpec& s) {
  auto nested = [](const GroupSpec& f) {
    std::string t = to_string(f);
    return (f.kind == GroupKind::direct || f.kind == GroupKind::wreath_small) ? "(" + t + ")" : t;
  };
  switch (s.kind) {
    case GroupKind::sym: return "sym:" + std::to_string(s.n);
    case GroupKind::alt: return "alt:" + std::to_string(s.n);
    case GroupKind::cyclic: return "cyclic:" + std::to_string(s.n);
    case GroupKind::dihedral: return "dihedral:" + std::to_string(s.n);
    case GroupKind::psl2: return "psl2:" + std::to_string(s.n);
    case GroupKind::frobenius20: return "frobenius20";
    case GroupKind::sl23: return "sl23";
    case GroupKind::gl23: return "gl23";
    case GroupKind::direct: return "direct:" + nested(*s.factors[0]) + "," + nested(*s.factors[1]);
    case GroupKind::wreath_small: return "wreath_small:" + nested(*s.factors[0]) + "," + nested(*s.factors[1]);
    case GroupKind::file: return "file:" + s.path;
  }
  return "?";
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::string_view strip_parens(std::string_view s) {
  s = trim(s);
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    int depth = 0;
    bool outer = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      depth += s[i] == '(' ? 1 : s[i] == ')' ? -1 : 0;
      if (depth == 0 && i + 1 < s.size()) {
        outer = false;
        break;
      }
    }
    if (!outer) break;
    s = trim(s.substr(1, s.size() - 2));
  }
  return s;
}

inline std::uint64_t parse_count(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (s.empty() || s.size() > 9) throw Error(ErrorCode::ParameterOutOfRange, "bad parameter in \"" + std::string(whole) + "\"");
  std::uint64_t v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error(ErrorCode::ParameterOutOfRange, "bad parameter in \"" + std::string(whole) + "\"");
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

}  // namespace detail

/// Parses `sym:5`, `psl2:7`, `direct:sym:3,alt:5`, `wreath_small:sym:3,cyclic:2`,
/// `file:path.grp`, `frobenius20`, `sl23`, `gl23`. Nested products put the
/// first factor in parentheses: `direct:(direct:sym:2,sym:3),alt:5`.
inline GroupSpec parse_group_spec(std::string_view text) {
  std::string_view s = detail::strip_parens(text);
  GroupSpec spec;
  auto colon = s.find(':');
  std::string_view head = detail::trim(s.substr(0, colon));
  std::string_view rest = colon == std::string_view::npos ? std::string_view{} : s.substr(colon + 1);

  if (head == "file") {
    spec.kind = GroupKind::file;
    spec.path = std::string(detail::trim(rest));
    if (spec.path.empty()) throw Error(ErrorCode::ParameterOutOfRange, "file spec needs a path");
    return spec;
  }
  if (head == "direct" || head == "wreath_small") {
    spec.kind = head == "direct" ? GroupKind::direct : GroupKind::wreath_small;
    int depth = 0;
    std::size_t split = std::string_view::npos;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (rest[i] == '(') ++depth;
      if (rest[i] == ')') --depth;
      if (rest[i] == ',' && depth == 0) {
        split = i;
        break;
      }
    }
    if (split == std::string_view::npos)
      throw Error(ErrorCode::ParameterOutOfRange, "product spec needs two factors: \"" + std::string(text) + "\"");
    spec.factors.push_back(std::make_shared<const GroupSpec>(parse_group_spec(rest.substr(0, split))));
    spec.factors.push_back(std::make_shared<const GroupSpec>(parse_group_spec(rest.substr(split + 1))));
    return spec;
  }
  if (head == "frobenius20" || head == "sl23" || head == "gl23") {
    if (!detail::trim(rest).empty()) throw Error(ErrorCode::ParameterOutOfRange, std::string(head) + " takes no parameter");
    spec.kind = head == "frobenius20" ? GroupKind::frobenius20 : head == "sl23" ? GroupKind::sl23 : GroupKind::gl23;
    return spec;
  }
  if (head == "sym") spec.kind = GroupKind::sym;
  else if (head == "alt") spec.kind = GroupKind::alt;
  else if (head == "cyclic") spec.kind = GroupKind::cyclic;
  else if (head == "dihedral") spec.kind = GroupKind::dihedral;
  else if (head == "psl2") spec.kind = GroupKind::psl2;
  else throw Error(ErrorCode::ParameterOutOfRange, "unknown group kind \"" + std::string(head) + "\"");
  spec.n = detail::parse_count(rest, text);
  return spec;
}

namespace detail {

inline Permutation cycle_on(std::size_t degree, std::size_t first, std::size_t length) {
  std::vector<point_t> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<point_t>(i);
  for (std::size_t i = 0; i < length; ++i) img[first + i] = static_cast<point_t>(first + (i + 1) % length);
  return Permutation::from_images(std::move(img));
}

inline std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Permutation shifted(const Permutation& p, std::size_t offset, std::size_t degree) {
  std::vector<point_t> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<point_t>(i);
  for (std::size_t i = 0; i < p.degree(); ++i) img[offset + i] = static_cast<point_t>(offset + p[i]);
  return Permutation::from_images(std::move(img));
}

// Nonzero vectors of GF(3)^2 as points; matrices act on rows.
inline Permutation gf3_matrix_action(int a, int b, int c, int d) {
  std::vector<std::pair<int, int>> pts;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      if (x || y) pts.emplace_back(x, y);
  std::vector<point_t> img(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto [x, y] = pts[i];
    std::pair<int, int> w{(x * a + y * c) % 3, (x * b + y * d) % 3};
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (pts[j] == w) img[i] = static_cast<point_t>(j);
  }
  return Permutation::from_images(std::move(img));
}

}  // namespace detail

PermGroup load_group_file(const std::string& path);

inline std::uint64_t expected_order(const GroupSpec& s, const std::vector<PermGroup>& factors) {
  switch (s.kind) {
    case GroupKind::sym: return detail::factorial(s.n);
    case GroupKind::alt: return s.n < 2 ? 1 : detail::factorial(s.n) / 2;
    case GroupKind::cyclic: return s.n;
    case GroupKind::dihedral: return 2 * s.n;
    case GroupKind::psl2: return s.n * (s.n * s.n - 1) / 2;
    case GroupKind::frobenius20: return 20;
    case GroupKind::sl23: return 24;
    case GroupKind::gl23: return 48;
    case GroupKind::direct: return factors[0].order() * factors[1].order();
    case GroupKind::wreath_small: {
      std::uint64_t o = factors[1].order();
      for (std::size_t i = 0; i < factors[1].degree(); ++i) o *= factors[0].order();
      return o;
    }
    case GroupKind::file: return 0;
  }
  return 0;
}

/// Builds the group and checks its order against the closed form for its
/// kind (OrderMismatch on disagreement).
inline PermGroup build(const GroupSpec& s) {
  auto range = [&](std::uint64_t lo, std::uint64_t hi) {
    if (s.n < lo || s.n > hi)
      throw Error(ErrorCode::ParameterOutOfRange,
                  to_string(s) + ": parameter must lie in " + std::to_string(lo) + ".." + std::to_string(hi));
  };
  std::vector<PermGroup> factors;
  std::vector<Permutation> gens;
  std::size_t degree = 0;
  switch (s.kind) {
    case GroupKind::sym:
      range(1, 8);
      degree = s.n;
      if (s.n >= 2) gens = {detail::cycle_on(degree, 0, 2), detail::cycle_on(degree, 0, degree)};
      break;
    case GroupKind::alt:
      range(1, 8);
      degree = s.n;
      for (std::size_t i = 2; i < degree; ++i) {
        std::vector<point_t> img(degree);
        for (std::size_t j = 0; j < degree; ++j) img[j] = static_cast<point_t>(j);
        img[0] = 1;
        img[1] = static_cast<point_t>(i);
        img[i] = 0;
        gens.push_back(Permutation::from_images(std::move(img)));
      }
      break;
    case GroupKind::cyclic:
      range(1, 64);
      degree = s.n;
      if (s.n >= 2) gens = {detail::cycle_on(degree, 0, degree)};
      break;
    case GroupKind::dihedral: {
      range(3, 64);
      degree = s.n;
      std::vector<point_t> refl(degree);
      for (std::size_t i = 0; i < degree; ++i) refl[i] = static_cast<point_t>(degree - 1 - i);
      gens = {detail::cycle_on(degree, 0, degree), Permutation::from_images(std::move(refl))};
      break;
    }
    case GroupKind::psl2: {
      if (s.n != 5 && s.n != 7 && s.n != 11 && s.n != 13)
        throw Error(ErrorCode::ParameterOutOfRange, to_string(s) + ": p must be one of 5, 7, 11, 13");
      const std::uint64_t p = s.n;
      degree = p + 1;  // 0..p-1 field elements, p is infinity
      std::vector<point_t> t(degree), w(degree);
      for (std::uint64_t x = 0; x < p; ++x) t[x] = static_cast<point_t>((x + 1) % p);
      t[p] = static_cast<point_t>(p);
      w[0] = static_cast<point_t>(p);
      w[p] = 0;
      for (std::uint64_t x = 1; x < p; ++x) {
        std::uint64_t inv = 1;
        while (inv * x % p != 1) ++inv;
        w[x] = static_cast<point_t>((p - inv) % p);
      }
      gens = {Permutation::from_images(std::move(t)), Permutation::from_images(std::move(w))};
      break;
    }
    case GroupKind::frobenius20: {
      degree = 5;
      std::vector<point_t> dbl(5);
      for (std::size_t x = 0; x < 5; ++x) dbl[x] = static_cast<point_t>(2 * x % 5);
      gens = {detail::cycle_on(5, 0, 5), Permutation::from_images(std::move(dbl))};
      break;
    }
    case GroupKind::sl23:
    case GroupKind::gl23:
      degree = 8;
      gens = {detail::gf3_matrix_action(1, 1, 0, 1), detail::gf3_matrix_action(1, 0, 1, 1)};
      if (s.kind == GroupKind::gl23) gens.push_back(detail::gf3_matrix_action(2, 0, 0, 1));
      break;
    case GroupKind::direct: {
      factors = {build(*s.factors[0]), build(*s.factors[1])};
      if (factors[0].order() * factors[1].order() > kProductOrderBound)
        throw Error(ErrorCode::ParameterOutOfRange, to_string(s) + ": product order exceeds bound");
      degree = factors[0].degree() + factors[1].degree();
      for (const auto& g : factors[0].generators()) gens.push_back(detail::shifted(g, 0, degree));
      for (const auto& g : factors[1].generators()) gens.push_back(detail::shifted(g, factors[0].degree(), degree));
      break;
    }
    case GroupKind::wreath_small: {
      factors = {build(*s.factors[0]), build(*s.factors[1])};
      const std::size_t da = factors[0].degree(), db = factors[1].degree();
      if (expected_order(s, factors) > kProductOrderBound || da * db > 65535)
        throw Error(ErrorCode::ParameterOutOfRange, to_string(s) + ": wreath product exceeds bound");
      degree = da * db;
      for (std::size_t block = 0; block < db; ++block)
        for (const auto& g : factors[0].generators()) gens.push_back(detail::shifted(g, block * da, degree));
      for (const auto& h : factors[1].generators()) {
        std::vector<point_t> img(degree);
        for (std::size_t block = 0; block < db; ++block)
          for (std::size_t i = 0; i < da; ++i) img[block * da + i] = static_cast<point_t>(h[block] * da + i);
        gens.push_back(Permutation::from_images(std::move(img)));
      }
      break;
    }
    case GroupKind::file:
      return load_group_file(s.path);
  }
  PermGroup g(degree, gens);
  const std::uint64_t want = expected_order(s, factors);
  if (g.order() != want)
    throw Error(ErrorCode::OrderMismatch,
                to_string(s) + ": built order " + std::to_string(g.order()) + ", expected " + std::to_string(want));
  return g;
}

inline PermGroup build(std::string_view spec) { return build(parse_group_spec(spec)); }

/// Group file text: `degree N`, then one generator per line.
inline std::string format_group_file(const PermGroup& g) {
  std::string out = "degree " + std::to_string(g.degree()) + "\n";
  for (const auto& x : g.generator_list()) out += x.to_string() + "\n";
  return out;
}

inline PermGroup parse_group_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::size_t degree = 0;
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (degree == 0) {
      if (t.substr(0, 6) != "degree")
        throw Error(ErrorCode::MalformedFile, "line " + std::to_string(lineno) + ": expected \"degree N\"");
      try {
        degree = detail::parse_count(t.substr(6), t);
      } catch (const Error&) {
        degree = 0;
      }
      if (degree == 0 || degree > 65535)
        throw Error(ErrorCode::MalformedFile, "line " + std::to_string(lineno) + ": bad degree");
      continue;
    }
    try {
      gens.push_back(parse_permutation(t, degree));
    } catch (const Error& e) {
      throw Error(ErrorCode::MalformedFile, "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (degree == 0) throw Error(ErrorCode::MalformedFile, "missing \"degree N\" header");
  if (gens.empty()) throw Error(ErrorCode::EmptyGeneratorList, "group file lists no generators");
  return PermGroup(degree, gens);
}

inline PermGroup load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_group_text(buf.str());
}

/// The fixed verification corpus.
inline std::vector<std::string> default_corpus() {
  std::vector<std::string> c;
  for (int n = 3; n <= 6; ++n) c.push_back("sym:" + std::to_string(n));
  for (int n = 4; n <= 6; ++n) c.push_back("alt:" + std::to_string(n));
  for (int n = 2; n <= 12; ++n) c.push_back("cyclic:" + std::to_string(n));
  for (int n = 3; n <= 8; ++n) c.push_back("dihedral:" + std::to_string(n));
  c.push_back("frobenius20");
  c.push_back("sl23");
  c.push_back("gl23");
  for (int p : {5, 7, 11, 13}) c.push_back("psl2:" + std::to_string(p));
  c.push_back("direct:sym:3,alt:5");
  c.push_back("direct:sym:4,sym:3");
  c.push_back("wreath_small:sym:3,cyclic:2");
  return c;
}

}  // namespace solrad
