#include <catch_amalgamated.hpp>

#include <random>

#include "oracle.hpp"
#include "solrad/catalog.hpp"
#include "solrad/series.hpp"

using namespace solrad;

namespace {

Permutation P(std::string_view s, std::size_t n) { return parse_permutation(s, n); }

PermGroup G(std::size_t n, std::initializer_list<std::string_view> gens) {
  std::vector<Permutation> g;
  for (auto s : gens) g.push_back(P(s, n));
  return group_from_generators(g);
}

std::vector<PermGroup> small_corpus(std::uint64_t bound) {
  std::vector<PermGroup> out;
  for (const auto& s : default_corpus()) {
    PermGroup g = build(s);
    if (g.order() <= bound) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

TEST_CASE("commutator subgroup examples", "[series]") {
  PermGroup s4 = build("sym:4"), a4 = build("alt:4"), c6 = build("cyclic:6");
  CHECK(same_group(commutator_subgroup(s4, s4, s4).group(), a4));
  CHECK(commutator_subgroup(a4, a4, a4).order() == 4);
  CHECK(commutator_subgroup(c6, c6, c6).order() == 1);
}

TEST_CASE("commutator subgroups agree with all-commutator enumeration", "[series][oracle]") {
  std::mt19937_64 rng(1);
  for (const auto& g : small_corpus(2000)) {
    auto all = oracle::closure(g.generators(), g.degree());
    CHECK(derived_subgroup(g).order() == oracle::commutators(all, all, g.degree()).size());
    for (int t = 0; t < 3; ++t) {
      PermGroup a(g.degree(), {g.random_element(rng)});
      PermGroup b(g.degree(), {g.random_element(rng), g.random_element(rng)});
      if (a.order() * b.order() > 20000) continue;
      auto ea = oracle::closure(a.generators(), g.degree()), eb = oracle::closure(b.generators(), g.degree());
      CHECK(commutator_subgroup(g, a, b).order() == oracle::commutators(ea, eb, g.degree()).size());
    }
  }
}

TEST_CASE("derived series examples", "[series]") {
  CHECK(derived_series(build("sym:4")).orders() == std::vector<std::uint64_t>{24, 12, 4, 1});
  CHECK(derived_series(build("sym:5")).orders() == std::vector<std::uint64_t>{120, 60, 60});
  CHECK(derived_series(build("cyclic:7")).orders() == std::vector<std::uint64_t>{7, 1});
  CHECK(derived_series(build("sym:4")).stabilized);
}

TEST_CASE("solvability examples", "[series]") {
  CHECK(is_solvable(build("sym:4")));
  CHECK_FALSE(is_solvable(build("alt:5")));
  CHECK_FALSE(is_solvable(G(5, {"(1 2)", "(2 3)", "(3 4)", "(4 5)"})));
}

TEST_CASE("lower central series examples", "[series]") {
  auto d4 = lower_central_series(build("dihedral:4"));
  CHECK(is_nilpotent(build("dihedral:4")));
  CHECK(d4.orders() == std::vector<std::uint64_t>{8, 2, 1});
  auto s3 = lower_central_series(build("sym:3"));
  CHECK(s3.last().order() == 3);
  CHECK_FALSE(is_nilpotent(build("sym:3")));
  CHECK(is_nilpotent(build("cyclic:12")));
}

TEST_CASE("solvability and nilpotency agree with naive series", "[series][oracle]") {
  for (const auto& g : small_corpus(2000)) {
    auto all = oracle::closure(g.generators(), g.degree());
    CHECK(is_solvable(g) == oracle::solvable(all, g.degree()));
    CHECK(is_nilpotent(g) == oracle::nilpotent(all, g.degree()));
    auto ds = derived_series(g).orders();
    auto ref = oracle::derived_orders(all, g.degree());
    CHECK(std::vector<std::size_t>(ds.begin(), ds.end()) == ref);
  }
}

TEST_CASE("nilpotent residual", "[series]") {
  PermGroup s4 = build("sym:4"), a4 = build("alt:4");
  CHECK(same_group(nilpotent_residual(s4).group(), a4));
  CHECK(nilpotent_residual(a4).order() == 4);
  CHECK(nilpotent_residual(build("dihedral:8")).order() == 1);
  PermGroup v4 = G(4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  CHECK(same_group(nilpotent_residual(build("dihedral:4"), build("dihedral:4")).group(), build("dihedral:4")));
  CHECK(same_group(nilpotent_residual(s4, v4).group(), a4));
  CHECK_THROWS_AS(nilpotent_residual(s4, cyclic_subgroup(P("(1 2)", 4))), Error);
  for (const auto& g : small_corpus(2000)) {
    SubgroupHandle r = nilpotent_residual(g);
    CHECK(same_group(r.group(), lower_central_series(g).last().group()));
    // Relative to its own residual the computation stops at once.
    CHECK(nilpotent_residual(g, r.group()).order() == r.order());
  }
}

TEST_CASE("Fitting subgroup and solvable radical examples", "[series]") {
  CHECK(fitting_subgroup(build("sym:4")).order() == 4);
  CHECK(fitting_subgroup(build("alt:5")).order() == 1);
  CHECK(fitting_subgroup(build("direct:cyclic:6,sym:3")).order() == 18);
  CHECK(solvable_radical(build("sym:4")).order() == 24);
  CHECK(solvable_radical(build("alt:5")).order() == 1);
  SubgroupHandle r = solvable_radical(build("direct:sym:3,alt:5"));
  CHECK(r.order() == 6);
  CHECK(same_group(r.group(), G(8, {"(1 2)", "(1 2 3)"})));
}

TEST_CASE("F and R: structure and elementwise characterization", "[series][oracle]") {
  for (const auto& g : small_corpus(2000)) {
    auto classes = conjugacy_classes(g);
    SubgroupHandle f = fitting_subgroup(g, classes), r = solvable_radical(g, classes);
    CHECK(is_nilpotent(f.group()));
    CHECK(is_solvable(r.group()));
    CHECK(is_normal_in(g, f.group()));
    CHECK(is_normal_in(g, r.group()));
    CHECK(is_subgroup(f.group(), r.group()));
    g.for_each_element([&](const Permutation& x) {
      PermGroup n = normal_closure_group(g, cyclic_subgroup(x));
      REQUIRE(f.contains(x) == is_nilpotent(n));
      REQUIRE(r.contains(x) == is_solvable(n));
    });
  }
}

TEST_CASE("F and R contain every normal nilpotent / solvable subgroup", "[series][oracle]") {
  for (const auto& g : small_corpus(500)) {
    auto all = oracle::closure(g.generators(), g.degree());
    auto normals = oracle::normal_subgroups(all);
    SubgroupHandle f = fitting_subgroup(g), r = solvable_radical(g);
    for (const auto& n : normals) {
      if (oracle::nilpotent(n, g.degree()))
        for (const auto& x : n) REQUIRE(f.contains(x));
      if (oracle::solvable(n, g.degree()))
        for (const auto& x : n) REQUIRE(r.contains(x));
    }
  }
}

TEST_CASE("the quotient by the radical has trivial radical", "[series][oracle]") {
  for (const char* spec : {"direct:sym:3,alt:5", "sym:5", "alt:6", "psl2:7", "sym:4"}) {
    PermGroup g = build(spec);
    SubgroupHandle r = solvable_radical(g);
    auto all = oracle::closure(g.generators(), g.degree());
    auto q = oracle::coset_action(all, oracle::closure(r.generators(), g.degree()), g.generators());
    PermGroup quotient(g.order() / r.order(), q);
    CHECK(quotient.order() == g.order() / r.order());
    CHECK(solvable_radical(quotient).order() == 1);
  }
}
