#include <catch_amalgamated.hpp>

#include "oracle.hpp"
#include "solrad/catalog.hpp"
#include "solrad/criterion.hpp"

using namespace solrad;

namespace {

Permutation P(std::string_view s, std::size_t n) { return parse_permutation(s, n); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::IoError;
}

ConjugacyClass class_of(const PermGroup& g, std::string_view rep) { return conjugacy_class_of(g, P(rep, g.degree())); }

}  // namespace

TEST_CASE("k-conjugate test on the transpositions of S5", "[criterion]") {
  PermGroup s5 = build("sym:5");
  ConjugacyClass t = class_of(s5, "(1 2)");
  CriterionVerdict v3 = class_k_test(s5, t, 3, ModeSpec::exhaustive());
  CHECK(v3.all_solvable);
  CHECK_FALSE(v3.witness);
  CHECK(v3.tuples_checked == multiset_count(10, 2));
  CriterionVerdict v4 = class_k_test(s5, t, 4, ModeSpec::exhaustive());
  CHECK_FALSE(v4.all_solvable);
  REQUIRE(v4.witness);
  CHECK(v4.witness->size() == 4);
  CHECK(verify_witness(s5, t, *v4.witness));
  std::vector<Permutation> chain{P("(1 2)", 5), P("(2 3)", 5), P("(3 4)", 5), P("(4 5)", 5)};
  CHECK(verify_witness(s5, t, chain));
}

TEST_CASE("k-conjugate test in solvable groups always passes", "[criterion]") {
  for (const char* spec : {"sym:4", "gl23", "wreath_small:sym:3,cyclic:2"}) {
    PermGroup g = build(spec);
    for (const auto& c : conjugacy_classes(g))
      for (std::size_t k : {1, 2, 4}) CHECK(class_k_test(g, c, k, ModeSpec::exhaustive()).all_solvable);
  }
}

TEST_CASE("k-conjugate test errors", "[criterion]") {
  PermGroup s5 = build("sym:5");
  ConjugacyClass t = class_of(s5, "(1 2)");
  CHECK(code_of([&] { class_k_test(s5, t, 4, ModeSpec::exhaustive(), 10); }) == ErrorCode::BudgetExceeded);
  CHECK(code_of([&] { class_k_test(s5, t, 0, ModeSpec::exhaustive()); }) == ErrorCode::ParameterOutOfRange);
  CHECK(code_of([&] { ClassLattice(s5, ConjugacyClass{}); }) == ErrorCode::EmptyClass);
}

TEST_CASE("exhaustive pair and triple tests agree with ordered-tuple enumeration", "[criterion][oracle]") {
  for (const char* spec : {"sym:4", "alt:5", "sym:5", "psl2:7", "alt:6"}) {
    PermGroup g = build(spec);
    for (const auto& c : conjugacy_classes(g)) {
      if (c.size() > 90) continue;
      INFO(spec << " class of " << c.representative.to_string());
      bool pairs = true;
      for (const auto& x : c.elements)
        for (const auto& y : c.elements)
          pairs = pairs && oracle::solvable(oracle::closure({x, y}, g.degree()), g.degree());
      CHECK(class_k_test(g, c, 2, ModeSpec::exhaustive()).all_solvable == pairs);
      if (c.size() > 15) continue;
      bool triples = true;
      for (const auto& x : c.elements)
        for (const auto& y : c.elements)
          for (const auto& z : c.elements)
            triples = triples && oracle::solvable(oracle::closure({x, y, z}, g.degree()), g.degree());
      CHECK(class_k_test(g, c, 3, ModeSpec::exhaustive()).all_solvable == triples);
    }
  }
}

TEST_CASE("verdicts are monotone in k and consistent at 7 and 10", "[criterion]") {
  for (const char* spec : {"sym:5", "alt:5", "psl2:7", "direct:sym:3,alt:5", "sym:6"}) {
    PermGroup g = build(spec);
    for (const auto& c : conjugacy_classes(g)) {
      ClassLattice lat(g, c);
      bool previous = true;
      for (std::size_t k = 1; k <= 4; ++k) {
        bool now = class_k_test(lat, k, ModeSpec::exhaustive()).all_solvable;
        CHECK((!now || previous));
        previous = now;
      }
      const bool at4 = previous;
      const bool at7 = class_k_test(lat, 7, ModeSpec::randomized(2000, 1)).all_solvable;
      const bool at10 = class_k_test(lat, 10, ModeSpec::randomized(2000, 2)).all_solvable;
      CHECK(at4 == at7);
      CHECK(at7 == at10);
    }
  }
}

TEST_CASE("randomized mode is reproducible and records its parameters", "[criterion]") {
  PermGroup g = build("psl2:11");
  ConjugacyClass c = conjugacy_classes(g)[1];
  auto a = class_k_test(g, c, 4, ModeSpec::randomized(500, 42));
  auto b = class_k_test(g, c, 4, ModeSpec::randomized(500, 42));
  CHECK(a.mode.kind == SearchMode::randomized);
  CHECK(a.mode.seed == 42);
  CHECK(a.mode.samples == 500);
  CHECK(a.all_solvable == b.all_solvable);
  CHECK(a.tuples_checked == b.tuples_checked);
  if (a.witness) CHECK(*a.witness == *b.witness);
}

TEST_CASE("minimal witnesses", "[criterion]") {
  PermGroup s5 = build("sym:5");
  WitnessProfile w = min_witness(s5, class_of(s5, "(1 2)"));
  CHECK_FALSE(w.generates_solvable);
  REQUIRE(w.min_witness_k);
  CHECK(*w.min_witness_k == 4);
  CHECK(w.minimality_exhaustive);
  CHECK(verify_witness(s5, class_of(s5, "(1 2)"), *w.witness));

  PermGroup a5 = build("alt:5");
  WitnessProfile w5 = min_witness(a5, class_of(a5, "(1 2 3 4 5)"));
  REQUIRE(w5.min_witness_k);
  CHECK(*w5.min_witness_k == 2);

  PermGroup s4 = build("sym:4");
  for (const auto& c : conjugacy_classes(s4)) {
    WitnessProfile ws = min_witness(s4, c);
    CHECK(ws.generates_solvable);
    CHECK_FALSE(ws.min_witness_k);
    CHECK_FALSE(ws.witness);
  }
}

TEST_CASE("radical from the criterion", "[criterion]") {
  CHECK(radical_by_criterion(build("direct:sym:3,alt:5")).order() == 6);
  CHECK(radical_by_criterion(build("alt:5")).order() == 1);
  CHECK(radical_by_criterion(build("sym:4")).order() == 24);
}

TEST_CASE("Baer-Suzuki examples", "[criterion]") {
  PermGroup a4 = build("alt:4");
  auto r1 = baer_suzuki_check(a4, P("(1 2)(3 4)", 4));
  CHECK(r1.pairs_all_nilpotent);
  CHECK(r1.closure_nilpotent);
  PermGroup s4 = build("sym:4");
  auto r2 = baer_suzuki_check(s4, P("(1 2)", 4));
  CHECK_FALSE(r2.pairs_all_nilpotent);
  CHECK_FALSE(r2.closure_nilpotent);
  REQUIRE(r2.non_nilpotent_partner);
  CHECK_FALSE(is_nilpotent(PermGroup(4, {P("(1 2)", 4), *r2.non_nilpotent_partner})));
  PermGroup c12 = build("cyclic:12");
  auto r3 = baer_suzuki_check(c12, c12.generators()[0].pow(4));
  CHECK(r3.pairs_all_nilpotent);
  CHECK(r3.closure_nilpotent);
  CHECK(code_of([&] { baer_suzuki_check(s4, P("(1 2 3 4)", 4)); }) == ErrorCode::NotPrimeOrder);
}

TEST_CASE("Baer-Suzuki pairs agree with a scan over all conjugators", "[criterion][oracle]") {
  for (const char* spec : {"sym:4", "alt:5", "dihedral:6", "frobenius20", "gl23", "direct:sym:4,sym:3"}) {
    PermGroup g = build(spec);
    auto all = oracle::closure(g.generators(), g.degree());
    for (const auto& c : conjugacy_classes(g)) {
      if (!is_prime(element_order(c.representative))) continue;
      const Permutation& x = c.representative;
      bool pairs = true;
      for (const auto& h : all) pairs = pairs && oracle::nilpotent(oracle::closure({x, conjugate(x, h)}, g.degree()), g.degree());
      CHECK(baer_suzuki_check(g, x).pairs_all_nilpotent == pairs);
    }
  }
}

TEST_CASE("pair test for classes of prime order at least 5", "[criterion]") {
  PermGroup psl = build("psl2:7");
  for (const auto& c : conjugacy_classes(psl)) {
    if (element_order(c.representative) != 7) continue;
    auto r = pair_test_prime_ge5(psl, c);
    CHECK_FALSE(r.closure_solvable);
    CHECK_FALSE(r.all_pairs_solvable);
    REQUIRE(r.witness);
    CHECK(r.witness->size() == 2);
    CHECK(verify_witness(psl, c, *r.witness));
  }
  PermGroup c5 = build("cyclic:5");
  auto r5 = pair_test_prime_ge5(c5, conjugacy_class_of(c5, c5.generators()[0]));
  CHECK(r5.closure_solvable);
  CHECK(r5.all_pairs_solvable);
  PermGroup f20 = build("frobenius20");
  auto rf = pair_test_prime_ge5(f20, class_of(f20, "(1 2 3 4 5)"));
  CHECK(rf.closure_solvable);
  CHECK(rf.all_pairs_solvable);
  CHECK(code_of([&] { pair_test_prime_ge5(psl, conjugacy_class_of(psl, psl.generators()[1])); }) ==
        ErrorCode::OrderConditionViolated);
}

TEST_CASE("five-conjugate subgroups of maximal Fitting height", "[criterion]") {
  PermGroup s4 = build("sym:4");
  auto r = max_fh_subgroup_search(s4, P("(1 2)", 4));
  CHECK(r.fitting_height == 3);
  CHECK(r.subgroup.order() == 24);
  CHECK(r.exhaustive);

  PermGroup c6 = build("cyclic:6");
  auto rc = max_fh_subgroup_search(c6, c6.generators()[0]);
  CHECK(rc.fitting_height == 1);
  CHECK(same_group(rc.subgroup.group(), cyclic_subgroup(c6.generators()[0])));

  PermGroup s3 = build("sym:3");
  auto r3 = max_fh_subgroup_search(s3, P("(1 2 3)", 3));
  CHECK(r3.fitting_height == 1);
  CHECK(r3.subgroup.order() == 3);

  // The returned tuple meets the defining conditions.
  for (const char* spec : {"sym:4", "gl23", "direct:sym:4,sym:3"}) {
    PermGroup g = build(spec);
    for (const auto& c : conjugacy_classes(g)) {
      auto res = max_fh_subgroup_search(g, c.representative);
      REQUIRE(res.tuple.size() == 5);
      CHECK(res.tuple[0] == c.representative);
      const PermGroup& a = res.subgroup.group();
      CHECK(same_group(a, PermGroup(g.degree(), res.tuple)));
      ConjugacyClass in_a = conjugacy_class_of(a, c.representative);
      for (const auto& x : res.tuple) {
        CHECK(c.index_of(x) >= 0);
        CHECK(in_a.index_of(x) >= 0);
      }
      CHECK(res.fitting_height == fitting_height(a));
    }
  }
}

TEST_CASE("sfit of a maximal five-conjugate subgroup lies in F(G)", "[criterion]") {
  CHECK(lemma_t2_property(build("sym:4"), P("(1 2)", 4)).holds);
  PermGroup d8 = build("dihedral:8");
  for (const auto& c : conjugacy_classes(d8)) CHECK(lemma_t2_property(d8, c.representative).holds);
  PermGroup s3s3 = build("direct:sym:3,sym:3");
  auto r = lemma_t2_property(s3s3, P("(1 2)(4 5)", 6));
  CHECK(r.holds);
  CHECK(code_of([] { lemma_t2_property(build("alt:5"), P("(1 2 3)", 5)); }) == ErrorCode::NotSolvable);
}
