#include <catch_amalgamated.hpp>

#include "solrad/catalog.hpp"
#include "solrad/survey.hpp"

using namespace solrad;

TEST_CASE("report types serialize", "[report]") {
  PermGroup s4 = build("sym:4");
  json series = lower_fitting_series(s4);
  CHECK(series["kind"] == "lower_fitting");
  CHECK(series["orders"] == json::array({24, 12, 4, 1}));
  CHECK(series["generators"].size() == 4);

  json fit = fitting_profile(s4);
  CHECK(fit["height"] == 3);
  CHECK(fit["sfit_order"] == 4);

  PermGroup s5 = build("sym:5");
  ConjugacyClass t = conjugacy_class_of(s5, parse_permutation("(1 2)", 5));
  json v = class_k_test(s5, t, 4, ModeSpec::exhaustive());
  CHECK(v["all_solvable"] == false);
  CHECK(v["witness"].size() == 4);
  CHECK(v["witness"][0].get<std::string>().front() == '(');
  json w = min_witness(s5, t);
  CHECK(w["min_witness_k"] == 4);

  json m = permutation_module(build("sym:3"), 7);
  CHECK(m["dim"] == 3);
  CHECK(m["generators"].size() == 2);
  CHECK(m["generators"][0].size() == 3);
}

TEST_CASE("survey over a small corpus", "[report]") {
  SurveyOptions opt;
  opt.threads = 2;
  std::vector<std::string> corpus{"sym:4", "alt:5", "direct:sym:3,alt:5", "psl2:7"};
  SurveyReport r = run_survey(corpus, opt);
  CHECK(r.theorem_violations.empty());
  REQUIRE(r.groups.size() == 4);
  CHECK(r.groups[2].radical_order == 6);
  CHECK(r.groups[2].radical_matches);
  json j = r;
  CHECK(j["schema"] == 1);
  CHECK(j.find("wall_seconds") == j.end());
  CHECK(validate_survey_json(j).empty());

  opt.threads = 1;
  json again = run_survey(corpus, opt);
  CHECK(again.dump() == j.dump());

  // A tampered witness is caught.
  for (auto& cls : j["groups"][1]["class_tests"])
    if (!cls["witness"].is_null()) {
      cls["witness"] = json::array({cls["class_rep"], cls["class_rep"]});
      break;
    }
  CHECK_FALSE(validate_survey_json(j).empty());
}

TEST_CASE("fixed-space sweep over a small corpus", "[report]") {
  T1SweepReport r = run_t1_sweep({"sym:3", "sym:4", "alt:5"}, {5, 7, 11, 13});
  CHECK(r.theorem_violations.empty());
  CHECK(r.groups_skipped_nonsolvable == 1);
  CHECK_FALSE(r.checks.empty());
  for (const auto& e : r.checks) CHECK(4 * e.report.fixed_dim <= 3 * e.report.dim);
}
