#pragma once

// Corpus-wide runs: every class of every group through the k-conjugate test,
// minimal witnesses, pair and Baer-Suzuki checks, radical equivalence, and
// the fixed-space sweep over permutation module constituents.
//
// Groups are processed by a worker pool; results are stored by corpus index
// so the report does not depend on the number of workers.

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "solrad/catalog.hpp"
#include "solrad/report.hpp"

namespace solrad {

inline constexpr std::uint64_t kSurveyExhaustiveBound = 10000000;
inline constexpr std::uint64_t kBaerSuzukiOrderBound = 2000;

struct SurveyOptions {
  std::size_t k = 4;
  std::uint64_t seed = 0;
  std::uint64_t budget = kSurveyExhaustiveBound;  // exhaustive when the canonical tuple count fits
  std::uint64_t samples = kDefaultSamples;
  std::size_t threads = 1;
};

struct GroupSurvey {
  std::string spec;
  std::uint64_t order = 0;
  std::uint64_t radical_order = 0;
  bool solvable = false;
  std::optional<FittingProfile> fitting;
  std::vector<CriterionVerdict> class_tests;
  std::vector<WitnessProfile> witnesses;
  std::vector<PairTestReport> pair_tests;
  std::vector<BaerSuzukiReport> baer_suzuki;
  std::uint64_t radical_by_criterion_order = 0;
  bool radical_matches = false;
  std::vector<std::string> violations;
};

struct SurveyReport {
  std::vector<std::string> corpus;
  SurveyOptions options;
  std::vector<GroupSurvey> groups;
  std::vector<std::string> theorem_violations;
  double wall_seconds = 0.0;  // reported on the console, kept out of the JSON
};

/// Runs `work(i)` for i in [0, n) on `threads` workers. The first exception
/// thrown by any task is rethrown after all workers stop.
template <class F>
void parallel_for(std::size_t n, std::size_t threads, F&& work) {
  threads = std::max<std::size_t>(1, std::min(threads, n));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        work(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(n);
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
}

inline GroupSurvey survey_group(const std::string& spec, const SurveyOptions& opt) {
  GroupSurvey s;
  s.spec = spec;
  const PermGroup g = build(spec);
  s.order = g.order();
  s.solvable = is_solvable(g);
  const auto classes = conjugacy_classes(g);
  const SubgroupHandle radical = solvable_radical(g, classes);
  s.radical_order = radical.order();
  if (s.solvable) s.fitting = fitting_profile(g);

  auto note = [&](const std::string& what) { s.violations.push_back(spec + ": " + what); };

  std::vector<Permutation> radical_gens;
  for (const auto& c : classes) {
    ClassLattice lat(g, c);
    const bool closure_solvable = is_solvable(normal_closure_group(g, cyclic_subgroup(c.representative)));

    ModeSpec mode = multiset_count(c.size(), opt.k - 1) <= opt.budget
                        ? ModeSpec::exhaustive()
                        : ModeSpec::randomized(opt.samples, opt.seed);
    CriterionVerdict v = class_k_test(lat, opt.k, mode, opt.budget);
    if (v.all_solvable) radical_gens.push_back(c.representative);
    if (v.witness && !verify_witness(g, c, *v.witness)) note("witness for " + c.representative.to_string() + " fails");
    const bool conclusive = v.mode.kind == SearchMode::exhaustive || !v.all_solvable;
    if (conclusive && v.all_solvable != closure_solvable)
      note("class of " + c.representative.to_string() + ": k-conjugate test disagrees with solvability of the class");
    s.class_tests.push_back(std::move(v));

    try {
      s.witnesses.push_back(min_witness(lat, opt.budget, opt.samples, opt.seed));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::TheoremViolationSuspected) throw;
      note(e.what());
    }

    const std::uint64_t ord = element_order(c.representative);
    if (ord >= 5 && is_prime(ord)) {
      try {
        s.pair_tests.push_back(pair_test_prime_ge5(lat, opt.budget));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::TheoremViolationSuspected) throw;
        note(e.what());
      }
    }
    if (is_prime(ord) && g.order() <= kBaerSuzukiOrderBound) {
      try {
        s.baer_suzuki.push_back(baer_suzuki_check(lat, c.representative));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::TheoremViolationSuspected) throw;
        note(e.what());
      }
    }
  }

  // The criterion's radical: the normal subgroup generated by the classes
  // that passed the k-conjugate test.
  const PermGroup by_criterion = normal_closure_group(g, PermGroup(g.degree(), radical_gens));
  s.radical_by_criterion_order = by_criterion.order();
  s.radical_matches = same_group(by_criterion, radical.group());
  if (!s.radical_matches) note("radical from the criterion differs from the solvable radical");
  return s;
}

inline SurveyReport run_survey(const std::vector<std::string>& corpus, const SurveyOptions& opt) {
  if (opt.k == 0) throw Error(ErrorCode::ParameterOutOfRange, "k must be positive");
  const auto start = std::chrono::steady_clock::now();
  SurveyReport r;
  r.corpus = corpus;
  r.options = opt;
  r.groups.resize(corpus.size());
  parallel_for(corpus.size(), opt.threads, [&](std::size_t i) { r.groups[i] = survey_group(corpus[i], opt); });
  for (const auto& gs : r.groups)
    r.theorem_violations.insert(r.theorem_violations.end(), gs.violations.begin(), gs.violations.end());
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline void to_json(json& j, const GroupSurvey& s) {
  j = json{{"spec", s.spec},
           {"order", s.order},
           {"solvable", s.solvable},
           {"radical_order", s.radical_order},
           {"radical_by_criterion_order", s.radical_by_criterion_order},
           {"radical_matches", s.radical_matches},
           {"fitting", s.fitting ? json(*s.fitting) : json(nullptr)},
           {"class_tests", s.class_tests},
           {"witnesses", s.witnesses},
           {"pair_tests", s.pair_tests},
           {"baer_suzuki", s.baer_suzuki},
           {"violations", s.violations}};
}

inline void to_json(json& j, const SurveyReport& r) {
  j = json{{"schema", kSchemaVersion},
           {"report", "survey"},
           {"corpus", r.corpus},
           {"k", r.options.k},
           {"seed", r.options.seed},
           {"budgets", {{"exhaustive_tuples", r.options.budget}, {"samples", r.options.samples}}},
           {"groups", r.groups},
           {"theorem_violations", r.theorem_violations}};
}

// Fixed-space sweep.

struct T1SweepEntry {
  std::string spec;
  T1BoundReport report;
};

struct T1SweepReport {
  std::vector<std::string> corpus;
  std::vector<gf_t> primes;
  std::vector<T1SweepEntry> checks;
  std::vector<std::string> theorem_violations;
  std::uint64_t groups_skipped_nonsolvable = 0;
};

inline std::vector<T1SweepEntry> t1_sweep_group(const std::string& spec, const std::vector<gf_t>& primes,
                                                std::vector<std::string>& violations) {
  std::vector<T1SweepEntry> out;
  const PermGroup g = build(spec);
  if (!is_solvable(g) || g.is_trivial()) return out;
  std::vector<Permutation> reps;
  for (const auto& c : conjugacy_classes(g))
    if (normal_closure_group(g, cyclic_subgroup(c.representative)).order() == g.order())
      reps.push_back(c.representative);
  for (gf_t p : primes) {
    if (g.order() % p == 0) continue;
    for (const auto& m : permutation_module_constituents(g, p)) {
      if (m.trivial_action) continue;
      for (const auto& a : reps) {
        try {
          out.push_back({spec, check_t1_bound(m, a)});
        } catch (const Error& e) {
          if (e.code() != ErrorCode::TheoremViolationSuspected) throw;
          violations.push_back(spec + ": " + e.what());
        }
      }
    }
  }
  return out;
}

inline T1SweepReport run_t1_sweep(const std::vector<std::string>& corpus, const std::vector<gf_t>& primes,
                                  std::size_t threads = 1) {
  T1SweepReport r;
  r.corpus = corpus;
  r.primes = primes;
  std::vector<std::vector<T1SweepEntry>> per(corpus.size());
  std::vector<std::vector<std::string>> viol(corpus.size());
  std::vector<char> solvable(corpus.size(), 0);
  parallel_for(corpus.size(), threads, [&](std::size_t i) {
    solvable[i] = is_solvable(build(corpus[i]));
    per[i] = t1_sweep_group(corpus[i], primes, viol[i]);
  });
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!solvable[i]) ++r.groups_skipped_nonsolvable;
    r.checks.insert(r.checks.end(), per[i].begin(), per[i].end());
    r.theorem_violations.insert(r.theorem_violations.end(), viol[i].begin(), viol[i].end());
  }
  return r;
}

inline void to_json(json& j, const T1SweepEntry& e) {
  j = json(e.report);
  j["spec"] = e.spec;
}

inline void to_json(json& j, const T1SweepReport& r) {
  j = json{{"schema", kSchemaVersion},
           {"report", "t1_sweep"},
           {"corpus", r.corpus},
           {"primes", r.primes},
           {"groups_skipped_nonsolvable", r.groups_skipped_nonsolvable},
           {"checks", r.checks},
           {"theorem_violations", r.theorem_violations}};
}

/// Re-checks a survey report: every witness generates a nonsolvable subgroup
/// from members of its class, and every recorded subgroup order divides the
/// group order. Returns the problems found.
inline std::vector<std::string> validate_survey_json(const json& report) {
  std::vector<std::string> problems;
  if (report.value("schema", 0) != kSchemaVersion) problems.push_back("unsupported schema");
  for (const auto& gj : report.at("groups")) {
    const std::string spec = gj.at("spec").get<std::string>();
    const PermGroup g = build(spec);
    const std::uint64_t order = gj.at("order").get<std::uint64_t>();
    if (order != g.order()) problems.push_back(spec + ": recorded order differs");
    auto divides = [&](const json& x, const char* what) {
      if (x.is_null()) return;
      const auto o = x.get<std::uint64_t>();
      if (o == 0 || order % o != 0) problems.push_back(spec + ": " + what + " does not divide the group order");
    };
    divides(gj.at("radical_order"), "radical order");
    divides(gj.at("radical_by_criterion_order"), "criterion radical order");
    if (!gj.at("fitting").is_null()) {
      for (const auto& o : gj.at("fitting").at("term_orders")) divides(o, "lower Fitting term order");
      divides(gj.at("fitting").at("sfit_order"), "sfit order");
    }
    auto check_witness = [&](const json& rep, const json& w) {
      if (w.is_null()) return;
      const Permutation x = parse_permutation(rep.get<std::string>(), g.degree());
      const ConjugacyClass c = conjugacy_class_of(g, x);
      std::vector<Permutation> tuple;
      for (const auto& s : w) tuple.push_back(parse_permutation(s.get<std::string>(), g.degree()));
      if (!verify_witness(g, c, tuple)) problems.push_back(spec + ": witness for " + rep.get<std::string>() + " fails");
    };
    for (const auto& v : gj.at("class_tests")) check_witness(v.at("class_rep"), v.at("witness"));
    for (const auto& v : gj.at("witnesses")) check_witness(v.at("class_rep"), v.at("witness"));
    for (const auto& v : gj.at("pair_tests")) check_witness(v.at("class_rep"), v.at("witness"));
  }
  return problems;
}

}  // namespace solrad
