// Command-line front end: one subcommand per query, human-readable output on
// stdout, optional JSON report via --json.
//
// Exit codes: 0 ok, 1 usage or input error, 2 theorem violation reported,
// 3 search budget exhausted.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <thread>

#include "solrad/solrad.hpp"
#include "solrad/survey.hpp"

namespace {

using namespace solrad;

struct Options {
  std::string group;
  std::vector<std::string> groups;
  std::string json_path;
  std::uint64_t seed = 0;
  std::uint64_t budget = kSurveyExhaustiveBound;
  std::uint64_t samples = kDefaultSamples;
  std::size_t k = 4;
  std::string mode = "exhaustive";
  std::string rep;
  std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
  std::string corpus;
  std::vector<gf_t> primes{5, 7, 11, 13};
};

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolation = 2;
constexpr int kExitBudget = 3;

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::TheoremViolationSuspected: return kExitViolation;
    case ErrorCode::BudgetExceeded:
    case ErrorCode::SearchBudgetExceeded:
    case ErrorCode::GroupTooLarge: return kExitBudget;
    default: return kExitError;
  }
}

void write_json(const Options& o, const json& j) {
  if (o.json_path.empty()) return;
  std::ofstream out(o.json_path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + o.json_path);
  out << j.dump(2) << "\n";
}

json header(const char* report, const std::string& spec) {
  return json{{"schema", kSchemaVersion}, {"report", report}, {"group", spec}};
}

Permutation rep_or_throw(const Options& o, const PermGroup& g) {
  if (o.rep.empty()) throw Error(ErrorCode::ParameterOutOfRange, "--rep is required");
  Permutation x = parse_permutation(o.rep, g.degree());
  if (!g.contains(x)) throw Error(ErrorCode::ElementNotInGroup, o.rep + " is not in the group");
  return x;
}

ModeSpec mode_of(const Options& o) {
  if (o.mode == "exhaustive") return ModeSpec::exhaustive();
  if (o.mode == "randomized") return ModeSpec::randomized(o.samples, o.seed);
  throw Error(ErrorCode::ParameterOutOfRange, "--mode must be exhaustive or randomized");
}

std::vector<std::string> corpus_of(const Options& o) {
  std::vector<std::string> c = o.groups;
  if (o.corpus == "default") {
    auto d = default_corpus();
    c.insert(c.end(), d.begin(), d.end());
  } else if (!o.corpus.empty()) {
    std::ifstream in(o.corpus);
    if (!in) throw Error(ErrorCode::IoError, "cannot open corpus file " + o.corpus);
    for (std::string line; std::getline(in, line);) {
      auto t = std::string(detail::trim(line));
      if (!t.empty() && t.front() != '#') c.push_back(t);
    }
  }
  if (c.empty()) throw Error(ErrorCode::ParameterOutOfRange, "no groups given (use --corpus default or list specs)");
  return c;
}

std::string join_perms(const std::vector<Permutation>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : " ") + x.to_string();
  return s;
}

int cmd_order(const Options& o) {
  PermGroup g = build(o.group);
  std::cout << g.order() << "\n";
  json j = header("order", o.group);
  j["order"] = g.order();
  j["degree"] = g.degree();
  write_json(o, j);
  return kExitOk;
}

int cmd_radical(const Options& o) {
  PermGroup g = build(o.group);
  SubgroupHandle r = solvable_radical(g);
  SubgroupHandle f = fitting_subgroup(g);
  std::cout << "order " << g.order() << "\nradical order " << r.order() << "\n";
  for (const auto& x : r.generators()) std::cout << "  " << x.to_string() << "\n";
  std::cout << "fitting subgroup order " << f.order() << "\n";
  json j = header("radical", o.group);
  j["order"] = g.order();
  j["radical"] = r;
  j["fitting_subgroup"] = f;
  write_json(o, j);
  return kExitOk;
}

int cmd_fitting(const Options& o) {
  PermGroup g = build(o.group);
  FittingProfile f = fitting_profile(g);
  std::cout << "fitting height " << f.height << "\nlower Fitting series orders";
  for (auto n : f.term_orders()) std::cout << " " << n;
  std::cout << "\n";
  json j = header("fitting", o.group);
  j["fitting"] = f;
  j["lower_fitting_series"] = lower_fitting_series(g);
  write_json(o, j);
  return kExitOk;
}

int cmd_sfit(const Options& o) {
  PermGroup g = build(o.group);
  SubgroupHandle s = sfit(g);
  std::cout << "sfit order " << s.order() << "\n";
  for (const auto& x : s.generators()) std::cout << "  " << x.to_string() << "\n";
  json j = header("sfit", o.group);
  j["sfit"] = s;
  write_json(o, j);
  return kExitOk;
}

int cmd_classes(const Options& o) {
  PermGroup g = build(o.group);
  json arr = json::array();
  for (const auto& c : conjugacy_classes(g)) {
    std::cout << c.representative.to_string() << "  size " << c.size() << "  order "
              << element_order(c.representative) << "\n";
    arr.push_back({{"representative", c.representative.to_string()},
                   {"size", c.size()},
                   {"element_order", element_order(c.representative)}});
  }
  json j = header("classes", o.group);
  j["classes"] = arr;
  write_json(o, j);
  return kExitOk;
}

int cmd_class_test(const Options& o) {
  PermGroup g = build(o.group);
  ConjugacyClass c = conjugacy_class_of(g, rep_or_throw(o, g));
  CriterionVerdict v = class_k_test(g, c, o.k, mode_of(o), o.budget);
  std::cout << "class of " << c.representative.to_string() << " (size " << c.size() << "), k = " << v.k << ", "
            << to_string(v.mode.kind) << "\nall_solvable = " << (v.all_solvable ? "true" : "false") << "\n";
  if (v.witness) std::cout << "witness " << join_perms(*v.witness) << "\n";
  std::cout << "tuples checked " << v.tuples_checked << "\n";
  json j = header("class_test", o.group);
  j["verdict"] = v;
  write_json(o, j);
  return kExitOk;
}

int cmd_min_witness(const Options& o) {
  PermGroup g = build(o.group);
  ConjugacyClass c = conjugacy_class_of(g, rep_or_throw(o, g));
  WitnessProfile w = min_witness(g, c, o.budget, o.samples, o.seed);
  if (w.min_witness_k) {
    std::cout << "min_witness_k = " << *w.min_witness_k << "\nwitness " << join_perms(*w.witness) << "\n";
    if (!w.minimality_exhaustive) std::cout << "(smaller k ruled out by sampling only)\n";
  } else {
    std::cout << "min_witness_k = none (the class generates a solvable subgroup)\n";
  }
  json j = header("min_witness", o.group);
  j["profile"] = w;
  write_json(o, j);
  return kExitOk;
}

int cmd_baer_suzuki(const Options& o) {
  PermGroup g = build(o.group);
  std::vector<Permutation> elems;
  if (!o.rep.empty()) {
    elems.push_back(rep_or_throw(o, g));
  } else {
    for (const auto& c : conjugacy_classes(g))
      if (is_prime(element_order(c.representative))) elems.push_back(c.representative);
  }
  json arr = json::array();
  for (const auto& x : elems) {
    BaerSuzukiReport r = baer_suzuki_check(g, x);
    std::cout << x.to_string() << "  order " << r.element_order << "  pairs nilpotent "
              << (r.pairs_all_nilpotent ? "yes" : "no") << "  closure nilpotent "
              << (r.closure_nilpotent ? "yes" : "no") << "\n";
    arr.push_back(r);
  }
  json j = header("baer_suzuki", o.group);
  j["checks"] = arr;
  write_json(o, j);
  return kExitOk;
}

int cmd_t1_sweep(const Options& o) {
  Options oo = o;
  if (oo.groups.empty() && oo.corpus.empty()) oo.corpus = "default";
  T1SweepReport r = run_t1_sweep(corpus_of(oo), o.primes, o.threads);
  std::size_t worst_fixed = 0, worst_dim = 1;
  for (const auto& e : r.checks)
    if (e.report.fixed_dim * worst_dim > worst_fixed * e.report.dim) {
      worst_fixed = e.report.fixed_dim;
      worst_dim = e.report.dim;
    }
  std::cout << "checks " << r.checks.size() << "\nlargest fixed-space ratio " << worst_fixed << "/" << worst_dim
            << "\nviolations " << r.theorem_violations.size() << "\n";
  for (const auto& v : r.theorem_violations) std::cout << "  " << v << "\n";
  write_json(o, json(r));
  return r.theorem_violations.empty() ? kExitOk : kExitViolation;
}

int cmd_survey(const Options& o) {
  SurveyOptions so;
  so.k = o.k;
  so.seed = o.seed;
  so.budget = o.budget;
  so.samples = o.samples;
  so.threads = o.threads;
  SurveyReport r = run_survey(corpus_of(o), so);
  for (const auto& g : r.groups) {
    std::size_t nonsolvable = 0;
    for (const auto& w : g.witnesses) nonsolvable += w.generates_solvable ? 0 : 1;
    std::cout << g.spec << "  order " << g.order << "  radical " << g.radical_order << "  classes "
              << g.witnesses.size() << " (" << nonsolvable << " nonsolvable)"
              << (g.fitting ? "  fitting height " + std::to_string(g.fitting->height) : std::string()) << "\n";
  }
  std::cout << "theorem violations " << r.theorem_violations.size() << "\n";
  for (const auto& v : r.theorem_violations) std::cout << "  " << v << "\n";
  std::cerr << "wall time " << r.wall_seconds << " s\n";
  write_json(o, json(r));
  return r.theorem_violations.empty() ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solvable radical and Fitting height toolkit for small permutation groups"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--json", o.json_path, "Write the report as JSON to this path");
    sub->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    sub->add_option("--budget", o.budget, "Largest canonical tuple count searched exhaustively")
        ->capture_default_str();
    sub->add_option("--samples", o.samples, "Random tuples drawn when not exhaustive")->capture_default_str();
    sub->add_option("--threads", o.threads, "Worker threads")->capture_default_str();
  };
  auto group_cmd = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("group", o.group, "Group spec, e.g. sym:5, psl2:7, direct:sym:3,alt:5, file:g.grp")->required();
    add_common(sub);
    return sub;
  };

  std::map<CLI::App*, int (*)(const Options&)> handlers;
  handlers[group_cmd("order", "Print the group order")] = cmd_order;
  handlers[group_cmd("radical", "Solvable radical and Fitting subgroup")] = cmd_radical;
  handlers[group_cmd("fitting", "Fitting height and lower Fitting series")] = cmd_fitting;
  handlers[group_cmd("sfit", "Last nontrivial lower Fitting term")] = cmd_sfit;
  handlers[group_cmd("classes", "Conjugacy classes")] = cmd_classes;

  CLI::App* class_test = group_cmd("class-test", "Do all k-tuples from a class generate solvable subgroups?");
  class_test->add_option("--rep", o.rep, "Class representative in cycle notation")->required();
  class_test->add_option("--k", o.k, "Tuple size")->capture_default_str();
  class_test->add_option("--mode", o.mode, "exhaustive or randomized")->capture_default_str();
  handlers[class_test] = cmd_class_test;

  CLI::App* min_w = group_cmd("min-witness", "Least k with a nonsolvable k-tuple from the class");
  min_w->add_option("--rep", o.rep, "Class representative in cycle notation")->required();
  handlers[min_w] = cmd_min_witness;

  CLI::App* bs = group_cmd("baer-suzuki", "Pair nilpotency against normal closure for prime-order elements");
  bs->add_option("--rep", o.rep, "Element to check (default: every prime-order class)");
  handlers[bs] = cmd_baer_suzuki;

  CLI::App* t1 = app.add_subcommand("t1-sweep", "Fixed-space bound over permutation module constituents");
  t1->add_option("groups", o.groups, "Group specs");
  t1->add_option("--corpus", o.corpus, "\"default\" or a file with one spec per line");
  t1->add_option("--primes", o.primes, "Field characteristics")->capture_default_str();
  add_common(t1);
  handlers[t1] = cmd_t1_sweep;

  CLI::App* survey = app.add_subcommand("survey", "Run every check over a corpus of groups");
  survey->add_option("groups", o.groups, "Group specs");
  survey->add_option("--corpus", o.corpus, "\"default\" or a file with one spec per line");
  survey->add_option("--k", o.k, "Tuple size for the class test")->capture_default_str();
  add_common(survey);
  handlers[survey] = cmd_survey;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    for (auto& [sub, handler] : handlers)
      if (sub->parsed()) return handler(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
