#pragma once

// JSON encodings of the library's report types. Permutations are written in
// 1-based cycle notation and subgroups by order and generators.

#include <nlohmann/json.hpp>

#include "solrad/criterion.hpp"
#include "solrad/height.hpp"
#include "solrad/modrep.hpp"

namespace solrad {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline json perm_list(const std::vector<Permutation>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(x.to_string());
  return a;
}

template <class T>
json optional_json(const std::optional<T>& x) {
  return x ? json(*x) : json(nullptr);
}

inline void to_json(json& j, const Permutation& x) { j = x.to_string(); }

inline void to_json(json& j, const PermGroup& g) {
  j = json{{"degree", g.degree()}, {"order", g.order()}, {"generators", perm_list(g.generators())}};
}

inline void to_json(json& j, const SubgroupHandle& s) {
  j = json{{"order", s.order()}, {"generators", perm_list(s.generators())}};
}

inline void to_json(json& j, const SeriesReport& r) {
  json gens = json::array();
  for (const auto& t : r.terms) gens.push_back(perm_list(t.generators()));
  j = json{{"kind", to_string(r.kind)}, {"orders", r.orders()}, {"generators", gens}, {"stabilized", r.stabilized}};
}

inline void to_json(json& j, const FittingProfile& f) {
  j = json{{"height", f.height},
           {"term_orders", f.term_orders()},
           {"sfit_generators", f.sfit ? perm_list(f.sfit->generators()) : json(nullptr)},
           {"sfit_order", f.sfit ? f.sfit->order() : 1}};
}

inline std::string to_string(SearchMode m) { return m == SearchMode::exhaustive ? "exhaustive" : "randomized"; }

inline void to_json(json& j, const ModeSpec& m) {
  j = json{{"kind", to_string(m.kind)}};
  if (m.kind == SearchMode::randomized) {
    j["samples"] = m.samples;
    j["seed"] = m.seed;
  }
}

inline void to_json(json& j, const CriterionVerdict& v) {
  j = json{{"class_rep", v.class_rep.to_string()},
           {"k", v.k},
           {"mode", v.mode},
           {"all_solvable", v.all_solvable},
           {"witness", v.witness ? perm_list(*v.witness) : json(nullptr)},
           {"tuples_checked", v.tuples_checked}};
}

inline void to_json(json& j, const WitnessProfile& w) {
  j = json{{"class_rep", w.class_rep.to_string()},
           {"class_size", w.class_size},
           {"generates_solvable", w.generates_solvable},
           {"min_witness_k", optional_json(w.min_witness_k)},
           {"witness", w.witness ? perm_list(*w.witness) : json(nullptr)},
           {"minimality_exhaustive", w.minimality_exhaustive}};
}

inline void to_json(json& j, const BaerSuzukiReport& r) {
  j = json{{"element", r.element.to_string()},
           {"element_order", r.element_order},
           {"pairs_all_nilpotent", r.pairs_all_nilpotent},
           {"closure_nilpotent", r.closure_nilpotent},
           {"non_nilpotent_partner", optional_json(r.non_nilpotent_partner)},
           {"pairs_checked", r.pairs_checked}};
}

inline void to_json(json& j, const PairTestReport& r) {
  j = json{{"class_rep", r.class_rep.to_string()},
           {"element_order", r.element_order},
           {"closure_solvable", r.closure_solvable},
           {"all_pairs_solvable", r.all_pairs_solvable},
           {"witness", r.witness ? perm_list(*r.witness) : json(nullptr)},
           {"pairs_checked", r.pairs_checked}};
}

inline void to_json(json& j, const GfMatrix& m) {
  j = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) j.push_back(m.row(r));
}

inline void to_json(json& j, const GModule& m) {
  j = json{{"p", m.p},
           {"dim", m.dim},
           {"group_generators", perm_list(m.group.generators())},
           {"generators", m.action},
           {"irreducible_certified", m.irreducible_certified},
           {"trivial_action", m.trivial_action}};
}

inline void to_json(json& j, const T1BoundReport& r) {
  j = json{{"element", r.element.to_string()}, {"p", r.p},     {"dim", r.dim},
           {"fixed_dim", r.fixed_dim},         {"ratio", r.ratio}, {"holds", r.holds}};
}

inline void to_json(json& j, const LemmaT2Report& r) {
  j = json{{"element", r.element.to_string()},
           {"max_fitting_height", r.max_fitting_height},
           {"sfit_order", r.sfit_order},
           {"fitting_order", r.fitting_order},
           {"maximizers_checked", r.maximizers_checked},
           {"holds", r.holds}};
}

}  // namespace solrad
