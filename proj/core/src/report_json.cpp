#include "lefschetz/report_json.hpp"

namespace lefschetz {

using nlohmann::json;

json to_json(const Interval& iv) {
  return json{{"lo", iv.lo}, {"hi_excl", iv.hi_excl}, {"empty", iv.empty()}};
}

json to_json(const DegreeVerdict& v) {
  return json{{"t", v.degree},
              {"dim_from", v.dim_from},
              {"dim_to", v.dim_to},
              {"target_rank", v.target_rank},
              {"best_rank", v.best_rank},
              {"maximal", v.maximal},
              {"status", wlp_status_name(v.status)},
              {"witness", v.witness},
              {"trials_used", v.trials_used},
              {"escalated", v.escalated},
              {"escalation_dims_match", v.escalation_dims_match},
              {"rational_rank", v.rational_rank}};
}

json to_json(const ArtinianSummary& s) {
  return json{{"artinian", s.artinian},
              {"socle_degree", s.socle_degree},
              {"h", s.h},
              {"probed_through", s.probed_through},
              {"ci_eligible", s.ci_eligible},
              {"ci_match_through", s.ci_match_through},
              {"ci_certified", s.ci_certified}};
}

json to_json(const WlpReport& r) {
  json degrees = json::array();
  for (const auto& v : r.degrees) degrees.push_back(to_json(v));
  return json{{"quotient", to_json(r.quotient)},
              {"degrees", std::move(degrees)},
              {"used_shortcut", r.used_shortcut},
              {"covers_all_degrees", r.covers_all_degrees},
              {"checked_through", r.checked_through},
              {"wlp_certified", r.wlp_certified},
              {"any_suspected", r.any_suspected},
              {"any_certified_failure", r.any_certified_failure}};
}

json to_json(const SplittingBounds& s) {
  return json{{"n", s.n},         {"d", s.d},
              {"a", s.a},         {"b", s.b},
              {"lower_b1", s.lower_b1}, {"upper_bn", s.upper_bn}};
}

json to_json(const RegistryEntry& e) {
  return json{{"source", e.source}, {"range", to_json(e.range)}, {"note", e.note}};
}

json to_json(const BoundReport& r) {
  json registry = json::array();
  for (const auto& e : r.registry) registry.push_back(to_json(e));
  json j{{"n", r.n},
         {"d", r.d},
         {"range_main", to_json(r.range_main)},
         {"main_proof_inclusive_end", r.main_proof_inclusive_end},
         {"main_note", r.main_note},
         {"range_bound2", to_json(r.range_bound2)},
         {"splitting", to_json(r.splitting)},
         {"jacobian_range", to_json(r.jacobian_range)},
         {"beauville_covered", r.beauville_covered},
         {"maximal_variation", r.maximal_variation},
         {"registry", std::move(registry)}};
  j["prop36_b1"] = r.prop36_b1.has_value() ? json(*r.prop36_b1) : json(nullptr);
  j["range_prop36"] = r.range_prop36.has_value() ? to_json(*r.range_prop36) : json(nullptr);
  return j;
}

json to_json(const JacobianReport& r) {
  json registry = json::array();
  for (const auto& e : r.registry) registry.push_back(to_json(e));
  json j{{"ambient_dim", r.ambient_dim},
         {"degree", r.degree},
         {"smooth_certified", r.smooth_certified},
         {"quotient", to_json(r.quotient)},
         {"wlp_guaranteed_range", to_json(r.wlp_guaranteed_range)},
         {"degree_d_checked", r.degree_d_checked},
         {"guaranteed_covers_degree_d", r.guaranteed_covers_degree_d},
         {"beauville_guaranteed", r.beauville_guaranteed},
         {"maximal_variation", r.maximal_variation},
         {"registry", std::move(registry)}};
  j["degree_d"] = r.degree_d_checked ? to_json(r.degree_d) : json(nullptr);
  return j;
}

json to_json(const ExperimentConfig& c) {
  return json{{"n_range", to_json(c.n_range)},
              {"d_range", to_json(c.d_range)},
              {"trials_per_cell", c.trials_per_cell},
              {"ell_trials", c.ell_trials},
              {"seed", c.seed},
              {"field", c.rational ? "rational" : "prime"},
              {"prime", c.prime},
              {"escalation_limit", c.escalation_limit},
              {"output_path", c.output_path},
              {"scan_through", c.scan_through},
              {"full_scan_max_cols", c.full_scan_max_cols}};
}

json to_json(const InstanceResult& r) {
  json j{{"n", r.n},
         {"d", r.d},
         {"instance", r.instance},
         {"instance_seed", r.instance_seed},
         {"tier", r.tier},
         {"ci_ok", r.ci_ok},
         {"socle_degree", r.socle_degree},
         {"scanned_through", r.scanned_through},
         {"empirical_through", r.empirical_through},
         {"wlp_ok", r.wlp_ok},
         {"status", r.status},
         {"elapsed_ms", r.elapsed_ms}};
  // Full per-degree detail is bulky; keep it only where something went wrong.
  j["detail"] = r.wlp_ok ? json(nullptr) : to_json(r.report);
  return j;
}

json to_json(const SweepResult& r) {
  json cells = json::array();
  for (const auto& cell : r.cells) {
    json instances = json::array();
    for (const auto& inst : cell.instances) instances.push_back(to_json(inst));
    cells.push_back(json{{"n", cell.n},
                         {"d", cell.d},
                         {"bounds", to_json(cell.bounds)},
                         {"instances", std::move(instances)},
                         {"suspected_seeds", cell.suspected_seeds},
                         {"agreement", cell.agreement},
                         {"elapsed_ms", cell.elapsed_ms}});
  }
  json flags = json::array();
  for (const auto& f : r.red_flags) {
    flags.push_back(json{{"n", f.n},
                         {"d", f.d},
                         {"instance", f.instance},
                         {"instance_seed", f.instance_seed},
                         {"degree", f.degree},
                         {"status", f.status},
                         {"range", f.range}});
  }
  return json{{"config", to_json(r.config)},
              {"cells", std::move(cells)},
              {"red_flags", std::move(flags)},
              {"all_certified", r.all_certified()},
              {"elapsed_ms", r.elapsed_ms}};
}

}  // namespace lefschetz
