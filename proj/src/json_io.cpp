#include "sumstruct/json_io.hpp"

namespace sumstruct {

void to_json(json& j, const GroupCtx& g) { j = g.describe(); }

void to_json(json& j, const ElemSet& s) { j = s.elems; }

void to_json(json& j, const ApWindow& w) {
  j = json{{"start", w.start}, {"diff", w.diff}, {"len", w.len}};
}

void to_json(json& j, const CoverResult& v) {
  j = json{{"window", v.win}, {"covered", v.covered}};
}

void to_json(json& j, const JointCoverResult& v) {
  j = json{{"p1", v.p1},
           {"p2", v.p2},
           {"covered1", v.covered1},
           {"covered2", v.covered2},
           {"total", v.total()}};
}

void to_json(json& j, const StabilityWitness& w) {
  j = json{{"p", w.p}, {"q", w.q}, {"covered_u", w.covered_u}, {"covered_v", w.covered_v}};
}

void to_json(json& j, const DegreeCheck& v) {
  j = json{{"holds", v.holds},
           {"worst_y", v.worst_y},
           {"ratio", v.ratio},
           {"ratio_exact", v.ratio_exact}};
}

void to_json(json& j, const PollardVerdict& v) {
  j = json{{"t", v.t},         {"u_size", v.u_size}, {"v_size", v.v_size},
           {"alpha", v.alpha_used}, {"lhs", v.lhs},  {"rhs", v.rhs},
           {"holds", v.holds}};
}

void to_json(json& j, const SupersatVerdict& v) {
  j = json{{"a1_size", v.a1_size},
           {"a2_size", v.a2_size},
           {"b_size", v.b_size},
           {"eps", v.eps},
           {"beta_used", v.beta_used},
           {"hypothesis_met", v.hypothesis_met},
           {"count", v.count},
           {"bound", v.bound},
           {"holds", v.holds}};
}

void to_json(json& j, const RegularityReport& v) {
  j = json{{"K", v.K},
           {"s", v.s},
           {"min_left_degree", v.min_left_degree},
           {"min_right_degree", v.min_right_degree},
           {"popular_missing", v.popular_missing},
           {"is_regular", v.is_regular}};
}

void to_json(json& j, const KneserVerdict& v) {
  j = json{{"K", v.K},
           {"s", v.s},
           {"swapped", v.swapped},
           {"u_size", v.u_size},
           {"v_size", v.v_size},
           {"is_regular", v.is_regular},
           {"proper_subset", v.proper_subset},
           {"hypothesis_met", v.hypothesis_met},
           {"restricted_size", v.restricted_size},
           {"bound_times2", v.bound_times2},
           {"holds", v.holds}};
}

void to_json(json& j, const Almost1Verdict& v) {
  j = json{{"K", v.K},
           {"s", v.s},
           {"u_size", v.u_size},
           {"v_size", v.v_size},
           {"ell", v.ell},
           {"ell_prime", v.ell_prime},
           {"is_regular", v.is_regular},
           {"hypothesis_met", v.hypothesis_met},
           {"case_two", v.case_two},
           {"restricted_size", v.restricted_size},
           {"bound_times2", v.bound_times2},
           {"holds", v.holds}};
}

void to_json(json& j, const StabilityVerdict& v) {
  j = json{{"eps", v.eps},
           {"u_size", v.u_size},
           {"v_size", v.v_size},
           {"n_small", v.n_small},
           {"m_large", v.m_large},
           {"gamma_size", v.gamma_size},
           {"restricted_size", v.restricted_size},
           {"r", v.r},
           {"hypothesis_met", v.hypothesis_met},
           {"cap_p", v.cap_p},
           {"cap_q", v.cap_q},
           {"conclusion_witnessed", v.conclusion_witnessed},
           {"holds", v.holds}};
  j["witness"] = v.witness ? json(*v.witness) : json(nullptr);
}

void to_json(json& j, const RelStabilityVerdict& v) {
  j = json{{"eps", v.eps},
           {"s1", v.s1},
           {"s2", v.s2},
           {"a1_size", v.a1_size},
           {"a2_size", v.a2_size},
           {"b_size", v.b_size},
           {"hypothesis_met", v.hypothesis_met},
           {"bad_pairs", v.bad_pairs},
           {"bad_needed", v.bad_needed},
           {"many_bad_pairs", v.many_bad_pairs},
           {"cap1", v.cap1},
           {"cap2", v.cap2},
           {"conclusion_witnessed", v.conclusion_witnessed},
           {"holds", v.holds}};
  j["witness"] = v.witness ? json(*v.witness) : json(nullptr);
}

void to_json(json& j, const BinomVerdict& v) {
  j = json{{"m", v.m},
           {"s", v.s},
           {"t", v.t},
           {"alpha", v.alpha_p},
           {"eps", v.eps},
           {"lhs_n1", v.lhs_n1},
           {"lhs_n2", v.lhs_n2},
           {"rhs_n1", v.rhs_n1},
           {"rhs_n2", v.rhs_n2},
           {"lhs_floored", v.lhs_floored},
           {"rhs_floored", v.rhs_floored},
           {"lhs", v.lhs},
           {"rhs", v.rhs},
           {"exp_arg", v.exp_arg},
           {"method", v.method},
           {"holds", v.holds}};
}

void to_json(json& j, const EnumerateResult& v) {
  j = json{{"n", v.n},
           {"s1", v.s1},
           {"s2", v.s2},
           {"m", v.m},
           {"pair_space", v.pair_space},
           {"admissible", v.admissible},
           {"sumset_size_hist", v.sumset_size_hist}};
}

void to_json(json& j, const SampledPair& v) {
  j = json{{"x1", v.x1}, {"x2", v.x2}, {"sumset_size", v.sumset_size}};
}

void to_json(json& j, const SampleStats& v) {
  j = json{{"requested", v.requested},
           {"produced", v.produced},
           {"approximate", v.approximate},
           {"burn_in", v.burn_in},
           {"stride", v.stride},
           {"pilot_acceptance", v.pilot_acceptance},
           {"seed", v.seed}};
}

void to_json(json& j, const SampleResult& v) {
  j = json{{"stats", v.stats}, {"pairs", v.pairs}};
}

void to_json(json& j, const StructurePairStat& v) {
  j = json{{"x1", v.x1},
           {"x2", v.x2},
           {"sumset_size", v.sumset_size},
           {"ap_diff", v.ap_diff},
           {"covered1", v.covered1},
           {"covered2", v.covered2},
           {"exceptional1", v.exceptional1},
           {"exceptional2", v.exceptional2}};
}

void to_json(json& j, const StructureReport& v) {
  j = json{{"cap1", v.cap1},
           {"cap2", v.cap2},
           {"slack", v.slack},
           {"pairs", v.pairs},
           {"fully_covered", v.fully_covered},
           {"max_exceptional1", v.max_exceptional1},
           {"max_exceptional2", v.max_exceptional2},
           {"mean_exceptional1", v.mean_exceptional1},
           {"mean_exceptional2", v.mean_exceptional2},
           {"source_sampled", v.source_sampled},
           {"rows", v.rows}};
  if (v.source_sampled) j["sample_stats"] = v.sample_stats;
}

void to_json(json& j, const CountReport& v) {
  j = json{{"n", v.n},
           {"s1", v.s1},
           {"s2", v.s2},
           {"m", v.m},
           {"exact_count", v.exact_count},
           {"benchmark", v.benchmark},
           {"lambda", v.lambda},
           {"beta_used", v.beta_used},
           {"log_count", v.log_count},
           {"log_benchmark", v.log_benchmark},
           {"log_margin", v.log_margin},
           {"bound_ok", v.bound_ok}};
}

void to_json(json& j, const CellSummary& v) {
  j = json{{"params", v.params},
           {"checks", v.checks},
           {"hypothesis_met", v.hypothesis_met},
           {"witnessed", v.witnessed},
           {"violations", v.violations}};
}

void to_json(json& j, const SweepOutcome& v) {
  j = json{{"oracle", v.oracle},
           {"cells", v.cells},
           {"checks", v.checks},
           {"hypothesis_met", v.hypothesis_met},
           {"witnessed", v.witnessed},
           {"violations", v.violations}};
}

void to_json(json& j, const RoundStats& v) {
  j = json{{"stage", v.stage},
           {"i_prime", v.i_prime},
           {"iterations", v.iterations},
           {"picked_in", v.picked_in},
           {"picked_out", v.picked_out},
           {"edges_in", v.edges_in},
           {"edges_out", v.edges_out},
           {"kept_density", v.kept_density},
           {"big_discard_side", v.big_discard_side},
           {"big_discard_last", v.big_discard_last},
           {"inert_stop", v.inert_stop}};
}

void to_json(json& j, const ContainerRecord& v) {
  j = json{{"fingerprint", v.fingerprint},
           {"container", v.container},
           {"stop_stage", v.stop_stage},
           {"stop_part", v.stop_part},
           {"rounds", v.rounds}};
}

void to_json(json& j, const ContainerPropertyReport& v) {
  j = json{{"checked", v.checked},
           {"containment_failures", v.containment_failures},
           {"shrink_failures", v.shrink_failures},
           {"fingerprint_outside_i", v.fingerprint_outside_i},
           {"side_condition_failures", v.side_condition_failures},
           {"fingerprint_all_empty", v.fingerprint_all_empty},
           {"delta_exact", v.delta_exact},
           {"ok", v.ok()}};
}

void to_json(json& j, const FamilyEntry& v) {
  j = json{{"a1", v.a1}, {"a2", v.a2}, {"b", v.b}, {"leaf_kind", leaf_kind_name(v.leaf_kind)}};
}

void to_json(json& j, const TreeStats& v) {
  j = json{{"nodes", v.nodes},
           {"internal_nodes", v.internal_nodes},
           {"leaves", v.leaves},
           {"family_size", v.family_size},
           {"admissible_pairs", v.admissible_pairs},
           {"height", v.height},
           {"height_cap", v.height_cap},
           {"height_ok", v.height_ok},
           {"max_branching", v.max_branching},
           {"children_bound_ok", v.children_bound_ok},
           {"q", v.q},
           {"b", v.b},
           {"regime_s2", v.regime_s2},
           {"regime_m", v.regime_m},
           {"any_m_clamped", v.any_m_clamped},
           {"any_b_clamped", v.any_b_clamped},
           {"leaf_small_container", v.leaf_small_container},
           {"leaf_small_max", v.leaf_small_max},
           {"leaf_small_last", v.leaf_small_last},
           {"leaf_few_edges", v.leaf_few_edges},
           {"family_log_bound", v.family_log_bound},
           {"family_size_ok", v.family_size_ok}};
}

void to_json(json& j, const FamilyResult& v) {
  j = json{{"family", v.family}, {"stats", v.stats}};
}

void to_json(json& j, const FamilyReport& v) {
  j = json{{"entries", v.entries},
           {"pairs_checked", v.pairs_checked},
           {"uncovered_pairs", v.uncovered_pairs},
           {"size_violations", v.size_violations},
           {"property2_failures", v.property2_failures},
           {"size_bound_ok", v.size_bound_ok},
           {"essential_entries", v.essential_entries},
           {"redundant_entries", v.redundant_entries},
           {"ok", v.ok()}};
}

}  // namespace sumstruct
