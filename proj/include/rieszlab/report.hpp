#pragma once

#include "rieszlab/content.hpp"
#include "rieszlab/decay.hpp"
#include "rieszlab/oneil.hpp"
#include "rieszlab/potentials.hpp"

#include <json.hpp>

namespace rieszlab {

using nlohmann::json;

inline json to_json(const InequalityReport& r) {
  return json{{"inequality", r.inequality}, {"holds", r.holds},
              {"worst_ratio", r.worst_ratio}, {"lhs", r.lhs},
              {"rhs", r.rhs},                 {"worst_at", r.worst_at},
              {"samples", r.samples}};
}

inline json to_json(const HardyReport& r) {
  return json{{"inequality", "hardy"}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"holds", r.holds}};
}

inline json to_json(const CalderonReport& r) {
  return json{{"inequality", "calderon"},
              {"lhs", r.lhs},
              {"rhs", r.rhs},
              {"factor", r.factor},
              {"holds", r.holds},
              {"factor_within_bound", r.factor_within_bound}};
}

inline json to_json(const HedbergReport& r) {
  return json{{"inequality", "hedberg"},
              {"holds", r.holds},
              {"worst_ratio", r.worst_ratio},
              {"worst_cell", r.worst_cell},
              {"norm_p1", r.norm_p1},
              {"C4", r.c4},
              {"C4_tight", r.c4_tight},
              {"degenerate_cell_flagged", r.degenerate_cell_flagged}};
}

inline json to_json(const Ball& b) {
  return json{{"center", {b.center[0], b.center[1], b.center[2]}}, {"radius", b.radius}};
}

inline json to_json(const CoverEstimate& e) {
  json balls = json::array();
  for (const auto& b : e.balls) balls.push_back(to_json(b));
  return json{{"beta", e.beta}, {"value", e.value}, {"balls", balls}};
}

inline json to_json(const ConstantChain& ch) {
  return json{{"N", ch.dim},
              {"alpha", ch.alpha},
              {"beta", ch.beta},
              {"q", ch.q == kInf ? json("inf") : json(ch.q)},
              {"q_conj", ch.q_conj},
              {"domain_measure", ch.domain_measure},
              {"content_omega", ch.content_omega},
              {"epsilon", ch.epsilon},
              {"r", ch.r},
              {"p0", ch.p0},
              {"delta_p0", ch.delta_p0},
              {"C1", ch.C1},
              {"C1_prime", ch.C1_prime},
              {"C2", ch.C2},
              {"C3", ch.C3},
              {"C4", ch.C4},
              {"C5", ch.C5},
              {"C6", ch.C6},
              {"t0", ch.t0},
              {"c", ch.c},
              {"C", ch.C},
              {"rescale", ch.rescale},
              {"c_bar", ch.c_bar}};
}

inline json to_json(const DecayFit& f) {
  return json{{"valid", f.valid},
              {"c_emp", f.c_emp},
              {"C_emp", f.C_emp},
              {"exponent_emp", f.exponent_emp},
              {"tail_count", f.tail_count}};
}

inline json to_json(const Main2Report& r) {
  json samples = json::array();
  for (const auto& s : r.samples)
    samples.push_back(json{{"t", s.t}, {"content", s.content}, {"bound", s.bound}});
  return json{{"inequality", "main2"},
              {"holds", r.holds},
              {"worst_margin", r.worst_margin},
              {"potential_max", r.potential_max},
              {"constants", to_json(r.chain)},
              {"fit", to_json(r.fit)},
              {"samples", samples}};
}

inline json to_json(const Main1Report& r) {
  json j = to_json(r.base);
  j["inequality"] = "main1";
  j["lebesgue_checked"] = r.lebesgue_checked;
  j["lebesgue_holds"] = r.lebesgue_holds;
  j["norm_inflation"] = r.norm_inflation;
  j["inflation_ok"] = r.inflation_ok;
  return j;
}

inline json to_json(const CorollaryReport& r) {
  return json{{"inequality", "cor2"}, {"lhs", r.lhs},     {"rhs", r.rhs},
              {"c", r.c},             {"c_prime", r.c_prime}, {"C", r.C},
              {"content_omega", r.content_omega}, {"holds", r.holds}};
}

}  // namespace rieszlab
