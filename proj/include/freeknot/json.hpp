#pragma once

// JSON views of the library's result types (nlohmann/json).

#include <json.hpp>

#include "freeknot/brackets.hpp"
#include "freeknot/invertibility.hpp"
#include "freeknot/moves.hpp"
#include "freeknot/parity.hpp"

namespace freeknot {

inline nlohmann::json to_json(const SymmetryConfig& s) {
  return {{"allow_component_permutation", s.allow_component_permutation},
          {"allow_rotation", s.allow_rotation},
          {"allow_reflection_per_component", s.allow_reflection_per_component}};
}

inline nlohmann::json to_json(const QuotientConfig& q) {
  return {{"name", q.name}, {"symmetry", to_json(q.symmetry)}, {"kill_split_loops", q.kill_split_loops}};
}

inline nlohmann::json to_json(const ZgElement& z) {
  nlohmann::json members = nlohmann::json::array();
  for (const auto& m : z.members()) members.push_back(m);
  return {{"config", to_json(z.config())}, {"members", members}};
}

inline nlohmann::json to_json(const FormalSum& f) {
  nlohmann::json members = nlohmann::json::array();
  for (const auto& [key, d] : f.terms()) members.push_back(key);
  return {{"config", {{"name", "formal_sum"}}}, {"members", members}};
}

inline nlohmann::json to_json(const MoveInstance& m) {
  nlohmann::json site = nlohmann::json::array();
  for (const auto& p : m.site) site.push_back({{"component", p.component + 1}, {"index", p.index}});
  nlohmann::json j = {{"kind", to_string(m.kind)}, {"site", site}};
  if (m.kind == MoveKind::R2_add) j["pattern"] = m.antiparallel ? "antiparallel" : "parallel";
  return j;
}

inline nlohmann::json to_json(const std::vector<MoveStep>& path) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& step : path) {
    nlohmann::json j = to_json(step.move);
    j["resulting_diagram"] = emit_diagram(step.result);
    out.push_back(j);
  }
  return out;
}

inline nlohmann::json to_json(const std::map<Label, Parity>& table) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [label, p] : table) out[std::to_string(label)] = to_string(p);
  return out;
}

inline nlohmann::json to_json(const BetaOrbit& b) {
  return {{"n", b.n}, {"sequence", b.sequence}, {"representative", b.representative()}};
}

inline nlohmann::json to_json(const Certificate& c) {
  nlohmann::json conds = nlohmann::json::array();
  for (const auto& cond : c.conditions)
    conds.push_back({{"name", cond.name}, {"holds", cond.holds}, {"witness", cond.witness}});
  return {{"theorem", c.theorem}, {"conditions", conds}, {"verdict", to_string(c.verdict)}};
}

}  // namespace freeknot
