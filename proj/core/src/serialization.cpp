// Copyright 2026 The dsskit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dsskit/serialization.hpp"

#include <cstdio>
#include <string>

#include "dsskit/errors.hpp"

namespace dsskit::io
{

namespace
{

std::string fixed4(double value)
{
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.4f", value);
  return buffer;
}

std::string fixed6(double value)
{
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6f", value);
  return buffer;
}

}  // namespace

ordered_json to_json(const EnvConstants & env)
{
  return {{"g", env.gravity}, {"mu", env.friction}, {"l_V", env.vehicle_length}};
}

ordered_json to_json(const RelativeScenario & s)
{
  return {
    {"d_V", s.effective_distance},
    {"delta_v", s.speed_delta},
    {"t_BR", s.reaction_time},
    {"v_L", s.lead_speed}};
}

ordered_json to_json(const AbsoluteScenario & s)
{
  return {
    {"x_L", s.lead_position},
    {"x_F", s.follow_position},
    {"v_L", s.lead_speed},
    {"v_F", s.follow_speed},
    {"t_BR", s.reaction_time}};
}

ordered_json to_json(const DssBreakdown & b)
{
  return {
    {"a", b.space_distance},
    {"b", b.stop_distance},
    {"x_B_L", b.lead_braking_distance},
    {"x_R_F", b.reaction_distance},
    {"x_B_F", b.follow_braking_distance},
    {"dss", b.dss}};
}

ordered_json to_json(const bva::Provenance & p)
{
  return {{"tool", p.tool}, {"version", p.version}, {"timestamp", p.timestamp}, {"rng", p.rng}};
}

ordered_json to_json(const bva::TestCase & c)
{
  ordered_json j{
    {"id", c.id},
    {"axis", c.axis},
    {"criticality", std::string(bva::to_string(c.criticality))},
    {"params", to_json(c.params)}};
  if (c.absolute_params) {
    j["absolute_params"] = to_json(*c.absolute_params);
  }
  j["boundary"] = c.boundary;
  j["delta"] = c.delta;
  j["expected_dss"] = c.expected_dss;
  j["breakdown"] = to_json(c.breakdown);
  return j;
}

ordered_json to_json(const bva::TestSuite & suite)
{
  ordered_json cases = ordered_json::array();
  for (const auto & c : suite.cases) {
    cases.push_back(to_json(c));
  }
  ordered_json skipped = ordered_json::array();
  for (const auto & s : suite.skipped) {
    skipped.push_back({{"axis", s.axis}, {"reason", s.reason}});
  }
  return {
    {"provenance", to_json(suite.provenance)},
    {"form", suite.form == bva::DerivationForm::Relative ? "relative" : "absolute"},
    {"accuracy", suite.accuracy},
    {"boundary_tol", suite.boundary_tol},
    {"threshold", suite.threshold},
    {"n_crit_var", suite.crit_variation},
    {"env", to_json(suite.env)},
    {"nominal", to_json(suite.nominal)},
    {"cases", cases},
    {"skipped", skipped}};
}

ordered_json to_json(const sim::SimOutcome & outcome)
{
  ordered_json j{
    {"collided", outcome.collided},
    {"min_gap", outcome.min_gap},
    {"stop_time", outcome.stop_time},
    {"final_gap", outcome.final_gap}};
  if (outcome.collision_time) {
    j["collision_time"] = *outcome.collision_time;
  } else {
    j["collision_time"] = nullptr;
  }
  return j;
}

ordered_json to_json(const sim::OracleRecord & record)
{
  return {
    {"dss", record.dss},
    {"predicted_critical", record.predicted_critical},
    {"collided", record.collided},
    {"excluded", record.excluded},
    {"agree", record.agree},
    {"final_gap", record.final_gap},
    {"gap_error", record.gap_error}};
}

ordered_json to_json(const relevance::CoverageReport & report)
{
  ordered_json combos = ordered_json::array();
  const auto & combinations = relevance::relevant_combinations();
  for (std::size_t i = 0; i < combinations.size(); ++i) {
    combos.push_back(
      {{"combination", combinations[i].label()},
        {"count", report.hits[i]},
        {"hit", report.hits[i] > 0}});
  }
  return {
    {"combinations", combos},
    {"covered", report.covered()},
    {"total", relevance::CoverageReport::total()},
    {"fraction", report.fraction()}};
}

RelativeScenario relative_from_json(const ordered_json & j)
{
  for (const char * key : {"d_V", "delta_v", "t_BR", "v_L"}) {
    if (!j.contains(key) || !j.at(key).is_number()) {
      throw ConfigError(std::string("relative scenario JSON needs numeric \"") + key + "\"");
    }
  }
  RelativeScenario s;
  s.effective_distance = j.at("d_V").get<double>();
  s.speed_delta = j.at("delta_v").get<double>();
  s.reaction_time = j.at("t_BR").get<double>();
  s.lead_speed = j.at("v_L").get<double>();
  return s;
}

std::string suite_to_csv(const bva::TestSuite & suite)
{
  const bool relative = suite.form == bva::DerivationForm::Relative;

  std::string out = "parameter";
  for (const auto & c : suite.cases) {
    out += "," + c.id;
  }
  out += "\n";

  struct Row
  {
    std::string label;
    double (*value)(const bva::TestCase &);
  };
  static const Row kRelativeRows[] = {
    {"d_V [m]", [](const bva::TestCase & c) { return c.params.effective_distance; }},
    {"delta_v [m/s]", [](const bva::TestCase & c) { return c.params.speed_delta; }},
    {"t_BR [s]", [](const bva::TestCase & c) { return c.params.reaction_time; }},
  };
  static const Row kAbsoluteRows[] = {
    {"x_L [m]", [](const bva::TestCase & c) { return c.absolute_params->lead_position; }},
    {"x_F [m]", [](const bva::TestCase & c) { return c.absolute_params->follow_position; }},
    {"v_L [m/s]", [](const bva::TestCase & c) { return c.absolute_params->lead_speed; }},
    {"v_F [m/s]", [](const bva::TestCase & c) { return c.absolute_params->follow_speed; }},
    {"t_BR [s]", [](const bva::TestCase & c) { return c.absolute_params->reaction_time; }},
  };
  static const Row kResultRows[] = {
    {"a [m]", [](const bva::TestCase & c) { return c.breakdown.space_distance; }},
    {"b [m]", [](const bva::TestCase & c) { return c.breakdown.stop_distance; }},
    {"DSS [m]", [](const bva::TestCase & c) { return c.expected_dss; }},
  };

  const auto emit = [&](const Row & row) {
    out += row.label;
    for (const auto & c : suite.cases) {
      out += "," + fixed4(row.value(c));
    }
    out += "\n";
  };
  if (relative) {
    for (const auto & row : kRelativeRows) {
      emit(row);
    }
  } else {
    for (const auto & row : kAbsoluteRows) {
      emit(row);
    }
  }
  for (const auto & row : kResultRows) {
    emit(row);
  }

  out += "criticality";
  for (const auto & c : suite.cases) {
    out += ",";
    out += bva::to_string(c.criticality);
  }
  out += "\n";
  return out;
}

std::string trajectory_to_csv(const std::vector<sim::TrajectorySample> & trajectory)
{
  std::string out = "t,x_L,v_L,x_F,v_F,gap\n";
  for (const auto & p : trajectory) {
    out += fixed6(p.t) + "," + fixed6(p.x_lead) + "," + fixed6(p.v_lead) + "," +
      fixed6(p.x_follow) + "," + fixed6(p.v_follow) + "," + fixed6(p.gap) + "\n";
  }
  return out;
}

}  // namespace dsskit::io
