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

#include "dsskit/config.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dsskit/errors.hpp"

namespace dsskit::io
{

namespace
{

using nlohmann::json;

[[noreturn]] void fail(const std::string & origin, const std::string & where,
  const std::string & message)
{
  throw ConfigError(origin + ": " + where + ": " + message);
}

std::string line_column(const std::string & text, std::size_t byte)
{
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

double get_number(
  const json & node, const std::string & pointer, const std::string & key,
  const std::string & origin)
{
  if (!node.contains(key)) {
    fail(origin, pointer, "missing required key \"" + key + "\"");
  }
  if (!node.at(key).is_number()) {
    fail(origin, pointer + "/" + key, "expected a number");
  }
  return node.at(key).get<double>();
}

double get_number_or(
  const json & node, const std::string & pointer, const std::string & key, double fallback,
  const std::string & origin)
{
  if (!node.contains(key)) {
    return fallback;
  }
  if (!node.at(key).is_number()) {
    fail(origin, pointer + "/" + key, "expected a number");
  }
  return node.at(key).get<double>();
}

void check_known_keys(
  const json & node, const std::string & pointer, const std::vector<std::string> & known,
  const std::string & origin)
{
  for (const auto & item : node.items()) {
    bool ok = false;
    for (const auto & k : known) {
      if (item.key() == k) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      fail(origin, pointer, "unknown key \"" + item.key() + "\"");
    }
  }
}

}  // namespace

RelativeScenario ScenarioConfig::relative_view() const
{
  if (relative) {
    return *relative;
  }
  return to_relative(*absolute, env);
}

AbsoluteScenario ScenarioConfig::absolute_view() const
{
  if (absolute) {
    return *absolute;
  }
  return to_absolute(*relative, env, 0.0);
}

bva::DerivationConfig ScenarioConfig::derivation_config() const
{
  bva::DerivationConfig config;
  config.accuracy = accuracy;
  config.boundary_tol = boundary_tol;
  config.threshold = threshold;
  config.nominal = relative_view();
  config.env = env;
  config.axes = axes;
  return config;
}

bva::AbsoluteDerivationConfig ScenarioConfig::absolute_derivation_config() const
{
  bva::AbsoluteDerivationConfig config;
  config.accuracy = accuracy;
  config.boundary_tol = boundary_tol;
  config.threshold = threshold;
  config.nominal = absolute_view();
  config.env = env;
  config.axes = absolute_axes
    ? *absolute_axes
    : bva::AbsoluteDerivationConfig::default_axes(config.nominal, env);
  return config;
}

ScenarioConfig parse_config(const std::string & text, const std::string & origin)
{
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error & e) {
    fail(origin, line_column(text, e.byte > 0 ? e.byte - 1 : 0), e.what());
  }
  if (!root.is_object()) {
    fail(origin, "/", "top level must be an object");
  }
  check_known_keys(
    root, "/", {"env", "scenario", "reaction_time", "derivation", "sim", "verify"}, origin);

  ScenarioConfig cfg;

  if (root.contains("env")) {
    const json & env = root.at("env");
    check_known_keys(env, "/env", {"g", "mu", "l_V"}, origin);
    cfg.env.gravity = get_number_or(env, "/env", "g", cfg.env.gravity, origin);
    cfg.env.friction = get_number_or(env, "/env", "mu", cfg.env.friction, origin);
    cfg.env.vehicle_length = get_number_or(env, "/env", "l_V", cfg.env.vehicle_length, origin);
  }
  try {
    validate(cfg.env);
  } catch (const DomainError & e) {
    // physical invariants keep their domain-error identity
    throw DomainError(origin + ": /env: " + e.what());
  }

  if (!root.contains("scenario") || !root.at("scenario").is_object()) {
    fail(origin, "/scenario", "missing scenario block");
  }
  const json & scenario = root.at("scenario");
  check_known_keys(scenario, "/scenario", {"units", "relative", "absolute"}, origin);

  bool speeds_in_kmh = false;
  if (scenario.contains("units")) {
    const auto units = scenario.at("units").get<std::string>();
    if (units == "kmh") {
      speeds_in_kmh = true;
    } else if (units != "si") {
      fail(origin, "/scenario/units", "units must be \"si\" or \"kmh\", got \"" + units + "\"");
    }
  }

  const auto speed = [speeds_in_kmh](double value) {
    return speeds_in_kmh ? from_kmh(value) : value;
  };

  const bool has_relative = scenario.contains("relative");
  const bool has_absolute = scenario.contains("absolute");
  if (has_relative == has_absolute) {
    fail(
      origin, "/scenario",
      "exactly one of \"relative\" or \"absolute\" must be present");
  }

  if (has_relative) {
    const json & rel = scenario.at("relative");
    check_known_keys(rel, "/scenario/relative", {"d_V", "delta_v", "t_BR", "v_L"}, origin);
    RelativeScenario s;
    s.effective_distance = get_number(rel, "/scenario/relative", "d_V", origin);
    s.speed_delta = speed(get_number(rel, "/scenario/relative", "delta_v", origin));
    s.reaction_time = get_number(rel, "/scenario/relative", "t_BR", origin);
    if (rel.contains("v_L")) {
      s.lead_speed = speed(get_number(rel, "/scenario/relative", "v_L", origin));
    } else {
      s.lead_speed = kNominalLeadSpeed;
    }
    try {
      validate(s);
    } catch (const DomainError & e) {
      throw DomainError(origin + ": /scenario/relative: " + e.what());
    }
    cfg.relative = s;
  } else {
    const json & abs = scenario.at("absolute");
    check_known_keys(abs, "/scenario/absolute", {"x_L", "x_F", "v_L", "v_F", "t_BR"}, origin);
    AbsoluteScenario s;
    s.lead_position = get_number(abs, "/scenario/absolute", "x_L", origin);
    s.follow_position = get_number(abs, "/scenario/absolute", "x_F", origin);
    s.lead_speed = speed(get_number(abs, "/scenario/absolute", "v_L", origin));
    s.follow_speed = speed(get_number(abs, "/scenario/absolute", "v_F", origin));
    s.reaction_time = get_number(abs, "/scenario/absolute", "t_BR", origin);
    try {
      validate(s, cfg.env);
    } catch (const DomainError & e) {
      throw DomainError(origin + ": /scenario/absolute: " + e.what());
    }
    cfg.absolute = s;
  }

  if (root.contains("reaction_time")) {
    const json & rt = root.at("reaction_time");
    check_known_keys(rt, "/reaction_time", {"t0", "k", "theta", "seed"}, origin);
    cfg.reaction_params.shift =
      get_number_or(rt, "/reaction_time", "t0", cfg.reaction_params.shift, origin);
    cfg.reaction_params.shape =
      get_number_or(rt, "/reaction_time", "k", cfg.reaction_params.shape, origin);
    cfg.reaction_params.scale =
      get_number_or(rt, "/reaction_time", "theta", cfg.reaction_params.scale, origin);
    if (rt.contains("seed")) {
      if (!rt.at("seed").is_number_unsigned()) {
        fail(origin, "/reaction_time/seed", "seed must be a non-negative integer");
      }
      cfg.seed = rt.at("seed").get<std::uint64_t>();
    }
    try {
      reaction::validate(cfg.reaction_params);
    } catch (const DomainError & e) {
      fail(origin, "/reaction_time", e.what());
    }
  }

  if (root.contains("derivation")) {
    const json & dv = root.at("derivation");
    check_known_keys(
      dv, "/derivation", {"accuracy", "boundary_tol", "threshold", "form", "axes"}, origin);
    cfg.accuracy = get_number_or(dv, "/derivation", "accuracy", cfg.accuracy, origin);
    cfg.boundary_tol = get_number_or(dv, "/derivation", "boundary_tol", cfg.boundary_tol, origin);
    cfg.threshold = get_number_or(dv, "/derivation", "threshold", cfg.threshold, origin);
    if (!(cfg.accuracy > 0.0)) {
      fail(origin, "/derivation/accuracy", "accuracy must be > 0");
    }
    if (!(cfg.boundary_tol > 0.0)) {
      fail(origin, "/derivation/boundary_tol", "boundary_tol must be > 0");
    }
    if (dv.contains("form")) {
      const auto form = dv.at("form").get<std::string>();
      if (form == "relative") {
        cfg.form = bva::DerivationForm::Relative;
      } else if (form == "absolute") {
        cfg.form = bva::DerivationForm::Absolute;
      } else {
        fail(origin, "/derivation/form", "form must be \"relative\" or \"absolute\"");
      }
    }
    if (dv.contains("axes")) {
      const json & axes = dv.at("axes");
      check_known_keys(
        axes, "/derivation/axes", {"d_V", "delta_v", "t_BR", "x_L", "x_F", "v_L", "v_F"}, origin);
      auto load_bounds = [&](const char * key) -> std::optional<std::pair<double, double>> {
        if (!axes.contains(key)) {
          return std::nullopt;
        }
        const json & b = axes.at(key);
        const std::string pointer = std::string("/derivation/axes/") + key;
        if (!b.is_array() || b.size() != 2 || !b[0].is_number() || !b[1].is_number()) {
          fail(origin, pointer, "axis bounds must be a [lower, upper] number pair");
        }
        const double lo = b[0].get<double>();
        const double hi = b[1].get<double>();
        if (!(lo < hi)) {
          fail(origin, pointer, "axis bounds must satisfy lower < upper");
        }
        return std::make_pair(lo, hi);
      };
      for (auto & axis : cfg.axes) {
        if (const auto bounds = load_bounds(std::string(bva::axis_label(axis.id)).c_str())) {
          axis.lower = bounds->first;
          axis.upper = bounds->second;
        }
      }
      const bool has_absolute_axis = axes.contains("x_L") || axes.contains("x_F") ||
        axes.contains("v_L") || axes.contains("v_F");
      if (has_absolute_axis) {
        auto abs_axes =
          bva::AbsoluteDerivationConfig::default_axes(cfg.absolute_view(), cfg.env);
        for (auto & axis : abs_axes) {
          if (const auto bounds = load_bounds(std::string(bva::axis_label(axis.id)).c_str())) {
            axis.lower = bounds->first;
            axis.upper = bounds->second;
          }
        }
        cfg.absolute_axes = abs_axes;
      }
    }
  }

  if (root.contains("sim")) {
    const json & sm = root.at("sim");
    check_known_keys(sm, "/sim", {"dt", "max_time", "dead_band"}, origin);
    cfg.sim.dt = get_number_or(sm, "/sim", "dt", cfg.sim.dt, origin);
    cfg.sim.max_time = get_number_or(sm, "/sim", "max_time", cfg.sim.max_time, origin);
    cfg.dead_band = get_number_or(sm, "/sim", "dead_band", cfg.dead_band, origin);
    if (cfg.dead_band < 0.0) {
      fail(origin, "/sim/dead_band", "dead_band must be >= 0");
    }
    try {
      sim::validate(cfg.sim);
    } catch (const DomainError & e) {
      fail(origin, "/sim", e.what());
    }
  }

  if (root.contains("verify")) {
    const json & vf = root.at("verify");
    check_known_keys(vf, "/verify", {"samples"}, origin);
    if (vf.contains("samples")) {
      if (!vf.at("samples").is_number_unsigned()) {
        fail(origin, "/verify/samples", "samples must be a non-negative integer");
      }
      cfg.verify_samples = vf.at("samples").get<std::size_t>();
    }
  }

  return cfg;
}

ScenarioConfig load_config(const std::string & path)
{
  std::ifstream stream(path, std::ios::binary);
  if (!stream) {
    throw ConfigError(path + ": cannot open configuration file");
  }
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  return parse_config(buffer.str(), path);
}

}  // namespace dsskit::io
