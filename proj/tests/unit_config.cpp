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

#include <string>

#include <doctest.h>

#include "dsskit/config.hpp"
#include "dsskit/errors.hpp"

using namespace dsskit;
using dsskit::io::parse_config;

namespace
{

std::string message_of(const std::string & text)
{
  try {
    parse_config(text, "test.json");
  } catch (const Error & e) {  // ConfigError or DomainError
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("minimal relative config applies the documented defaults")
{
  const auto cfg = parse_config(
    R"({"scenario": {"relative": {"d_V": 42.56, "delta_v": -5.5556, "t_BR": 0.7}}})",
    "test.json");
  CHECK(cfg.env.gravity == 9.81);
  CHECK(cfg.env.friction == 0.9);
  CHECK(cfg.env.vehicle_length == 5.0);
  REQUIRE(cfg.relative.has_value());
  CHECK(cfg.relative->lead_speed == kNominalLeadSpeed);
  CHECK(cfg.accuracy == 0.01);
  CHECK(cfg.boundary_tol == 1e-7);
  CHECK(cfg.threshold == 0.0);
  CHECK(cfg.form == bva::DerivationForm::Relative);
  CHECK(cfg.sim.dt == 0.01);
  CHECK(cfg.dead_band == 0.05);
  CHECK(cfg.verify_samples == 1000);
  CHECK(cfg.reaction_params.mean() == doctest::Approx(0.7));

  const auto derivation = cfg.derivation_config();
  CHECK(derivation.axes[0].upper == 500.0);
  CHECK(derivation.nominal.effective_distance == 42.56);
}

TEST_CASE("km/h tagged speeds divide by exactly 3.6")
{
  const auto cfg = parse_config(
    R"({"scenario": {"units": "kmh",
        "relative": {"d_V": 42.56, "delta_v": -20.0, "t_BR": 0.7, "v_L": 100.0}}})",
    "test.json");
  REQUIRE(cfg.relative.has_value());
  CHECK(cfg.relative->speed_delta == -20.0 / 3.6);
  CHECK(cfg.relative->lead_speed == 100.0 / 3.6);
  CHECK(cfg.relative->speed_delta == doctest::Approx(-5.5556).epsilon(1e-5));
  CHECK(cfg.relative->effective_distance == 42.56);  // distances stay untouched
  CHECK(cfg.relative->reaction_time == 0.7);
}

TEST_CASE("absolute scenario config")
{
  const auto cfg = parse_config(
    R"({"scenario": {"units": "kmh",
        "absolute": {"x_L": 47.56, "x_F": 0.0, "v_L": 100.0, "v_F": 120.0, "t_BR": 0.7}}})",
    "test.json");
  REQUIRE(cfg.absolute.has_value());
  CHECK_FALSE(cfg.relative.has_value());
  CHECK(cfg.absolute->lead_speed == 100.0 / 3.6);
  CHECK(cfg.absolute->follow_speed == 120.0 / 3.6);

  const auto rel = cfg.relative_view();
  CHECK(rel.effective_distance == doctest::Approx(42.56).epsilon(1e-12));
  const auto abs = cfg.absolute_view();
  CHECK(abs.lead_position == 47.56);
}

TEST_CASE("exactly one scenario form must be present")
{
  CHECK(message_of(R"({"scenario": {}})").find("/scenario") != std::string::npos);
  CHECK(
    message_of(
      R"({"scenario": {
        "relative": {"d_V": 1.0, "delta_v": 0.0, "t_BR": 0.1},
        "absolute": {"x_L": 10.0, "x_F": 0.0, "v_L": 1.0, "v_F": 1.0, "t_BR": 0.1}}})")
      .find("exactly one") != std::string::npos);
  CHECK(message_of(R"({})").find("/scenario") != std::string::npos);
}

TEST_CASE("parse errors carry line and column")
{
  const auto message = message_of("{\n  \"scenario\": {\n    oops\n");
  CHECK(message.find("line 3") != std::string::npos);
}

TEST_CASE("invariant violations carry the JSON pointer and stay domain errors")
{
  const auto negative_gap = message_of(
    R"({"scenario": {"relative": {"d_V": -1.0, "delta_v": 0.0, "t_BR": 0.1}}})");
  CHECK(negative_gap.find("/scenario/relative") != std::string::npos);
  CHECK(negative_gap.find("d_V") != std::string::npos);

  const auto bad_mu = message_of(
    R"({"env": {"mu": 0.0},
        "scenario": {"relative": {"d_V": 1.0, "delta_v": 0.0, "t_BR": 0.1}}})");
  CHECK(bad_mu.find("/env") != std::string::npos);

  const auto overlap = message_of(
    R"({"scenario": {"absolute": {"x_L": 3.0, "x_F": 0.0, "v_L": 1.0, "v_F": 1.0, "t_BR": 0.1}}})");
  CHECK(overlap.find("/scenario/absolute") != std::string::npos);
  CHECK(overlap.find("overlap") != std::string::npos);

  // physical violations surface as DomainError (CLI exit 3), structural
  // problems as ConfigError (CLI exit 2)
  CHECK_THROWS_AS(
    parse_config(
      R"({"scenario": {"relative": {"d_V": -1.0, "delta_v": 0.0, "t_BR": 0.1}}})", "t.json"),
    DomainError);
  CHECK_THROWS_AS(
    parse_config(
      R"({"scenario": {"relative": {"d_V": 1.0, "delta_v": 30.0, "t_BR": 0.1, "v_L": 5.0}}})",
      "t.json"),
    DomainError);
  CHECK_THROWS_AS(parse_config(R"({"scenario": {}})", "t.json"), ConfigError);
  CHECK_THROWS_AS(parse_config("{ nope", "t.json"), ConfigError);
}

TEST_CASE("unknown keys are rejected")
{
  CHECK(
    message_of(
      R"({"scenario": {"relative": {"d_V": 1.0, "delta_v": 0.0, "t_BR": 0.1, "bogus": 1}}})")
      .find("bogus") != std::string::npos);
  CHECK(
    message_of(
      R"({"typo": {}, "scenario": {"relative": {"d_V": 1.0, "delta_v": 0.0, "t_BR": 0.1}}})")
      .find("typo") != std::string::npos);
}

TEST_CASE("derivation block")
{
  const auto cfg = parse_config(
    R"({"scenario": {"relative": {"d_V": 42.56, "delta_v": -5.5556, "t_BR": 0.7}},
        "derivation": {"accuracy": 0.02, "boundary_tol": 1e-8, "threshold": 0.1,
                       "form": "absolute",
                       "axes": {"d_V": [10.0, 100.0], "t_BR": [0.0, 2.0]}}})",
    "test.json");
  CHECK(cfg.accuracy == 0.02);
  CHECK(cfg.boundary_tol == 1e-8);
  CHECK(cfg.threshold == 0.1);
  CHECK(cfg.form == bva::DerivationForm::Absolute);
  CHECK(cfg.axes[0].lower == 10.0);
  CHECK(cfg.axes[0].upper == 100.0);
  CHECK(cfg.axes[1].lower == -50.0);  // untouched default
  CHECK(cfg.axes[2].upper == 2.0);

  CHECK(
    message_of(
      R"({"scenario": {"relative": {"d_V": 1.0, "delta_v": 0.0, "t_BR": 0.1}},
          "derivation": {"accuracy": 0.0}})")
      .find("accuracy") != std::string::npos);
  CHECK(
    message_of(
      R"({"scenario": {"relative": {"d_V": 1.0, "delta_v": 0.0, "t_BR": 0.1}},
          "derivation": {"axes": {"d_V": [5.0, 1.0]}}})")
      .find("lower < upper") != std::string::npos);
  CHECK(
    message_of(
      R"({"scenario": {"relative": {"d_V": 1.0, "delta_v": 0.0, "t_BR": 0.1}},
          "derivation": {"form": "sideways"}})")
      .find("form") != std::string::npos);
}

TEST_CASE("reaction, sim and verify blocks")
{
  const auto cfg = parse_config(
    R"({"scenario": {"relative": {"d_V": 42.56, "delta_v": -5.5556, "t_BR": 0.7}},
        "reaction_time": {"t0": 0.5, "k": 3.0, "theta": 0.1, "seed": 777},
        "sim": {"dt": 0.05, "max_time": 30.0, "dead_band": 0.1},
        "verify": {"samples": 250}})",
    "test.json");
  CHECK(cfg.reaction_params.shift == 0.5);
  CHECK(cfg.reaction_params.shape == 3.0);
  CHECK(cfg.reaction_params.scale == 0.1);
  CHECK(cfg.seed == 777);
  CHECK(cfg.sim.dt == 0.05);
  CHECK(cfg.sim.max_time == 30.0);
  CHECK(cfg.dead_band == 0.1);
  CHECK(cfg.verify_samples == 250);

  CHECK(
    message_of(
      R"({"scenario": {"relative": {"d_V": 1.0, "delta_v": 0.0, "t_BR": 0.1}},
          "sim": {"dt": 0.5}})")
      .find("/sim") != std::string::npos);
  CHECK(
    message_of(
      R"({"scenario": {"relative": {"d_V": 1.0, "delta_v": 0.0, "t_BR": 0.1}},
          "reaction_time": {"k": -1.0}})")
      .find("/reaction_time") != std::string::npos);
  CHECK(
    message_of(
      R"({"scenario": {"relative": {"d_V": 1.0, "delta_v": 0.0, "t_BR": 0.1}},
          "reaction_time": {"seed": -4}})")
      .find("seed") != std::string::npos);
}

TEST_CASE("absolute axes overrides")
{
  const auto cfg = parse_config(
    R"({"scenario": {"relative": {"d_V": 42.56, "delta_v": -5.5556, "t_BR": 0.7}},
        "derivation": {"form": "absolute", "axes": {"v_L": [0.0, 60.0]}}})",
    "test.json");
  REQUIRE(cfg.absolute_axes.has_value());
  CHECK((*cfg.absolute_axes)[2].upper == 60.0);
  const auto abs_config = cfg.absolute_derivation_config();
  CHECK(abs_config.axes[2].upper == 60.0);
}
