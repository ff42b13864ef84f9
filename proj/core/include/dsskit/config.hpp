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

#ifndef DSSKIT__CONFIG_HPP_
#define DSSKIT__CONFIG_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "dsskit/bva.hpp"
#include "dsskit/kinematics.hpp"
#include "dsskit/reaction_time.hpp"
#include "dsskit/simulation.hpp"

namespace dsskit::io
{

/// Scenario configuration file (JSON). Speeds may be tagged "kmh" in the
/// scenario block and are converted with the exact factor 1/3.6 at load;
/// everything downstream is SI. Exactly one of the relative/absolute
/// scenario forms must be present.
struct ScenarioConfig
{
  EnvConstants env;
  std::optional<RelativeScenario> relative;
  std::optional<AbsoluteScenario> absolute;

  reaction::ShiftedGammaParams reaction_params;
  std::uint64_t seed = 42;

  double accuracy = 0.01;
  double boundary_tol = 1e-7;
  double threshold = 0.0;
  bva::DerivationForm form = bva::DerivationForm::Relative;
  std::array<bva::ParameterAxis, 3> axes = bva::DerivationConfig::default_axes();
  std::optional<std::array<bva::AbsoluteParameterAxis, 5>> absolute_axes;

  sim::SimConfig sim;
  double dead_band = sim::kDefaultDeadBand;
  std::size_t verify_samples = 1000;

  /// The scenario in relative form (converting when absolute was given).
  RelativeScenario relative_view() const;

  /// The scenario in absolute form (anchoring at x_F = 0 when relative
  /// was given).
  AbsoluteScenario absolute_view() const;

  bva::DerivationConfig derivation_config() const;
  bva::AbsoluteDerivationConfig absolute_derivation_config() const;
};

/// Parses and validates a configuration. Parse errors carry line:column,
/// invariant violations carry the JSON pointer of the offending value.
/// Throws ConfigError.
ScenarioConfig parse_config(const std::string & text, const std::string & origin);

ScenarioConfig load_config(const std::string & path);

}  // namespace dsskit::io

#endif  // DSSKIT__CONFIG_HPP_
