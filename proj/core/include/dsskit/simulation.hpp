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

#ifndef DSSKIT__SIMULATION_HPP_
#define DSSKIT__SIMULATION_HPP_

#include <optional>
#include <vector>

#include "dsskit/kinematics.hpp"
#include "dsskit/safety_relevance.hpp"

namespace dsskit::sim
{

/// Discretization settings. The maneuver is integrated with exact
/// piecewise-constant-acceleration closed forms between events (brake
/// onsets, stops, collision crossings); dt only controls how densely the
/// optional trajectory is sampled.
struct SimConfig
{
  double dt = 0.01;        ///< trajectory sampling step [s], in (0, 0.1]
  double max_time = 60.0;  ///< simulation horizon [s]
};

void validate(const SimConfig & cfg);

struct TrajectorySample
{
  double t = 0.0;
  double x_lead = 0.0;
  double v_lead = 0.0;
  double x_follow = 0.0;
  double v_follow = 0.0;
  double gap = 0.0;  ///< effective distance x_L - x_F - l_V
};

struct SimOutcome
{
  bool collided = false;  ///< some instant had effective distance < 0
  double min_gap = 0.0;   ///< minimum effective distance over the run [m]
  double stop_time = 0.0; ///< when all motion has ceased, clamped to max_time [s]
  double final_gap = 0.0; ///< effective distance at stop_time [m]
  std::optional<double> collision_time;  ///< first gap < 0 crossing [s]
  std::vector<TrajectorySample> trajectory;  ///< filled when requested
};

/// Runs the frozen-deceleration maneuver: the leader brakes at a_B,max from
/// t = 0 until standstill; the follower holds its speed for t_BR, then
/// brakes at a_B,max until standstill. Collision crossings are located by
/// closed-form quadratic roots inside each phase; on contact the kinematic
/// trajectories keep evolving so min_gap reports the penetration depth.
SimOutcome simulate(
  const AbsoluteScenario & s, const EnvConstants & env, const SimConfig & cfg,
  bool record_trajectory = false);

/// |DSS| at or below this dead band is too close to the boundary for a
/// meaningful collision/no-collision comparison.
inline constexpr double kDefaultDeadBand = 0.05;

/// One DSS-vs-simulation comparison.
struct OracleRecord
{
  double dss = 0.0;
  bool predicted_critical = false;  ///< DSS < 0
  bool collided = false;            ///< simulator outcome
  bool excluded = false;            ///< |DSS| <= dead_band, not compared
  bool agree = true;                ///< predicted_critical == collided (true when excluded)
  double final_gap = 0.0;
  double gap_error = 0.0;           ///< |final_gap - DSS|
};

/// Evaluates DSS analytically, simulates the same scenario (follower
/// anchored at x_F = 0) and reports whether the collision flag matches the
/// DSS sign.
OracleRecord oracle_check(
  const RelativeScenario & s, const EnvConstants & env, const SimConfig & cfg,
  double dead_band = kDefaultDeadBand);

/// The (speed, acceleration) sign combinations realized while the maneuver
/// unfolds: at brake onset, at the follower's brake onset and at the
/// leader's standstill instant (where the braking that produced it is still
/// attributed). Feed into relevance::coverage_report.
std::vector<relevance::SignSample> maneuver_sign_samples(
  const RelativeScenario & s, const EnvConstants & env);

}  // namespace dsskit::sim

#endif  // DSSKIT__SIMULATION_HPP_
