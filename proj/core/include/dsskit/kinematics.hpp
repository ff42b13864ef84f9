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

#ifndef DSSKIT__KINEMATICS_HPP_
#define DSSKIT__KINEMATICS_HPP_

#include <string>

namespace dsskit
{

/// Exact km/h -> m/s conversion (division by exactly 3.6).
inline constexpr double from_kmh(double kmh)
{
  return kmh / 3.6;
}

/// Nominal lead speed context used when a relative scenario does not name
/// v_L explicitly [m/s].
inline constexpr double kNominalLeadSpeed = 27.7778;

/// Environment and vehicle constants shared by every DSS evaluation.
///
/// The maximum braking deceleration is derived as a_B,max = g * mu and is
/// the only tire/road interaction in the model. `vehicle_length` (l_V) is
/// the single length used to turn positions into a bumper-to-bumper gap.
struct EnvConstants
{
  double gravity = 9.81;        ///< g [m/s^2]
  double friction = 0.9;        ///< mu [-]
  double vehicle_length = 5.0;  ///< l_V [m]
};

/// Throws DomainError unless g > 0, 0 < mu <= 1.5 and l_V >= 0.
void validate(const EnvConstants & env);

/// Maximum braking deceleration a_B,max = g * mu [m/s^2]. Strictly positive.
double max_braking_decel(const EnvConstants & env);

/// Two-vehicle scenario in absolute coordinates.
///
/// The leader (index L) drives ahead of the follower (index F) on the same
/// straight lane; positions refer to matching reference points so that the
/// bumper-to-bumper gap is x_L - x_F - l_V.
struct AbsoluteScenario
{
  double lead_position = 0.0;    ///< x_L [m]
  double follow_position = 0.0;  ///< x_F [m]
  double lead_speed = 0.0;       ///< v_L [m/s]
  double follow_speed = 0.0;     ///< v_F [m/s]
  double reaction_time = 0.0;    ///< t_BR [s]
};

/// Same scenario reduced to the quantities DSS actually needs.
///
/// `lead_speed` is kept as explicit context: the quadratic braking terms
/// cannot be evaluated from (d_V, delta_v, t_BR) alone.
struct RelativeScenario
{
  double effective_distance = 0.0;  ///< d_V = x_L - x_F - l_V [m]
  double speed_delta = 0.0;         ///< delta_v = v_L - v_F [m/s]
  double reaction_time = 0.0;       ///< t_BR [s]
  double lead_speed = 0.0;          ///< v_L [m/s]
};

/// Follower speed implied by a relative scenario, v_F = v_L - delta_v.
inline double follow_speed(const RelativeScenario & s)
{
  return s.lead_speed - s.speed_delta;
}

/// Throws DomainError when the scenario violates an invariant
/// (overlapping vehicles, negative speeds, negative reaction time).
void validate(const AbsoluteScenario & s, const EnvConstants & env);
void validate(const RelativeScenario & s);

/// DSS value together with all intermediate distances.
struct DssBreakdown
{
  double space_distance = 0.0;          ///< a = d_V + x_B,L [m]
  double stop_distance = 0.0;           ///< b = x_R,F + x_B,F [m]
  double lead_braking_distance = 0.0;   ///< x_B,L = v_L^2 / (2 a_B,max) [m]
  double reaction_distance = 0.0;       ///< x_R,F = v_F * t_BR [m]
  double follow_braking_distance = 0.0; ///< x_B,F = v_F^2 / (2 a_B,max) [m]
  double dss = 0.0;                     ///< DSS = a - b [m]
};

/// Bumper-to-bumper gap x_L - x_F - l_V. Pure arithmetic; a negative result
/// signals overlapping vehicles and is returned, not rejected, so the
/// simulator can report penetration depth.
double effective_distance(double lead_position, double follow_position, double vehicle_length);

/// Distance covered decelerating from `speed` to standstill at `max_decel`,
/// v^2 / (2 a). Throws DomainError for speed < 0 or max_decel <= 0.
double braking_distance(double speed, double max_decel);

/// DSS from absolute positions and speeds:
///   DSS = ((x_L - x_F - l_V) + v_L^2/(2 a)) - (v_F t_BR + v_F^2/(2 a)).
DssBreakdown dss_absolute(const AbsoluteScenario & s, const EnvConstants & env);

/// DSS from the relative representation with v_F = v_L - delta_v substituted.
/// Agrees with dss_absolute on converted inputs to floating point accuracy.
DssBreakdown dss_relative(const RelativeScenario & s, const EnvConstants & env);

/// d_V = x_L - x_F - l_V, delta_v = v_L - v_F; t_BR and v_L carried over.
RelativeScenario to_relative(const AbsoluteScenario & s, const EnvConstants & env);

/// Inverse of to_relative up to the free follower anchor position.
AbsoluteScenario to_absolute(
  const RelativeScenario & s, const EnvConstants & env, double follow_anchor = 0.0);

}  // namespace dsskit

#endif  // DSSKIT__KINEMATICS_HPP_
