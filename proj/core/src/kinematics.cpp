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

#include "dsskit/kinematics.hpp"

#include <cmath>
#include <string>

#include "dsskit/errors.hpp"

namespace dsskit
{

namespace
{

void require_finite(double value, const char * name)
{
  if (!std::isfinite(value)) {
    throw DomainError(std::string(name) + " must be finite");
  }
}

}  // namespace

void validate(const EnvConstants & env)
{
  require_finite(env.gravity, "g");
  require_finite(env.friction, "mu");
  require_finite(env.vehicle_length, "l_V");
  if (env.gravity <= 0.0) {
    throw DomainError("g must be > 0, got " + std::to_string(env.gravity));
  }
  if (env.friction <= 0.0 || env.friction > 1.5) {
    throw DomainError("mu must be in (0, 1.5], got " + std::to_string(env.friction));
  }
  if (env.vehicle_length < 0.0) {
    throw DomainError("l_V must be >= 0, got " + std::to_string(env.vehicle_length));
  }
}

double max_braking_decel(const EnvConstants & env)
{
  validate(env);
  return env.gravity * env.friction;
}

void validate(const AbsoluteScenario & s, const EnvConstants & env)
{
  validate(env);
  require_finite(s.lead_position, "x_L");
  require_finite(s.follow_position, "x_F");
  require_finite(s.lead_speed, "v_L");
  require_finite(s.follow_speed, "v_F");
  require_finite(s.reaction_time, "t_BR");
  if (s.lead_speed < 0.0) {
    throw DomainError("v_L must be >= 0, got " + std::to_string(s.lead_speed));
  }
  if (s.follow_speed < 0.0) {
    throw DomainError("v_F must be >= 0, got " + std::to_string(s.follow_speed));
  }
  if (s.reaction_time < 0.0) {
    throw DomainError("t_BR must be >= 0, got " + std::to_string(s.reaction_time));
  }
  const double gap = effective_distance(s.lead_position, s.follow_position, env.vehicle_length);
  if (gap < 0.0) {
    throw DomainError(
      "vehicles overlap: x_L - x_F - l_V = " + std::to_string(gap) + " m is negative");
  }
}

void validate(const RelativeScenario & s)
{
  require_finite(s.effective_distance, "d_V");
  require_finite(s.speed_delta, "delta_v");
  require_finite(s.reaction_time, "t_BR");
  require_finite(s.lead_speed, "v_L");
  if (s.effective_distance < 0.0) {
    throw DomainError("d_V must be >= 0, got " + std::to_string(s.effective_distance));
  }
  if (s.reaction_time < 0.0) {
    throw DomainError("t_BR must be >= 0, got " + std::to_string(s.reaction_time));
  }
  if (s.lead_speed < 0.0) {
    throw DomainError("v_L must be >= 0, got " + std::to_string(s.lead_speed));
  }
  if (follow_speed(s) < 0.0) {
    throw DomainError(
      "v_F = v_L - delta_v must be >= 0, got " + std::to_string(follow_speed(s)));
  }
}

double effective_distance(double lead_position, double follow_position, double vehicle_length)
{
  return lead_position - follow_position - vehicle_length;
}

double braking_distance(double speed, double max_decel)
{
  if (!(max_decel > 0.0)) {
    throw DomainError("a_B,max must be > 0, got " + std::to_string(max_decel));
  }
  if (speed < 0.0 || !std::isfinite(speed)) {
    throw DomainError("speed must be >= 0, got " + std::to_string(speed));
  }
  return speed * speed / (2.0 * max_decel);
}

namespace
{

DssBreakdown evaluate(
  double gap, double lead_speed, double follow_speed_value, double reaction_time,
  const EnvConstants & env)
{
  const double decel = max_braking_decel(env);
  DssBreakdown out;
  out.lead_braking_distance = braking_distance(lead_speed, decel);
  out.reaction_distance = follow_speed_value * reaction_time;
  out.follow_braking_distance = braking_distance(follow_speed_value, decel);
  out.space_distance = gap + out.lead_braking_distance;
  out.stop_distance = out.reaction_distance + out.follow_braking_distance;
  out.dss = out.space_distance - out.stop_distance;
  return out;
}

}  // namespace

DssBreakdown dss_absolute(const AbsoluteScenario & s, const EnvConstants & env)
{
  validate(s, env);
  const double gap = effective_distance(s.lead_position, s.follow_position, env.vehicle_length);
  return evaluate(gap, s.lead_speed, s.follow_speed, s.reaction_time, env);
}

DssBreakdown dss_relative(const RelativeScenario & s, const EnvConstants & env)
{
  validate(s);
  return evaluate(s.effective_distance, s.lead_speed, follow_speed(s), s.reaction_time, env);
}

RelativeScenario to_relative(const AbsoluteScenario & s, const EnvConstants & env)
{
  RelativeScenario out;
  out.effective_distance =
    effective_distance(s.lead_position, s.follow_position, env.vehicle_length);
  out.speed_delta = s.lead_speed - s.follow_speed;
  out.reaction_time = s.reaction_time;
  out.lead_speed = s.lead_speed;
  return out;
}

AbsoluteScenario to_absolute(
  const RelativeScenario & s, const EnvConstants & env, double follow_anchor)
{
  if (follow_speed(s) < 0.0) {
    throw DomainError(
      "v_F = v_L - delta_v must be >= 0, got " + std::to_string(follow_speed(s)));
  }
  AbsoluteScenario out;
  out.follow_position = follow_anchor;
  out.lead_position = follow_anchor + s.effective_distance + env.vehicle_length;
  out.lead_speed = s.lead_speed;
  out.follow_speed = follow_speed(s);
  out.reaction_time = s.reaction_time;
  return out;
}

}  // namespace dsskit
