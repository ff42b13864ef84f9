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

#include "dsskit/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dsskit/errors.hpp"

namespace dsskit::sim
{

void validate(const SimConfig & cfg)
{
  if (!(cfg.dt > 0.0 && cfg.dt <= 0.1)) {
    throw DomainError("sim dt must be in (0, 0.1], got " + std::to_string(cfg.dt));
  }
  if (!(cfg.max_time > 0.0) || !std::isfinite(cfg.max_time)) {
    throw DomainError("sim max_time must be > 0, got " + std::to_string(cfg.max_time));
  }
}

namespace
{

// Exact kinematic state of the maneuver at time t.
struct Maneuver
{
  const AbsoluteScenario & s;
  double decel;
  double lead_stop;    // leader standstill time
  double brake_onset;  // follower brake onset (= t_BR)
  double follow_stop;  // follower standstill time
  double rest_time;    // all motion ceased

  double lead_pos(double t) const
  {
    const double tc = std::min(t, lead_stop);
    return s.lead_position + s.lead_speed * tc - 0.5 * decel * tc * tc;
  }
  double lead_vel(double t) const
  {
    return t < lead_stop ? s.lead_speed - decel * t : 0.0;
  }
  double follow_pos(double t) const
  {
    if (t <= brake_onset) {
      return s.follow_position + s.follow_speed * t;
    }
    const double tau = std::min(t, follow_stop) - brake_onset;
    return s.follow_position + s.follow_speed * brake_onset + s.follow_speed * tau -
           0.5 * decel * tau * tau;
  }
  double follow_vel(double t) const
  {
    if (t < brake_onset) {
      return s.follow_speed;
    }
    return std::max(0.0, s.follow_speed - decel * (t - brake_onset));
  }
  // Piecewise-constant accelerations, taken just after t.
  double lead_acc(double t) const { return t < lead_stop ? -decel : 0.0; }
  double follow_acc(double t) const
  {
    return (t >= brake_onset && t < follow_stop) ? -decel : 0.0;
  }
};

// Earliest root of c2 x^2 + c1 x + c0 = 0 in (0, span]; NaN when none.
double earliest_root(double c2, double c1, double c0, double span)
{
  constexpr double kNone = std::numeric_limits<double>::quiet_NaN();
  constexpr double kTinyQuad = 1e-300;
  double r1 = kNone;
  double r2 = kNone;
  if (std::abs(c2) < kTinyQuad) {
    if (c1 == 0.0) {
      return kNone;
    }
    r1 = -c0 / c1;
  } else {
    const double disc = c1 * c1 - 4.0 * c2 * c0;
    if (disc < 0.0) {
      return kNone;
    }
    const double sq = std::sqrt(disc);
    const double q = -0.5 * (c1 + (c1 >= 0.0 ? sq : -sq));
    r1 = q / c2;
    if (q != 0.0) {
      r2 = c0 / q;
    }
    if (std::isnan(r2)) {
      r2 = r1;
    }
    if (r2 < r1) {
      std::swap(r1, r2);
    }
  }
  for (double r : {r1, r2}) {
    if (!std::isnan(r) && r > 0.0 && r <= span) {
      return r;
    }
  }
  return kNone;
}

}  // namespace

SimOutcome simulate(
  const AbsoluteScenario & s, const EnvConstants & env, const SimConfig & cfg,
  bool record_trajectory)
{
  validate(cfg);
  validate(s, env);

  const double decel = max_braking_decel(env);
  Maneuver m{
    s,
    decel,
    s.lead_speed / decel,
    s.reaction_time,
    s.reaction_time + s.follow_speed / decel,
    0.0};
  m.rest_time = std::max(m.lead_stop, s.follow_speed > 0.0 ? m.follow_stop : 0.0);

  const double t_end = std::min(m.rest_time, cfg.max_time);
  const auto gap_at = [&](double t) {
    return effective_distance(m.lead_pos(t), m.follow_pos(t), env.vehicle_length);
  };

  SimOutcome out;
  out.stop_time = t_end;
  out.min_gap = gap_at(0.0);

  // Event times bounding the constant-acceleration phases.
  std::vector<double> events{0.0, t_end};
  for (double t : {m.brake_onset, m.lead_stop, m.follow_stop}) {
    if (t > 0.0 && t < t_end) {
      events.push_back(t);
    }
  }
  std::sort(events.begin(), events.end());
  events.erase(std::unique(events.begin(), events.end()), events.end());

  for (std::size_t i = 0; i + 1 < events.size(); ++i) {
    const double t0 = events[i];
    const double span = events[i + 1] - t0;
    if (span <= 0.0) {
      continue;
    }
    const double c0 = gap_at(t0);
    const double c1 = m.lead_vel(t0) - m.follow_vel(t0);
    const double c2 = 0.5 * (m.lead_acc(t0) - m.follow_acc(t0));

    // Interval minimum: endpoints plus the interior stationary point.
    double interval_min = std::min(c0, gap_at(t0 + span));
    if (c2 != 0.0) {
      const double tm = -c1 / (2.0 * c2);
      if (tm > 0.0 && tm < span) {
        interval_min = std::min(interval_min, c0 + c1 * tm + c2 * tm * tm);
      }
    }
    out.min_gap = std::min(out.min_gap, interval_min);

    if (!out.collision_time && interval_min < 0.0) {
      const double r = earliest_root(c2, c1, c0, span);
      // c0 >= 0 outside a collision, so a negative dip implies a crossing.
      out.collision_time = t0 + (std::isnan(r) ? 0.0 : r);
    }
  }

  out.collided = out.min_gap < 0.0;
  out.final_gap = gap_at(t_end);

  if (record_trajectory) {
    const std::size_t n = static_cast<std::size_t>(std::floor(t_end / cfg.dt));
    out.trajectory.reserve(n + 2);
    for (std::size_t i = 0; i <= n; ++i) {
      const double t = static_cast<double>(i) * cfg.dt;
      out.trajectory.push_back(
        {t, m.lead_pos(t), m.lead_vel(t), m.follow_pos(t), m.follow_vel(t), gap_at(t)});
    }
    if (out.trajectory.empty() || out.trajectory.back().t < t_end) {
      out.trajectory.push_back(
        {t_end, m.lead_pos(t_end), m.lead_vel(t_end), m.follow_pos(t_end), m.follow_vel(t_end),
          gap_at(t_end)});
    }
  }
  return out;
}

OracleRecord oracle_check(
  const RelativeScenario & s, const EnvConstants & env, const SimConfig & cfg, double dead_band)
{
  if (dead_band < 0.0 || !std::isfinite(dead_band)) {
    throw DomainError("dead_band must be >= 0");
  }
  OracleRecord record;
  record.dss = dss_relative(s, env).dss;
  record.predicted_critical = record.dss < 0.0;

  const SimOutcome outcome = simulate(to_absolute(s, env, 0.0), env, cfg);
  record.collided = outcome.collided;
  record.final_gap = outcome.final_gap;
  record.gap_error = std::abs(outcome.final_gap - record.dss);

  record.excluded = std::abs(record.dss) <= dead_band;
  record.agree = record.excluded || record.predicted_critical == record.collided;
  return record;
}

std::vector<relevance::SignSample> maneuver_sign_samples(
  const RelativeScenario & s, const EnvConstants & env)
{
  validate(s);
  const double decel = max_braking_decel(env);
  const double v_lead = s.lead_speed;
  const double v_follow = follow_speed(s);
  const double lead_stop = v_lead / decel;
  const double brake_onset = s.reaction_time;
  const double follow_stop = brake_onset + v_follow / decel;

  const auto lead_vel = [&](double t) { return std::max(0.0, v_lead - decel * t); };
  const auto lead_acc = [&](double t) { return t < lead_stop ? -decel : 0.0; };
  const auto follow_vel = [&](double t) {
    return t < brake_onset ? v_follow : std::max(0.0, v_follow - decel * (t - brake_onset));
  };

  std::vector<relevance::SignSample> samples;

  // Brake onset of the leader.
  const double a_follow_start = (v_follow > 0.0 && brake_onset == 0.0) ? -decel : 0.0;
  samples.push_back({v_lead, v_follow, v_lead > 0.0 ? -decel : 0.0, a_follow_start});

  // Brake onset of the follower.
  if (v_follow > 0.0 && brake_onset > 0.0) {
    samples.push_back({lead_vel(brake_onset), v_follow, lead_acc(brake_onset), -decel});
  }

  // Leader standstill instant; the deceleration that produced it is still
  // attributed so "comes to a standstill while braking" registers.
  if (v_lead > 0.0) {
    const double vf = follow_vel(lead_stop);
    const double af =
      (vf > 0.0 && lead_stop >= brake_onset && lead_stop < follow_stop) ? -decel : 0.0;
    samples.push_back({0.0, vf, -decel, af});
  }
  return samples;
}

}  // namespace dsskit::sim
