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

#include "dsskit/bva.hpp"

#include <cmath>
#include <ctime>
#include <functional>
#include <string>
#include <utility>

#include "dsskit/errors.hpp"
#include "dsskit/root_finding.hpp"
#include "dsskit/version.hpp"

namespace dsskit::bva
{

std::string_view to_string(Criticality c)
{
  return c == Criticality::SafetyCritical ? "SC" : "NSC";
}

Criticality classify(double dss, double threshold)
{
  if (!std::isfinite(dss) || !std::isfinite(threshold)) {
    throw DomainError("DSS classification requires finite input");
  }
  return dss < threshold ? Criticality::SafetyCritical : Criticality::NonSafetyCritical;
}

int count_test_cases(int n_params, int n_crit_var)
{
  if (n_params < 1 || n_crit_var < 1) {
    throw DomainError("test case counting requires n_params >= 1 and n_crit_var >= 1");
  }
  return n_params * n_crit_var;
}

std::string_view axis_label(RelAxis axis)
{
  switch (axis) {
    case RelAxis::EffectiveDistance:
      return "d_V";
    case RelAxis::SpeedDelta:
      return "delta_v";
    default:
      return "t_BR";
  }
}

std::string_view axis_label(AbsAxis axis)
{
  switch (axis) {
    case AbsAxis::LeadPosition:
      return "x_L";
    case AbsAxis::FollowPosition:
      return "x_F";
    case AbsAxis::LeadSpeed:
      return "v_L";
    case AbsAxis::FollowSpeed:
      return "v_F";
    default:
      return "t_BR";
  }
}

double axis_value(const RelativeScenario & s, RelAxis axis)
{
  switch (axis) {
    case RelAxis::EffectiveDistance:
      return s.effective_distance;
    case RelAxis::SpeedDelta:
      return s.speed_delta;
    default:
      return s.reaction_time;
  }
}

RelativeScenario with_axis_value(RelativeScenario s, RelAxis axis, double value)
{
  switch (axis) {
    case RelAxis::EffectiveDistance:
      s.effective_distance = value;
      break;
    case RelAxis::SpeedDelta:
      s.speed_delta = value;
      break;
    default:
      s.reaction_time = value;
      break;
  }
  return s;
}

double axis_value(const AbsoluteScenario & s, AbsAxis axis)
{
  switch (axis) {
    case AbsAxis::LeadPosition:
      return s.lead_position;
    case AbsAxis::FollowPosition:
      return s.follow_position;
    case AbsAxis::LeadSpeed:
      return s.lead_speed;
    case AbsAxis::FollowSpeed:
      return s.follow_speed;
    default:
      return s.reaction_time;
  }
}

AbsoluteScenario with_axis_value(AbsoluteScenario s, AbsAxis axis, double value)
{
  switch (axis) {
    case AbsAxis::LeadPosition:
      s.lead_position = value;
      break;
    case AbsAxis::FollowPosition:
      s.follow_position = value;
      break;
    case AbsAxis::LeadSpeed:
      s.lead_speed = value;
      break;
    case AbsAxis::FollowSpeed:
      s.follow_speed = value;
      break;
    default:
      s.reaction_time = value;
      break;
  }
  return s;
}

double axis_slope(RelAxis axis, const RelativeScenario & s, const EnvConstants & env)
{
  const double decel = max_braking_decel(env);
  switch (axis) {
    case RelAxis::EffectiveDistance:
      return 1.0;
    case RelAxis::SpeedDelta:
      return s.reaction_time + follow_speed(s) / decel;
    default:
      return -follow_speed(s);
  }
}

double axis_slope(AbsAxis axis, const AbsoluteScenario & s, const EnvConstants & env)
{
  const double decel = max_braking_decel(env);
  switch (axis) {
    case AbsAxis::LeadPosition:
      return 1.0;
    case AbsAxis::FollowPosition:
      return -1.0;
    case AbsAxis::LeadSpeed:
      return s.lead_speed / decel;
    case AbsAxis::FollowSpeed:
      return -(s.reaction_time + s.follow_speed / decel);
    default:
      return -s.follow_speed;
  }
}

std::array<ParameterAxis, 3> DerivationConfig::default_axes()
{
  return {{
    {RelAxis::EffectiveDistance, 0.0, 500.0},
    {RelAxis::SpeedDelta, -50.0, 50.0},
    {RelAxis::ReactionTime, 0.0, 5.0},
  }};
}

std::array<AbsoluteParameterAxis, 5> AbsoluteDerivationConfig::default_axes(
  const AbsoluteScenario & nominal, const EnvConstants & env)
{
  const double contact = nominal.follow_position + env.vehicle_length;
  return {{
    {AbsAxis::LeadPosition, contact, contact + 500.0},
    {AbsAxis::FollowPosition, nominal.lead_position - env.vehicle_length - 500.0,
      nominal.lead_position - env.vehicle_length},
    {AbsAxis::LeadSpeed, 0.0, 100.0},
    {AbsAxis::FollowSpeed, 0.0, 100.0},
    {AbsAxis::ReactionTime, 0.0, 5.0},
  }};
}

namespace
{

// One variable parameter reduced to scalar callbacks; shared by both forms.
struct AxisModel
{
  std::string label;
  double lower = 0.0;
  double upper = 0.0;
  bool affine = false;
  std::function<double(double)> dss_at;
  std::function<double(double)> slope_at;
  std::function<TestCase(double)> materialize;  // fills params/absolute_params/breakdown
};

AxisModel build_model(
  const ParameterAxis & axis, const RelativeScenario & nominal, const EnvConstants & env)
{
  validate(nominal);
  AxisModel m;
  m.label = axis_label(axis.id);
  m.lower = axis.lower;
  m.upper = axis.upper;
  switch (axis.id) {
    case RelAxis::EffectiveDistance:
      m.lower = std::max(m.lower, 0.0);
      m.affine = true;
      break;
    case RelAxis::SpeedDelta:
      m.upper = std::min(m.upper, nominal.lead_speed);  // keep v_F >= 0
      m.affine = false;
      break;
    case RelAxis::ReactionTime:
      m.lower = std::max(m.lower, 0.0);
      m.affine = true;
      break;
  }
  if (!(m.lower <= m.upper)) {
    throw DerivationError("axis " + m.label + ": bounds empty after validity clipping");
  }
  m.dss_at = [axis, nominal, env](double x) {
    return dss_relative(with_axis_value(nominal, axis.id, x), env).dss;
  };
  m.slope_at = [axis, nominal, env](double x) {
    return axis_slope(axis.id, with_axis_value(nominal, axis.id, x), env);
  };
  m.materialize = [axis, nominal, env](double x) {
    TestCase tc;
    tc.axis = std::string(axis_label(axis.id));
    tc.params = with_axis_value(nominal, axis.id, x);
    tc.breakdown = dss_relative(tc.params, env);
    tc.expected_dss = tc.breakdown.dss;
    return tc;
  };
  return m;
}

AxisModel build_model(
  const AbsoluteParameterAxis & axis, const AbsoluteScenario & nominal, const EnvConstants & env)
{
  validate(nominal, env);
  AxisModel m;
  m.label = axis_label(axis.id);
  m.lower = axis.lower;
  m.upper = axis.upper;
  switch (axis.id) {
    case AbsAxis::LeadPosition:
      m.lower = std::max(m.lower, nominal.follow_position + env.vehicle_length);
      m.affine = true;
      break;
    case AbsAxis::FollowPosition:
      m.upper = std::min(m.upper, nominal.lead_position - env.vehicle_length);
      m.affine = true;
      break;
    case AbsAxis::LeadSpeed:
      m.lower = std::max(m.lower, 0.0);
      m.affine = false;
      break;
    case AbsAxis::FollowSpeed:
      m.lower = std::max(m.lower, 0.0);
      m.affine = false;
      break;
    case AbsAxis::ReactionTime:
      m.lower = std::max(m.lower, 0.0);
      m.affine = true;
      break;
  }
  if (!(m.lower <= m.upper)) {
    throw DerivationError("axis " + m.label + ": bounds empty after validity clipping");
  }
  // The absolute form is evaluated through the relative representation.
  m.dss_at = [axis, nominal, env](double x) {
    return dss_relative(to_relative(with_axis_value(nominal, axis.id, x), env), env).dss;
  };
  m.slope_at = [axis, nominal, env](double x) {
    return axis_slope(axis.id, with_axis_value(nominal, axis.id, x), env);
  };
  m.materialize = [axis, nominal, env](double x) {
    TestCase tc;
    tc.axis = std::string(axis_label(axis.id));
    tc.absolute_params = with_axis_value(nominal, axis.id, x);
    tc.params = to_relative(*tc.absolute_params, env);
    tc.breakdown = dss_relative(tc.params, env);
    tc.expected_dss = tc.breakdown.dss;
    return tc;
  };
  return m;
}

double find_boundary_on(const AxisModel & m, double tol, double threshold)
{
  // Monotonicity guard: analytic slopes sampled across the interval must not
  // change sign (zeros at isolated endpoints are tolerated).
  constexpr int kProbes = 9;
  bool saw_positive = false;
  bool saw_negative = false;
  for (int i = 0; i < kProbes; ++i) {
    const double x = m.lower + (m.upper - m.lower) * i / (kProbes - 1);
    const double slope = m.slope_at(x);
    if (slope > kSlopeEpsilon) {
      saw_positive = true;
    } else if (slope < -kSlopeEpsilon) {
      saw_negative = true;
    }
  }
  if (saw_positive && saw_negative) {
    throw DerivationError("axis " + m.label + ": DSS is not monotone over the bounds");
  }
  if (!saw_positive && !saw_negative) {
    throw DerivationError("axis " + m.label + ": DSS slope is zero over the bounds");
  }

  const auto f = [&](double x) { return m.dss_at(x) - threshold; };
  const double flo = f(m.lower);
  const double fhi = f(m.upper);
  if (flo != 0.0 && fhi != 0.0 && (flo < 0.0) == (fhi < 0.0)) {
    throw DerivationError(
      "axis " + m.label + ": no DSS sign change in [" + std::to_string(m.lower) + ", " +
      std::to_string(m.upper) + "]");
  }
  return bisect_root(f, m.lower, m.upper, tol);
}

double solve_delta_by_secant(
  const AxisModel & m, double boundary, double direction, double target, double accuracy,
  double delta0)
{
  const auto h = [&](double delta) { return m.dss_at(boundary + direction * delta) - target; };
  double delta = 0.0;
  try {
    delta = secant_root(h, delta0, delta0 * 1.05, std::max(1e-14, 1e-10 * delta0));
  } catch (const DomainError & e) {
    throw DerivationError(
      "axis " + m.label + ": perturbed case leaves the scenario domain (" + e.what() + ")");
  }
  if (!(delta > 0.0)) {
    throw DerivationError("axis " + m.label + ": calibrated delta is not positive");
  }
  if (std::abs(h(delta)) > 0.01 * accuracy) {
    throw DerivationError("axis " + m.label + ": delta calibration did not converge to 1 %");
  }
  return delta;
}

BoundaryDeltas calibrate_on(
  const AxisModel & m, double boundary, double accuracy, double threshold)
{
  if (!(accuracy > 0.0)) {
    throw DomainError("accuracy must be > 0");
  }
  const double slope = m.slope_at(boundary);
  if (std::abs(slope) < kSlopeEpsilon) {
    throw DerivationError("axis " + m.label + ": DSS slope is zero at the boundary");
  }
  BoundaryDeltas deltas{};
  if (m.affine) {
    deltas.below = accuracy / std::abs(slope);
    deltas.above = deltas.below;
  } else {
    const double delta0 = accuracy / std::abs(slope);
    // DSS decreases below the boundary when the slope is positive.
    const double target_below = threshold - (slope > 0.0 ? accuracy : -accuracy);
    const double target_above = threshold + (slope > 0.0 ? accuracy : -accuracy);
    deltas.below = solve_delta_by_secant(m, boundary, -1.0, target_below, accuracy, delta0);
    deltas.above = solve_delta_by_secant(m, boundary, +1.0, target_above, accuracy, delta0);
  }
  if (boundary - deltas.below < m.lower || boundary + deltas.above > m.upper) {
    throw DerivationError(
      "axis " + m.label + ": boundary cases fall outside the valid axis interval");
  }
  return deltas;
}

struct AxisCases
{
  TestCase sc;
  TestCase nsc;
  double boundary = 0.0;
};

AxisCases derive_axis(
  const AxisModel & m, double boundary_tol, double accuracy, double threshold)
{
  AxisCases out;
  out.boundary = find_boundary_on(m, boundary_tol, threshold);
  const BoundaryDeltas deltas = calibrate_on(m, out.boundary, accuracy, threshold);
  const bool unsafe_below = m.slope_at(out.boundary) > 0.0;
  const double sc_value = unsafe_below ? out.boundary - deltas.below : out.boundary + deltas.above;
  const double nsc_value = unsafe_below ? out.boundary + deltas.above : out.boundary - deltas.below;

  out.sc = m.materialize(sc_value);
  out.sc.criticality = Criticality::SafetyCritical;
  out.sc.boundary = out.boundary;
  out.sc.delta = unsafe_below ? deltas.below : deltas.above;

  out.nsc = m.materialize(nsc_value);
  out.nsc.criticality = Criticality::NonSafetyCritical;
  out.nsc.boundary = out.boundary;
  out.nsc.delta = unsafe_below ? deltas.above : deltas.below;

  for (const TestCase * tc : {&out.sc, &out.nsc}) {
    if (classify(tc->expected_dss, threshold) != tc->criticality) {
      throw DerivationError(
        "axis " + m.label + ": derived case lies on the wrong side of the threshold");
    }
    const double magnitude = std::abs(tc->expected_dss - threshold);
    if (magnitude < 0.5 * accuracy || magnitude > 2.0 * accuracy) {
      throw DerivationError(
        "axis " + m.label + ": derived |DSS| " + std::to_string(magnitude) +
        " is outside [accuracy/2, 2*accuracy]");
    }
  }
  return out;
}

void check_common(double accuracy, double boundary_tol, int crit_variation)
{
  if (!(accuracy > 0.0)) {
    throw DomainError("derivation accuracy must be > 0");
  }
  if (!(boundary_tol > 0.0)) {
    throw DomainError("boundary_tol must be > 0");
  }
  if (crit_variation != 2) {
    throw DomainError("n_crit,var is fixed at 2 (one SC and one NSC case per axis)");
  }
}

void assign_ids(TestSuite & suite)
{
  for (std::size_t i = 0; i < suite.cases.size(); ++i) {
    suite.cases[i].id = "TC." + std::to_string(i + 1);
  }
}

}  // namespace

double find_boundary(
  const ParameterAxis & axis, const RelativeScenario & nominal, const EnvConstants & env,
  double tol, double threshold)
{
  return find_boundary_on(build_model(axis, nominal, env), tol, threshold);
}

BoundaryDeltas calibrate_delta(
  const ParameterAxis & axis, double boundary, double accuracy, const RelativeScenario & nominal,
  const EnvConstants & env, double threshold)
{
  return calibrate_on(build_model(axis, nominal, env), boundary, accuracy, threshold);
}

Provenance make_provenance(std::string rng)
{
  Provenance p;
  p.tool = kToolName;
  p.version = kVersion;
  p.rng = std::move(rng);
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[24];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
  p.timestamp = buffer;
  return p;
}

TestSuite derive_suite(const DerivationConfig & config)
{
  check_common(config.accuracy, config.boundary_tol, config.crit_variation);
  validate(config.env);
  validate(config.nominal);

  const auto canonical = DerivationConfig::default_axes();
  for (std::size_t i = 0; i < config.axes.size(); ++i) {
    if (config.axes[i].id != canonical[i].id) {
      throw DomainError("derivation axes must be ordered d_V, delta_v, t_BR");
    }
    const double value = axis_value(config.nominal, config.axes[i].id);
    if (value < config.axes[i].lower || value > config.axes[i].upper) {
      throw DerivationError(
        "nominal value of axis " + std::string(axis_label(config.axes[i].id)) +
        " lies outside its bounds");
    }
  }

  TestSuite suite;
  suite.form = DerivationForm::Relative;
  suite.accuracy = config.accuracy;
  suite.boundary_tol = config.boundary_tol;
  suite.threshold = config.threshold;
  suite.crit_variation = config.crit_variation;
  suite.env = config.env;
  suite.nominal = config.nominal;
  suite.provenance = make_provenance();

  RelativeScenario working = config.nominal;
  for (const auto & axis : config.axes) {
    const AxisModel model = build_model(axis, working, config.env);
    const double slope = model.slope_at(axis_value(working, axis.id));
    if (std::abs(slope) < kSlopeEpsilon) {
      suite.skipped.push_back(
        {model.label, "DSS slope is zero at the nominal; axis has no boundary to analyze"});
      continue;
    }
    AxisCases cases = derive_axis(model, config.boundary_tol, config.accuracy, config.threshold);
    // Pin the effective distance to its boundary so the remaining axes vary
    // around a nominal that sits exactly on the DSS = threshold surface.
    if (axis.id == RelAxis::EffectiveDistance) {
      working = with_axis_value(working, axis.id, cases.boundary);
    }
    suite.cases.push_back(std::move(cases.sc));
    suite.cases.push_back(std::move(cases.nsc));
  }
  assign_ids(suite);
  return suite;
}

TestSuite derive_suite_absolute(const AbsoluteDerivationConfig & config)
{
  check_common(config.accuracy, config.boundary_tol, config.crit_variation);
  validate(config.env);
  validate(config.nominal, config.env);

  const auto canonical = AbsoluteDerivationConfig::default_axes(config.nominal, config.env);
  for (std::size_t i = 0; i < config.axes.size(); ++i) {
    if (config.axes[i].id != canonical[i].id) {
      throw DomainError("derivation axes must be ordered x_L, x_F, v_L, v_F, t_BR");
    }
  }

  TestSuite suite;
  suite.form = DerivationForm::Absolute;
  suite.accuracy = config.accuracy;
  suite.boundary_tol = config.boundary_tol;
  suite.threshold = config.threshold;
  suite.crit_variation = config.crit_variation;
  suite.env = config.env;
  suite.nominal = to_relative(config.nominal, config.env);
  suite.provenance = make_provenance();

  AbsoluteScenario working = config.nominal;
  for (const auto & axis : config.axes) {
    const AxisModel model = build_model(axis, working, config.env);
    const double slope = model.slope_at(axis_value(working, axis.id));
    if (std::abs(slope) < kSlopeEpsilon) {
      suite.skipped.push_back(
        {model.label, "DSS slope is zero at the nominal; axis has no boundary to analyze"});
      continue;
    }
    AxisCases cases = derive_axis(model, config.boundary_tol, config.accuracy, config.threshold);
    if (axis.id == AbsAxis::LeadPosition) {
      working = with_axis_value(working, axis.id, cases.boundary);
    }
    suite.cases.push_back(std::move(cases.sc));
    suite.cases.push_back(std::move(cases.nsc));
  }
  assign_ids(suite);
  return suite;
}

}  // namespace dsskit::bva
