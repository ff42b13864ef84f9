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

#ifndef DSSKIT__BVA_HPP_
#define DSSKIT__BVA_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dsskit/kinematics.hpp"

namespace dsskit::bva
{

/// SC iff DSS < threshold, NSC iff DSS >= threshold.
enum class Criticality { SafetyCritical, NonSafetyCritical };

std::string_view to_string(Criticality c);  // "SC" / "NSC"

Criticality classify(double dss, double threshold = 0.0);

/// Number of boundary test cases: one SC and one NSC value per reasonable
/// variable parameter, N = n_params * n_crit_var.
int count_test_cases(int n_params, int n_crit_var);

/// The three reasonable variable parameters of the relative DSS form.
enum class RelAxis { EffectiveDistance, SpeedDelta, ReactionTime };

/// The five reasonable variable parameters of the absolute DSS form.
enum class AbsAxis { LeadPosition, FollowPosition, LeadSpeed, FollowSpeed, ReactionTime };

std::string_view axis_label(RelAxis axis);  // "d_V", "delta_v", "t_BR"
std::string_view axis_label(AbsAxis axis);  // "x_L", "x_F", "v_L", "v_F", "t_BR"

double axis_value(const RelativeScenario & s, RelAxis axis);
RelativeScenario with_axis_value(RelativeScenario s, RelAxis axis, double value);

double axis_value(const AbsoluteScenario & s, AbsAxis axis);
AbsoluteScenario with_axis_value(AbsoluteScenario s, AbsAxis axis, double value);

/// Analytic dDSS/daxis at the given scenario:
///   d_V: +1, delta_v: t_BR + v_F / a_B,max, t_BR: -v_F.
double axis_slope(RelAxis axis, const RelativeScenario & s, const EnvConstants & env);

/// Analytic slopes of the absolute form:
///   x_L: +1, x_F: -1, v_L: v_L / a_B,max,
///   v_F: -(t_BR + v_F / a_B,max), t_BR: -v_F.
double axis_slope(AbsAxis axis, const AbsoluteScenario & s, const EnvConstants & env);

/// A variable parameter with its closed search interval.
struct ParameterAxis
{
  RelAxis id;
  double lower;
  double upper;
};

struct AbsoluteParameterAxis
{
  AbsAxis id;
  double lower;
  double upper;
};

/// Slopes below this magnitude make an axis degenerate for BVA; such axes
/// are skipped with a report instead of searched.
inline constexpr double kSlopeEpsilon = 1e-9;

/// Locates the DSS = threshold crossing on the axis by bracketing bisection
/// over the validity-clipped bounds. Deterministic.
///
/// Throws DerivationError when DSS has no sign change over the bounds or the
/// axis is not monotone there.
double find_boundary(
  const ParameterAxis & axis, const RelativeScenario & nominal, const EnvConstants & env,
  double tol, double threshold = 0.0);

/// Perturbation magnitudes placing |DSS - threshold| = accuracy on each side
/// of the boundary.
struct BoundaryDeltas
{
  double below;
  double above;
};

/// For axes DSS is affine in (d_V, t_BR) the result is accuracy / |slope|
/// exactly; otherwise each side is refined by secant iteration to 1 %
/// relative accuracy or better.
BoundaryDeltas calibrate_delta(
  const ParameterAxis & axis, double boundary, double accuracy, const RelativeScenario & nominal,
  const EnvConstants & env, double threshold = 0.0);

struct DerivationConfig
{
  double accuracy = 0.01;      ///< |DSS| of each emitted case [m]
  double boundary_tol = 1e-7;  ///< root tolerance in axis units
  int crit_variation = 2;      ///< SC/NSC pair per axis; fixed at 2
  double threshold = 0.0;      ///< DSS decision threshold [m]
  RelativeScenario nominal;
  EnvConstants env;
  std::array<ParameterAxis, 3> axes = default_axes();

  static std::array<ParameterAxis, 3> default_axes();
};

struct AbsoluteDerivationConfig
{
  double accuracy = 0.01;
  double boundary_tol = 1e-7;
  int crit_variation = 2;
  double threshold = 0.0;
  AbsoluteScenario nominal;
  EnvConstants env;
  std::array<AbsoluteParameterAxis, 5> axes;

  static std::array<AbsoluteParameterAxis, 5> default_axes(
    const AbsoluteScenario & nominal, const EnvConstants & env);
};

struct TestCase
{
  std::string id;    ///< "TC.1", "TC.2", ...
  std::string axis;  ///< varied parameter label
  Criticality criticality;
  RelativeScenario params;  ///< evaluable scenario of the case
  std::optional<AbsoluteScenario> absolute_params;  ///< set for absolute-form suites
  double boundary = 0.0;  ///< axis value on the DSS = threshold surface
  double delta = 0.0;     ///< applied perturbation magnitude
  double expected_dss = 0.0;
  DssBreakdown breakdown;
};

/// Axis dropped from a suite, with the reason (currently only degenerate
/// zero-slope axes are skippable; bracketing failures abort the derivation).
struct SkippedAxis
{
  std::string axis;
  std::string reason;
};

struct Provenance
{
  std::string tool;
  std::string version;
  std::string timestamp;  ///< ISO 8601 UTC; the only wall clock dependent field
  std::string rng;        ///< sampling algorithm id, empty for deterministic outputs
};

Provenance make_provenance(std::string rng = "");

enum class DerivationForm { Relative, Absolute };

struct TestSuite
{
  DerivationForm form = DerivationForm::Relative;
  std::vector<TestCase> cases;
  std::vector<SkippedAxis> skipped;
  double accuracy = 0.01;
  double boundary_tol = 1e-7;
  double threshold = 0.0;
  int crit_variation = 2;
  EnvConstants env;
  RelativeScenario nominal;
  Provenance provenance;
};

/// Derives the minimal relative-form suite: for each axis in fixed order
/// (d_V, delta_v, t_BR), locate the DSS = threshold boundary, calibrate the
/// perturbation, and emit the SC case on the unsafe side and the NSC case on
/// the safe side. After the d_V axis its boundary value is pinned into the
/// working nominal so the remaining axes sit exactly on the boundary
/// surface and each case differs from it in one parameter only.
///
/// Axes with |dDSS/daxis| < kSlopeEpsilon are skipped with a report; case
/// ids number the emitted cases sequentially, odd SC, even NSC.
TestSuite derive_suite(const DerivationConfig & config);

/// Absolute-form twin over (x_L, x_F, v_L, v_F, t_BR), 10 cases; each case
/// is evaluated by converting to the relative representation. The x_L
/// boundary is pinned first, mirroring the d_V pinning of the relative form.
TestSuite derive_suite_absolute(const AbsoluteDerivationConfig & config);

}  // namespace dsskit::bva

#endif  // DSSKIT__BVA_HPP_
