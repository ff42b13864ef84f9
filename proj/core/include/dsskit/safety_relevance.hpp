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

#ifndef DSSKIT__SAFETY_RELEVANCE_HPP_
#define DSSKIT__SAFETY_RELEVANCE_HPP_

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace dsskit::relevance
{

/// Sign band of a speed or acceleration, with |x| <= zero_tol mapped to Zero.
enum class Sign { Negative, Zero, Positive };

/// Default half-width of the zero band for floating point inputs [SI units].
inline constexpr double kDefaultZeroTol = 1e-6;

Sign classify_sign(double value, double zero_tol = kDefaultZeroTol);

/// 3x3 relevance grid indexed by (follower sign, leader sign).
///
/// For rear-end collisions exactly two speed combinations and two
/// acceleration combinations are safety-relevant:
///   v matrix: (v_F > 0, v_L = 0) and (v_F > 0, v_L > 0)
///   a matrix: (a_F < 0, a_L < 0) and (a_F = 0, a_L < 0)
struct RelevanceMatrix
{
  enum class Kind { Speed, Acceleration };

  Kind kind;
  std::array<std::array<int, 3>, 3> cells;  // [follower][leader], values 0/1

  int at(Sign follower, Sign leader) const
  {
    return cells[static_cast<std::size_t>(follower)][static_cast<std::size_t>(leader)];
  }
};

const RelevanceMatrix & speed_matrix();
const RelevanceMatrix & accel_matrix();

/// 1 when the speed pair is a safety-relevant combination, else 0.
int classify_speed(double v_lead, double v_follow, double zero_tol = kDefaultZeroTol);

/// 1 when the acceleration pair is a safety-relevant combination, else 0.
int classify_accel(double a_lead, double a_follow, double zero_tol = kDefaultZeroTol);

/// One (speed, acceleration) observation of both vehicles.
struct SignSample
{
  double v_lead = 0.0;
  double v_follow = 0.0;
  double a_lead = 0.0;
  double a_follow = 0.0;
};

/// One of the four jointly relevant speed x acceleration combinations.
struct RelevantCombination
{
  Sign v_lead;    // Zero or Positive (v_follow is Positive in all four)
  Sign a_follow;  // Negative or Zero (a_lead is Negative in all four)
  std::string label() const;
};

/// The cross product of the relevant speed cells and relevant acceleration
/// cells, in a fixed order.
const std::array<RelevantCombination, 4> & relevant_combinations();

struct CoverageReport
{
  std::array<std::size_t, 4> hits{};  ///< per combination, order of relevant_combinations()
  std::size_t covered() const;        ///< number of combinations with hits > 0
  static constexpr std::size_t total() { return 4; }
  double fraction() const { return static_cast<double>(covered()) / total(); }
};

/// Counts how many samples hit each of the four relevant combinations.
/// Monotone: appending samples never decreases coverage.
CoverageReport coverage_report(
  const std::vector<SignSample> & samples, double zero_tol = kDefaultZeroTol);

}  // namespace dsskit::relevance

#endif  // DSSKIT__SAFETY_RELEVANCE_HPP_
