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

#include "dsskit/safety_relevance.hpp"

#include <cmath>

#include "dsskit/errors.hpp"

namespace dsskit::relevance
{

Sign classify_sign(double value, double zero_tol)
{
  if (zero_tol < 0.0 || !std::isfinite(zero_tol)) {
    throw DomainError("zero_tol must be >= 0");
  }
  if (!std::isfinite(value)) {
    throw DomainError("sign classification input must be finite");
  }
  if (std::abs(value) <= zero_tol) {
    return Sign::Zero;
  }
  return value > 0.0 ? Sign::Positive : Sign::Negative;
}

const RelevanceMatrix & speed_matrix()
{
  // Rows v_F < 0, = 0, > 0; columns v_L < 0, = 0, > 0.
  static const RelevanceMatrix m{
    RelevanceMatrix::Kind::Speed,
    {{{0, 0, 0},
      {0, 0, 0},
      {0, 1, 1}}}};
  return m;
}

const RelevanceMatrix & accel_matrix()
{
  // Rows a_F < 0, = 0, > 0; columns a_L < 0, = 0, > 0.
  static const RelevanceMatrix m{
    RelevanceMatrix::Kind::Acceleration,
    {{{1, 0, 0},
      {1, 0, 0},
      {0, 0, 0}}}};
  return m;
}

int classify_speed(double v_lead, double v_follow, double zero_tol)
{
  return speed_matrix().at(classify_sign(v_follow, zero_tol), classify_sign(v_lead, zero_tol));
}

int classify_accel(double a_lead, double a_follow, double zero_tol)
{
  return accel_matrix().at(classify_sign(a_follow, zero_tol), classify_sign(a_lead, zero_tol));
}

std::string RelevantCombination::label() const
{
  std::string out = "v_F>0,";
  out += (v_lead == Sign::Zero) ? "v_L=0" : "v_L>0";
  out += (a_follow == Sign::Negative) ? ",a_F<0" : ",a_F=0";
  out += ",a_L<0";
  return out;
}

const std::array<RelevantCombination, 4> & relevant_combinations()
{
  static const std::array<RelevantCombination, 4> combos{{
    {Sign::Zero, Sign::Negative},
    {Sign::Zero, Sign::Zero},
    {Sign::Positive, Sign::Negative},
    {Sign::Positive, Sign::Zero},
  }};
  return combos;
}

std::size_t CoverageReport::covered() const
{
  std::size_t n = 0;
  for (auto h : hits) {
    if (h > 0) {
      ++n;
    }
  }
  return n;
}

CoverageReport coverage_report(const std::vector<SignSample> & samples, double zero_tol)
{
  CoverageReport report;
  const auto & combos = relevant_combinations();
  for (const auto & s : samples) {
    const Sign vl = classify_sign(s.v_lead, zero_tol);
    const Sign vf = classify_sign(s.v_follow, zero_tol);
    const Sign al = classify_sign(s.a_lead, zero_tol);
    const Sign af = classify_sign(s.a_follow, zero_tol);
    if (vf != Sign::Positive || al != Sign::Negative) {
      continue;  // not in any relevant cell
    }
    for (std::size_t i = 0; i < combos.size(); ++i) {
      if (vl == combos[i].v_lead && af == combos[i].a_follow) {
        ++report.hits[i];
      }
    }
  }
  return report;
}

}  // namespace dsskit::relevance
