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

#ifndef DSSKIT__SERIALIZATION_HPP_
#define DSSKIT__SERIALIZATION_HPP_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dsskit/bva.hpp"
#include "dsskit/kinematics.hpp"
#include "dsskit/safety_relevance.hpp"
#include "dsskit/simulation.hpp"

namespace dsskit::io
{

// JSON documents keep insertion order so identical inputs serialize to
// byte-identical output; doubles round-trip at full precision.
using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const EnvConstants & env);
ordered_json to_json(const RelativeScenario & s);
ordered_json to_json(const AbsoluteScenario & s);
ordered_json to_json(const DssBreakdown & b);
ordered_json to_json(const bva::Provenance & p);
ordered_json to_json(const bva::TestCase & c);
ordered_json to_json(const bva::TestSuite & suite);
ordered_json to_json(const sim::SimOutcome & outcome);
ordered_json to_json(const sim::OracleRecord & record);
ordered_json to_json(const relevance::CoverageReport & report);

RelativeScenario relative_from_json(const ordered_json & j);

/// Quantitative table layout: parameters in rows, test cases in columns,
/// then a/b/DSS/criticality rows. Fixed 4 decimals, LF line endings.
std::string suite_to_csv(const bva::TestSuite & suite);

/// Header t,x_L,v_L,x_F,v_F,gap followed by one row per sample.
std::string trajectory_to_csv(const std::vector<sim::TrajectorySample> & trajectory);

}  // namespace dsskit::io

#endif  // DSSKIT__SERIALIZATION_HPP_
