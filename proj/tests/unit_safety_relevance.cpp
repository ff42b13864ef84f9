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

#include <random>

#include <doctest.h>

#include "dsskit/errors.hpp"
#include "dsskit/safety_relevance.hpp"

using namespace dsskit::relevance;

TEST_CASE("sign classification with a zero band")
{
  CHECK(classify_sign(5e-7, 1e-6) == Sign::Zero);
  CHECK(classify_sign(-5e-7, 1e-6) == Sign::Zero);
  CHECK(classify_sign(1e-6, 1e-6) == Sign::Zero);  // band is inclusive
  CHECK(classify_sign(2e-6, 1e-6) == Sign::Positive);
  CHECK(classify_sign(-2e-6, 1e-6) == Sign::Negative);
  CHECK(classify_sign(0.0, 0.0) == Sign::Zero);
  CHECK(classify_sign(-1e-300, 0.0) == Sign::Negative);

  CHECK_THROWS_AS(classify_sign(1.0, -1e-9), dsskit::DomainError);
  CHECK_THROWS_AS(
    classify_sign(std::numeric_limits<double>::quiet_NaN(), 1e-6), dsskit::DomainError);
}

TEST_CASE("speed matrix cells")
{
  const auto & m = speed_matrix();
  const Sign signs[3] = {Sign::Negative, Sign::Zero, Sign::Positive};

  const int expected[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 1, 1}};
  int total = 0;
  for (int f = 0; f < 3; ++f) {
    for (int l = 0; l < 3; ++l) {
      CHECK(m.at(signs[f], signs[l]) == expected[f][l]);
      total += m.at(signs[f], signs[l]);
    }
  }
  CHECK(total == 2);

  CHECK(classify_speed(0.0, 10.0) == 1);
  CHECK(classify_speed(20.0, 25.0) == 1);
  CHECK(classify_speed(20.0, -1.0) == 0);
  CHECK(classify_speed(0.0, 0.0) == 0);
  CHECK(classify_speed(-5.0, 10.0) == 0);

  // pure sign function, magnitudes never matter
  CHECK(classify_speed(0.5, 100.0) == classify_speed(1e3, 1e-3));
}

TEST_CASE("acceleration matrix cells")
{
  const auto & m = accel_matrix();
  const Sign signs[3] = {Sign::Negative, Sign::Zero, Sign::Positive};

  const int expected[3][3] = {{1, 0, 0}, {1, 0, 0}, {0, 0, 0}};
  int total = 0;
  for (int f = 0; f < 3; ++f) {
    for (int l = 0; l < 3; ++l) {
      CHECK(m.at(signs[f], signs[l]) == expected[f][l]);
      total += m.at(signs[f], signs[l]);
    }
  }
  CHECK(total == 2);

  CHECK(classify_accel(-3.0, -2.0) == 1);
  CHECK(classify_accel(-3.0, 0.0) == 1);
  CHECK(classify_accel(1.0, 1.0) == 0);
  CHECK(classify_accel(0.0, -2.0) == 0);
  CHECK(classify_accel(2.0, -2.0) == 0);
}

TEST_CASE("the four jointly relevant combinations")
{
  const auto & combos = relevant_combinations();
  REQUIRE(combos.size() == 4);
  CHECK(combos[0].label() == "v_F>0,v_L=0,a_F<0,a_L<0");
  CHECK(combos[1].label() == "v_F>0,v_L=0,a_F=0,a_L<0");
  CHECK(combos[2].label() == "v_F>0,v_L>0,a_F<0,a_L<0");
  CHECK(combos[3].label() == "v_F>0,v_L>0,a_F=0,a_L<0");
}

TEST_CASE("coverage report")
{
  SUBCASE("empty list covers nothing")
  {
    const auto report = coverage_report({});
    CHECK(report.covered() == 0);
    CHECK(report.fraction() == 0.0);
  }

  SUBCASE("all four combinations present")
  {
    const std::vector<SignSample> samples{
      {0.0, 10.0, -3.0, -2.0},
      {0.0, 10.0, -3.0, 0.0},
      {20.0, 25.0, -3.0, -2.0},
      {20.0, 25.0, -3.0, 0.0},
    };
    const auto report = coverage_report(samples);
    CHECK(report.covered() == 4);
    CHECK(report.fraction() == 1.0);
    for (auto h : report.hits) {
      CHECK(h == 1);
    }
  }

  SUBCASE("single combination")
  {
    const auto report = coverage_report({{20.0, 25.0, -3.0, -2.0}});
    CHECK(report.covered() == 1);
    CHECK(report.hits[2] == 1);
  }

  SUBCASE("irrelevant samples never count")
  {
    const std::vector<SignSample> samples{
      {20.0, -5.0, -3.0, -2.0},   // follower reversing
      {20.0, 25.0, 3.0, -2.0},    // leader accelerating
      {-20.0, 25.0, -3.0, -2.0},  // leader reversing
      {20.0, 0.0, -3.0, -2.0},    // follower standing
    };
    CHECK(coverage_report(samples).covered() == 0);
  }

  SUBCASE("coverage is monotone under appended samples")
  {
    std::mt19937_64 rng(0x5eed0101);
    std::vector<SignSample> samples;
    std::size_t last = 0;
    for (int i = 0; i < 300; ++i) {
      const auto pick = [&](std::initializer_list<double> values) {
        auto it = values.begin();
        std::advance(it, rng() % values.size());
        return *it;
      };
      samples.push_back(
        {pick({-10.0, 0.0, 15.0}), pick({-10.0, 0.0, 15.0}), pick({-3.0, 0.0, 3.0}),
          pick({-3.0, 0.0, 3.0})});
      const auto covered = coverage_report(samples).covered();
      REQUIRE(covered >= last);
      last = covered;
    }
  }
}
