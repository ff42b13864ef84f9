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

#include <benchmark/benchmark.h>

#include "dsskit/bva.hpp"
#include "dsskit/kinematics.hpp"
#include "dsskit/reaction_time.hpp"
#include "dsskit/simulation.hpp"

namespace
{

const dsskit::EnvConstants kEnv{9.81, 0.9, 5.0};
const dsskit::RelativeScenario kNominal{42.56, -5.5556, 0.7, 27.7778};

void BM_DssRelative(benchmark::State & state)
{
  for (auto _ : state) {
    auto breakdown = dsskit::dss_relative(kNominal, kEnv);
    benchmark::DoNotOptimize(breakdown);
  }
}
BENCHMARK(BM_DssRelative);

void BM_DeriveSuite(benchmark::State & state)
{
  dsskit::bva::DerivationConfig config;
  config.nominal = kNominal;
  config.env = kEnv;
  for (auto _ : state) {
    auto suite = dsskit::bva::derive_suite(config);
    benchmark::DoNotOptimize(suite);
  }
}
BENCHMARK(BM_DeriveSuite);

void BM_Simulate(benchmark::State & state)
{
  const auto scenario = dsskit::to_absolute(kNominal, kEnv, 0.0);
  const dsskit::sim::SimConfig sim_config{0.01, 60.0};
  for (auto _ : state) {
    auto outcome = dsskit::sim::simulate(scenario, kEnv, sim_config);
    benchmark::DoNotOptimize(outcome);
  }
}
BENCHMARK(BM_Simulate);

void BM_OracleCheck(benchmark::State & state)
{
  const dsskit::sim::SimConfig sim_config{0.01, 60.0};
  for (auto _ : state) {
    auto record = dsskit::sim::oracle_check(kNominal, kEnv, sim_config);
    benchmark::DoNotOptimize(record);
  }
}
BENCHMARK(BM_OracleCheck);

void BM_ReactionSample(benchmark::State & state)
{
  dsskit::reaction::Sampler sampler({0.4, 2.0, 0.15}, 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sampler.next());
  }
}
BENCHMARK(BM_ReactionSample);

void BM_ReactionQuantile(benchmark::State & state)
{
  const dsskit::reaction::ShiftedGammaParams params{0.4, 2.0, 0.15};
  double p = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dsskit::reaction::quantile(params, p));
    p += 0.01;
    if (p >= 1.0) {
      p = 0.01;
    }
  }
}
BENCHMARK(BM_ReactionQuantile);

}  // namespace

BENCHMARK_MAIN();
