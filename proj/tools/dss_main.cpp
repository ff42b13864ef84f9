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

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dsskit/bva.hpp"
#include "dsskit/config.hpp"
#include "dsskit/errors.hpp"
#include "dsskit/kinematics.hpp"
#include "dsskit/reaction_time.hpp"
#include "dsskit/safety_relevance.hpp"
#include "dsskit/serialization.hpp"
#include "dsskit/simulation.hpp"
#include "dsskit/version.hpp"

namespace
{

using dsskit::io::ordered_json;

constexpr int kExitConfigError = 2;
constexpr int kExitDomainError = 3;
constexpr int kExitDerivationError = 4;
constexpr int kExitDisagreement = 5;

struct Options
{
  std::string config_path;
  bool json = false;
  std::optional<std::uint64_t> seed;
  std::string out_path;

  std::string format = "json";     // derive
  std::string traj_path;           // simulate
  std::optional<std::size_t> samples;  // verify
  std::string axis_pair;           // sweep
  std::string grid = "11x11";      // sweep
  std::optional<double> accel_lead;    // classify
  std::optional<double> accel_follow; // classify
  double zero_tol = dsskit::relevance::kDefaultZeroTol;
};

void write_text(const std::string & path, const std::string & content)
{
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw dsskit::Error("cannot open output file: " + path);
  }
  out << content;
}

// Primary artifact goes to --out when given, stdout otherwise.
void emit(const Options & opt, const std::string & content)
{
  if (opt.out_path.empty()) {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') {
      std::cout << '\n';
    }
  } else {
    write_text(opt.out_path, content);
  }
}

std::string fixed4(double value)
{
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.4f", value);
  return buffer;
}

std::string breakdown_text(const dsskit::DssBreakdown & b, dsskit::bva::Criticality crit)
{
  std::string out;
  out += "space distance a   " + fixed4(b.space_distance) + " m\n";
  out += "  d_V              " + fixed4(b.space_distance - b.lead_braking_distance) + " m\n";
  out += "  x_B,L            " + fixed4(b.lead_braking_distance) + " m\n";
  out += "stop distance b    " + fixed4(b.stop_distance) + " m\n";
  out += "  x_R,F            " + fixed4(b.reaction_distance) + " m\n";
  out += "  x_B,F            " + fixed4(b.follow_braking_distance) + " m\n";
  out += "DSS                " + fixed4(b.dss) + " m\n";
  out += "criticality        " + std::string(dsskit::bva::to_string(crit)) + "\n";
  return out;
}

int run_eval(const Options & opt)
{
  const auto cfg = dsskit::io::load_config(opt.config_path);
  const auto scenario = cfg.relative_view();
  const auto breakdown = dsskit::dss_relative(scenario, cfg.env);
  const auto crit = dsskit::bva::classify(breakdown.dss, cfg.threshold);

  if (opt.json) {
    ordered_json doc{
      {"env", dsskit::io::to_json(cfg.env)},
      {"scenario", dsskit::io::to_json(scenario)},
      {"breakdown", dsskit::io::to_json(breakdown)},
      {"threshold", cfg.threshold},
      {"criticality", std::string(dsskit::bva::to_string(crit))}};
    emit(opt, doc.dump(2));
  } else {
    emit(opt, breakdown_text(breakdown, crit));
  }
  return 0;
}

int run_classify(const Options & opt)
{
  const auto cfg = dsskit::io::load_config(opt.config_path);
  const auto scenario = cfg.relative_view();
  const double v_lead = scenario.lead_speed;
  const double v_follow = dsskit::follow_speed(scenario);
  const double dss = dsskit::dss_relative(scenario, cfg.env).dss;
  const auto crit = dsskit::bva::classify(dss, cfg.threshold);
  const int speed_relevant = dsskit::relevance::classify_speed(v_lead, v_follow, opt.zero_tol);

  std::optional<int> accel_relevant;
  if (opt.accel_lead && opt.accel_follow) {
    accel_relevant =
      dsskit::relevance::classify_accel(*opt.accel_lead, *opt.accel_follow, opt.zero_tol);
  } else if (opt.accel_lead || opt.accel_follow) {
    throw dsskit::DomainError("--a-lead and --a-follow must be given together");
  }

  if (opt.json) {
    ordered_json doc{
      {"dss", dss},
      {"threshold", cfg.threshold},
      {"criticality", std::string(dsskit::bva::to_string(crit))},
      {"v_L", v_lead},
      {"v_F", v_follow},
      {"speed_relevant", speed_relevant}};
    if (accel_relevant) {
      doc["a_L"] = *opt.accel_lead;
      doc["a_F"] = *opt.accel_follow;
      doc["accel_relevant"] = *accel_relevant;
      doc["combined_relevant"] = speed_relevant * *accel_relevant;
    } else {
      doc["accel_relevant"] = nullptr;
      doc["combined_relevant"] = nullptr;
    }
    emit(opt, doc.dump(2));
  } else {
    std::string out;
    out += "DSS                " + fixed4(dss) + " m\n";
    out += "criticality        " + std::string(dsskit::bva::to_string(crit)) + "\n";
    out += "speed relevant     " + std::to_string(speed_relevant) + "\n";
    if (accel_relevant) {
      out += "accel relevant     " + std::to_string(*accel_relevant) + "\n";
      out += "combined relevant  " + std::to_string(speed_relevant * *accel_relevant) + "\n";
    }
    emit(opt, out);
  }
  return 0;
}

int run_derive(const Options & opt)
{
  const auto cfg = dsskit::io::load_config(opt.config_path);
  const dsskit::bva::TestSuite suite = cfg.form == dsskit::bva::DerivationForm::Relative
    ? dsskit::bva::derive_suite(cfg.derivation_config())
    : dsskit::bva::derive_suite_absolute(cfg.absolute_derivation_config());

  if (opt.format == "csv") {
    emit(opt, dsskit::io::suite_to_csv(suite));
  } else {
    emit(opt, dsskit::io::to_json(suite).dump(2));
  }
  return 0;
}

int run_simulate(const Options & opt)
{
  const auto cfg = dsskit::io::load_config(opt.config_path);
  const bool record = !opt.traj_path.empty();
  const auto outcome = dsskit::sim::simulate(cfg.absolute_view(), cfg.env, cfg.sim, record);
  if (record) {
    write_text(opt.traj_path, dsskit::io::trajectory_to_csv(outcome.trajectory));
  }

  if (opt.json) {
    emit(opt, dsskit::io::to_json(outcome).dump(2));
  } else {
    std::string out;
    out += "collided           " + std::string(outcome.collided ? "true" : "false") + "\n";
    out += "min_gap            " + fixed4(outcome.min_gap) + " m\n";
    out += "stop_time          " + fixed4(outcome.stop_time) + " s\n";
    out += "final_gap          " + fixed4(outcome.final_gap) + " m\n";
    out += "collision_time     " +
      (outcome.collision_time ? fixed4(*outcome.collision_time) + " s" : std::string("-")) + "\n";
    emit(opt, out);
  }
  return 0;
}

double uniform_unit(std::mt19937_64 & rng)
{
  return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
}

int run_verify(const Options & opt)
{
  const auto cfg = dsskit::io::load_config(opt.config_path);
  const std::size_t samples = opt.samples.value_or(cfg.verify_samples);
  const std::uint64_t seed = opt.seed.value_or(cfg.seed);

  std::mt19937_64 rng(seed);
  dsskit::reaction::Sampler reaction_sampler(cfg.reaction_params, seed ^ 0x9e3779b97f4a7c15ULL);

  std::size_t excluded = 0;
  std::size_t agreements = 0;
  std::size_t compared = 0;
  double max_gap_error = 0.0;
  std::optional<dsskit::RelativeScenario> counterexample;

  for (std::size_t i = 0; i < samples; ++i) {
    dsskit::RelativeScenario scenario;
    scenario.lead_speed = 40.0 * uniform_unit(rng);
    const double follow = 45.0 * uniform_unit(rng);
    scenario.speed_delta = scenario.lead_speed - follow;
    scenario.effective_distance = 200.0 * uniform_unit(rng);
    scenario.reaction_time = reaction_sampler.next();

    const auto record =
      dsskit::sim::oracle_check(scenario, cfg.env, cfg.sim, cfg.dead_band);
    if (record.excluded) {
      ++excluded;
      continue;
    }
    ++compared;
    if (record.agree) {
      ++agreements;
    } else if (!counterexample) {
      counterexample = scenario;
    }
    if (!record.collided) {
      max_gap_error = std::max(max_gap_error, record.gap_error);
    }
  }

  const bool all_agree = agreements == compared;
  ordered_json doc{
    {"samples", samples},
    {"seed", seed},
    {"rng", dsskit::reaction::kSamplerAlgorithm},
    {"dead_band", cfg.dead_band},
    {"excluded", excluded},
    {"compared", compared},
    {"agreements", agreements},
    {"agreement_fraction", compared == 0 ? 1.0 : static_cast<double>(agreements) / compared},
    {"max_gap_error", max_gap_error}};
  if (counterexample) {
    doc["counterexample"] = dsskit::io::to_json(*counterexample);
  } else {
    doc["counterexample"] = nullptr;
  }

  if (opt.json) {
    emit(opt, doc.dump(2));
  } else {
    std::string out;
    out += "samples            " + std::to_string(samples) + "\n";
    out += "excluded           " + std::to_string(excluded) + "\n";
    out += "compared           " + std::to_string(compared) + "\n";
    out += "agreements         " + std::to_string(agreements) + "\n";
    out += "agreement          " + std::string(all_agree ? "100%" : "FAILED") + "\n";
    if (counterexample) {
      out += "counterexample     " + dsskit::io::to_json(*counterexample).dump() + "\n";
    }
    emit(opt, out);
  }
  return all_agree ? 0 : kExitDisagreement;
}

dsskit::bva::RelAxis parse_axis_name(const std::string & name)
{
  if (name == "d_V") {
    return dsskit::bva::RelAxis::EffectiveDistance;
  }
  if (name == "delta_v") {
    return dsskit::bva::RelAxis::SpeedDelta;
  }
  if (name == "t_BR") {
    return dsskit::bva::RelAxis::ReactionTime;
  }
  throw dsskit::DomainError("unknown sweep axis \"" + name + "\" (want d_V, delta_v or t_BR)");
}

int run_sweep(const Options & opt)
{
  const auto cfg = dsskit::io::load_config(opt.config_path);

  const auto comma = opt.axis_pair.find(',');
  if (comma == std::string::npos) {
    throw dsskit::DomainError("--axis needs a pair like d_V,delta_v");
  }
  const auto first = parse_axis_name(opt.axis_pair.substr(0, comma));
  const auto second = parse_axis_name(opt.axis_pair.substr(comma + 1));
  if (first == second) {
    throw dsskit::DomainError("--axis needs two distinct parameters");
  }

  const auto x_pos = opt.grid.find('x');
  std::size_t rows = 0;
  std::size_t cols = 0;
  try {
    rows = std::stoul(opt.grid.substr(0, x_pos));
    cols = std::stoul(opt.grid.substr(x_pos + 1));
  } catch (const std::exception &) {
    rows = 0;
  }
  if (x_pos == std::string::npos || rows == 0 || cols == 0) {
    throw dsskit::DomainError("--grid needs a shape like 11x11");
  }

  const auto nominal = cfg.relative_view();
  const auto bounds_of = [&](dsskit::bva::RelAxis axis) {
    for (const auto & a : cfg.axes) {
      if (a.id == axis) {
        return a;
      }
    }
    throw dsskit::DomainError("axis bounds missing");
  };
  const auto grid_points = [&](dsskit::bva::RelAxis axis, std::size_t n) {
    std::vector<double> points;
    if (n == 1) {
      points.push_back(dsskit::bva::axis_value(nominal, axis));
      return points;
    }
    const auto b = bounds_of(axis);
    for (std::size_t i = 0; i < n; ++i) {
      points.push_back(b.lower + (b.upper - b.lower) * static_cast<double>(i) / (n - 1));
    }
    return points;
  };

  const auto xs = grid_points(first, rows);
  const auto ys = grid_points(second, cols);

  std::string csv = std::string(dsskit::bva::axis_label(first)) + "," +
    std::string(dsskit::bva::axis_label(second)) + ",dss,criticality\n";
  std::vector<dsskit::relevance::SignSample> sign_samples;
  std::size_t sc_count = 0;
  std::size_t skipped_invalid = 0;
  for (double x : xs) {
    for (double y : ys) {
      auto scenario = dsskit::bva::with_axis_value(nominal, first, x);
      scenario = dsskit::bva::with_axis_value(scenario, second, y);
      if (
        scenario.effective_distance < 0.0 || scenario.reaction_time < 0.0 ||
        dsskit::follow_speed(scenario) < 0.0 || scenario.lead_speed < 0.0)
      {
        ++skipped_invalid;
        continue;
      }
      const double dss = dsskit::dss_relative(scenario, cfg.env).dss;
      const auto crit = dsskit::bva::classify(dss, cfg.threshold);
      if (crit == dsskit::bva::Criticality::SafetyCritical) {
        ++sc_count;
      }
      char num[64];
      std::snprintf(num, sizeof(num), "%.6f,%.6f,%.6f", x, y, dss);
      csv += std::string(num) + "," + std::string(dsskit::bva::to_string(crit)) + "\n";
      const auto samples = dsskit::sim::maneuver_sign_samples(scenario, cfg.env);
      sign_samples.insert(sign_samples.end(), samples.begin(), samples.end());
    }
  }

  if (opt.out_path.empty()) {
    throw dsskit::DomainError("sweep requires --out for the grid CSV");
  }
  write_text(opt.out_path, csv);

  const auto coverage = dsskit::relevance::coverage_report(sign_samples, opt.zero_tol);
  const std::size_t evaluated = rows * cols - skipped_invalid;
  if (opt.json) {
    ordered_json doc{
      {"axes", {dsskit::bva::axis_label(first), dsskit::bva::axis_label(second)}},
      {"grid", {rows, cols}},
      {"evaluated", evaluated},
      {"skipped_invalid", skipped_invalid},
      {"sc", sc_count},
      {"nsc", evaluated - sc_count},
      {"csv", opt.out_path},
      {"coverage", dsskit::io::to_json(coverage)}};
    std::cout << doc.dump(2) << '\n';
  } else {
    std::string out;
    out += "grid               " + std::to_string(rows) + "x" + std::to_string(cols) + "\n";
    out += "evaluated          " + std::to_string(evaluated) + "\n";
    out += "safety critical    " + std::to_string(sc_count) + "\n";
    out += "coverage           " + std::to_string(coverage.covered()) + "/4\n";
    out += "csv                " + opt.out_path + "\n";
    std::cout << out;
  }
  return 0;
}

}  // namespace

int main(int argc, char ** argv)
{
  Options opt;
  CLI::App app{
    std::string("dss — Difference Space Stopping safety indicator toolkit (") +
    dsskit::kVersion + ")"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--config", opt.config_path, "Scenario configuration file (JSON)");
  app.add_flag("--json", opt.json, "Machine readable JSON output");
  app.add_option("--seed", opt.seed, "Override the configured RNG seed");
  app.add_option("--out", opt.out_path, "Write the primary artifact to this file");

  auto * eval = app.add_subcommand("eval", "Evaluate DSS for the configured scenario");
  auto * classify = app.add_subcommand(
    "classify", "SC/NSC label and sign-matrix relevance of the scenario");
  classify->add_option("--a-lead", opt.accel_lead, "Leader acceleration [m/s^2]");
  classify->add_option("--a-follow", opt.accel_follow, "Follower acceleration [m/s^2]");
  classify->add_option("--zero-tol", opt.zero_tol, "Zero band for sign classification");
  auto * derive = app.add_subcommand(
    "derive", "Derive the boundary value test suite at the configured accuracy");
  derive->add_option("--format", opt.format, "Suite output format")
    ->check(CLI::IsMember({"json", "csv"}));
  auto * simulate = app.add_subcommand("simulate", "Run the braking maneuver simulator");
  simulate->add_option("--traj", opt.traj_path, "Write the sampled trajectory CSV here");
  auto * verify = app.add_subcommand(
    "verify", "Randomized DSS-vs-simulator agreement check");
  verify->add_option("--samples", opt.samples, "Number of random scenarios");
  auto * sweep = app.add_subcommand("sweep", "Evaluate DSS over a 2-parameter grid");
  sweep->add_option("--axis", opt.axis_pair, "Axis pair, e.g. d_V,delta_v")->required();
  sweep->add_option("--grid", opt.grid, "Grid shape NxM");
  sweep->add_option("--zero-tol", opt.zero_tol, "Zero band for coverage sign classification");

  CLI11_PARSE(app, argc, argv);

  try {
    if (opt.config_path.empty()) {
      throw dsskit::ConfigError("--config is required");
    }
    if (eval->parsed()) {
      return run_eval(opt);
    }
    if (classify->parsed()) {
      return run_classify(opt);
    }
    if (derive->parsed()) {
      return run_derive(opt);
    }
    if (simulate->parsed()) {
      return run_simulate(opt);
    }
    if (verify->parsed()) {
      return run_verify(opt);
    }
    if (sweep->parsed()) {
      return run_sweep(opt);
    }
  } catch (const dsskit::ConfigError & e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const dsskit::DerivationError & e) {
    std::cerr << "derivation error: " << e.what() << '\n';
    return kExitDerivationError;
  } catch (const dsskit::DomainError & e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::exception & e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
