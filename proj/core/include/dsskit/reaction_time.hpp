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

#ifndef DSSKIT__REACTION_TIME_HPP_
#define DSSKIT__REACTION_TIME_HPP_

#include <cstdint>
#include <random>
#include <vector>

namespace dsskit::reaction
{

/// Brake reaction times t_BR are modeled as a time-shifted Gamma
/// distribution: t_BR = t0 + X with X ~ Gamma(shape, scale).
///
/// Defaults are mean-matched to a nominal reaction time of 0.7 s
/// (t0 + shape * scale = 0.4 + 2 * 0.15).
struct ShiftedGammaParams
{
  double shift = 0.4;   ///< t0 [s], lower bound of the support
  double shape = 2.0;   ///< k [-]
  double scale = 0.15;  ///< theta [s]

  double mean() const { return shift + shape * scale; }
  double variance() const { return shape * scale * scale; }
};

/// Throws DomainError unless t0 >= 0, k > 0 and theta > 0.
void validate(const ShiftedGammaParams & params);

/// Identifier of the sampling algorithm, recorded in output metadata.
/// The generator and the variate transforms are fully specified here (no
/// implementation-defined std:: distributions), so a seed reproduces the
/// same sequence on every platform.
inline constexpr const char * kSamplerAlgorithm = "mt19937_64/marsaglia-tsang";

/// Seedable Gamma sampler. Owned by one thread at a time.
class Sampler
{
public:
  Sampler(const ShiftedGammaParams & params, std::uint64_t seed);

  /// Next t_BR draw, always >= t0.
  double next();

  std::vector<double> take(std::size_t n);

private:
  double uniform();  // [2^-53, 1], never 0 so logs are safe
  double normal();   // Marsaglia polar method

  ShiftedGammaParams params_;
  std::mt19937_64 rng_;
  double spare_normal_ = 0.0;
  bool has_spare_normal_ = false;
};

/// n shifted-Gamma draws for the given seed.
std::vector<double> sample(const ShiftedGammaParams & params, std::uint64_t seed, std::size_t n);

double pdf(const ShiftedGammaParams & params, double t);

/// P(t_BR <= t); regularized lower incomplete gamma of the unshifted value.
double cdf(const ShiftedGammaParams & params, double t);

/// Inverse CDF, t0 + theta * Q(p; k). Strictly increasing in p.
/// Throws DomainError for p outside (0, 1).
double quantile(const ShiftedGammaParams & params, double p);

/// Regularized lower incomplete gamma P(k, x) (series / continued fraction).
double regularized_gamma_p(double shape, double x);

}  // namespace dsskit::reaction

#endif  // DSSKIT__REACTION_TIME_HPP_
