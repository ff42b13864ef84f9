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

#include "dsskit/reaction_time.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "dsskit/errors.hpp"

namespace dsskit::reaction
{

void validate(const ShiftedGammaParams & params)
{
  if (!(params.shift >= 0.0) || !std::isfinite(params.shift)) {
    throw DomainError("t0 must be >= 0, got " + std::to_string(params.shift));
  }
  if (!(params.shape > 0.0) || !std::isfinite(params.shape)) {
    throw DomainError("k must be > 0, got " + std::to_string(params.shape));
  }
  if (!(params.scale > 0.0) || !std::isfinite(params.scale)) {
    throw DomainError("theta must be > 0, got " + std::to_string(params.scale));
  }
}

Sampler::Sampler(const ShiftedGammaParams & params, std::uint64_t seed)
: params_(params), rng_(seed)
{
  validate(params);
}

double Sampler::uniform()
{
  // 53 random bits; +1 keeps the value strictly positive.
  const std::uint64_t bits = rng_() >> 11;
  return (static_cast<double>(bits) + 1.0) * 0x1.0p-53;
}

double Sampler::normal()
{
  if (has_spare_normal_) {
    has_spare_normal_ = false;
    return spare_normal_;
  }
  double u = 0.0;
  double v = 0.0;
  double s = 0.0;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double factor = std::sqrt(-2.0 * std::log(s) / s);
  spare_normal_ = v * factor;
  has_spare_normal_ = true;
  return u * factor;
}

double Sampler::next()
{
  // Marsaglia-Tsang squeeze for Gamma(k >= 1); the k < 1 case is boosted to
  // k + 1 and corrected by u^(1/k).
  const double k = params_.shape;
  const double boosted = k < 1.0 ? k + 1.0 : k;
  const double d = boosted - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);

  double value = 0.0;
  for (;;) {
    double x = 0.0;
    double v = 0.0;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) {
      value = d * v;
      break;
    }
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) {
      value = d * v;
      break;
    }
  }
  if (k < 1.0) {
    value *= std::pow(uniform(), 1.0 / k);
  }
  return params_.shift + params_.scale * value;
}

std::vector<double> Sampler::take(std::size_t n)
{
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(next());
  }
  return out;
}

std::vector<double> sample(const ShiftedGammaParams & params, std::uint64_t seed, std::size_t n)
{
  Sampler sampler(params, seed);
  return sampler.take(n);
}

namespace
{

constexpr int kMaxIter = 500;
constexpr double kEps = 1e-15;

// Series expansion of P(k, x), effective for x < k + 1.
double gamma_p_series(double k, double x)
{
  double term = 1.0 / k;
  double sum = term;
  double a = k;
  for (int i = 0; i < kMaxIter; ++i) {
    a += 1.0;
    term *= x / a;
    sum += term;
    if (std::abs(term) < std::abs(sum) * kEps) {
      break;
    }
  }
  return sum * std::exp(-x + k * std::log(x) - std::lgamma(k));
}

// Lentz continued fraction for Q(k, x) = 1 - P(k, x), effective for x >= k + 1.
double gamma_q_continued_fraction(double k, double x)
{
  const double tiny = std::numeric_limits<double>::min() / kEps;
  double b = x + 1.0 - k;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIter; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - k);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) {
      d = tiny;
    }
    c = b + an / c;
    if (std::abs(c) < tiny) {
      c = tiny;
    }
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) {
      break;
    }
  }
  return h * std::exp(-x + k * std::log(x) - std::lgamma(k));
}

}  // namespace

double regularized_gamma_p(double shape, double x)
{
  if (!(shape > 0.0)) {
    throw DomainError("gamma shape must be > 0");
  }
  if (x < 0.0) {
    throw DomainError("incomplete gamma argument must be >= 0");
  }
  if (x == 0.0) {
    return 0.0;
  }
  if (x < shape + 1.0) {
    return gamma_p_series(shape, x);
  }
  return 1.0 - gamma_q_continued_fraction(shape, x);
}

double pdf(const ShiftedGammaParams & params, double t)
{
  validate(params);
  const double x = (t - params.shift) / params.scale;
  if (x <= 0.0) {
    return 0.0;
  }
  const double log_density = (params.shape - 1.0) * std::log(x) - x -
    std::lgamma(params.shape) - std::log(params.scale);
  return std::exp(log_density);
}

double cdf(const ShiftedGammaParams & params, double t)
{
  validate(params);
  if (t <= params.shift) {
    return 0.0;
  }
  return regularized_gamma_p(params.shape, (t - params.shift) / params.scale);
}

double quantile(const ShiftedGammaParams & params, double p)
{
  validate(params);
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("quantile probability must be in (0, 1), got " + std::to_string(p));
  }

  // Newton iterations on P(k, x) = p in unshifted scale-free coordinates,
  // with a bisection bracket as safety net.
  const double k = params.shape;
  double lo = 0.0;
  double hi = std::max(k + 10.0 * std::sqrt(k), 16.0);
  while (regularized_gamma_p(k, hi) < p) {
    lo = hi;
    hi *= 2.0;
  }

  double x = k;  // start near the bulk of the mass
  if (regularized_gamma_p(k, x) < p) {
    lo = std::max(lo, x);
  } else {
    hi = std::min(hi, x);
  }
  x = 0.5 * (lo + hi);
  for (int i = 0; i < 200; ++i) {
    const double f = regularized_gamma_p(k, x) - p;
    if (f > 0.0) {
      hi = x;
    } else {
      lo = x;
    }
    const double density =
      std::exp((k - 1.0) * std::log(x) - x - std::lgamma(k));
    double next = x;
    if (density > 0.0 && std::isfinite(density)) {
      next = x - f / density;
    }
    if (!(next > lo && next < hi)) {
      next = 0.5 * (lo + hi);
    }
    if (std::abs(next - x) <= 1e-15 * std::max(1.0, x)) {
      x = next;
      break;
    }
    x = next;
  }
  return params.shift + params.scale * x;
}

}  // namespace dsskit::reaction
