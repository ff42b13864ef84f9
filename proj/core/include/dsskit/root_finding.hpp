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

#ifndef DSSKIT__ROOT_FINDING_HPP_
#define DSSKIT__ROOT_FINDING_HPP_

#include <cmath>
#include <utility>

#include "dsskit/errors.hpp"

namespace dsskit
{

inline constexpr int kDefaultRootIterationCap = 200;

/// Bracketing bisection for a root of f on [lo, hi].
///
/// Requires f(lo) and f(hi) of opposite sign (an exact zero at either
/// endpoint is returned directly). Deterministic; the returned midpoint is
/// within `tol` of the true root of a monotone f.
template <class F>
double bisect_root(
  F && f, double lo, double hi, double tol, int max_iter = kDefaultRootIterationCap)
{
  if (!(tol > 0.0)) {
    throw DerivationError("root tolerance must be > 0");
  }
  if (!(lo <= hi)) {
    throw DerivationError("empty bracket: lo > hi");
  }
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) {
    return lo;
  }
  if (fhi == 0.0) {
    return hi;
  }
  if ((flo < 0.0) == (fhi < 0.0)) {
    throw DerivationError("no sign change over the bracket");
  }
  for (int i = 0; i < max_iter && (hi - lo) > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    if (fmid == 0.0) {
      return mid;
    }
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
      fhi = fmid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Secant iteration for a root of f near x0, x1. Falls back on failure by
/// throwing; callers keep a bisection bracket for robustness.
template <class F>
double secant_root(
  F && f, double x0, double x1, double x_tol, int max_iter = kDefaultRootIterationCap)
{
  double f0 = f(x0);
  double f1 = f(x1);
  for (int i = 0; i < max_iter; ++i) {
    if (f1 == f0) {
      throw DerivationError("secant iteration stalled (flat chord)");
    }
    const double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
    if (!std::isfinite(x2)) {
      throw DerivationError("secant iteration diverged");
    }
    if (std::abs(x2 - x1) <= x_tol) {
      return x2;
    }
    x0 = x1;
    f0 = f1;
    x1 = x2;
    f1 = f(x2);
  }
  throw DerivationError("secant iteration cap reached");
}

}  // namespace dsskit

#endif  // DSSKIT__ROOT_FINDING_HPP_
