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

#ifndef DSSKIT__ERRORS_HPP_
#define DSSKIT__ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace dsskit
{

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A quantity is outside its physical or mathematical domain
/// (negative speed, zero friction, non-finite input, ...).
class DomainError : public Error
{
public:
  using Error::Error;
};

/// A scenario configuration file is malformed or violates an invariant.
class ConfigError : public Error
{
public:
  using Error::Error;
};

/// Boundary search or delta calibration could not complete
/// (no sign change inside the axis bounds, non-monotone axis, iteration cap).
class DerivationError : public Error
{
public:
  using Error::Error;
};

}  // namespace dsskit

#endif  // DSSKIT__ERRORS_HPP_
