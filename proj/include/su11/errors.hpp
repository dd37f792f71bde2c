// Copyright 2026 The su11 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace su11 {

// Root of every error thrown by the library. The CLI maps all of these to the
// numerical/domain exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input parameter is outside its domain (negative photon number, NaN, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A formula hit a non-physical intermediate (singular covariance, T <= 0).
class NumericalDomainError : public Error {
 public:
  using Error::Error;
};

// A computed state violated a structural invariant. Indicates a bug upstream.
class InvariantError : public Error {
 public:
  using Error::Error;
};

// SNL/HL requested with zero photons inside the interferometer.
class UndefinedLimitError : public Error {
 public:
  using Error::Error;
};

// The phase sensitivity is undefined because the signal slope vanishes.
class BlindSpotError : public Error {
 public:
  using Error::Error;
};

// Fock-space truncation exceeded its budget at the named stage.
class CutoffError : public Error {
 public:
  CutoffError(std::string stage, double mass, double budget);

  const std::string& stage() const { return stage_; }
  double mass() const { return mass_; }

 private:
  std::string stage_;
  double mass_;
};

// Parameters outside the range the Fock oracle can handle at desk scale.
class TractabilityError : public Error {
 public:
  using Error::Error;
};

}  // namespace su11
