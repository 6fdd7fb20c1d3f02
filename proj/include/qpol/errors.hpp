// Copyright 2026 The qpol Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Exception types raised by the qpol library.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace qpol {

/// Base class of every error thrown by qpol.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of a function.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// A state or spectrum violates its type invariants.
class InvalidState : public Error {
  public:
    using Error::Error;
};

/// The truncation tolerance could not be met within the support cap.
class TruncationOverflow : public Error {
  public:
    using Error::Error;
};

/// A Stokes degree was requested for the two-mode vacuum.
class VacuumUndefined : public Error {
  public:
    using Error::Error;
};

/// The minimal relative entropy came out clearly negative.
class NegativeEntropy : public Error {
  public:
    using Error::Error;
};

/// The simplex oracle hit its iteration cap.
class NoConvergence : public Error {
  public:
    using Error::Error;
};

/// Malformed state descriptor or sweep file.
class ParseError : public Error {
  public:
    using Error::Error;
};

} // namespace qpol
