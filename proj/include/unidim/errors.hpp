// Copyright 2026 The unidim authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace unidim {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation left the function's domain: a pole, an invalid argument
/// (sqrt/ln of a negative number, asin/acos outside [-1,1]) or overflow
/// to a non-finite value.
class DomainFault : public Error {
 public:
  using Error::Error;
};

/// Expression text failed to parse. Carries the byte offset of the
/// offending position in the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Downhill expansion failed to bracket a minimum (monotone function on
/// the explored ray).
class BracketFailure : public Error {
 public:
  using Error::Error;
};

/// Every probe the solver attempted faulted; there is nothing to minimize.
class NoEvaluablePoint : public Error {
 public:
  using Error::Error;
};

/// A documented precondition was violated by the caller.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// Every sample position of a plot request faulted.
class AllPointsFault : public Error {
 public:
  using Error::Error;
};

}  // namespace unidim
