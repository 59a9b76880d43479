// Copyright 2026 The ICE Authors
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

#ifndef ICE_CORE_ERRORS_H_
#define ICE_CORE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace ice {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arithmetic left the exact int64 rational range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Inputs violate an operation's precondition (gamma < 1, bad sizes, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed or inconsistent run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A pluggable component (online adapter, oracle) broke its contract.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// Some request cannot be covered by any item.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// Input text could not be parsed. line() is 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// An exact method exceeded its configured size cap.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

// Random generation could not satisfy its post-condition.
class GenerationError : public Error {
 public:
  using Error::Error;
};

}  // namespace ice

#endif  // ICE_CORE_ERRORS_H_
