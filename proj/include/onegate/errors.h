// Copyright 2026 The onegate Authors.
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

#ifndef ONEGATE_ERRORS_H_
#define ONEGATE_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace onegate {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Well-formed netlist text that breaks a naming or definition rule.
class SemanticError : public Error {
 public:
  SemanticError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// An index, word or size outside the valid range of its object.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ArityMismatchError : public Error {
 public:
  using Error::Error;
};

class TooWideError : public Error {
 public:
  using Error::Error;
};

// Circuit invariant violations, one subclass per invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};
class CycleError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};
class DanglingPinError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};
class UnaccountedPinError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};
class GarbageConflictError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};
class DuplicateNameError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// No single-input restriction of the gate inverts its input.
class TrivialGateError : public Error {
 public:
  using Error::Error;
};

// No single-input restriction drives two outputs together.
class NoFanoutError : public Error {
 public:
  using Error::Error;
};

class CoreNotNonAffine : public Error {
 public:
  using Error::Error;
};

// A synthesized gadget failed exhaustive simulation.
class GadgetVerificationError : public Error {
 public:
  using Error::Error;
};

class ClassificationError : public Error {
 public:
  enum class Reason { kAffine, kNotOneToOne, kNotInjective };

  ClassificationError(Reason reason, const std::string& what)
      : Error(what), reason_(reason) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

// Lowered circuit disagrees with the source netlist. Never expected.
class EquivalenceFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace onegate

#endif  // ONEGATE_ERRORS_H_
