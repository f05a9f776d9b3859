// Copyright 2026 The deepvqe Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace deepvqe {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand sizes (qubit counts, matrix shapes) do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A dense object would exceed the configured size limit.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Parameter vectors or bitstrings have the wrong length.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A cost or matrix entry evaluated to NaN or infinity.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// An iterative solver failed to converge.
class IterationError : public Error {
 public:
  using Error::Error;
};

/// Every Gram eigenvalue fell below the rank tolerance.
class DegenerateBasisError : public Error {
 public:
  using Error::Error;
};

/// An operator acts outside the qubits it is allowed to touch.
class SupportError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation was violated.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A Hamiltonian term couples three or more subsystems.
class ArityError : public Error {
 public:
  using Error::Error;
};

/// A partition is not a contiguous disjoint cover.
class PartitionError : public Error {
 public:
  using Error::Error;
};

/// Input text could not be parsed. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A fermionic term list is not closed under hermitian conjugation.
class HermiticityError : public Error {
 public:
  using Error::Error;
};

/// A labelled fermionic term violates crystal-momentum conservation.
class MomentumError : public Error {
 public:
  using Error::Error;
};

/// Wraps an error raised inside one pipeline stage.
class StageError : public Error {
 public:
  StageError(std::string stage, const std::string& what)
      : Error("[" + stage + "] " + what), stage_(std::move(stage)) {}
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

}  // namespace deepvqe
