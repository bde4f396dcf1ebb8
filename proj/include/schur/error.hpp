// Copyright 2026 The schur-choice Authors
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

#ifndef SCHUR_ERROR_HPP
#define SCHUR_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace schur {

/// Base error. code() is the machine-readable field surfaced by the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

/// Malformed or out-of-contract input.
class InputError : public Error {
 public:
  explicit InputError(const std::string& message) : Error("input", message) {}
};

/// An enumeration or cardinality cap was exceeded.
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& message)
      : Error("resource", message) {}
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& message)
      : Error("precondition", message) {}
};

/// A structural invariant failed to hold; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& message)
      : Error("internal", message) {}
};

}  // namespace schur

#endif  // SCHUR_ERROR_HPP
