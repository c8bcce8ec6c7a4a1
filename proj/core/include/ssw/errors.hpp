// Copyright 2026 The ssw-kernels Authors
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

namespace ssw {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands live on universes of different sizes.
class UniverseMismatch : public Error {
 public:
  UniverseMismatch() : Error("universe mismatch") {}
};

/// An argument violates an operation's documented precondition.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// A runtime check on an internal construction failed. Seeing one of these
/// means the library has a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Malformed graph file.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace ssw
