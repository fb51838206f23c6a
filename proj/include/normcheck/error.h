// Copyright 2026 The normcheck Authors
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

#ifndef NORMCHECK_ERROR_H_
#define NORMCHECK_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace normcheck {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input. offset() is a byte offset into the parsed text
// (or the line number for line-oriented formats, see line()).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::size_t line = 0)
      : Error(what), offset_(offset), line_(line) {}
  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }

 private:
  std::size_t offset_;
  std::size_t line_;
};

// An argument outside the operation's domain (index out of range, signed
// kernel where a nonnegative one is required, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A computation refused because it would exceed a configured budget.
// width() carries the induced width responsible, or -1 when not applicable.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, int width = -1)
      : Error(what), width_(width) {}
  int width() const { return width_; }

 private:
  int width_;
};

// Automorphism enumeration stopped at the configured order cap.
class GroupTooLarge : public Error {
 public:
  using Error::Error;
};

// The input does not satisfy an operation's standing assumptions.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace normcheck

#endif  // NORMCHECK_ERROR_H_
