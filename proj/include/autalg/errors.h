// Copyright 2026 The autalg Authors
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

#ifndef AUTALG_ERRORS_H_
#define AUTALG_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace autalg {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed automaton, word, state map or partition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Syntax error in the automaton text format. line() is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// An operation was called on an automaton lacking a required property
// (e.g. a reset word requested from a non-synchronizing automaton).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A configured enumeration or search limit was hit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// A property that must hold by construction failed at runtime. Always a bug
// in this library, never a property of the input.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace autalg

#endif  // AUTALG_ERRORS_H_
