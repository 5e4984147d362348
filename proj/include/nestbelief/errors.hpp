// Copyright 2026 The nestbelief Authors
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

namespace nestbelief {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An entry and its explicit negation would coexist in one environment.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// A rule or operator was applied while one of its preconditions failed.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A viewpoint would exceed the configured maximum nesting depth.
class DepthError : public Error {
 public:
  using Error::Error;
};

/// Malformed viewpoint (non-final goal/intention hop, self nesting, empty agent).
class ViewpointError : public Error {
 public:
  using Error::Error;
};

class UnknownActError : public Error {
 public:
  using Error::Error;
};

class CycleError : public Error {
 public:
  using Error::Error;
};

class UnknownOperatorError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, std::string expected, std::string found)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) +
              ": expected " + expected + (found.empty() ? "" : ", found '" + found + "'")),
        line_(line),
        column_(column),
        expected_(std::move(expected)),
        found_(std::move(found)) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  int line_;
  int column_;
  std::string expected_;
  std::string found_;
};

}  // namespace nestbelief
