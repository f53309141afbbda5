// Copyright 2026 The degcorr Authors
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
//
#ifndef DEGCORR_ERRORS_H_
#define DEGCORR_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace degcorr {

// A distribution (or a side of an edge sample) is concentrated in a single
// point where the requested functional needs spread.
class DegenerateDistributionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The operation needs more edges than the graph has.
class InsufficientEdgesError : public std::invalid_argument {
 public:
  InsufficientEdgesError(std::size_t required, std::size_t actual)
      : std::invalid_argument("operation needs at least " +
                              std::to_string(required) + " edge(s), graph has " +
                              std::to_string(actual)),
        required_(required),
        actual_(actual) {}

  std::size_t required() const { return required_; }
  std::size_t actual() const { return actual_; }

 private:
  std::size_t required_;
  std::size_t actual_;
};

// Malformed text input. `line` is 1-based; 0 when the error is not tied to a
// particular line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line,
             const std::string& message)
      : std::runtime_error(source + (line > 0 ? ":" + std::to_string(line) : "") +
                           ": " + message),
        source_(source),
        line_(line) {}

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

// The repeated configuration model did not produce a simple graph within
// the attempt budget.
class GenerationError : public std::runtime_error {
 public:
  GenerationError(const std::string& message, std::size_t attempts)
      : std::runtime_error(message), attempts_(attempts) {}

  std::size_t attempts() const { return attempts_; }

 private:
  std::size_t attempts_;
};

}  // namespace degcorr

#endif  // DEGCORR_ERRORS_H_
