// Copyright 2026 The patlas Authors.
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

#ifndef PATLAS_ERROR_H_
#define PATLAS_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace patlas {

// Base class for every error the library raises. `stage` names the pipeline
// stage ("ingest", "cluster", ...) so the CLI can report where a run failed.
class Error : public std::runtime_error {
 public:
  Error(std::string stage, const std::string& message)
      : std::runtime_error(message), stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

// Malformed input. `line` is 1-based; 0 means the location is not a line.
class ParseError : public Error {
 public:
  ParseError(std::string stage, std::size_t line, const std::string& message)
      : Error(std::move(stage), line == 0 ? message
                                          : "line " + std::to_string(line) +
                                                ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Invalid parameter or configuration value.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace patlas

#endif  // PATLAS_ERROR_H_
