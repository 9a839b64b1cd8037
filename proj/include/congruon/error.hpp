/* Copyright (C) 2026 The congruon authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace congruon {

// Numeric values double as CLI exit codes.
enum class ErrorCode : int {
  Internal = 1,
  Parse = 2,
  NotCoprime = 3,
  CapExceeded = 4,
  Precondition = 5,
  Io = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error(ErrorCode::Parse, w) {}
};
struct NotCoprimeError : Error {
  explicit NotCoprimeError(const std::string& w)
      : Error(ErrorCode::NotCoprime, w) {}
};
struct CapExceededError : Error {
  explicit CapExceededError(const std::string& w)
      : Error(ErrorCode::CapExceeded, w) {}
};
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& w)
      : Error(ErrorCode::Precondition, w) {}
};
struct IoError : Error {
  explicit IoError(const std::string& w) : Error(ErrorCode::Io, w) {}
};

}  // namespace congruon
