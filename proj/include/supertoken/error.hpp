// Copyright 2026 The Supertoken Authors
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

#ifndef SUPERTOKEN_ERROR_HPP_
#define SUPERTOKEN_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace supertoken {

enum class ErrorKind {
  kInvalidParameter,
  kTooLarge,
  kInfiniteDistance,
  kPropertyViolation,
  kFormulaInconsistency,
};

const char* ErrorKindName(ErrorKind kind);

// All library failures are reported through this exception type. The kind
// drives the CLI exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void Fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void Require(bool condition, const std::string& what) {
  if (!condition) Fail(ErrorKind::kInvalidParameter, what);
}

// Guards against accidental exponential blowups; `force` lifts the limit.
inline void Guard(bool within_limit, bool force, const std::string& what) {
  if (!within_limit && !force) Fail(ErrorKind::kTooLarge, what);
}

}  // namespace supertoken

#endif  // SUPERTOKEN_ERROR_HPP_
