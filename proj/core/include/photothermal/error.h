// Copyright 2026 The Photothermal Authors
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

#ifndef PHOTOTHERMAL_ERROR_H_
#define PHOTOTHERMAL_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace photothermal {

enum class ErrorKind {
  kInvalidArgument,   // violated precondition or type invariant
  kBadInput,          // malformed file or configuration
  kModeMismatch,      // operation requires the other HeatSource mode
  kKindMismatch,      // operation requires the other WallAssembly kind
  kStability,         // time step above the explicit-Euler limit
  kNumericalFailure,  // NaN/overflow or iteration cap
  kNoCrossing,        // series never reaches the response level
  kNoPlateau,         // no window satisfies the plateau rule
  kDegenerate,        // zero-width normalization or non-positive baseline
  kIo,
};

std::string_view ErrorKindName(ErrorKind kind);

// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace photothermal

#endif  // PHOTOTHERMAL_ERROR_H_
