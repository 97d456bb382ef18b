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

#include "photothermal/error.h"

namespace photothermal {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "invalid-argument";
    case ErrorKind::kBadInput: return "bad-input";
    case ErrorKind::kModeMismatch: return "mode-mismatch";
    case ErrorKind::kKindMismatch: return "kind-mismatch";
    case ErrorKind::kStability: return "stability";
    case ErrorKind::kNumericalFailure: return "numerical-failure";
    case ErrorKind::kNoCrossing: return "no-crossing";
    case ErrorKind::kNoPlateau: return "no-plateau";
    case ErrorKind::kDegenerate: return "degenerate";
    case ErrorKind::kIo: return "io";
  }
  return "unknown";
}

}  // namespace photothermal
