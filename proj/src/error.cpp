/* Copyright 2026 The capheat Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License. */

#include "capheat/error.hpp"

namespace capheat {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ConstantTermViolation: return "ConstantTermViolation";
    case ErrorKind::TruncationMismatch: return "TruncationMismatch";
    case ErrorKind::StructureViolation: return "StructureViolation";
    case ErrorKind::ParameterPole: return "ParameterPole";
    case ErrorKind::DivergentAtOne: return "DivergentAtOne";
    case ErrorKind::GammaPole: return "GammaPole";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::InsufficientBaseData: return "InsufficientBaseData";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::MissingResidue: return "MissingResidue";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::SlowConvergence: return "SlowConvergence";
    case ErrorKind::MissedRootSuspicion: return "MissedRootSuspicion";
    case ErrorKind::TailTooLarge: return "TailTooLarge";
    case ErrorKind::IllConditioned: return "IllConditioned";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace capheat
