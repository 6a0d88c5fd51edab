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

#pragma once

#include <ostream>

namespace capheat::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kOk = 0,
  /// Bad flags or inputs the library rejects before computing.
  kValidationError = 2,
  /// Numerical failures (slow convergence, ill-conditioned fits, ...).
  kNumericalError = 3,
};

/// Parses argv (argv[0] is the program name), runs one subcommand and
/// writes its result to `out`. Failures are reported as a JSON object
/// {"error": {"kind", "message"}} on `out` plus a one-line message on `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace capheat::cli
