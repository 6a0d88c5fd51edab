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

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "capheat/legendre_asymptotics.hpp"
#include "capheat/special_eval.hpp"

namespace capheat {

/// Unit S^d base; all data comes from closed forms.
struct SphereBase {
  int d;
};

/// Arbitrary base described by its heat coefficients A^N_{n/2} of
/// -Laplacian + (d-1)^2/4, normalized so that A^N_0 = (4 pi)^{-d/2} vol.
/// Odd n must be supplied as well when the base has a boundary.
struct UserBase {
  int d;
  std::map<int, double> coefficients;
  std::optional<double> residue_at_minus_half;
};

using BaseDescriptor = std::variant<SphereBase, UserBase>;

int base_dimension(const BaseDescriptor& base);

/// A^N_{n/2}; zero for n < 0. Throws Error(InsufficientBaseData) when a
/// user base lacks the entry.
double base_coefficient(const BaseDescriptor& base, int n);

struct SuspensionConfig {
  int D = 3;
  AngleParams theta0 = AngleParams::from_radians(1.0);
  BaseDescriptor base = SphereBase{2};
  /// Highest n in the requested coefficients A_{n/2}.
  int n_max = 2;
  /// Highest Omega order generated; at least n_max - 1.
  int truncation = 10;
  double mass = 0.0;
  EvalPrecision precision{};

  int d() const { return D - 1; }

  /// Throws Error(InvalidArgument) for inconsistent dimensions, a negative
  /// mass or a too small truncation, Error(IndexOutOfRange) for n_max >= D
  /// and Error(InsufficientBaseData) for missing user coefficients.
  void validate() const;
};

/// Gamma(s) * residue. Throws Error(GammaPole) for s = 0, -1, -2, ...
double residue_to_coefficient(double s, double residue);

/// Evaluates A_{n/2} of -Laplacian + d^2/4 on the suspension, reusing one
/// set of Omega structures for every n.
class HeatCoefficientAssembler {
 public:
  explicit HeatCoefficientAssembler(SuspensionConfig cfg);

  const SuspensionConfig& config() const { return cfg_; }
  const std::vector<StructuredOmega>& structures() const { return structures_; }

  /// script_A_{n/2}; requires 0 <= n < D and n <= n_max.
  double script_A(int n) const;

 private:
  SuspensionConfig cfg_;
  std::vector<StructuredOmega> structures_;
};

double assemble_script_A(const SuspensionConfig& cfg, int n);

/// cal_A_{n/2} = sum_{k <= n/2} (d/2)^{2k} / k! * script_A_{n/2 - k}.
std::vector<double> shift_to_pure_laplacian(const std::vector<double>& script_A, int d);

/// Coefficients of e^{-m^2 t} times the input expansion:
/// out_{n/2} = sum_{k <= n/2} (-m^2)^k / k! * in_{n/2 - k}.
std::vector<double> mass_shift(const std::vector<double>& coefficients, double mass);

/// Coefficient of ln t in the heat trace, half the residue of the base zeta
/// function at -1/2. Empty for sphere bases; Error(MissingResidue) for a
/// user base without the residue.
std::optional<double> log_coefficient(const BaseDescriptor& base);

struct CoefficientTable {
  struct Entry {
    int n;
    double script_A;
    double cal_A;
  };
  std::vector<Entry> entries;
  std::optional<double> log_coefficient;
};

/// script_A and cal_A for n = 0..n_max. A nonzero mass multiplies both
/// expansions by e^{-m^2 t}.
CoefficientTable compute_table(const SuspensionConfig& cfg);

}  // namespace capheat
