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

#include <cstdint>
#include <vector>

#include "capheat/legendre_asymptotics.hpp"
#include "capheat/rational.hpp"
#include "capheat/special_eval.hpp"

namespace capheat {

/// Multiplicity (2k+d-1)(k+d-2)!/(k!(d-1)!) of the k-th eigenvalue of the
/// Laplacian on the unit S^d. Requires d >= 2; throws Error(DomainError)
/// when the value does not fit in 64 bits.
std::int64_t degeneracy(int k, int d);

/// Spectrum of -Laplacian + (d-1)^2/4 on the unit S^d: mu = k + (d-1)/2.
struct SphereSpectrum {
  struct Entry {
    int k;
    double mu;
    std::int64_t degeneracy;
  };
  int d;
  std::vector<Entry> entries;
};

SphereSpectrum sphere_spectrum(int d, int k_max);

/// Surface area of the unit S^d, (4 pi)^{d/2} Gamma(d/2) / (d-1)!.
double sphere_area(int d);

/// Residue of the base zeta function at s = m/2 for 2 <= m <= d:
///   2^{m-d} D^{(d-1)}_{d-m} / ((d-1) (m-2)! (d-m)!).
Rational sphere_residue(int m, int d);

/// Heat coefficient of -Laplacian + (d-1)^2/4 on the unit S^d including
/// the (4 pi)^{-d/2} normalization:
///   2 sqrt(pi) (d-n-1) D^{(d-1)}_n / (2^d n! (d-1) Gamma((d-n+1)/2)),
/// with 1/Gamma vanishing at its poles. Negative n gives zero.
double sphere_heat_coefficient(int n, int d);

/// Suspension coefficient script_A_{n/2} for a sphere base from the direct
/// closed form with Pochhammer symbols. `structures` must hold Omega
/// structures up to order n - 1. Requires d >= 2 and 0 <= n <= d.
double suspension_coefficient_direct(int n, int d, const AngleParams& angle,
                                     const std::vector<StructuredOmega>& structures, const EvalPrecision& prec = {});
double suspension_coefficient_direct(int n, int d, const AngleParams& angle, const EvalPrecision& prec = {});

/// Pure-Laplacian coefficient cal_A_{n/2} for a sphere base from the
/// hand-expanded formulas for n = 0..6 (written out in C1 and F_i).
/// Requires d >= 2 and n <= min(6, d).
double explicit_table_check(int n, int d, const AngleParams& angle, const std::vector<StructuredOmega>& structures,
                            const EvalPrecision& prec = {});
double explicit_table_check(int n, int d, const AngleParams& angle, const EvalPrecision& prec = {});

}  // namespace capheat
