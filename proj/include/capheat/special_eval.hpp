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

#include <cstddef>

#include "capheat/legendre_asymptotics.hpp"

namespace capheat {

/// Opening angle of the cap with its trigonometric values cached.
struct AngleParams {
  double theta0;
  double sin;
  double cos;
  double sin2;
  double cos2;

  /// Throws Error(DomainError) unless 0 < theta0 < pi.
  static AngleParams from_radians(double theta0);
  static AngleParams from_degrees(double degrees);
};

/// Series controls for double-precision evaluation. Extended-precision
/// paths always sum to the unit roundoff of their type.
struct EvalPrecision {
  double rel_tol = 1e-13;
  std::size_t max_terms = 100000;

  /// Throws Error(InvalidArgument) unless 0 < rel_tol <= 1e-6 and
  /// max_terms >= 1000.
  void validate() const;

  /// Defaults, with rel_tol overridden by CAPHEAT_REL_TOL when set.
  static EvalPrecision from_environment();
};

/// Gamma(x); throws Error(GammaPole) at nonpositive integers.
double gamma(double x);
/// 1/Gamma(x), zero at nonpositive integers.
double rgamma(double x);
/// (a)_k = Gamma(a + k)/Gamma(a), by direct product for integer k and
/// through Gamma otherwise.
double pochhammer(double a, double k);

/// Gauss hypergeometric function 2F1(a, b; c; x) on 0 <= x <= 1.
/// Errors: ParameterPole (c a nonpositive integer), DivergentAtOne
/// (x = 1 with c - a - b <= 0), NonConvergence.
double gauss_2f1(double a, double b, double c, double x, const EvalPrecision& prec = {});

/// 2F1(1/2, s; s + 1; sin^2 theta0) with s = two_s / 2, i.e.
/// 2s sin^{-2s} int_0^theta0 sin^{2s-1}. For theta0 > pi/2 the integral
/// form is used, which is the continuation of the 2F1 across the equator.
double c1(const AngleParams& angle, double two_s, const EvalPrecision& prec = {});

/// sum_b x_{i,b} cos^{i+2b} Gamma(a + b) / (Gamma(a) Gamma(b + i/2)),
/// a = (D - n + i)/2.
double c2(const StructuredOmega& s, const AngleParams& angle, double D_minus_n);

/// sin^{n-D} sum_j z0^{(i,j)} Gamma((D-n)/2 + j) / (Gamma(a) Gamma(j)).
double c3(const StructuredOmega& s, const AngleParams& angle, double D_minus_n);

/// sin^{n-D} sum_{j,b} z_{i,b,j} cos^{i+2b} Gamma(a + b + j) / (Gamma(a) Gamma(b + j + i/2))
///   * 2F1(-(D-n)/2, b + i/2; b + j + i/2; cos^2 theta0).
double c4(const StructuredOmega& s, const AngleParams& angle, double D_minus_n, const EvalPrecision& prec = {});

/// F_i = c2 + c3 + c4. The last two grow like sin^{n-D} for small angles
/// and cancel, so their sum is formed in MPFR arithmetic with enough digits
/// to absorb the cancellation.
double f_total(const StructuredOmega& s, const AngleParams& angle, double D_minus_n, const EvalPrecision& prec = {});

/// Limit of F_i as theta0 -> 0: c2 with cos theta0 = 1.
double f_cone_limit(const StructuredOmega& s, double D_minus_n);

/// Decimal digits f_total uses for c3 + c4 (0 means double precision).
unsigned f_total_working_digits(const AngleParams& angle, double D_minus_n);

}  // namespace capheat
