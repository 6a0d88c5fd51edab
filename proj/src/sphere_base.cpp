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

#include "capheat/sphere_base.hpp"

#include <gmpxx.h>

#include <cmath>
#include <string>

#include "capheat/error.hpp"
#include "capheat/exact_series.hpp"

namespace capheat {

namespace {

void require_sphere_dim(int d) {
  if (d < 2) raise(ErrorKind::DomainError, "sphere bases need d >= 2, got " + std::to_string(d));
}

Rational sinh_ratio(int d, int n) {
  if (n < 0) return Rational(0);
  return sinh_ratio_coefficients(static_cast<unsigned>(d - 1), static_cast<unsigned>(n))[static_cast<std::size_t>(n)];
}

double factorial_d(int n) { return std::tgamma(n + 1.0); }

void require_structures(const std::vector<StructuredOmega>& structures, int n) {
  if (n >= 2 && static_cast<int>(structures.size()) < n)
    raise(ErrorKind::InsufficientBaseData, "Omega structures up to order " + std::to_string(n - 1) + " are required");
}

}  // namespace

std::int64_t degeneracy(int k, int d) {
  require_sphere_dim(d);
  if (k < 0) raise(ErrorKind::DomainError, "degeneracy needs k >= 0");
  // (k+d-2)!/(k!(d-1)!) = C(k+d-2, d-2) / (d-1)
  mpz_class value;
  mpz_bin_uiui(value.get_mpz_t(), static_cast<unsigned long>(k + d - 2), static_cast<unsigned long>(d - 2));
  value *= 2 * k + d - 1;
  value /= d - 1;
  if (!value.fits_slong_p()) raise(ErrorKind::DomainError, "degeneracy overflows 64 bits");
  return value.get_si();
}

SphereSpectrum sphere_spectrum(int d, int k_max) {
  require_sphere_dim(d);
  SphereSpectrum s{d, {}};
  s.entries.reserve(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k) s.entries.push_back({k, k + (d - 1) / 2.0, degeneracy(k, d)});
  return s;
}

double sphere_area(int d) {
  if (d < 1) raise(ErrorKind::DomainError, "sphere_area needs d >= 1");
  return std::pow(4.0 * M_PI, d / 2.0) * std::tgamma(d / 2.0) / factorial_d(d - 1);
}

Rational sphere_residue(int m, int d) {
  require_sphere_dim(d);
  if (m < 2 || m > d)
    raise(ErrorKind::DomainError, "sphere_residue needs 2 <= m <= d (m=" + std::to_string(m) +
                                      ", d=" + std::to_string(d) + ")");
  const Rational two_pow = m >= d ? pow(Rational(2), static_cast<unsigned>(m - d))
                                  : Rational(1) / pow(Rational(2), static_cast<unsigned>(d - m));
  return two_pow * sinh_ratio(d, d - m) /
         (Rational(d - 1) * factorial(static_cast<unsigned>(m - 2)) * factorial(static_cast<unsigned>(d - m)));
}

double sphere_heat_coefficient(int n, int d) {
  require_sphere_dim(d);
  if (n < 0) return 0.0;
  const Rational exact = Rational(d - n - 1) * sinh_ratio(d, n) /
                         (pow(Rational(2), static_cast<unsigned>(d)) * factorial(static_cast<unsigned>(n)) *
                          Rational(d - 1));
  if (exact.is_zero()) return 0.0;
  return 2.0 * std::sqrt(M_PI) * exact.to_double() * rgamma((d - n + 1) / 2.0);
}

double suspension_coefficient_direct(int n, int d, const AngleParams& angle,
                                     const std::vector<StructuredOmega>& structures, const EvalPrecision& prec) {
  require_sphere_dim(d);
  if (n < 0 || n > d) raise(ErrorKind::IndexOutOfRange, "the direct sphere formula needs 0 <= n < D");
  require_structures(structures, n);
  const int D = d + 1;
  const double sqrt_pi = std::sqrt(M_PI);
  const double sn = std::pow(angle.sin, D - n);
  double value = sn * (d - n - 1) / (factorial_d(n) * (d - 1) * (d - n + 1)) *
                 pochhammer((d - n + 1) / 2.0, n / 2.0) * sinh_ratio(d, n).to_double() * c1(angle, D - n, prec);
  if (n >= 1)
    value -= sqrt_pi * sn * (d - n) / (2.0 * (d - 1) * factorial_d(n - 1)) *
             pochhammer((d - n + 2) / 2.0, (n - 1) / 2.0) * sinh_ratio(d, n - 1).to_double();
  // The inner summation index is l here; n stays the coefficient index.
  for (int l = 1; l <= n - 1; ++l) {
    const double base = sinh_ratio(d, n - l - 1).to_double();
    if (base == 0.0) continue;
    value -= 2.0 * sqrt_pi / (d - 1) * sn * (d - n + l) / factorial_d(n - 1 - l) *
             pochhammer((d - n + l + 2) / 2.0, (n - l - 1) / 2.0) * base *
             f_total(structures[static_cast<std::size_t>(l)], angle, D - n, prec);
  }
  return value * sphere_area(d) / std::pow(4.0 * M_PI, D / 2.0);
}

double suspension_coefficient_direct(int n, int d, const AngleParams& angle, const EvalPrecision& prec) {
  return suspension_coefficient_direct(n, d, angle, omega_structures(static_cast<unsigned>(std::max(n - 1, 1))), prec);
}

double explicit_table_check(int n, int d, const AngleParams& angle, const std::vector<StructuredOmega>& structures,
                            const EvalPrecision& prec) {
  require_sphere_dim(d);
  if (n < 0 || n > 6 || n > d) raise(ErrorKind::IndexOutOfRange, "the explicit table covers 0 <= n <= min(6, d)");
  require_structures(structures, n);
  const int D = d + 1;
  const double dd = d;
  const double sq = std::sqrt(M_PI);
  const double s = angle.sin;
  const double s2 = angle.sin2;
  const auto C1 = [&](int dn) { return c1(angle, dn, prec); };
  const auto F = [&](int i, int dn) { return f_total(structures[static_cast<std::size_t>(i)], angle, dn, prec); };
  const double area = sphere_area(d);
  const double full = std::pow(4.0 * M_PI, D / 2.0);
  const double half = std::pow(4.0 * M_PI, d / 2.0);
  double r = 0.0;
  double pre = 1.0;
  switch (n) {
    case 0:
      r = C1(D) / (dd + 1);
      pre = full / (std::pow(s, 1 + d) * area);
      break;
    case 1:
      r = -0.25;
      pre = half / (std::pow(s, d) * area);
      break;
    case 2:
      r = -(dd - 3) / 12 * C1(D - 2) - 2 * sq * F(1, D - 2) + dd * dd / (4 * (dd + 1)) * s2 * C1(D);
      pre = full / (std::pow(s, d - 1) * area);
      break;
    case 3:
      r = (dd - 3) * (dd - 1) / 48 - F(2, D - 3) - dd * dd / 16 * s2;
      pre = half / (std::pow(s, d - 2) * area);
      break;
    case 4:
      r = (dd - 5) * (dd - 1) * (5 * dd - 3) / 1440 * C1(D - 4) + sq * (dd - 3) * (dd - 1) / 6 * F(1, D - 4) -
          2 * sq * F(3, D - 4) - dd * dd * (dd - 3) / 48 * s2 * C1(D - 2) - dd * dd / 2 * sq * s2 * F(1, D - 2) +
          std::pow(dd, 4) / (32 * (dd + 1)) * s2 * s2 * C1(D);
      pre = full / (std::pow(s, d - 3) * area);
      break;
    case 5:
      r = -(dd - 5) * (dd - 3) * (dd - 1) * (5 * dd - 3) / 5760 + (dd - 3) * (dd - 1) / 12 * F(2, D - 5) -
          F(4, D - 5) + dd * dd * (dd - 3) * (dd - 1) / 192 * s2 - dd * dd / 4 * s2 * F(2, D - 3) -
          std::pow(dd, 4) / 128 * s2 * s2;
      pre = half / (std::pow(s, d - 4) * area);
      break;
    default:
      r = -(dd - 7) * (dd - 3) * (dd - 1) * (9 - 28 * dd + 35 * dd * dd) / 362880 * C1(D - 6) -
          sq * (dd - 5) * (dd - 3) * (dd - 1) * (5 * dd - 3) / 720 * F(1, D - 6) +
          sq * (dd - 3) * (dd - 1) / 6 * F(3, D - 6) - 2 * sq * F(5, D - 6) +
          dd * dd * (dd - 5) * (dd - 1) * (5 * dd - 3) / 5760 * s2 * C1(D - 4) +
          dd * dd * (dd - 3) * (dd - 1) / 24 * sq * s2 * F(1, D - 4) - dd * dd / 2 * sq * s2 * F(3, D - 4) -
          std::pow(dd, 4) * (dd - 3) / 384 * s2 * s2 * C1(D - 2) - std::pow(dd, 4) / 16 * sq * s2 * s2 * F(1, D - 2) +
          std::pow(dd, 6) / (384 * (dd + 1)) * s2 * s2 * s2 * C1(D);
      pre = full / (std::pow(s, d - 5) * area);
      break;
  }
  return r / pre;
}

double explicit_table_check(int n, int d, const AngleParams& angle, const EvalPrecision& prec) {
  return explicit_table_check(n, d, angle, omega_structures(static_cast<unsigned>(std::max(n - 1, 1))), prec);
}

}  // namespace capheat
