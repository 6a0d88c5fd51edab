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

#include "capheat/exact_series.hpp"

#include "capheat/error.hpp"

namespace capheat {

Rational bernoulli(unsigned index) {
  if (index == 1) return Rational(-1, 2);
  if (index % 2 == 1) return Rational(0);
  std::vector<Rational> a(index + 1);
  for (unsigned m = 0; m <= index; ++m) {
    a[m] = Rational(1, static_cast<long>(m) + 1);
    for (unsigned j = m; j >= 1; --j) a[j - 1] = Rational(static_cast<long>(j)) * (a[j - 1] - a[j]);
  }
  return a[0];
}

std::vector<NuPolynomial> u_polynomials(unsigned max_k) {
  const NuPolynomial x2_one_minus_x2{0, 0, 1, 0, -1};  // x^2 (1 - x^2)
  const NuPolynomial one_minus_5x2{1, 0, -5};
  std::vector<NuPolynomial> u{NuPolynomial(1)};
  u.reserve(max_k + 1);
  for (unsigned k = 0; k < max_k; ++k) {
    const NuPolynomial& prev = u.back();
    NuPolynomial next = Rational(1, 2) * (x2_one_minus_x2 * prev.derivative()) +
                        Rational(1, 8) * (one_minus_5x2 * prev).antiderivative();
    u.push_back(std::move(next));
  }
  return u;
}

NuPolynomial u_polynomial(unsigned k) { return u_polynomials(k).back(); }

std::vector<NuPolynomial> bessel_D_polynomials(unsigned max_i) {
  const auto u = u_polynomials(max_i);
  std::vector<NuPolynomial> coeffs(u.begin(), u.end());
  const PowerSeries<NuPolynomial> series(max_i, std::move(coeffs));
  const auto cumulants = series_log(series);
  return cumulants.coefficients();
}

NuPolynomial bessel_D_polynomial(unsigned i) {
  if (i == 0) raise(ErrorKind::InvalidArgument, "bessel_D_polynomial needs i >= 1");
  return bessel_D_polynomials(i)[i];
}

std::vector<Rational> sinh_ratio_coefficients(unsigned power, unsigned order) {
  if (power == 0) raise(ErrorKind::InvalidArgument, "sinh_ratio_coefficients needs power >= 1");
  // sinh(y)/y = sum_k y^{2k} / (2k+1)!
  PowerSeries<Rational> sinh_over_y(order);
  for (unsigned k = 0; 2 * k <= order; ++k) sinh_over_y[2 * k] = Rational(1) / factorial(2 * k + 1);
  const auto ratio = series_pow(series_inverse(sinh_over_y), power);
  std::vector<Rational> out(order + 1);
  for (unsigned nu = 0; nu <= order; ++nu) out[nu] = ratio[nu] * factorial(nu);
  return out;
}

}  // namespace capheat
