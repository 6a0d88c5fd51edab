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
#include <initializer_list>
#include <string>
#include <vector>

#include "capheat/rational.hpp"

namespace capheat {

/// Dense univariate polynomial with exact rational coefficients; the
/// coefficient of x^k lives at index k. Trailing zeros are always trimmed,
/// so the zero polynomial has no coefficients and degree -1.
class NuPolynomial {
 public:
  NuPolynomial() = default;
  NuPolynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  NuPolynomial(int constant) : NuPolynomial(Rational(constant)) {}  // NOLINT
  explicit NuPolynomial(std::vector<Rational> coefficients);
  NuPolynomial(std::initializer_list<Rational> coefficients);

  static NuPolynomial monomial(const Rational& coefficient, std::size_t power);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of x^power; zero beyond the degree.
  Rational coefficient(std::size_t power) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational evaluate(const Rational& x) const;
  double evaluate(double x) const;

  NuPolynomial derivative() const;
  /// Antiderivative vanishing at x = 0.
  NuPolynomial antiderivative() const;
  /// x -> \int_{lower}^{x} p(t) dt
  NuPolynomial integral_from(const Rational& lower) const;

  NuPolynomial& operator+=(const NuPolynomial& rhs);
  NuPolynomial& operator-=(const NuPolynomial& rhs);
  NuPolynomial& operator*=(const NuPolynomial& rhs);
  NuPolynomial& operator*=(const Rational& scalar);

  friend NuPolynomial operator+(NuPolynomial a, const NuPolynomial& b) { return a += b; }
  friend NuPolynomial operator-(NuPolynomial a, const NuPolynomial& b) { return a -= b; }
  friend NuPolynomial operator*(const NuPolynomial& a, const NuPolynomial& b);
  friend NuPolynomial operator*(NuPolynomial a, const Rational& s) { return a *= s; }
  friend NuPolynomial operator*(const Rational& s, NuPolynomial a) { return a *= s; }
  NuPolynomial operator-() const;

  friend bool operator==(const NuPolynomial& a, const NuPolynomial& b) = default;

  /// Human-readable form in the given variable, highest power last, e.g.
  /// "1/8*x - 5/24*x^3".
  std::string to_string(const std::string& variable = "x") const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

}  // namespace capheat
