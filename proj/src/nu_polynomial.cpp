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

#include "capheat/nu_polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace capheat {

NuPolynomial::NuPolynomial(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

NuPolynomial::NuPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

NuPolynomial::NuPolynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
  trim();
}

NuPolynomial NuPolynomial::monomial(const Rational& coefficient, std::size_t power) {
  std::vector<Rational> c(power + 1);
  c[power] = coefficient;
  return NuPolynomial(std::move(c));
}

void NuPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational NuPolynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational NuPolynomial::evaluate(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double NuPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

NuPolynomial NuPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
  return NuPolynomial(std::move(d));
}

NuPolynomial NuPolynomial::antiderivative() const {
  if (coeffs_.empty()) return {};
  std::vector<Rational> a(coeffs_.size() + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) a[k + 1] = coeffs_[k] / Rational(static_cast<long>(k + 1));
  return NuPolynomial(std::move(a));
}

NuPolynomial NuPolynomial::integral_from(const Rational& lower) const {
  NuPolynomial a = antiderivative();
  return a - NuPolynomial(a.evaluate(lower));
}

NuPolynomial& NuPolynomial::operator+=(const NuPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

NuPolynomial& NuPolynomial::operator-=(const NuPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

NuPolynomial operator*(const NuPolynomial& a, const NuPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return NuPolynomial(std::move(c));
}

NuPolynomial& NuPolynomial::operator*=(const NuPolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

NuPolynomial& NuPolynomial::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

NuPolynomial NuPolynomial::operator-() const {
  NuPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string NuPolynomial::to_string(const std::string& variable) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const Rational mag = c.sign() < 0 ? -c : c;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != Rational(1)) os << mag << "*";
    os << variable;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

}  // namespace capheat
