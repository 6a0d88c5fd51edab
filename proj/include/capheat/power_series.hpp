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
#include <string>
#include <utility>
#include <vector>

#include "capheat/error.hpp"
#include "capheat/rational.hpp"

namespace capheat {

/// Truncated formal power series sum_{k=0}^{order} c_k y^k over a
/// commutative coefficient ring T that contains the rationals (T must be
/// constructible from int, closed under + - *, and scalable by Rational).
///
/// The truncation order is part of the value. Combining two series of
/// different order throws Error(TruncationMismatch); nothing is silently
/// extended or cut.
template <class T>
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t truncation_order) : coeffs_(truncation_order + 1, T(0)) {}

  PowerSeries(std::size_t truncation_order, std::vector<T> coefficients)
      : coeffs_(std::move(coefficients)) {
    if (coeffs_.size() > truncation_order + 1)
      raise(ErrorKind::TruncationMismatch, "more coefficients than the truncation order allows");
    coeffs_.resize(truncation_order + 1, T(0));
  }

  static PowerSeries constant(std::size_t order, const T& value) {
    PowerSeries s(order);
    s.coeffs_[0] = value;
    return s;
  }

  /// The series y itself.
  static PowerSeries variable(std::size_t order) {
    PowerSeries s(order);
    if (order >= 1) s.coeffs_[1] = T(1);
    return s;
  }

  std::size_t truncation_order() const { return coeffs_.size() - 1; }
  const T& operator[](std::size_t k) const { return coeffs_.at(k); }
  T& operator[](std::size_t k) { return coeffs_.at(k); }
  const std::vector<T>& coefficients() const { return coeffs_; }

  PowerSeries& operator+=(const PowerSeries& rhs) {
    require_same_order(rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] = coeffs_[k] + rhs.coeffs_[k];
    return *this;
  }

  PowerSeries& operator-=(const PowerSeries& rhs) {
    require_same_order(rhs);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] = coeffs_[k] - rhs.coeffs_[k];
    return *this;
  }

  PowerSeries& operator*=(const Rational& scalar) {
    for (auto& c : coeffs_) c = c * scalar;
    return *this;
  }

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, const Rational& s) { return a *= s; }

  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    a.require_same_order(b);
    const std::size_t n = a.coeffs_.size();
    PowerSeries c(n - 1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; i + j < n; ++j) c.coeffs_[i + j] = c.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return c;
  }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.coeffs_ == b.coeffs_; }

  void require_same_order(const PowerSeries& other) const {
    if (other.coeffs_.size() != coeffs_.size())
      raise(ErrorKind::TruncationMismatch,
            "power series truncation orders differ (" + std::to_string(truncation_order()) + " vs " +
                std::to_string(other.truncation_order()) + ")");
  }

 private:
  std::vector<T> coeffs_;
};

template <class T>
PowerSeries<T> series_mul(const PowerSeries<T>& a, const PowerSeries<T>& b) {
  return a * b;
}

/// log f for f with constant term exactly 1, via n g_n = n f_n - sum_{k<n} k g_k f_{n-k}.
template <class T>
PowerSeries<T> series_log(const PowerSeries<T>& f) {
  if (!(f[0] == T(1))) raise(ErrorKind::ConstantTermViolation, "series_log needs constant term 1");
  const std::size_t order = f.truncation_order();
  PowerSeries<T> g(order);
  for (std::size_t n = 1; n <= order; ++n) {
    T acc = f[n] * Rational(static_cast<long>(n));
    for (std::size_t k = 1; k < n; ++k) acc = acc - g[k] * f[n - k] * Rational(static_cast<long>(k));
    g[n] = acc * Rational(1, static_cast<long>(n));
  }
  return g;
}

/// exp f for f with vanishing constant term, via n g_n = sum_{k=1}^{n} k f_k g_{n-k}.
template <class T>
PowerSeries<T> series_exp(const PowerSeries<T>& f) {
  if (!(f[0] == T(0))) raise(ErrorKind::ConstantTermViolation, "series_exp needs constant term 0");
  const std::size_t order = f.truncation_order();
  PowerSeries<T> g(order);
  g[0] = T(1);
  for (std::size_t n = 1; n <= order; ++n) {
    T acc(0);
    for (std::size_t k = 1; k <= n; ++k) acc = acc + f[k] * g[n - k] * Rational(static_cast<long>(k));
    g[n] = acc * Rational(1, static_cast<long>(n));
  }
  return g;
}

/// 1/f for f with constant term exactly 1.
template <class T>
PowerSeries<T> series_inverse(const PowerSeries<T>& f) {
  if (!(f[0] == T(1))) raise(ErrorKind::ConstantTermViolation, "series_inverse needs constant term 1");
  const std::size_t order = f.truncation_order();
  PowerSeries<T> g(order);
  g[0] = T(1);
  for (std::size_t n = 1; n <= order; ++n) {
    T acc(0);
    for (std::size_t k = 1; k <= n; ++k) acc = acc - f[k] * g[n - k];
    g[n] = acc;
  }
  return g;
}

template <class T>
PowerSeries<T> series_pow(const PowerSeries<T>& f, unsigned exponent) {
  PowerSeries<T> result = PowerSeries<T>::constant(f.truncation_order(), T(1));
  PowerSeries<T> base = f;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

}  // namespace capheat
