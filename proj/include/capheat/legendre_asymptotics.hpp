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
#include <vector>

#include "capheat/nu_polynomial.hpp"
#include "capheat/rational.hpp"

namespace capheat {

/// Function of the form sum_j q^j P_j(nu) with q = 1/(1 + gamma^2) and
/// exact polynomials P_j. This is the shape taken by every coefficient in
/// the uniform large-mu expansion of the Ferrers function
/// P^{-mu}_{-1/2 + i mu w / sin(theta0)}(cos theta0), with
/// nu = cos(theta0)/sqrt(1+w^2) and gamma = w / sin(theta0).
///
/// Forms a commutative ring; trailing zero q-terms are trimmed.
class GammaStructuredFunction {
 public:
  GammaStructuredFunction() = default;
  GammaStructuredFunction(const Rational& constant);  // NOLINT(google-explicit-constructor)
  GammaStructuredFunction(int constant) : GammaStructuredFunction(Rational(constant)) {}  // NOLINT
  explicit GammaStructuredFunction(std::vector<NuPolynomial> terms);

  /// The function q = 1/(1 + gamma^2).
  static GammaStructuredFunction q();

  /// Polynomial multiplying q^j; zero past the last stored term.
  NuPolynomial term(std::size_t j) const;
  const std::vector<NuPolynomial>& terms() const { return terms_; }
  /// Highest power of q present, or -1 for the zero function.
  int q_degree() const { return static_cast<int>(terms_.size()) - 1; }

  /// d/dnu applied termwise.
  GammaStructuredFunction derivative_nu() const;
  /// nu -> int_1^nu f(nu') dnu', termwise.
  GammaStructuredFunction integral_from_one() const;

  /// Value at given nu and gamma; for checks and diagnostics.
  double evaluate(double nu, double gamma) const;

  GammaStructuredFunction& operator+=(const GammaStructuredFunction& rhs);
  GammaStructuredFunction& operator-=(const GammaStructuredFunction& rhs);
  GammaStructuredFunction& operator*=(const Rational& scalar);

  friend GammaStructuredFunction operator+(GammaStructuredFunction a, const GammaStructuredFunction& b) {
    return a += b;
  }
  friend GammaStructuredFunction operator-(GammaStructuredFunction a, const GammaStructuredFunction& b) {
    return a -= b;
  }
  friend GammaStructuredFunction operator*(const GammaStructuredFunction& a, const GammaStructuredFunction& b);
  friend GammaStructuredFunction operator*(GammaStructuredFunction a, const Rational& s) { return a *= s; }
  friend GammaStructuredFunction operator*(const Rational& s, GammaStructuredFunction a) { return a *= s; }

  friend bool operator==(const GammaStructuredFunction& a, const GammaStructuredFunction& b) = default;

 private:
  void trim();

  std::vector<NuPolynomial> terms_;
};

/// Which quadratic term the Phi recursion integrates. `Corrected` uses
/// (5 nu'^2 + 1/gamma^2 - 1), the form that reproduces the tabulated
/// Omega_n and degenerates to the Debye integrand (1 - 5 t^2) as
/// gamma -> infinity. `Printed` uses (5 nu' + 1/gamma^2 - 1) and exists
/// only to document that it does not.
enum class IntegrandVariant { Corrected, Printed };

/// chi(i) = (1 + (-1)^i)/2 - floor(i/2); lower end of the b-range of the
/// q-dependent part of Omega_i. Requires i >= 1.
int chi(int i);

/// Phi_0 .. Phi_{max_n} from Phi_0 = 1 and
///   Phi_{n+1} = (1-nu^2)(1+gamma^2 nu^2)/(2(1+gamma^2)) dPhi_n/dnu
///             - gamma^2/(8(1+gamma^2)) int_1^nu (5 nu'^2 + 1/gamma^2 - 1) Phi_n dnu'.
std::vector<GammaStructuredFunction> phi_functions(unsigned max_n,
                                                   IntegrandVariant variant = IntegrandVariant::Corrected);
GammaStructuredFunction phi(unsigned n, IntegrandVariant variant = IntegrandVariant::Corrected);

/// Psi_0 .. Psi_{max_n}:
///   sum_n Psi_n / mu^n = exp(-sum_l B_{2l} / (2l(2l-1) mu^{2l-1})) * sum_j Phi_j / mu^j.
std::vector<GammaStructuredFunction> psi_functions(unsigned max_n,
                                                   IntegrandVariant variant = IntegrandVariant::Corrected);

/// Omega_0 .. Omega_{max_order} (index 0 is the zero function) from the
/// cumulant expansion
///   -sum_l B_{2l}/(2l(2l-1) mu^{2l-1}) + ln(1 + sum_j Phi_j / mu^j) = sum_n Omega_n / mu^n.
std::vector<GammaStructuredFunction> omega(unsigned max_order,
                                           IntegrandVariant variant = IntegrandVariant::Corrected);

/// Coefficients of
///   Omega_i = sum_{b=0}^{i} x_{i,b} nu^{i+2b}
///           + sum_{j=1}^{i} q^j [ z0^{(i,j)} + sum_{b=chi(i)}^{i} z_{i,b,j} nu^{i+2b} ].
class StructuredOmega {
 public:
  explicit StructuredOmega(int order);

  int order() const { return order_; }
  int b_min() const { return chi(order_); }

  /// x_{i,b}, b in [0, i]
  const Rational& x(int b) const;
  /// z0^{(i,j)}, j in [1, i]
  const Rational& z0(int j) const;
  /// z_{i,b,j}, b in [chi(i), i], j in [1, i]
  const Rational& z(int b, int j) const;

  Rational& x(int b);
  Rational& z0(int j);
  Rational& z(int b, int j);

  /// Rebuilds Omega_i from the stored coefficients.
  GammaStructuredFunction reconstruct() const;

  friend bool operator==(const StructuredOmega&, const StructuredOmega&) = default;

 private:
  std::size_t z_index(int b, int j) const;

  int order_;
  std::vector<Rational> x_;
  std::vector<Rational> z0_;
  std::vector<Rational> z_;
};

/// Reads the coefficients of Omega_order. Throws Error(StructureViolation)
/// when a monomial outside the pattern above is present.
StructuredOmega extract_structure(int order, const GammaStructuredFunction& omega_i);

/// Structures for Omega_1 .. Omega_{max_order}; index 0 holds an empty
/// order-0 placeholder.
std::vector<StructuredOmega> omega_structures(unsigned max_order);

}  // namespace capheat
