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

#include "capheat/legendre_asymptotics.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "capheat/error.hpp"
#include "capheat/exact_series.hpp"
#include "capheat/power_series.hpp"

namespace capheat {

GammaStructuredFunction::GammaStructuredFunction(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace_back(constant);
}

GammaStructuredFunction::GammaStructuredFunction(std::vector<NuPolynomial> terms) : terms_(std::move(terms)) {
  trim();
}

GammaStructuredFunction GammaStructuredFunction::q() {
  return GammaStructuredFunction(std::vector<NuPolynomial>{NuPolynomial(), NuPolynomial(1)});
}

void GammaStructuredFunction::trim() {
  while (!terms_.empty() && terms_.back().is_zero()) terms_.pop_back();
}

NuPolynomial GammaStructuredFunction::term(std::size_t j) const {
  return j < terms_.size() ? terms_[j] : NuPolynomial();
}

GammaStructuredFunction GammaStructuredFunction::derivative_nu() const {
  std::vector<NuPolynomial> out;
  out.reserve(terms_.size());
  for (const auto& p : terms_) out.push_back(p.derivative());
  return GammaStructuredFunction(std::move(out));
}

GammaStructuredFunction GammaStructuredFunction::integral_from_one() const {
  std::vector<NuPolynomial> out;
  out.reserve(terms_.size());
  for (const auto& p : terms_) out.push_back(p.integral_from(Rational(1)));
  return GammaStructuredFunction(std::move(out));
}

double GammaStructuredFunction::evaluate(double nu, double gamma) const {
  const double q = 1.0 / (1.0 + gamma * gamma);
  double acc = 0.0;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) acc = acc * q + it->evaluate(nu);
  return acc;
}

GammaStructuredFunction& GammaStructuredFunction::operator+=(const GammaStructuredFunction& rhs) {
  if (rhs.terms_.size() > terms_.size()) terms_.resize(rhs.terms_.size());
  for (std::size_t j = 0; j < rhs.terms_.size(); ++j) terms_[j] += rhs.terms_[j];
  trim();
  return *this;
}

GammaStructuredFunction& GammaStructuredFunction::operator-=(const GammaStructuredFunction& rhs) {
  if (rhs.terms_.size() > terms_.size()) terms_.resize(rhs.terms_.size());
  for (std::size_t j = 0; j < rhs.terms_.size(); ++j) terms_[j] -= rhs.terms_[j];
  trim();
  return *this;
}

GammaStructuredFunction& GammaStructuredFunction::operator*=(const Rational& scalar) {
  for (auto& p : terms_) p *= scalar;
  trim();
  return *this;
}

GammaStructuredFunction operator*(const GammaStructuredFunction& a, const GammaStructuredFunction& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  std::vector<NuPolynomial> out(a.terms_.size() + b.terms_.size() - 1);
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.terms_.size(); ++j) out[i + j] += a.terms_[i] * b.terms_[j];
  }
  return GammaStructuredFunction(std::move(out));
}

int chi(int i) {
  if (i < 1) raise(ErrorKind::InvalidArgument, "chi(i) needs i >= 1");
  return (i % 2 == 0 ? 1 : 0) - i / 2;
}

namespace {

// In terms of q = 1/(1+gamma^2):
//   (1-nu^2)(1+gamma^2 nu^2)/(2(1+gamma^2)) = (1-nu^2) nu^2 / 2 + q (1-nu^2)^2 / 2
//   gamma^2/(1+gamma^2) (5 nu^p + 1/gamma^2 - 1) = (5 nu^p - 1) + q (2 - 5 nu^p)
struct PhiRecursionFactors {
  GammaStructuredFunction derivative_factor;
  GammaStructuredFunction integrand_factor;
};

PhiRecursionFactors phi_factors(IntegrandVariant variant) {
  const NuPolynomial one_minus_nu2{1, 0, -1};
  const NuPolynomial nu2{0, 0, 1};
  const std::size_t power = variant == IntegrandVariant::Corrected ? 2 : 1;
  const NuPolynomial five_nu_p = NuPolynomial::monomial(Rational(5), power);
  PhiRecursionFactors f;
  f.derivative_factor = GammaStructuredFunction(std::vector<NuPolynomial>{
      Rational(1, 2) * (one_minus_nu2 * nu2), Rational(1, 2) * (one_minus_nu2 * one_minus_nu2)});
  f.integrand_factor = GammaStructuredFunction(
      std::vector<NuPolynomial>{five_nu_p - NuPolynomial(1), NuPolynomial(2) - five_nu_p});
  return f;
}

// -sum_{l>=1} B_{2l} / (2l(2l-1)) y^{2l-1}, truncated at `order`.
PowerSeries<GammaStructuredFunction> stirling_series(unsigned order) {
  PowerSeries<GammaStructuredFunction> s(order);
  for (unsigned l = 1; 2 * l - 1 <= order; ++l) {
    const long two_l = 2L * l;
    s[2 * l - 1] = GammaStructuredFunction(-bernoulli(2 * l) / Rational(two_l * (two_l - 1)));
  }
  return s;
}

PowerSeries<GammaStructuredFunction> phi_series(unsigned order, IntegrandVariant variant) {
  return PowerSeries<GammaStructuredFunction>(order, phi_functions(order, variant));
}

}  // namespace

std::vector<GammaStructuredFunction> phi_functions(unsigned max_n, IntegrandVariant variant) {
  const auto factors = phi_factors(variant);
  std::vector<GammaStructuredFunction> out{GammaStructuredFunction(1)};
  out.reserve(max_n + 1);
  for (unsigned n = 0; n < max_n; ++n) {
    const auto& prev = out.back();
    GammaStructuredFunction next = factors.derivative_factor * prev.derivative_nu() -
                                   Rational(1, 8) * (factors.integrand_factor * prev).integral_from_one();
    out.push_back(std::move(next));
  }
  return out;
}

GammaStructuredFunction phi(unsigned n, IntegrandVariant variant) { return phi_functions(n, variant).back(); }

std::vector<GammaStructuredFunction> psi_functions(unsigned max_n, IntegrandVariant variant) {
  const auto psi = series_exp(stirling_series(max_n)) * phi_series(max_n, variant);
  return psi.coefficients();
}

std::vector<GammaStructuredFunction> omega(unsigned max_order, IntegrandVariant variant) {
  const auto total = stirling_series(max_order) + series_log(phi_series(max_order, variant));
  return total.coefficients();
}

StructuredOmega::StructuredOmega(int order) : order_(order) {
  if (order < 0) raise(ErrorKind::InvalidArgument, "negative Omega order");
  x_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
  if (order >= 1) {
    z0_.assign(static_cast<std::size_t>(order), Rational(0));
    z_.assign(static_cast<std::size_t>(order - chi(order) + 1) * static_cast<std::size_t>(order), Rational(0));
  }
}

std::size_t StructuredOmega::z_index(int b, int j) const {
  if (order_ < 1 || b < chi(order_) || b > order_ || j < 1 || j > order_)
    raise(ErrorKind::IndexOutOfRange, "z(b=" + std::to_string(b) + ", j=" + std::to_string(j) +
                                          ") outside the pattern of Omega_" + std::to_string(order_));
  return static_cast<std::size_t>(b - chi(order_)) * static_cast<std::size_t>(order_) +
         static_cast<std::size_t>(j - 1);
}

const Rational& StructuredOmega::x(int b) const {
  if (b < 0 || b > order_) raise(ErrorKind::IndexOutOfRange, "x(b) needs 0 <= b <= i");
  return x_[static_cast<std::size_t>(b)];
}

Rational& StructuredOmega::x(int b) {
  return const_cast<Rational&>(static_cast<const StructuredOmega&>(*this).x(b));
}

const Rational& StructuredOmega::z0(int j) const {
  if (j < 1 || j > order_) raise(ErrorKind::IndexOutOfRange, "z0(j) needs 1 <= j <= i");
  return z0_[static_cast<std::size_t>(j - 1)];
}

Rational& StructuredOmega::z0(int j) {
  return const_cast<Rational&>(static_cast<const StructuredOmega&>(*this).z0(j));
}

const Rational& StructuredOmega::z(int b, int j) const { return z_[z_index(b, j)]; }

Rational& StructuredOmega::z(int b, int j) { return z_[z_index(b, j)]; }

GammaStructuredFunction StructuredOmega::reconstruct() const {
  std::vector<NuPolynomial> terms(static_cast<std::size_t>(order_) + 1);
  for (int b = 0; b <= order_; ++b)
    terms[0] += NuPolynomial::monomial(x(b), static_cast<std::size_t>(order_ + 2 * b));
  for (int j = 1; j <= order_; ++j) {
    NuPolynomial p(z0(j));
    for (int b = chi(order_); b <= order_; ++b)
      p += NuPolynomial::monomial(z(b, j), static_cast<std::size_t>(order_ + 2 * b));
    terms[static_cast<std::size_t>(j)] = std::move(p);
  }
  return GammaStructuredFunction(std::move(terms));
}

StructuredOmega extract_structure(int order, const GammaStructuredFunction& omega_i) {
  if (order < 1) raise(ErrorKind::InvalidArgument, "extract_structure needs order >= 1");
  StructuredOmega s(order);
  const auto violation = [order](std::size_t j, std::size_t k) {
    raise(ErrorKind::StructureViolation, "Omega_" + std::to_string(order) + " has a q^" + std::to_string(j) +
                                             " nu^" + std::to_string(k) + " term outside the expected pattern");
  };
  if (omega_i.q_degree() > order) violation(static_cast<std::size_t>(omega_i.q_degree()), 0);
  for (std::size_t j = 0; j < omega_i.terms().size(); ++j) {
    const auto& coeffs = omega_i.terms()[j].coefficients();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k].is_zero()) continue;
      const int power = static_cast<int>(k);
      if (j >= 1 && power == 0) {
        s.z0(static_cast<int>(j)) = coeffs[k];
        continue;
      }
      if ((power - order) % 2 != 0) violation(j, k);
      const int b = (power - order) / 2;
      const int lower = j == 0 ? 0 : chi(order);
      if (b < lower || b > order) violation(j, k);
      if (j == 0)
        s.x(b) = coeffs[k];
      else
        s.z(b, static_cast<int>(j)) = coeffs[k];
    }
  }
  return s;
}

std::vector<StructuredOmega> omega_structures(unsigned max_order) {
  const auto omegas = omega(max_order);
  std::vector<StructuredOmega> out;
  out.reserve(max_order + 1);
  out.emplace_back(0);
  for (unsigned i = 1; i <= max_order; ++i) out.push_back(extract_structure(static_cast<int>(i), omegas[i]));
  return out;
}

}  // namespace capheat
