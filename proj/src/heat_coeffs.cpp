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

#include "capheat/heat_coeffs.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "capheat/error.hpp"
#include "capheat/sphere_base.hpp"

namespace capheat {

namespace {

std::vector<double> exponential_convolution(const std::vector<double>& in, double rate) {
  std::vector<double> out(in.size(), 0.0);
  for (std::size_t n = 0; n < in.size(); ++n) {
    double weight = 1.0;
    for (std::size_t k = 0; 2 * k <= n; ++k) {
      if (k > 0) weight *= rate / static_cast<double>(k);
      out[n] += weight * in[n - 2 * k];
    }
  }
  return out;
}

}  // namespace

int base_dimension(const BaseDescriptor& base) {
  return std::visit([](const auto& b) { return b.d; }, base);
}

double base_coefficient(const BaseDescriptor& base, int n) {
  if (n < 0) return 0.0;
  if (const auto* sphere = std::get_if<SphereBase>(&base)) return sphere_heat_coefficient(n, sphere->d);
  const auto& user = std::get<UserBase>(base);
  const auto it = user.coefficients.find(n);
  if (it == user.coefficients.end())
    raise(ErrorKind::InsufficientBaseData,
          "base coefficient A_{" + std::to_string(n) + "/2} was not supplied");
  return it->second;
}

void SuspensionConfig::validate() const {
  const int d_base = base_dimension(base);
  if (std::holds_alternative<SphereBase>(base) && d_base < 2)
    raise(ErrorKind::InvalidArgument, "sphere bases need d >= 2");
  if (d_base < 1) raise(ErrorKind::InvalidArgument, "base dimension must be at least 1");
  if (D != d_base + 1)
    raise(ErrorKind::InvalidArgument, "D = " + std::to_string(D) + " does not match base dimension d = " +
                                          std::to_string(d_base) + " (need D = d + 1)");
  if (n_max < 0) raise(ErrorKind::InvalidArgument, "max-n must be nonnegative");
  if (n_max >= D)
    raise(ErrorKind::IndexOutOfRange, "coefficients A_{n/2} are only available for n < D (requested n = " +
                                          std::to_string(n_max) + ", D = " + std::to_string(D) + ")");
  if (truncation < 1 || truncation < n_max - 1)
    raise(ErrorKind::InvalidArgument, "truncation order must be at least max(1, n_max - 1)");
  if (!(mass >= 0.0) || !std::isfinite(mass)) raise(ErrorKind::InvalidArgument, "mass must be a finite m >= 0");
  (void)AngleParams::from_radians(theta0.theta0);
  precision.validate();
  if (std::holds_alternative<UserBase>(base))
    for (int n = 0; n <= n_max; ++n) (void)base_coefficient(base, n);
}

double residue_to_coefficient(double s, double residue) {
  if (residue == 0.0 && !(s <= 0 && std::floor(s) == s)) return 0.0;
  return gamma(s) * residue;
}

HeatCoefficientAssembler::HeatCoefficientAssembler(SuspensionConfig cfg) : cfg_(std::move(cfg)) {
  cfg_.validate();
  structures_ = omega_structures(static_cast<unsigned>(cfg_.truncation));
}

double HeatCoefficientAssembler::script_A(int n) const {
  if (n < 0 || n >= cfg_.D)
    raise(ErrorKind::IndexOutOfRange, "A_{n/2} needs 0 <= n < D (n = " + std::to_string(n) + ")");
  if (n - 1 > cfg_.truncation)
    raise(ErrorKind::InsufficientBaseData, "Omega structures only reach order " + std::to_string(cfg_.truncation));
  const auto& angle = cfg_.theta0;
  const int dn = cfg_.D - n;
  const double sn = std::pow(angle.sin, dn);
  double value = sn / (2.0 * std::sqrt(M_PI) * dn) * c1(angle, dn, cfg_.precision) * base_coefficient(cfg_.base, n);
  value -= sn / 4.0 * base_coefficient(cfg_.base, n - 1);
  for (int i = 1; i <= n - 1; ++i) {
    const double a = base_coefficient(cfg_.base, n - i - 1);
    if (a == 0.0) continue;
    value -= sn * a * f_total(structures_[static_cast<std::size_t>(i)], angle, dn, cfg_.precision);
  }
  return value;
}

double assemble_script_A(const SuspensionConfig& cfg, int n) { return HeatCoefficientAssembler(cfg).script_A(n); }

std::vector<double> shift_to_pure_laplacian(const std::vector<double>& script_A, int d) {
  return exponential_convolution(script_A, d * d / 4.0);
}

std::vector<double> mass_shift(const std::vector<double>& coefficients, double mass) {
  if (mass == 0.0) return coefficients;
  return exponential_convolution(coefficients, -mass * mass);
}

std::optional<double> log_coefficient(const BaseDescriptor& base) {
  if (std::holds_alternative<SphereBase>(base)) return std::nullopt;
  const auto& user = std::get<UserBase>(base);
  if (!user.residue_at_minus_half)
    raise(ErrorKind::MissingResidue, "the log coefficient needs the base zeta residue at s = -1/2");
  return *user.residue_at_minus_half / 2.0;
}

CoefficientTable compute_table(const SuspensionConfig& cfg) {
  const HeatCoefficientAssembler assembler(cfg);
  std::vector<double> script(static_cast<std::size_t>(cfg.n_max) + 1);
  for (int n = 0; n <= cfg.n_max; ++n) script[static_cast<std::size_t>(n)] = assembler.script_A(n);
  std::vector<double> cal = shift_to_pure_laplacian(script, cfg.d());
  script = mass_shift(script, cfg.mass);
  cal = mass_shift(cal, cfg.mass);
  CoefficientTable table;
  for (int n = 0; n <= cfg.n_max; ++n)
    table.entries.push_back({n, script[static_cast<std::size_t>(n)], cal[static_cast<std::size_t>(n)]});
  const auto* user = std::get_if<UserBase>(&cfg.base);
  if (user != nullptr && user->residue_at_minus_half) table.log_coefficient = log_coefficient(cfg.base);
  return table;
}

}  // namespace capheat
