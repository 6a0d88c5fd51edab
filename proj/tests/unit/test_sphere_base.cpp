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

#include <cmath>

#include "capheat/error.hpp"
#include "capheat/exact_series.hpp"
#include "capheat/heat_coeffs.hpp"
#include "capheat/sphere_base.hpp"
#include "doctest.h"

using capheat::AngleParams;
using capheat::Rational;

namespace {

double binomial_d(int n, int k) { return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)); }

}  // namespace

TEST_CASE("degeneracy") {
  for (int d = 2; d <= 8; ++d) CHECK(capheat::degeneracy(0, d) == 1);
  for (int k = 0; k <= 50; ++k) {
    CHECK(capheat::degeneracy(k, 2) == 2 * k + 1);
    CHECK(capheat::degeneracy(k, 3) == (k + 1) * (k + 1));
  }
  CHECK_THROWS_AS(capheat::degeneracy(3, 1), capheat::Error);
  const auto spectrum = capheat::sphere_spectrum(3, 5);
  CHECK(spectrum.entries.size() == 6);
  CHECK(spectrum.entries[2].mu == 3.0);
  CHECK(spectrum.entries[2].degeneracy == 9);
}

TEST_CASE("sphere residues") {
  for (int d = 2; d <= 8; ++d) CHECK(capheat::sphere_residue(d, d) == Rational(1) / capheat::factorial(d - 1));
  CHECK(capheat::sphere_residue(2, 2) == Rational(1));
  CHECK(capheat::sphere_residue(2, 3).is_zero());
  CHECK_THROWS_AS(capheat::sphere_residue(1, 3), capheat::Error);
  CHECK_THROWS_AS(capheat::sphere_residue(4, 3), capheat::Error);
}

TEST_CASE("sphere heat coefficients") {
  CHECK(capheat::sphere_heat_coefficient(0, 2) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(capheat::sphere_heat_coefficient(1, 2) == 0.0);
  // (R/6 - 1/4) * (4 pi)^{-1} * 4 pi with R = 2
  CHECK(capheat::sphere_heat_coefficient(2, 2) == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
  for (int d = 2; d <= 7; ++d) {
    const double volume_term = capheat::sphere_area(d) / std::pow(4 * M_PI, d / 2.0);
    CHECK(capheat::sphere_heat_coefficient(0, d) == doctest::Approx(volume_term).epsilon(1e-14));
    for (int n = 1; n <= 9; n += 2) CHECK(capheat::sphere_heat_coefficient(n, d) == 0.0);
  }
  CHECK(capheat::sphere_area(2) == doctest::Approx(4 * M_PI));
  CHECK(capheat::sphere_area(3) == doctest::Approx(2 * M_PI * M_PI));
}

TEST_CASE("residue and heat coefficient dictionary") {
  for (int d = 2; d <= 9; ++d)
    for (int n = 0; n <= d - 2; ++n) {
      const double residue = capheat::sphere_residue(d - n, d).to_double();
      const double via_residue = capheat::residue_to_coefficient((d - n) / 2.0, residue);
      // Two-gamma form before the duplication formula is applied.
      const double two_gamma = (d - n - 1) *
                               capheat::sinh_ratio_coefficients(d - 1, n)[n].to_double() /
                               (std::pow(2.0, n) * std::tgamma(n + 1.0) * (d - 1) * std::tgamma(d - n)) *
                               std::tgamma((d - n) / 2.0);
      INFO("d=" << d << " n=" << n);
      CHECK(via_residue == doctest::Approx(capheat::sphere_heat_coefficient(n, d)).epsilon(1e-13));
      CHECK(two_gamma == doctest::Approx(capheat::sphere_heat_coefficient(n, d)).epsilon(1e-13));
    }
  CHECK(capheat::residue_to_coefficient(0.5, 2.0) == doctest::Approx(2.0 * std::sqrt(M_PI)));
  CHECK(capheat::residue_to_coefficient(1.5, 0.0) == 0.0);
  CHECK_THROWS_AS(capheat::residue_to_coefficient(-1.0, 1.0), capheat::Error);
}

TEST_CASE("sphere zeta function splits into two Barnes zeta functions") {
  for (int d : {2, 3}) {
    const double s = d / 2.0 + 2.0;
    double direct = 0.0;
    double barnes = 0.0;
    for (int k = 200000; k >= 0; --k) {
      direct += capheat::degeneracy(k, d) * std::pow(k + (d - 1) / 2.0, -2 * s);
      const double weight = binomial_d(k + d - 1, d - 1);
      barnes += weight * (std::pow(k + (d + 1) / 2.0, -2 * s) + std::pow(k + (d - 1) / 2.0, -2 * s));
    }
    CHECK(direct == doctest::Approx(barnes).epsilon(1e-8));
  }
}

TEST_CASE("direct sphere formula equals the generic assembly") {
  for (int d : {2, 3, 4}) {
    capheat::SuspensionConfig cfg;
    cfg.D = d + 1;
    cfg.base = capheat::SphereBase{d};
    cfg.theta0 = AngleParams::from_radians(0.8);
    cfg.n_max = d;
    const capheat::HeatCoefficientAssembler assembler(cfg);
    for (int n = 0; n <= d; ++n) {
      const double direct = capheat::suspension_coefficient_direct(n, d, cfg.theta0, assembler.structures());
      const double generic = assembler.script_A(n);
      INFO("d=" << d << " n=" << n);
      CHECK(std::abs(direct - generic) <= 1e-10 * std::max(1e-3, std::abs(generic)));
    }
  }
}

TEST_CASE("explicit table equals the generic pipeline") {
  for (int d : {2, 3, 4, 6, 7})
    for (double th : {0.6, 1.2}) {
      capheat::SuspensionConfig cfg;
      cfg.D = d + 1;
      cfg.base = capheat::SphereBase{d};
      cfg.theta0 = AngleParams::from_radians(th);
      cfg.n_max = std::min(d, 6);
      const auto table = capheat::compute_table(cfg);
      const capheat::HeatCoefficientAssembler assembler(cfg);
      for (int n = 0; n <= cfg.n_max; ++n) {
        const double got = capheat::explicit_table_check(n, d, cfg.theta0, assembler.structures());
        const double want = table.entries[n].cal_A;
        INFO("d=" << d << " theta0=" << th << " n=" << n);
        CHECK(std::abs(got - want) <= 1e-10 * std::max(1e-3, std::abs(want)));
      }
    }
}

TEST_CASE("scaled half-integer coefficient is -1/4") {
  for (int d : {2, 3, 5})
    for (double th : {0.3, 1.0, M_PI / 2, 2.0}) {
      const auto angle = AngleParams::from_radians(th);
      const double a = capheat::explicit_table_check(1, d, angle);
      const double scaled = std::pow(4 * M_PI, d / 2.0) / (std::pow(angle.sin, d) * capheat::sphere_area(d)) * a;
      CHECK(scaled == doctest::Approx(-0.25).epsilon(1e-13));
    }
}
