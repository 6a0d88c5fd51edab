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
#include <vector>

#include "capheat/error.hpp"
#include "capheat/spectral_oracle.hpp"
#include "doctest.h"

using capheat::AngleParams;

namespace {

template <class F>
capheat::ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const capheat::Error& e) {
    return e.kind();
  }
  FAIL("expected capheat::Error");
  return capheat::ErrorKind::InvalidArgument;
}

// P^{-1/2}_{omega-1/2}(cos theta) in closed form.
double ferrers_half(double omega, double theta) {
  return std::sqrt(2.0 / (M_PI * std::sin(theta))) * std::sin(omega * theta) / omega;
}

}  // namespace

TEST_CASE("Ferrers function against the mu = 1/2 closed form") {
  for (double th : {0.4, 1.0, 1.9})
    for (double w : {0.7, 3.3, 12.5, 41.0, 97.3}) {
      const double want = ferrers_half(w, th);
      const double got = capheat::ferrers_p(0.5, w, std::cos(th));
      INFO("theta = " << th << " omega = " << w << " digits " << capheat::ferrers_working_digits(0.5, w, std::cos(th)));
      CHECK(std::abs(got - want) <= 1e-12 * std::sqrt(2.0 / (M_PI * std::sin(th))) / w);
    }
  CHECK(capheat::ferrers_working_digits(0.5, 3.0, 0.5) == 0);
  CHECK(capheat::ferrers_working_digits(0.5, 97.3, std::cos(1.9)) >= 100);
}

TEST_CASE("Ferrers function symmetry and the x -> 1 limit") {
  for (double mu : {0.5, 2.5, 7.0})
    for (double w : {1.5, 9.25}) {
      CHECK(capheat::ferrers_p(mu, w, 0.3) == doctest::Approx(capheat::ferrers_p(mu, -w, 0.3)).epsilon(1e-13));
      const double x = 1 - 1e-9;
      const double lead = std::pow((1 - x) / (1 + x), mu / 2) / std::tgamma(1 + mu);
      CHECK(capheat::ferrers_p(mu, w, x) / lead == doctest::Approx(1.0).epsilon(1e-6));
    }
  CHECK(kind_of([] { (void)capheat::ferrers_p(1.5, 2.0, std::cos(2.6)); }) == capheat::ErrorKind::SlowConvergence);
  CHECK(kind_of([] { (void)capheat::ferrers_p(1.5, 2.0, 1.0); }) == capheat::ErrorKind::DomainError);
}

TEST_CASE("no root at omega = 0") {
  for (double th : {0.3, 1.0, M_PI / 2, 2.1})
    for (double mu : {0.5, 1.0, 1.5, 4.5, 12.5}) CHECK(capheat::ferrers_p(mu, 0.0, std::cos(th)) != 0.0);
}

TEST_CASE("hemisphere roots are mu + 3/2 + 2j") {
  const auto angle = AngleParams::from_radians(M_PI / 2);
  for (double mu : {0.5, 1.5, 2.5, 7.5, 30.5}) {
    const auto roots = capheat::dirichlet_roots(mu, angle, 81.0);
    REQUIRE(!roots.empty());
    for (std::size_t j = 0; j < roots.size(); ++j) CHECK(roots[j] == doctest::Approx(mu + 1.5 + 2.0 * j).epsilon(1e-10));
    CHECK(roots.back() > 81.0 - 2.0);
  }
  CHECK(std::abs(capheat::ferrers_p(1.5, 7.0, 0.0)) < 1e-14);
}

TEST_CASE("mu = 3/2 roots solve tan(omega theta0) = omega tan(theta0)") {
  for (double th : {0.5, 1.1, 2.0}) {
    const auto roots = capheat::dirichlet_roots(1.5, AngleParams::from_radians(th), 60.0);
    CHECK(std::abs(static_cast<double>(roots.size()) -
                   capheat::wkb_root_count(1.5, AngleParams::from_radians(th), 60.0)) <= 1.0);
    for (double w : roots) {
      const double g = std::cos(th) * std::sin(w * th) - w * std::sin(th) * std::cos(w * th);
      INFO("theta0 = " << th << " root " << w);
      CHECK(std::abs(g) <= 1e-8 * w);
    }
  }
}

TEST_CASE("mu = 1/2 roots are j pi / theta0") {
  const double th = 0.9;
  const auto roots = capheat::dirichlet_roots(0.5, AngleParams::from_radians(th), 100.0);
  REQUIRE(roots.size() == static_cast<std::size_t>(100.0 * th / M_PI));
  for (std::size_t j = 0; j < roots.size(); ++j) CHECK(roots[j] == doctest::Approx((j + 1) * M_PI / th).epsilon(1e-11));
}

TEST_CASE("hemisphere spectrum counts") {
  // Odd eigenfunctions of S^3: omega = l + 1 with multiplicity l (l + 1) / 2.
  const auto spectrum = capheat::build_spectrum(2, AngleParams::from_radians(M_PI / 2), {30.5, 1});
  std::int64_t want = 0;
  for (int w = 2; w <= 30; ++w) want += static_cast<std::int64_t>(w) * (w - 1) / 2;
  CHECK(spectrum.mode_count() == want);
  CHECK(spectrum.nonpositive_modes() == 0);

  const std::vector<double> ts{0.05, 0.1, 0.2};
  const auto trace = capheat::heat_trace(spectrum, ts, 1e-8);
  for (const auto& s : trace) {
    double exact = 0.0;
    for (int w = 2; w <= 30; ++w) exact += w * (w - 1) / 2.0 * std::exp(-(w * w - 1.0) * s.t);
    CHECK(s.value == doctest::Approx(exact).epsilon(1e-12));
  }
}

TEST_CASE("spectrum is independent of the thread count") {
  const auto angle = AngleParams::from_radians(1.2);
  const auto one = capheat::build_spectrum(3, angle, {25.0, 1});
  const auto three = capheat::build_spectrum(3, angle, {25.0, 3});
  REQUIRE(one.channels.size() == three.channels.size());
  for (std::size_t c = 0; c < one.channels.size(); ++c) CHECK(one.channels[c].roots == three.channels[c].roots);
}

TEST_CASE("doubling the cutoff leaves the certified trace unchanged") {
  const auto angle = AngleParams::from_radians(M_PI / 3);
  const auto low = capheat::build_spectrum(2, angle, {30.0, 1});
  const auto high = capheat::build_spectrum(2, angle, {60.0, 1});
  const double t_min = capheat::certified_t_min(2, angle, 30.0, 1e-9);
  const auto ts = capheat::geometric_grid(t_min, 10 * t_min, 6);
  const auto a = capheat::heat_trace(low, ts, 1e-9);
  const auto b = capheat::heat_trace(high, ts, 1e-9);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    CHECK(std::abs(a[i].value - b[i].value) <= a[i].tail_bound + 1e-12 * b[i].value);
    if (i > 0) CHECK(a[i].value < a[i - 1].value);
  }
  CHECK(kind_of([&] { (void)capheat::heat_trace(low, {t_min / 20}, 1e-9); }) == capheat::ErrorKind::TailTooLarge);
}

TEST_CASE("fitted volume term is stable under doubling the cutoff") {
  const auto angle = AngleParams::from_radians(M_PI / 3);
  std::vector<double> c0;
  for (double w : {40.0, 80.0}) {
    const auto spectrum = capheat::build_spectrum(2, angle, {w, 1});
    CHECK(spectrum.nonpositive_modes() == 0);
    const double t_min = capheat::certified_t_min(2, angle, w, 1e-10);
    const auto samples = capheat::heat_trace(spectrum, capheat::geometric_grid(t_min, 10 * t_min, 30), 1e-10);
    c0.push_back(capheat::fit_asymptotics(samples, 3, 4).coefficients[0]);
  }
  CHECK(std::abs(c0[1] - c0[0]) < 1e-3 * std::abs(c0[1]));
}

TEST_CASE("fit recovers synthetic coefficients") {
  const std::vector<double> c{0.3, -0.2, 0.11, 0.05, -0.02};
  std::vector<capheat::HeatTraceSample> samples;
  for (double t : capheat::geometric_grid(1e-3, 3e-2, 25)) {
    double v = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) v += c[k] * std::pow(t, (k - 3.0) / 2.0);
    samples.push_back({t, v, 0.0});
  }
  const auto fit = capheat::fit_asymptotics(samples, 3, 4);
  for (std::size_t k = 0; k < c.size(); ++k) CHECK(fit.coefficients[k] == doctest::Approx(c[k]).epsilon(1e-6));
  CHECK(fit.rms_residual < 1e-12);

  std::vector<capheat::HeatTraceSample> degenerate;
  for (int i = 0; i < 12; ++i) degenerate.push_back({i % 2 == 0 ? 0.01 : 0.1, 1.0, 0.0});
  CHECK(kind_of([&] { (void)capheat::fit_asymptotics(degenerate, 3, 4); }) == capheat::ErrorKind::IllConditioned);
  samples.resize(5);
  CHECK(kind_of([&] { (void)capheat::fit_asymptotics(samples, 3, 4); }) == capheat::ErrorKind::InvalidArgument);
}

TEST_CASE("oracle limits") {
  CHECK(kind_of([] { (void)capheat::dirichlet_roots(1.5, AngleParams::from_radians(2.4), 10.0); }) ==
        capheat::ErrorKind::SlowConvergence);
  CHECK(capheat::dirichlet_roots(20.0, AngleParams::from_radians(1.0), 15.0).empty());
  CHECK(capheat::certified_t_min(2, AngleParams::from_radians(1.0), 100.0, 1e-10) <
        capheat::certified_t_min(2, AngleParams::from_radians(1.0), 50.0, 1e-10));
}
