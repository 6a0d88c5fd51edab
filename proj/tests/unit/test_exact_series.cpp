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

#include <vector>

#include "capheat/error.hpp"
#include "capheat/exact_series.hpp"
#include "capheat/nu_polynomial.hpp"
#include "capheat/power_series.hpp"
#include "capheat/rational.hpp"
#include "doctest.h"

using capheat::NuPolynomial;
using capheat::PowerSeries;
using capheat::Rational;

namespace {

// sum_{k=0}^{m} C(m+1, k) B_k = 0, which fixes B_1 = -1/2.
std::vector<Rational> bernoulli_by_recurrence(unsigned max_index) {
  std::vector<Rational> b{Rational(1)};
  for (unsigned m = 1; m <= max_index; ++m) {
    Rational acc(0);
    for (unsigned k = 0; k < m; ++k) acc += capheat::binomial(m + 1, k) * b[k];
    b.push_back(-acc / Rational(static_cast<long>(m) + 1));
  }
  return b;
}

}  // namespace

TEST_CASE("rational arithmetic stays canonical") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(6, -4).denominator() == 2);
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("7").is_integer());
  CHECK((Rational(1, 3) + Rational(1, 6)).to_string() == "1/2");
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), capheat::Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), capheat::Error);
  CHECK_THROWS_AS(Rational::parse("1/x"), capheat::Error);
  CHECK(capheat::factorial(10) == Rational(3628800));
  CHECK(capheat::binomial(10, 3) == Rational(120));
}

TEST_CASE("bernoulli numbers agree with the binomial recurrence") {
  const auto oracle = bernoulli_by_recurrence(40);
  for (unsigned n = 0; n <= 40; ++n) CHECK(capheat::bernoulli(n) == oracle[n]);
  CHECK(capheat::bernoulli(2) == Rational(1, 6));
  CHECK(capheat::bernoulli(12) == Rational(-691, 2730));
  CHECK(capheat::bernoulli(7) == Rational(0));
}

TEST_CASE("power series log and exp are inverse") {
  PowerSeries<Rational> f(8);
  f[0] = 1;
  f[1] = Rational(1, 3);
  f[2] = Rational(-2, 5);
  f[5] = Rational(7);
  const auto g = capheat::series_log(f);
  CHECK(capheat::series_exp(g) == f);
  CHECK(capheat::series_inverse(f) * f == PowerSeries<Rational>::constant(8, 1));
  CHECK(capheat::series_pow(f, 3) == f * f * f);
}

TEST_CASE("power series guards") {
  PowerSeries<Rational> f(4);
  f[0] = 2;
  CHECK_THROWS_AS(capheat::series_log(f), capheat::Error);
  CHECK_THROWS_AS(capheat::series_exp(f), capheat::Error);
  CHECK_THROWS_AS(capheat::series_inverse(f), capheat::Error);
  try {
    (void)(f + PowerSeries<Rational>(5));
    FAIL("expected a truncation mismatch");
  } catch (const capheat::Error& e) {
    CHECK(e.kind() == capheat::ErrorKind::TruncationMismatch);
  }
}

TEST_CASE("nu polynomial calculus") {
  const NuPolynomial p{1, 2, 3};
  CHECK(p.derivative() == NuPolynomial{2, 6});
  CHECK(p.antiderivative() == NuPolynomial{0, 1, 1, 1});
  CHECK(p.integral_from(Rational(1)).evaluate(Rational(1)) == Rational(0));
  CHECK(p.evaluate(Rational(2)) == Rational(17));
  CHECK(p.evaluate(0.5) == doctest::Approx(2.75));
  CHECK((p - p).is_zero());
  CHECK((p * NuPolynomial{0, 1}).degree() == 3);
}

TEST_CASE("debye polynomials") {
  CHECK(capheat::u_polynomial(1) == Rational(1, 24) * NuPolynomial{0, 3, 0, -5});
  CHECK(capheat::u_polynomial(2) == Rational(1, 1152) * NuPolynomial{0, 0, 81, 0, -462, 0, 385});
  // u_k only carries the powers k, k+2, ..., 3k.
  const auto u = capheat::u_polynomials(8);
  for (unsigned k = 1; k <= 8; ++k) {
    CHECK(u[k].degree() == static_cast<int>(3 * k));
    for (unsigned p = 0; p < u[k].coefficients().size(); ++p)
      if (p < k || (p - k) % 2 == 1) CHECK(u[k].coefficient(p).is_zero());
  }
}

TEST_CASE("bessel D polynomials are the cumulants of the Debye series") {
  const auto d = capheat::bessel_D_polynomials(8);
  CHECK(d[0].is_zero());
  CHECK(d[1].evaluate(Rational(1)) == Rational(-1, 12));
  CHECK(d[1] == NuPolynomial{0, Rational(1, 8), 0, Rational(-5, 24)});
  CHECK(d[2] == NuPolynomial{0, 0, Rational(1, 16), 0, Rational(-3, 8), 0, Rational(5, 16)});
  // Recombine: exp(sum D_n y^n) == sum u_k y^k.
  const PowerSeries<NuPolynomial> cumulants(8, d);
  const auto u = capheat::u_polynomials(8);
  CHECK(capheat::series_exp(cumulants) == PowerSeries<NuPolynomial>(8, u));
  for (unsigned i = 1; i <= 8; ++i) {
    CHECK(d[i].degree() == static_cast<int>(3 * i));
    for (unsigned p = 0; p < i; ++p) CHECK(d[i].coefficient(p).is_zero());
  }
  CHECK_THROWS_AS(capheat::bessel_D_polynomial(0), capheat::Error);
}

TEST_CASE("(y/sinh y)^p coefficients") {
  const auto b = bernoulli_by_recurrence(20);
  const auto c1 = capheat::sinh_ratio_coefficients(1, 20);
  // y/sinh y = sum (2 - 2^{2k}) B_{2k} y^{2k} / (2k)!
  for (unsigned k = 0; 2 * k <= 20; ++k) {
    const Rational two_pow = capheat::pow(Rational(2), 2 * k);
    CHECK(c1[2 * k] == (Rational(2) - two_pow) * b[2 * k]);
    if (2 * k + 1 <= 20) CHECK(c1[2 * k + 1].is_zero());
  }
  const auto c3 = capheat::sinh_ratio_coefficients(3, 4);
  CHECK(c3[0] == Rational(1));
  CHECK(c3[2] == Rational(-1));  // 3 * (-1/6) * 2!
  CHECK(c3[4] == Rational(17, 5));  // 4! * (3 * 7/360 + 3/36)
  CHECK_THROWS_AS(capheat::sinh_ratio_coefficients(0, 4), capheat::Error);
}

TEST_CASE("(y/sinh y)^(p+q) is the binomial convolution of the p and q coefficients") {
  const unsigned order = 12;
  for (unsigned p = 1; p <= 3; ++p)
    for (unsigned q = 1; q <= 4; ++q) {
      const auto a = capheat::sinh_ratio_coefficients(p, order);
      const auto b = capheat::sinh_ratio_coefficients(q, order);
      const auto c = capheat::sinh_ratio_coefficients(p + q, order);
      for (unsigned nu = 0; nu <= order; ++nu) {
        Rational sum;
        for (unsigned k = 0; k <= nu; ++k)
          sum += capheat::factorial(nu) / (capheat::factorial(k) * capheat::factorial(nu - k)) * a[k] * b[nu - k];
        CHECK(sum == c[nu]);
      }
    }
}
