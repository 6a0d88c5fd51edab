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

#include "capheat/special_eval.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include <boost/multiprecision/mpfr.hpp>

#include "capheat/detail/hypergeometric.hpp"
#include "capheat/error.hpp"

namespace capheat {

namespace {

namespace mp = boost::multiprecision;
using mp50 = mp::number<mp::mpfr_float_backend<50>, mp::et_off>;
using mp100 = mp::number<mp::mpfr_float_backend<100>, mp::et_off>;
using mp200 = mp::number<mp::mpfr_float_backend<200>, mp::et_off>;

void require_positive(double D_minus_n) {
  if (!(D_minus_n > 0)) raise(ErrorKind::DomainError, "D - n must be positive");
}

template <class Real>
struct Trig {
  Real sin;
  Real cos;
};

template <class Real>
Trig<Real> trig(const AngleParams& angle) {
  if constexpr (std::is_same_v<Real, double>) {
    return {angle.sin, angle.cos};
  } else {
    using std::cos;
    using std::sin;
    const Real t(angle.theta0);
    return {sin(t), cos(t)};
  }
}

template <class Real>
Real to_real(const Rational& r) {
  if constexpr (std::is_same_v<Real, double>) {
    return r.to_double();
  } else {
    return Real(r.numerator().get_str()) / Real(r.denominator().get_str());
  }
}

template <class Real>
Real power_int(const Real& base, int exponent) {
  using std::pow;
  return pow(base, Real(exponent));
}

template <class Real>
Real c2_impl(const StructuredOmega& s, const Real& cos, const Real& D_minus_n) {
  const int i = s.order();
  const Real a = (D_minus_n + i) / 2;
  const Real ra = detail::rgamma(a);
  detail::KahanSum<Real> sum;
  for (int b = 0; b <= i; ++b) {
    if (s.x(b).is_zero()) continue;
    const Real x = to_real<Real>(s.x(b));
    const Real g = detail::gamma(Real(a + b)) * ra * detail::rgamma(Real(b + Real(i) / 2));
    sum.add(x * power_int(cos, i + 2 * b) * g);
  }
  return sum.value();
}

// Bracketed sums of c3 and c4 without the common sin^{n-D} factor.
template <class Real>
Real c3_bracket(const StructuredOmega& s, const Real& D_minus_n) {
  const int i = s.order();
  const Real a = (D_minus_n + i) / 2;
  const Real half_s = D_minus_n / 2;
  const Real ra = detail::rgamma(a);
  detail::KahanSum<Real> sum;
  for (int j = 1; j <= i; ++j) {
    if (s.z0(j).is_zero()) continue;
    const Real z0 = to_real<Real>(s.z0(j));
    sum.add(z0 * detail::gamma(Real(half_s + j)) * ra * detail::rgamma(Real(j)));
  }
  return sum.value();
}

template <class Real>
Real c4_bracket(const StructuredOmega& s, const Real& cos, const Real& D_minus_n, const EvalPrecision& prec) {
  const int i = s.order();
  const Real a = (D_minus_n + i) / 2;
  const Real half_s = D_minus_n / 2;
  const Real ra = detail::rgamma(a);
  const Real cos2 = cos * cos;
  detail::KahanSum<Real> sum;
  for (int j = 1; j <= i; ++j) {
    for (int b = s.b_min(); b <= i; ++b) {
      if (s.z(b, j).is_zero()) continue;
      const Real z = to_real<Real>(s.z(b, j));
      const Real beta = Real(b) + Real(i) / 2;
      const Real gam = beta + j;
      if (beta < Real(0.5) || gam < Real(1.5))
        raise(ErrorKind::StructureViolation, "c4 hypergeometric parameters outside the safe range");
      const Real f = detail::gauss_2f1(Real(-half_s), beta, gam, cos2, prec.rel_tol, prec.max_terms);
      sum.add(z * power_int(cos, i + 2 * b) * detail::gamma(Real(a + b + j)) * ra * detail::rgamma(gam) * f);
    }
  }
  return sum.value();
}

template <class Real>
double c34_in(const StructuredOmega& s, const AngleParams& angle, double D_minus_n, const EvalPrecision& prec) {
  using std::pow;
  const auto t = trig<Real>(angle);
  const Real dn(D_minus_n);
  const Real bracket = c3_bracket<Real>(s, dn) + c4_bracket<Real>(s, t.cos, dn, prec);
  return static_cast<double>(bracket / pow(t.sin, dn));
}

}  // namespace

AngleParams AngleParams::from_radians(double theta0) {
  if (!(theta0 > 0.0 && theta0 < M_PI))
    raise(ErrorKind::DomainError, "theta0 must lie strictly between 0 and pi");
  const double s = std::sin(theta0);
  const double c = std::cos(theta0);
  return {theta0, s, c, s * s, c * c};
}

AngleParams AngleParams::from_degrees(double degrees) { return from_radians(degrees * M_PI / 180.0); }

void EvalPrecision::validate() const {
  if (!(rel_tol > 0.0 && rel_tol <= 1e-6))
    raise(ErrorKind::InvalidArgument, "relative tolerance must lie in (0, 1e-6]");
  if (max_terms < 1000) raise(ErrorKind::InvalidArgument, "max_terms must be at least 1000");
}

EvalPrecision EvalPrecision::from_environment() {
  EvalPrecision p;
  if (const char* env = std::getenv("CAPHEAT_REL_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0') raise(ErrorKind::InvalidArgument, "CAPHEAT_REL_TOL is not a number");
    p.rel_tol = v;
  }
  p.validate();
  return p;
}

double gamma(double x) { return detail::gamma(x); }

double rgamma(double x) { return detail::rgamma(x); }

double pochhammer(double a, double k) {
  if (k >= 0 && std::floor(k) == k && k <= 64) {
    double p = 1.0;
    for (int m = 0; m < static_cast<int>(k); ++m) p *= a + m;
    return p;
  }
  return detail::gamma(a + k) * detail::rgamma(a);
}

double gauss_2f1(double a, double b, double c, double x, const EvalPrecision& prec) {
  prec.validate();
  return detail::gauss_2f1(a, b, c, x, prec.rel_tol, prec.max_terms);
}

double c1(const AngleParams& angle, double two_s, const EvalPrecision& prec) {
  if (!(two_s > 0)) raise(ErrorKind::DomainError, "c1 needs two_s > 0");
  const double s = two_s / 2;
  const double principal = gauss_2f1(0.5, s, s + 1, angle.sin2, prec);
  if (angle.theta0 <= M_PI / 2) return principal;
  // 2s sin^{-2s} int_0^theta0 sin^{2s-1} continued past the equator.
  const double equator = std::exp(std::lgamma(s + 1) - std::lgamma(s + 0.5)) * std::sqrt(M_PI);
  return 2.0 * equator / std::pow(angle.sin, two_s) - principal;
}

double c2(const StructuredOmega& s, const AngleParams& angle, double D_minus_n) {
  require_positive(D_minus_n);
  return c2_impl<double>(s, angle.cos, D_minus_n);
}

double c3(const StructuredOmega& s, const AngleParams& angle, double D_minus_n) {
  require_positive(D_minus_n);
  return c3_bracket<double>(s, D_minus_n) / std::pow(angle.sin, D_minus_n);
}

double c4(const StructuredOmega& s, const AngleParams& angle, double D_minus_n, const EvalPrecision& prec) {
  require_positive(D_minus_n);
  prec.validate();
  return c4_bracket<double>(s, angle.cos, D_minus_n, prec) / std::pow(angle.sin, D_minus_n);
}

unsigned f_total_working_digits(const AngleParams& angle, double D_minus_n) {
  const double lost = D_minus_n * -std::log10(angle.sin);
  if (lost < 1.0) return 0;
  if (lost < 30.0) return 50;
  if (lost < 80.0) return 100;
  if (lost < 180.0) return 200;
  raise(ErrorKind::NonConvergence,
        "c3 + c4 cancel by more than 180 digits; theta0 is too small for this D - n");
}

double f_total(const StructuredOmega& s, const AngleParams& angle, double D_minus_n, const EvalPrecision& prec) {
  require_positive(D_minus_n);
  prec.validate();
  const double head = c2_impl<double>(s, angle.cos, D_minus_n);
  double tail = 0.0;
  switch (f_total_working_digits(angle, D_minus_n)) {
    case 0:
      tail = c34_in<double>(s, angle, D_minus_n, prec);
      break;
    case 50:
      tail = c34_in<mp50>(s, angle, D_minus_n, prec);
      break;
    case 100:
      tail = c34_in<mp100>(s, angle, D_minus_n, prec);
      break;
    default:
      tail = c34_in<mp200>(s, angle, D_minus_n, prec);
      break;
  }
  return head + tail;
}

double f_cone_limit(const StructuredOmega& s, double D_minus_n) {
  require_positive(D_minus_n);
  return c2_impl<double>(s, 1.0, D_minus_n);
}

}  // namespace capheat
