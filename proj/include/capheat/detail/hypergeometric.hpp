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

// Precision-generic building blocks shared by special_eval and the
// spectral oracle. Real is double or a fixed-precision
// boost::multiprecision MPFR number; everything is found by ADL.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <type_traits>
#include <utility>

#include <boost/math/constants/constants.hpp>

#include "capheat/error.hpp"

namespace capheat::detail {

template <class Real>
Real pi() {
  return boost::math::constants::pi<Real>();
}

template <class Real>
bool is_nonpositive_integer(const Real& x) {
  using std::floor;
  return x <= 0 && floor(x) == x;
}

template <class Real>
bool is_integer(const Real& x) {
  using std::floor;
  return floor(x) == x;
}

/// Gamma(x); throws Error(GammaPole) at x = 0, -1, -2, ...
template <class Real>
Real gamma(const Real& x) {
  using std::tgamma;
  if (is_nonpositive_integer(x))
    raise(ErrorKind::GammaPole, "Gamma evaluated at the pole " + std::to_string(static_cast<double>(x)));
  return tgamma(x);
}

/// 1/Gamma(x), continued by zero through the poles.
template <class Real>
Real rgamma(const Real& x) {
  using std::tgamma;
  if (is_nonpositive_integer(x)) return Real(0);
  return Real(1) / tgamma(x);
}

/// Compensated running sum.
template <class Real>
class KahanSum {
 public:
  void add(const Real& v) {
    const Real y = v - carry_;
    const Real t = sum_ + y;
    carry_ = (t - sum_) - y;
    sum_ = t;
  }
  const Real& value() const { return sum_; }

 private:
  Real sum_{0};
  Real carry_{0};
};

template <class Real>
struct SeriesResult {
  Real value;
  Real max_abs_term;
  std::size_t terms;
};

/// Ascending Gauss series sum_m (a)_m (b)_m / ((c)_m m!) x^m. Stops when a
/// term falls below tol * |sum| once the terms are past their maximum, or
/// exactly when a or b is a nonpositive integer.
template <class Real>
SeriesResult<Real> hyp2f1_series(const Real& a, const Real& b, const Real& c, const Real& x, const Real& tol,
                                 std::size_t max_terms) {
  using std::abs;
  using std::fabs;
  if (is_nonpositive_integer(c))
    raise(ErrorKind::ParameterPole, "2F1 with c a nonpositive integer");
  KahanSum<Real> sum;
  Real term(1);
  sum.add(term);
  Real max_term(1);
  // Past this index every term ratio has modulus below max(|x|, ...) < 1.
  const double threshold = std::max({std::fabs(static_cast<double>(a)), std::fabs(static_cast<double>(b)),
                                     std::fabs(static_cast<double>(c))}) + 1.0;
  for (std::size_t m = 0;; ++m) {
    if (m >= max_terms)
      raise(ErrorKind::NonConvergence, "2F1 series did not converge within " + std::to_string(max_terms) + " terms");
    const Real mm(static_cast<double>(m));
    const Real ratio = (a + mm) * (b + mm) / ((c + mm) * (mm + 1)) * x;
    term *= ratio;
    if (term == 0) return {sum.value(), max_term, m + 1};
    sum.add(term);
    const Real at = abs(term);
    if (at > max_term) max_term = at;
    if (static_cast<double>(m) <= threshold) continue;
    // Term ratios tend to x; bound the tail geometrically by the larger of
    // the current ratio and that limit.
    const Real r = std::max<Real>(abs(ratio), abs(x));
    if (r < 1 && at * r <= tol * (1 - r) * abs(sum.value())) return {sum.value(), max_term, m + 2};
  }
}

/// Tolerance and term budget for a given Real: the requested relative
/// tolerance for double, unit roundoff for extended types.
template <class Real>
Real series_tolerance(double requested) {
  if constexpr (std::is_same_v<Real, double>) {
    return requested;
  } else {
    return std::numeric_limits<Real>::epsilon();
  }
}

template <class Real>
std::size_t series_budget(std::size_t requested) {
  return std::max<std::size_t>(requested, 8 * static_cast<std::size_t>(std::numeric_limits<Real>::digits10));
}

/// Gauss 2F1(a, b; c; x) for x in [0, 1].
template <class Real>
Real gauss_2f1(Real a, Real b, const Real& c, const Real& x, double rel_tol, std::size_t max_terms) {
  using std::pow;
  if (is_nonpositive_integer(c)) raise(ErrorKind::ParameterPole, "2F1 with c a nonpositive integer");
  if (x < 0 || x > 1) raise(ErrorKind::DomainError, "2F1 argument outside [0, 1]");
  // One canonical order so that F(a,b) and F(b,a) run the identical code path.
  if (b < a) std::swap(a, b);
  const Real tol = series_tolerance<Real>(rel_tol);
  const std::size_t budget = series_budget<Real>(max_terms);
  if (x == 0) return Real(1);
  const bool terminating = is_nonpositive_integer(a) || is_nonpositive_integer(b);
  const Real excess = c - a - b;
  if (x == 1) {
    if (terminating && !(excess > 0)) return hyp2f1_series(a, b, c, x, tol, budget).value;
    if (!(excess > 0)) raise(ErrorKind::DivergentAtOne, "2F1 at x = 1 needs c - a - b > 0");
    return gamma(c) * gamma(excess) * rgamma(c - a) * rgamma(c - b);
  }
  if (terminating || x <= Real(0.5) || is_integer(excess)) return hyp2f1_series(a, b, c, x, tol, budget).value;
  // Connection to argument 1 - x.
  const Real y = Real(1) - x;
  const Real first = gamma(c) * gamma(excess) * rgamma(c - a) * rgamma(c - b);
  const Real second = gamma(c) * gamma(-excess) * rgamma(a) * rgamma(b);
  Real value(0);
  if (first != 0) value += first * hyp2f1_series(a, b, a + b - c + 1, y, tol, budget).value;
  if (second != 0) value += second * pow(y, excess) * hyp2f1_series(c - a, c - b, excess + 1, y, tol, budget).value;
  return value;
}

}  // namespace capheat::detail
