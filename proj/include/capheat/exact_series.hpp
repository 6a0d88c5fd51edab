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

#include <vector>

#include "capheat/nu_polynomial.hpp"
#include "capheat/power_series.hpp"
#include "capheat/rational.hpp"

namespace capheat {

/// Bernoulli number B_index with B_2 = 1/6 and B_1 = -1/2; odd indices
/// above one give zero. Computed with the Akiyama-Tanigawa transform.
Rational bernoulli(unsigned index);

/// Debye polynomial u_k(x) of the uniform large-order expansion of the
/// modified Bessel function I_nu(nu z), from u_0 = 1 and
///   u_{k+1} = x^2 (1 - x^2) u_k' / 2 + (1/8) int_0^x (1 - 5 t^2) u_k(t) dt.
/// Only the powers k, k+2, ..., 3k occur.
NuPolynomial u_polynomial(unsigned k);

/// u_0 .. u_{max_k}, sharing the recursion.
std::vector<NuPolynomial> u_polynomials(unsigned max_k);

/// Cumulant polynomials D_1 .. D_{max_i} defined by
///   ln(1 + sum_k u_k(x) / nu^k) = sum_n D_n(x) / nu^n.
/// Index 0 of the result is the zero polynomial.
std::vector<NuPolynomial> bessel_D_polynomials(unsigned max_i);

/// D_i(x) = sum_{b=0}^{i} x_{i,b} x^{i+2b}. Requires i >= 1.
NuPolynomial bessel_D_polynomial(unsigned i);

/// Coefficients D^{(power)}_nu, nu = 0..order, of
///   (y / sinh y)^power = sum_nu D^{(power)}_nu y^nu / nu!.
/// Odd entries vanish. Requires power >= 1.
std::vector<Rational> sinh_ratio_coefficients(unsigned power, unsigned order);

}  // namespace capheat
