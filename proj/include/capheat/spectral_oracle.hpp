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

#include <cstdint>
#include <vector>

#include "capheat/special_eval.hpp"

namespace capheat {

/// Ferrers function P^{-mu}_{-1/2+omega}(x) on -1 < x < 1 from
///   ((1-x)/(1+x))^{mu/2} / Gamma(1+mu) * 2F1(1/2-omega, 1/2+omega; 1+mu; (1-x)/2).
/// The series is summed in MPFR arithmetic with enough digits to absorb
/// its cancellation (terms peak near e^{2 omega sqrt((1-x)/2)}).
/// Throws Error(SlowConvergence) for (1-x)/2 > 0.9. The double result can
/// underflow for very large mu; dirichlet_roots works on the
/// hypergeometric factor instead.
double ferrers_p(double mu, double omega, double x);

/// The hypergeometric factor 2F1(1/2-omega, 1/2+omega; 1+mu; (1-x)/2),
/// which has the sign of ferrers_p.
double ferrers_hypergeometric_factor(double mu, double omega, double x);

/// Decimal digits used for a given evaluation (0 means double).
unsigned ferrers_working_digits(double mu, double omega, double x);

/// Roots of omega -> P^{-mu}_{-1/2+omega}(cos theta0) in (mu, omega_max]
/// (there are none in (0, mu]), bracketed on a grid of step pi/(4 theta0)
/// and refined to 1e-10. Gaps wider than 1.5 pi/theta0 are rescanned
/// finely; afterwards the count must agree with the WKB estimate to within
/// two, otherwise Error(MissedRootSuspicion).
/// Requires theta0 <= 2.2 (Error(SlowConvergence) otherwise).
std::vector<double> dirichlet_roots(double mu, const AngleParams& angle, double omega_max);

/// WKB estimate of the number of Dirichlet roots up to omega_max.
double wkb_root_count(double mu, const AngleParams& angle, double omega_max);

struct EigenvalueChannel {
  double mu;
  std::int64_t degeneracy;
  std::vector<double> roots;

  /// Eigenvalue of -Laplacian for the j-th root: omega^2 - d^2/4.
  double alpha_squared(std::size_t j, int d) const { return roots[j] * roots[j] - d * d / 4.0; }
};

struct OracleOptions {
  double omega_max = 60.0;
  /// Worker threads for channel construction; results do not depend on it.
  unsigned threads = 1;
};

/// Dirichlet spectrum of the cap over the unit S^d up to omega_max.
struct OracleSpectrum {
  int d;
  AngleParams angle;
  double omega_max;
  std::vector<EigenvalueChannel> channels;

  std::size_t distinct_roots() const;
  /// Eigenvalues counted with multiplicity.
  std::int64_t mode_count() const;
  /// Modes with omega^2 - d^2/4 <= 0.
  std::int64_t nonpositive_modes() const;
};

/// Channels mu = k + (d-1)/2 in increasing k, stopping at the first
/// channel without roots below omega_max.
OracleSpectrum build_spectrum(int d, const AngleParams& angle, const OracleOptions& options);

struct HeatTraceSample {
  double t;
  double value;
  double tail_bound;
};

/// Estimate of the heat trace contribution of modes above omega_max,
///   e^{d^2 t/4} 2 C t^{-D/2} Gamma(D/2 + 1, omega_max^2 t),
/// with C = vol / ((4 pi)^{D/2} Gamma(D/2 + 1)) the Weyl constant.
double tail_bound(int d, const AngleParams& angle, double omega_max, double t);

/// Smallest t whose tail bound stays below rel_tolerance / 4 times the
/// leading Weyl term of the trace. The factor leaves room for the negative
/// boundary term, which can pull the trace below the Weyl term.
double certified_t_min(int d, const AngleParams& angle, double omega_max, double rel_tolerance);

/// K(t) = sum deg e^{-(omega^2 - d^2/4) t} for each t. Throws
/// Error(TailTooLarge) when tail_bound exceeds rel_tolerance * K(t).
std::vector<HeatTraceSample> heat_trace(const OracleSpectrum& spectrum, const std::vector<double>& t_values,
                                        double rel_tolerance);

struct AsymptoticFit {
  /// c_k multiplying t^{(k-D)/2}, k = 0..n_fit.
  std::vector<double> coefficients;
  double condition_number;
  double rms_residual;
};

/// Least-squares fit of K(t) t^{D/2} against 1, t^{1/2}, ..., t^{n_fit/2}
/// with equilibrated columns. Requires n_fit <= 4, at least 3 n_fit
/// samples spanning a decade in t. Error(IllConditioned) when the
/// equilibrated condition number exceeds 1e8.
AsymptoticFit fit_asymptotics(const std::vector<HeatTraceSample>& samples, int D, int n_fit);

/// Geometric grid of `points` values from t_min to t_max inclusive.
std::vector<double> geometric_grid(double t_min, double t_max, int points);

}  // namespace capheat
