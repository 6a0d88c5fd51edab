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

#include "capheat/spectral_oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/tools/roots.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include "capheat/detail/hypergeometric.hpp"
#include "capheat/error.hpp"
#include "capheat/kernels.hpp"
#include "capheat/sphere_base.hpp"

namespace capheat {

namespace {

namespace mp = boost::multiprecision;
template <unsigned Digits>
using mpfr = mp::number<mp::mpfr_float_backend<Digits>, mp::et_off>;

constexpr double kMaxSeriesArgument = 0.9;
constexpr double kMaxTheta0 = 2.2;
constexpr double kRootTolerance = 1e-10;

double series_argument(double x) {
  if (!(x > -1.0 && x < 1.0)) raise(ErrorKind::DomainError, "Ferrers argument must lie in (-1, 1)");
  const double z = (1.0 - x) / 2.0;
  if (z > kMaxSeriesArgument)
    raise(ErrorKind::SlowConvergence, "Ferrers series argument (1-x)/2 = " + std::to_string(z) + " exceeds 0.9");
  return z;
}

// log10 of the largest term of the Gauss series for the Ferrers function.
double peak_log10(double mu, double omega, double z) {
  const double a = 0.5 - omega;
  const double b = 0.5 + omega;
  const double c = 1.0 + mu;
  const double limit = std::abs(omega) + 2.0;
  double log_term = 0.0;
  double peak = 0.0;
  for (int m = 0;; ++m) {
    const double ratio = (a + m) * (b + m) / ((c + m) * (m + 1.0)) * z;
    if (ratio == 0.0) break;
    log_term += std::log(std::abs(ratio));
    peak = std::max(peak, log_term);
    if (m > limit && std::abs(ratio) < 1.0) break;
  }
  return peak / std::log(10.0);
}

template <class Real>
double hypergeometric_factor(double mu, double omega, double x) {
  const Real z = (Real(1) - Real(x)) / 2;
  const Real a = Real(0.5) - Real(omega);
  const Real b = Real(0.5) + Real(omega);
  const Real c = Real(1) + Real(mu);
  const auto r = detail::hyp2f1_series<Real>(a, b, c, z, detail::series_tolerance<Real>(1e-15),
                                             detail::series_budget<Real>(200000));
  return static_cast<double>(r.value);
}

constexpr unsigned kTiers[] = {50, 100, 200, 400, 800};

// Digits for a series whose largest term is 10^peak when the value itself
// may sit `extra` decades below one.
unsigned tier_for(double peak, double extra) {
  if (peak + extra < 2.0) return 0;
  const double digits = peak + extra + 25.0;
  for (unsigned tier : kTiers)
    if (digits <= tier) return tier;
  raise(ErrorKind::NonConvergence, "Ferrers series cancellation exceeds 800 digits; lower omega");
}

double evaluate_in(unsigned tier, double mu, double omega, double x) {
  switch (tier) {
    case 0:
      return hypergeometric_factor<double>(mu, omega, x);
    case 50:
      return hypergeometric_factor<mpfr<50>>(mu, omega, x);
    case 100:
      return hypergeometric_factor<mpfr<100>>(mu, omega, x);
    case 200:
      return hypergeometric_factor<mpfr<200>>(mu, omega, x);
    case 400:
      return hypergeometric_factor<mpfr<400>>(mu, omega, x);
    default:
      return hypergeometric_factor<mpfr<800>>(mu, omega, x);
  }
}

struct Sample {
  double omega;
  double value;
  // Decimal digits left after cancellation: working digits - log10(peak term).
  double headroom;
  double peak;
};

// Evaluates the factor for one channel with a fixed allowance of `extra`
// digits for the value being small compared with one.
class ChannelEvaluator {
 public:
  ChannelEvaluator(double mu, double x, double extra) : mu_(mu), x_(x), z_(series_argument(x)), extra_(extra) {}

  Sample operator()(double omega) const {
    const double peak = peak_log10(mu_, omega, z_);
    const unsigned tier = tier_for(peak, extra_);
    return {omega, evaluate_in(tier, mu_, omega, x_), (tier == 0 ? 16.0 : tier) - peak, peak};
  }

  double value(double omega) const { return (*this)(omega).value; }

 private:
  double mu_;
  double x_;
  double z_;
  double extra_;
};

double refine_root(const ChannelEvaluator& eval, const Sample& lo, const Sample& hi) {
  const auto f = [&](double w) { return eval.value(w); };
  const auto tol = [](double a, double b) { return std::abs(b - a) <= kRootTolerance; };
  std::uintmax_t iterations = 200;
  const auto bracket = boost::math::tools::toms748_solve(f, lo.omega, hi.omega, lo.value, hi.value, tol, iterations);
  return 0.5 * (bracket.first + bracket.second);
}

std::vector<Sample> sample_grid(const ChannelEvaluator& eval, double lo, double hi, double step) {
  std::vector<Sample> grid{eval(lo)};
  for (double w = lo; w < hi;) {
    w = std::min(w + step, hi);
    grid.push_back(eval(w));
  }
  return grid;
}

// Largest shortfall, in digits, between the cancellation allowed for and the
// cancellation seen. The local scale is the largest value within a full
// oscillation (eight grid steps), so points next to roots do not count.
double digit_shortfall(const std::vector<Sample>& grid) {
  double shortfall = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double scale = 0.0;
    const std::size_t first = i >= 4 ? i - 4 : 0;
    for (std::size_t j = first; j < std::min(grid.size(), i + 5); ++j) scale = std::max(scale, std::abs(grid[j].value));
    const double lost = scale > 0.0 ? -std::log10(scale) : grid[i].headroom;
    shortfall = std::max(shortfall, lost + 12.0 - grid[i].headroom);
  }
  return shortfall;
}

void collect_roots(const ChannelEvaluator& eval, const std::vector<Sample>& grid, std::vector<double>& roots) {
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const auto& a = grid[i - 1];
    const auto& b = grid[i];
    if (b.value == 0.0)
      roots.push_back(b.omega);
    else if (a.value != 0.0 && std::signbit(a.value) != std::signbit(b.value))
      roots.push_back(refine_root(eval, a, b));
  }
}

double sin_power_integral(int d, double theta) {
  if (d == 0) return theta;
  if (d == 1) return 1.0 - std::cos(theta);
  return -std::pow(std::sin(theta), d - 1) * std::cos(theta) / d + (d - 1.0) / d * sin_power_integral(d - 2, theta);
}

double cap_volume(int d, const AngleParams& angle) { return sphere_area(d) * sin_power_integral(d, angle.theta0); }

}  // namespace

unsigned ferrers_working_digits(double mu, double omega, double x) {
  return tier_for(peak_log10(mu, omega, series_argument(x)), 0.0);
}

double ferrers_hypergeometric_factor(double mu, double omega, double x) {
  if (!(mu > 0)) raise(ErrorKind::DomainError, "ferrers_p needs mu > 0");
  return evaluate_in(ferrers_working_digits(mu, omega, x), mu, omega, x);
}

double ferrers_p(double mu, double omega, double x) {
  const double f = ferrers_hypergeometric_factor(mu, omega, x);
  const double log_prefactor = 0.5 * mu * std::log((1.0 - x) / (1.0 + x)) - std::lgamma(1.0 + mu);
  return f * std::exp(log_prefactor);
}

double wkb_root_count(double mu, const AngleParams& angle, double omega_max) {
  if (mu >= omega_max) return 0.0;
  const double t1 = std::asin(mu / omega_max);
  const double t2 = M_PI - t1;
  const double upper = std::min(angle.theta0, t2);
  if (upper <= t1) return 0.0;
  const auto integrand = [&](double th) {
    const double s = std::sin(th);
    return std::sqrt(std::max(0.0, omega_max * omega_max - mu * mu / (s * s)));
  };
  const double integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, t1, upper, 8, 1e-9);
  // One turning point and a hard wall, or two turning points.
  return integral / M_PI + (angle.theta0 < t2 ? 0.25 : 0.5);
}

std::vector<double> dirichlet_roots(double mu, const AngleParams& angle, double omega_max) {
  if (!(mu > 0)) raise(ErrorKind::DomainError, "dirichlet_roots needs mu > 0");
  if (!(omega_max > 0)) raise(ErrorKind::InvalidArgument, "omega_max must be positive");
  if (angle.theta0 > kMaxTheta0)
    raise(ErrorKind::SlowConvergence, "the Ferrers series oracle is limited to theta0 <= 2.2");
  const double x = angle.cos;
  std::vector<double> roots;
  if (omega_max <= mu) return roots;
  const double step = M_PI / (4.0 * angle.theta0);
  // Large mu makes the factor small, so the digits that suffice for the
  // peak term alone may not resolve its sign; raise the allowance until the
  // sampled values are resolved.
  double extra = 0.0;
  std::vector<Sample> grid;
  for (int attempt = 0;; ++attempt) {
    grid = sample_grid(ChannelEvaluator(mu, x, extra), mu, omega_max, step);
    const double shortfall = digit_shortfall(grid);
    if (shortfall <= 0.0) break;
    if (attempt == 4)
      raise(ErrorKind::NonConvergence, "cannot resolve the Ferrers factor for mu = " + std::to_string(mu));
    extra += shortfall + 5.0;
  }
  const ChannelEvaluator eval(mu, x, extra);
  collect_roots(eval, grid, roots);

  const double max_gap = 1.5 * M_PI / angle.theta0;
  std::vector<double> refined;
  refined.reserve(roots.size());
  for (std::size_t j = 0; j < roots.size(); ++j) {
    if (j > 0 && roots[j] - roots[j - 1] > max_gap) {
      const auto fine = sample_grid(eval, roots[j - 1] + 2 * kRootTolerance, roots[j] - 2 * kRootTolerance, step / 16.0);
      collect_roots(eval, fine, refined);
    }
    refined.push_back(roots[j]);
  }
  const double expected = wkb_root_count(mu, angle, omega_max);
  if (std::abs(static_cast<double>(refined.size()) - expected) > 2.0)
    raise(ErrorKind::MissedRootSuspicion, "channel mu = " + std::to_string(mu) + " has " +
                                              std::to_string(refined.size()) + " roots below " +
                                              std::to_string(omega_max) + ", WKB expects " + std::to_string(expected));
  return refined;
}

std::size_t OracleSpectrum::distinct_roots() const {
  std::size_t n = 0;
  for (const auto& c : channels) n += c.roots.size();
  return n;
}

std::int64_t OracleSpectrum::mode_count() const {
  std::int64_t n = 0;
  for (const auto& c : channels) n += c.degeneracy * static_cast<std::int64_t>(c.roots.size());
  return n;
}

std::int64_t OracleSpectrum::nonpositive_modes() const {
  std::int64_t n = 0;
  for (const auto& c : channels)
    for (std::size_t j = 0; j < c.roots.size(); ++j)
      if (c.alpha_squared(j, d) <= 0.0) n += c.degeneracy;
  return n;
}

OracleSpectrum build_spectrum(int d, const AngleParams& angle, const OracleOptions& options) {
  if (d < 2) raise(ErrorKind::DomainError, "the spectral oracle supports sphere bases with d >= 2");
  if (!(options.omega_max > 0)) raise(ErrorKind::InvalidArgument, "omega_max must be positive");
  const double mu0 = (d - 1) / 2.0;
  // d = 1 aside, mu0 > 0; channels with mu >= omega_max cannot contribute.
  const int k_count = std::max(0, static_cast<int>(std::ceil(options.omega_max - mu0)));
  std::vector<EigenvalueChannel> channels(static_cast<std::size_t>(k_count));
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> failures(std::max(1U, options.threads));
  const auto worker = [&](unsigned id) {
    try {
      for (int k = next.fetch_add(1); k < k_count; k = next.fetch_add(1)) {
        const double mu = k + mu0;
        channels[static_cast<std::size_t>(k)] = {mu, degeneracy(k, d), dirichlet_roots(mu, angle, options.omega_max)};
      }
    } catch (...) {
      failures[id] = std::current_exception();
      next.store(k_count);
    }
  };
  const unsigned threads = std::max(1U, options.threads);
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
    for (auto& t : pool) t.join();
  }
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);
  // Roots move up with mu, so the first empty channel ends the spectrum.
  const auto first_empty =
      std::find_if(channels.begin(), channels.end(), [](const EigenvalueChannel& c) { return c.roots.empty(); });
  channels.erase(first_empty, channels.end());
  return {d, angle, options.omega_max, std::move(channels)};
}

double tail_bound(int d, const AngleParams& angle, double omega_max, double t) {
  const int D = d + 1;
  const double a = D / 2.0 + 1.0;
  const double weyl = cap_volume(d, angle) / (std::pow(4.0 * M_PI, D / 2.0) * std::tgamma(a));
  return std::exp(d * d * t / 4.0) * 2.0 * weyl * std::pow(t, -D / 2.0) *
         boost::math::tgamma(a, omega_max * omega_max * t);
}

double certified_t_min(int d, const AngleParams& angle, double omega_max, double rel_tolerance) {
  const int D = d + 1;
  const double lead = cap_volume(d, angle) / std::pow(4.0 * M_PI, D / 2.0);
  const auto ratio = [&](double t) {
    return 4.0 * tail_bound(d, angle, omega_max, t) / (lead * std::pow(t, -D / 2.0));
  };
  double lo = std::log(1e-10);
  double hi = std::log(10.0);
  if (ratio(std::exp(hi)) > rel_tolerance) raise(ErrorKind::TailTooLarge, "omega_max is too small for any t <= 10");
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (ratio(std::exp(mid)) > rel_tolerance ? lo : hi) = mid;
  }
  return std::exp(hi);
}

std::vector<HeatTraceSample> heat_trace(const OracleSpectrum& spectrum, const std::vector<double>& t_values,
                                        double rel_tolerance) {
  std::vector<double> weights;
  std::vector<double> rates;
  weights.reserve(spectrum.distinct_roots());
  rates.reserve(spectrum.distinct_roots());
  for (const auto& c : spectrum.channels)
    for (std::size_t j = 0; j < c.roots.size(); ++j) {
      weights.push_back(static_cast<double>(c.degeneracy));
      rates.push_back(c.alpha_squared(j, spectrum.d));
    }
  std::vector<HeatTraceSample> out;
  out.reserve(t_values.size());
  for (double t : t_values) {
    if (!(t > 0)) raise(ErrorKind::InvalidArgument, "heat trace times must be positive");
    const double value = kernels::weighted_exp_sum(weights, rates, t);
    const double tail = tail_bound(spectrum.d, spectrum.angle, spectrum.omega_max, t);
    if (tail > rel_tolerance * value)
      raise(ErrorKind::TailTooLarge, "t = " + std::to_string(t) + " is below the certified range (tail bound " +
                                         std::to_string(tail) + ", trace " + std::to_string(value) + ")");
    out.push_back({t, value, tail});
  }
  return out;
}

AsymptoticFit fit_asymptotics(const std::vector<HeatTraceSample>& samples, int D, int n_fit) {
  if (n_fit < 0 || n_fit > 4) raise(ErrorKind::InvalidArgument, "fit order must lie in [0, 4]");
  const std::size_t needed = std::max<std::size_t>(3 * static_cast<std::size_t>(n_fit), n_fit + 1);
  if (samples.size() < needed)
    raise(ErrorKind::InvalidArgument, "the fit needs at least " + std::to_string(needed) + " samples");
  const auto [lo, hi] = std::minmax_element(samples.begin(), samples.end(),
                                            [](const auto& a, const auto& b) { return a.t < b.t; });
  if (hi->t < 10.0 * lo->t * (1.0 - 1e-12)) raise(ErrorKind::InvalidArgument, "samples must span a decade in t");

  const auto rows = static_cast<Eigen::Index>(samples.size());
  const Eigen::Index cols = n_fit + 1;
  Eigen::MatrixXd A(rows, cols);
  Eigen::VectorXd y(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const double t = samples[static_cast<std::size_t>(i)].t;
    y(i) = samples[static_cast<std::size_t>(i)].value * std::pow(t, D / 2.0);
    for (Eigen::Index k = 0; k < cols; ++k) A(i, k) = std::pow(t, k / 2.0);
  }
  const Eigen::VectorXd scale = A.colwise().norm().transpose();
  const Eigen::MatrixXd Ae = A * scale.cwiseInverse().asDiagonal();
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(Ae, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double cond = sv(0) / sv(sv.size() - 1);
  if (!(cond <= 1e8))
    raise(ErrorKind::IllConditioned, "fit condition number " + std::to_string(cond) + " exceeds 1e8");
  const Eigen::VectorXd xe = svd.solve(y);
  AsymptoticFit fit;
  fit.condition_number = cond;
  for (Eigen::Index k = 0; k < cols; ++k) fit.coefficients.push_back(xe(k) / scale(k));
  fit.rms_residual = std::sqrt((Ae * xe - y).squaredNorm() / static_cast<double>(rows));
  return fit;
}

std::vector<double> geometric_grid(double t_min, double t_max, int points) {
  if (!(t_min > 0 && t_max > t_min) || points < 2)
    raise(ErrorKind::InvalidArgument, "geometric grid needs 0 < t_min < t_max and at least two points");
  std::vector<double> ts(static_cast<std::size_t>(points));
  const double ratio = std::log(t_max / t_min) / (points - 1);
  for (int i = 0; i < points; ++i) ts[static_cast<std::size_t>(i)] = t_min * std::exp(ratio * i);
  ts.back() = t_max;
  return ts;
}

}  // namespace capheat
