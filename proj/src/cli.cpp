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

#include "capheat/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "capheat/error.hpp"
#include "capheat/heat_coeffs.hpp"
#include "capheat/legendre_asymptotics.hpp"
#include "capheat/spectral_oracle.hpp"
#include "capheat/sphere_base.hpp"

namespace capheat::cli {

namespace {

using nlohmann::ordered_json;

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ordered_json nullable(std::optional<double> v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

struct AngleFlags {
  std::optional<double> radians;
  std::optional<double> degrees;

  void attach(CLI::App& app) {
    auto* rad = app.add_option("--theta0", radians, "cap angle in radians, 0 < theta0 < pi");
    auto* deg = app.add_option("--theta0-deg", degrees, "cap angle in degrees");
    rad->excludes(deg);
  }

  AngleParams resolve() const {
    if (radians) return AngleParams::from_radians(*radians);
    if (degrees) return AngleParams::from_degrees(*degrees);
    raise(ErrorKind::InvalidArgument, "one of --theta0 or --theta0-deg is required");
  }
};

struct CoeffsOptions {
  int dim = 0;
  AngleFlags angle;
  std::string base = "sphere";
  std::string base_file;
  int max_n = 2;
  int order = 10;
  double mass = 0.0;
  std::optional<double> rel_tol;
  std::string format = "json";
};

struct OmegaOptions {
  int order = 5;
  std::string format = "json";
  bool printed = false;
};

struct VerifyOptions {
  int dim = 0;
  AngleFlags angle;
  int max_n = 2;
  std::optional<double> t_min;
  std::optional<double> t_max;
  int points = 40;
  double omega_max = 120.0;
  int fit_order = 4;
  unsigned threads = 1;
  double tail_tolerance = 1e-10;
  std::string trace_out;
  std::string format = "json";
};

struct RootsOptions {
  int dim = 0;
  AngleFlags angle;
  int k = 0;
  double omega_max = 60.0;
  std::string format = "json";
};

void require_n_below_D(int n, int D) {
  if (n >= D)
    raise(ErrorKind::IndexOutOfRange, "--max-n " + std::to_string(n) + " is not below D = " + std::to_string(D) +
                                          "; the expansion is valid only for n < D");
}

EvalPrecision precision(std::optional<double> rel_tol) {
  EvalPrecision p = EvalPrecision::from_environment();
  if (rel_tol) p.rel_tol = *rel_tol;
  p.validate();
  return p;
}

UserBase read_user_base(const std::string& path) {
  if (path.empty()) raise(ErrorKind::InvalidArgument, "--base user needs --base-file");
  std::ifstream in(path);
  if (!in) raise(ErrorKind::InvalidArgument, "cannot open base file " + path);
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorKind::InvalidArgument, "base file " + path + ": " + e.what());
  }
  UserBase base;
  try {
    base.d = j.at("dimension").get<int>();
    for (const auto& [key, value] : j.at("coefficients").items()) base.coefficients[std::stoi(key)] = value.get<double>();
    if (j.contains("residue_at_minus_half") && !j["residue_at_minus_half"].is_null())
      base.residue_at_minus_half = j["residue_at_minus_half"].get<double>();
  } catch (const std::exception& e) {
    raise(ErrorKind::InvalidArgument, "base file " + path + " needs {\"dimension\", \"coefficients\"}: " + e.what());
  }
  return base;
}

void run_coeffs(const CoeffsOptions& o, std::ostream& out) {
  SuspensionConfig cfg;
  cfg.D = o.dim;
  cfg.theta0 = o.angle.resolve();
  cfg.n_max = o.max_n;
  cfg.truncation = o.order;
  cfg.mass = o.mass;
  cfg.precision = precision(o.rel_tol);
  require_n_below_D(o.max_n, o.dim);
  if (o.base == "sphere")
    cfg.base = SphereBase{o.dim - 1};
  else
    cfg.base = read_user_base(o.base_file);
  const auto table = compute_table(cfg);

  if (o.format == "csv") {
    out << "n_over_2,script_A,cal_A\n";
    for (const auto& e : table.entries)
      out << number(e.n / 2.0) << ',' << number(e.script_A) << ',' << number(e.cal_A) << '\n';
    return;
  }
  ordered_json j;
  j["config"] = {{"D", cfg.D}, {"theta0", cfg.theta0.theta0}, {"base", o.base}, {"N", cfg.truncation},
                 {"max_n", cfg.n_max}, {"mass", cfg.mass}};
  j["coefficients"] = ordered_json::array();
  for (const auto& e : table.entries)
    j["coefficients"].push_back({{"n_over_2", e.n / 2.0}, {"script_A", e.script_A}, {"cal_A", e.cal_A}});
  j["log_coefficient"] = nullable(table.log_coefficient);
  out << j.dump(2) << '\n';
}

std::string tex_rational(const Rational& r, bool leading) {
  std::string sign = r.sign() < 0 ? "-" : (leading ? "" : "+");
  const Rational a = r.sign() < 0 ? -r : r;
  if (a.is_integer()) return sign + a.numerator().get_str();
  return sign + "\\frac{" + a.numerator().get_str() + "}{" + a.denominator().get_str() + "}";
}

std::string tex_polynomial(const NuPolynomial& p) {
  std::string s;
  const auto& c = p.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    s += tex_rational(c[k], s.empty());
    if (k == 1) s += "\\nu";
    if (k > 1) s += "\\nu^{" + std::to_string(k) + "}";
  }
  return s.empty() ? "0" : s;
}

void run_omega(const OmegaOptions& o, std::ostream& out) {
  if (o.order < 1 || o.order > 30) raise(ErrorKind::InvalidArgument, "--order must lie in [1, 30]");
  const auto variant = o.printed ? IntegrandVariant::Printed : IntegrandVariant::Corrected;
  const auto omegas = omega(static_cast<unsigned>(o.order), variant);
  if (o.format == "tex") {
    for (int i = 1; i <= o.order; ++i) {
      const auto& f = omegas[static_cast<std::size_t>(i)];
      out << "\\Omega_{" << i << "} &= ";
      for (std::size_t j = 0; j < f.terms().size(); ++j) {
        if (f.terms()[j].is_zero()) continue;
        if (j > 0) out << "\n  + \\frac{1}{(1+\\gamma^2)^{" << j << "}}";
        out << "\\left(" << tex_polynomial(f.terms()[j]) << "\\right)";
      }
      out << " \\\\\n";
    }
    return;
  }
  ordered_json j;
  j["integrand"] = o.printed ? "printed" : "corrected";
  j["orders"] = ordered_json::array();
  for (int i = 1; i <= o.order; ++i) {
    const auto& f = omegas[static_cast<std::size_t>(i)];
    ordered_json terms = ordered_json::array();
    for (std::size_t q = 0; q < f.terms().size(); ++q) {
      const auto& c = f.terms()[q].coefficients();
      for (std::size_t k = 0; k < c.size(); ++k)
        if (!c[k].is_zero()) terms.push_back({{"q_power", q}, {"nu_power", k}, {"value", c[k].to_string()}});
    }
    j["orders"].push_back({{"order", i}, {"terms", terms}});
  }
  out << j.dump(2) << '\n';
}

void write_trace_csv(const std::vector<HeatTraceSample>& samples, std::ostream& out) {
  out << "t,trace,tail_bound\n";
  for (const auto& s : samples) out << number(s.t) << ',' << number(s.value) << ',' << number(s.tail_bound) << '\n';
}

void run_verify(const VerifyOptions& o, std::ostream& out) {
  const int d = o.dim - 1;
  const AngleParams angle = o.angle.resolve();
  require_n_below_D(o.max_n, o.dim);
  if (o.max_n > o.fit_order) raise(ErrorKind::InvalidArgument, "--max-n cannot exceed --fit-order");

  SuspensionConfig cfg;
  cfg.D = o.dim;
  cfg.theta0 = angle;
  cfg.base = SphereBase{d};
  cfg.n_max = o.max_n;
  const auto table = compute_table(cfg);

  const double t_min = o.t_min.value_or(certified_t_min(d, angle, o.omega_max, o.tail_tolerance));
  const double t_max = o.t_max.value_or(10.0 * t_min);
  const auto spectrum = build_spectrum(d, angle, {o.omega_max, o.threads});
  const auto samples = heat_trace(spectrum, geometric_grid(t_min, t_max, o.points), o.tail_tolerance);
  const auto fit = fit_asymptotics(samples, o.dim, o.fit_order);

  if (!o.trace_out.empty()) {
    std::ofstream f(o.trace_out);
    if (!f) raise(ErrorKind::InvalidArgument, "cannot write " + o.trace_out);
    write_trace_csv(samples, f);
  }
  if (o.format == "csv") {
    write_trace_csv(samples, out);
    return;
  }
  ordered_json j;
  j["config"] = {{"D", o.dim},         {"theta0", angle.theta0}, {"omega_max", o.omega_max},
                 {"t_min", t_min},     {"t_max", t_max},         {"points", o.points},
                 {"fit_order", o.fit_order}};
  j["spectrum"] = {{"channels", spectrum.channels.size()},
                   {"distinct_roots", spectrum.distinct_roots()},
                   {"modes", spectrum.mode_count()},
                   {"nonpositive_modes", spectrum.nonpositive_modes()}};
  j["fit"] = {{"condition_number", fit.condition_number}, {"rms_residual", fit.rms_residual}};
  j["comparison"] = ordered_json::array();
  double worst = 0.0;
  for (int n = 0; n <= o.max_n; ++n) {
    const double fitted = fit.coefficients[static_cast<std::size_t>(n)];
    const double predicted = table.entries[static_cast<std::size_t>(n)].cal_A;
    const double rel = std::abs(fitted - predicted) / std::abs(predicted);
    worst = std::max(worst, rel);
    j["comparison"].push_back({{"n_over_2", n / 2.0}, {"fitted", fitted}, {"predicted", predicted}, {"rel_error", rel}});
  }
  j["max_rel_error"] = worst;
  out << j.dump(2) << '\n';
}

void run_roots(const RootsOptions& o, std::ostream& out) {
  const int d = o.dim - 1;
  if (d < 2) raise(ErrorKind::DomainError, "--dim must be at least 3 for a sphere base");
  if (o.k < 0) raise(ErrorKind::InvalidArgument, "--k must be non-negative");
  const AngleParams angle = o.angle.resolve();
  const double mu = o.k + (d - 1) / 2.0;
  const auto roots = dirichlet_roots(mu, angle, o.omega_max);
  if (o.format == "csv") {
    out << "j,omega,eigenvalue\n";
    for (std::size_t j = 0; j < roots.size(); ++j)
      out << j << ',' << number(roots[j]) << ',' << number(roots[j] * roots[j] - d * d / 4.0) << '\n';
    return;
  }
  ordered_json j;
  j["D"] = o.dim;
  j["theta0"] = angle.theta0;
  j["k"] = o.k;
  j["mu"] = mu;
  j["degeneracy"] = degeneracy(o.k, d);
  j["roots"] = roots;
  out << j.dump(2) << '\n';
}

bool is_validation(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::InsufficientBaseData:
    case ErrorKind::MissingResidue:
    case ErrorKind::DomainError:
      return true;
    default:
      return false;
  }
}

int report(std::ostream& out, std::ostream& err, std::string_view kind, const std::string& message, int code) {
  ordered_json j;
  j["error"] = {{"kind", kind}, {"message", message}};
  out << j.dump(2) << '\n';
  err << "capheat: " << message << '\n';
  return code;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heat kernel coefficients of the Dirichlet Laplacian on spherical caps and suspensions"};
  app.require_subcommand(1);

  CoeffsOptions coeffs;
  auto* c = app.add_subcommand("coeffs", "heat kernel coefficients A_{n/2}, n = 0..max-n");
  c->add_option("--dim", coeffs.dim, "total dimension D = d + 1")->required();
  coeffs.angle.attach(*c);
  c->add_option("--base", coeffs.base, "base manifold")->check(CLI::IsMember({"sphere", "user"}));
  c->add_option("--base-file", coeffs.base_file, "JSON file with a user base (--base user)");
  c->add_option("--max-n", coeffs.max_n, "highest n, must be below D");
  c->add_option("--order", coeffs.order, "highest Omega order generated");
  c->add_option("--mass", coeffs.mass, "mass m of -Laplacian + m^2");
  c->add_option("--rel-tol", coeffs.rel_tol, "relative tolerance of series evaluations");
  c->add_option("--format", coeffs.format)->check(CLI::IsMember({"json", "csv"}));

  OmegaOptions omega_opts;
  auto* w = app.add_subcommand("omega", "exact Omega_n tables");
  w->add_option("--order", omega_opts.order, "highest order printed");
  w->add_option("--format", omega_opts.format)->check(CLI::IsMember({"json", "tex"}));
  w->add_flag("--printed-integrand", omega_opts.printed, "use the linear 5 nu integrand");

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "compare the coefficients with a fit to the eigenvalue heat trace");
  v->add_option("--dim", verify.dim, "total dimension D = d + 1")->required();
  verify.angle.attach(*v);
  v->add_option("--max-n", verify.max_n, "highest coefficient compared");
  v->add_option("--t-min", verify.t_min, "smallest t (default: certified by the tail bound)");
  v->add_option("--t-max", verify.t_max, "largest t (default: 10 t-min)");
  v->add_option("--points", verify.points, "size of the geometric t-grid");
  v->add_option("--omega-max", verify.omega_max, "eigenvalue cutoff in omega");
  v->add_option("--fit-order", verify.fit_order, "highest half-power in the fit");
  v->add_option("--threads", verify.threads, "worker threads for the root search");
  v->add_option("--tail-tolerance", verify.tail_tolerance, "tail bound relative to the trace");
  v->add_option("--trace-out", verify.trace_out, "write the (t, trace, tail_bound) CSV here");
  v->add_option("--format", verify.format, "json report or the trace CSV")->check(CLI::IsMember({"json", "csv"}));

  RootsOptions roots;
  auto* r = app.add_subcommand("roots", "Dirichlet roots omega of one channel mu = k + (d-1)/2");
  r->add_option("--dim", roots.dim, "total dimension D = d + 1")->required();
  roots.angle.attach(*r);
  r->add_option("--k", roots.k, "channel index");
  r->add_option("--omega-max", roots.omega_max, "largest omega searched");
  r->add_option("--format", roots.format)->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    return report(out, err, "InvalidArgument", e.what(), kValidationError);
  }

  try {
    if (c->parsed()) run_coeffs(coeffs, out);
    if (w->parsed()) run_omega(omega_opts, out);
    if (v->parsed()) run_verify(verify, out);
    if (r->parsed()) run_roots(roots, out);
  } catch (const Error& e) {
    return report(out, err, to_string(e.kind()), e.what(), is_validation(e.kind()) ? kValidationError : kNumericalError);
  }
  return kOk;
}

}  // namespace capheat::cli
