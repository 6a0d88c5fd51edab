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
#include <cstdlib>
#include <string>

#include "capheat/error.hpp"
#include "capheat/kernels.hpp"

namespace capheat::kernels {

#if defined(CAPHEAT_HAVE_AVX2)
double weighted_exp_sum_avx2_impl(const double* w, const double* r, std::size_t n, double t);
void exp_batch_avx2_impl(const double* in, double* out, std::size_t n);
#endif

namespace {

void require_same_size(std::span<const double> weights, std::span<const double> rates) {
  if (weights.size() != rates.size())
    raise(ErrorKind::InvalidArgument, "weights and rates differ in length (" + std::to_string(weights.size()) +
                                          " vs " + std::to_string(rates.size()) + ")");
}

Isa detect() {
  if (const char* forced = std::getenv("CAPHEAT_KERNEL"); forced != nullptr && std::string(forced) == "scalar")
    return Isa::Scalar;
#if defined(CAPHEAT_HAVE_AVX2)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Isa::Avx2;
#endif
  return Isa::Scalar;
}

}  // namespace

std::string_view to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

Isa active_isa() {
  static const Isa isa = detect();
  return isa;
}

double weighted_exp_sum_scalar(std::span<const double> weights, std::span<const double> rates, double t) {
  require_same_size(weights, rates);
  double sum = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) sum += weights[i] * std::exp(-rates[i] * t);
  return sum;
}

double weighted_exp_sum_avx2(std::span<const double> weights, std::span<const double> rates, double t) {
  require_same_size(weights, rates);
#if defined(CAPHEAT_HAVE_AVX2)
  return weighted_exp_sum_avx2_impl(weights.data(), rates.data(), weights.size(), t);
#else
  (void)t;
  raise(ErrorKind::InvalidArgument, "this build has no AVX2 kernels");
#endif
}

double weighted_exp_sum(std::span<const double> weights, std::span<const double> rates, double t) {
  if (active_isa() == Isa::Avx2) return weighted_exp_sum_avx2(weights, rates, t);
  return weighted_exp_sum_scalar(weights, rates, t);
}

void exp_batch(std::span<const double> in, std::span<double> out) {
  if (in.size() != out.size()) raise(ErrorKind::InvalidArgument, "exp_batch buffers differ in length");
#if defined(CAPHEAT_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) {
    exp_batch_avx2_impl(in.data(), out.data(), in.size());
    return;
  }
#endif
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = std::exp(in[i]);
}

}  // namespace capheat::kernels
