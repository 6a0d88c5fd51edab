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

#include <cstddef>
#include <span>
#include <string_view>

namespace capheat::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

/// Best instruction set supported by this build and CPU. Setting
/// CAPHEAT_KERNEL=scalar in the environment forces the scalar path.
Isa active_isa();

/// sum_i weights[i] * exp(-rates[i] * t), reference implementation.
double weighted_exp_sum_scalar(std::span<const double> weights, std::span<const double> rates, double t);

/// Same sum with AVX2/FMA and a vectorized exp; only callable when
/// active_isa() reports Avx2 (or the CPU supports it).
double weighted_exp_sum_avx2(std::span<const double> weights, std::span<const double> rates, double t);

/// Dispatches to the variant selected by active_isa().
double weighted_exp_sum(std::span<const double> weights, std::span<const double> rates, double t);

/// exp over a buffer with the same vectorized routine; exposed for accuracy
/// tests. Falls back to std::exp when AVX2 is unavailable.
void exp_batch(std::span<const double> in, std::span<double> out);

}  // namespace capheat::kernels
