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

// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include <cmath>
#include <cstddef>

namespace capheat::kernels {

namespace {

// exp(x) for four doubles: x = k ln2 + r with |r| <= ln2/2 (Cody-Waite split
// of ln2), degree-13 Taylor polynomial for e^r, then scaling by 2^k through
// the exponent field. Inputs below -708 flush to zero, above 709 saturate.
inline __m256d exp4(__m256d x) {
  const __m256d lo_limit = _mm256_set1_pd(-708.0);
  const __m256d hi_limit = _mm256_set1_pd(709.0);
  const __m256d underflow = _mm256_cmp_pd(x, lo_limit, _CMP_LT_OQ);
  x = _mm256_max_pd(_mm256_min_pd(x, hi_limit), lo_limit);

  const __m256d log2e = _mm256_set1_pd(1.4426950408889634074);
  const __m256d ln2_hi = _mm256_set1_pd(6.93145751953125e-1);
  const __m256d ln2_lo = _mm256_set1_pd(1.42860682030941723212e-6);
  const __m256d k = _mm256_round_pd(_mm256_mul_pd(x, log2e), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(k, ln2_hi, x);
  r = _mm256_fnmadd_pd(k, ln2_lo, r);

  __m256d p = _mm256_set1_pd(1.0 / 6227020800.0);
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 479001600.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 39916800.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 3628800.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 362880.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 40320.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 5040.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 720.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 120.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 24.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0 / 6.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(0.5));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));
  p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(1.0));

  // 2^k: k in [-1022, 1023] after clamping, so (k + 1023) << 52 is a valid exponent.
  const __m128i ki = _mm256_cvtpd_epi32(k);
  __m256i e = _mm256_cvtepi32_epi64(ki);
  e = _mm256_add_epi64(e, _mm256_set1_epi64x(1023));
  e = _mm256_slli_epi64(e, 52);
  const __m256d scale = _mm256_castsi256_pd(e);
  const __m256d result = _mm256_mul_pd(p, scale);
  return _mm256_andnot_pd(underflow, result);
}

}  // namespace

double weighted_exp_sum_avx2_impl(const double* w, const double* r, std::size_t n, double t) {
  const __m256d neg_t = _mm256_set1_pd(-t);
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d e0 = exp4(_mm256_mul_pd(_mm256_loadu_pd(r + i), neg_t));
    const __m256d e1 = exp4(_mm256_mul_pd(_mm256_loadu_pd(r + i + 4), neg_t));
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), e0, acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(w + i + 4), e1, acc1);
  }
  for (; i + 4 <= n; i += 4) {
    const __m256d e0 = exp4(_mm256_mul_pd(_mm256_loadu_pd(r + i), neg_t));
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), e0, acc0);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
  double sum = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) sum += w[i] * std::exp(-r[i] * t);
  return sum;
}

void exp_batch_avx2_impl(const double* in, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(out + i, exp4(_mm256_loadu_pd(in + i)));
  for (; i < n; ++i) out[i] = std::exp(in[i]);
}

}  // namespace capheat::kernels
