// Copyright 2026 The mcmkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <immintrin.h>

#include <vector>

#include "kernels_impl.hpp"

namespace mcmkit::kernels::detail {

namespace {

// (a.re*v.re - a.im*v.im, a.re*v.im + a.im*v.re) for two packed complex
// values in v, with a broadcast as (re, re, re, re) and (im, im, im, im).
inline __m256d cmul(__m256d are, __m256d aim, __m256d v) {
  const __m256d swapped = _mm256_permute_pd(v, 0b0101);
  return _mm256_fmaddsub_pd(are, v, _mm256_mul_pd(aim, swapped));
}

inline __m256d load_pair(const cplx* a, const cplx* b) {
  const __m128d lo = _mm_loadu_pd(reinterpret_cast<const double*>(a));
  const __m128d hi = _mm_loadu_pd(reinterpret_cast<const double*>(b));
  return _mm256_insertf128_pd(_mm256_castpd128_pd256(lo), hi, 1);
}

inline void store_pair(cplx* a, cplx* b, __m256d v) {
  _mm_storeu_pd(reinterpret_cast<double*>(a), _mm256_castpd256_pd128(v));
  _mm_storeu_pd(reinterpret_cast<double*>(b), _mm256_extractf128_pd(v, 1));
}

// Wrapper so std::vector keeps the vector type's alignment attribute.
struct Lane {
  __m256d v;
};

}  // namespace

// Two base indices are processed per iteration, one per 128-bit lane.
void apply_matrix_avx2(cplx* state, const ApplyPlan& plan) {
  const int dimk = 1 << plan.k;
  const long bases = 1L << (plan.num_bits - plan.k);
  std::vector<Lane> mre(static_cast<size_t>(dimk) * dimk), mim(mre.size());
  for (long e = 0; e < static_cast<long>(mre.size()); ++e) {
    mre[e].v = _mm256_set1_pd(plan.mat[e].real());
    mim[e].v = _mm256_set1_pd(plan.mat[e].imag());
  }
  std::vector<Lane> in(dimk), acc(dimk);
  long base = 0;
  for (; base + 1 < bases; base += 2) {
    const long i0 = insert_zero_bits(base, plan.sorted_bits, plan.k);
    const long i1 = insert_zero_bits(base + 1, plan.sorted_bits, plan.k);
    for (int s = 0; s < dimk; ++s) in[s].v = load_pair(state + i0 + plan.offsets[s], state + i1 + plan.offsets[s]);
    for (int r = 0; r < dimk; ++r) {
      __m256d a = _mm256_setzero_pd();
      const long row = static_cast<long>(r) * dimk;
      for (int c = 0; c < dimk; ++c) a = _mm256_add_pd(a, cmul(mre[row + c].v, mim[row + c].v, in[c].v));
      acc[r].v = a;
    }
    for (int s = 0; s < dimk; ++s) store_pair(state + i0 + plan.offsets[s], state + i1 + plan.offsets[s], acc[s].v);
  }
  if (base < bases) {
    // Odd tail: only reachable when k == num_bits.
    const long idx = insert_zero_bits(base, plan.sorted_bits, plan.k);
    std::vector<cplx> vin(dimk);
    for (int s = 0; s < dimk; ++s) vin[s] = state[idx + plan.offsets[s]];
    for (int r = 0; r < dimk; ++r) {
      cplx a = 0.0;
      for (int c = 0; c < dimk; ++c) a += plan.mat[static_cast<long>(r) * dimk + c] * vin[c];
      state[idx + plan.offsets[r]] = a;
    }
  }
}

}  // namespace mcmkit::kernels::detail
