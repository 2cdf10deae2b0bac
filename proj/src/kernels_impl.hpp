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

#pragma once

#include <complex>

namespace mcmkit::kernels::detail {

using cplx = std::complex<double>;

// `mat` is row-major 2^k x 2^k. `offsets[s]` is the state offset of matrix
// index s relative to a base index; `sorted_bits` are the target bit
// positions in ascending order.
struct ApplyPlan {
  int num_bits;
  int k;
  const int* sorted_bits;
  const long* offsets;
  const cplx* mat;
};

void apply_matrix_scalar(cplx* state, const ApplyPlan& plan);
#if defined(MCMKIT_HAVE_AVX2_TU)
void apply_matrix_avx2(cplx* state, const ApplyPlan& plan);
#endif

inline long insert_zero_bits(long base, const int* sorted_bits, int k) {
  for (int q = 0; q < k; ++q) {
    const long b = sorted_bits[q];
    const long low = base & ((1L << b) - 1);
    base = ((base >> b) << (b + 1)) | low;
  }
  return base;
}

}  // namespace mcmkit::kernels::detail
