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

#include "mcmkit/kernels.hpp"

#include <algorithm>
#include <atomic>

#include "kernels_impl.hpp"

namespace mcmkit::kernels {

namespace {

Backend detect() {
#if defined(MCMKIT_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Backend::kAvx2;
#endif
  return Backend::kScalar;
}

std::atomic<int>& active_slot() {
  static std::atomic<int> slot{static_cast<int>(detected_backend())};
  return slot;
}

}  // namespace

const char* backend_name(Backend b) { return b == Backend::kAvx2 ? "avx2" : "scalar"; }

Backend detected_backend() {
  static const Backend b = detect();
  return b;
}

bool backend_available(Backend b) { return b == Backend::kScalar || detected_backend() == Backend::kAvx2; }

Backend active_backend() { return static_cast<Backend>(active_slot().load()); }

void set_backend(Backend b) {
  if (!backend_available(b)) {
    throw Error(ErrorKind::kUnsupported, std::string("kernel backend not available: ") + backend_name(b));
  }
  active_slot().store(static_cast<int>(b));
}

void apply_matrix(ComplexVector& state, int num_bits, const std::vector<int>& bits, const ComplexMatrix& m) {
  apply_matrix(state, num_bits, bits, m, active_backend());
}

void apply_matrix(ComplexVector& state, int num_bits, const std::vector<int>& bits, const ComplexMatrix& m,
                  Backend b) {
  const int k = static_cast<int>(bits.size());
  if (k == 0 || k > 6 || k > num_bits) throw Error(ErrorKind::kInvalidArgument, "apply_matrix: bad target count");
  if (state.size() != (1L << num_bits)) throw Error(ErrorKind::kDimensionMismatch, "apply_matrix: state size");
  if (m.rows() != (1L << k) || m.cols() != (1L << k)) {
    throw Error(ErrorKind::kDimensionMismatch, "apply_matrix: matrix size");
  }
  std::vector<int> sorted(bits);
  std::sort(sorted.begin(), sorted.end());
  for (int q = 0; q < k; ++q) {
    if (sorted[q] < 0 || sorted[q] >= num_bits || (q > 0 && sorted[q] == sorted[q - 1])) {
      throw Error(ErrorKind::kInvalidArgument, "apply_matrix: bad bit positions");
    }
  }
  const int dimk = 1 << k;
  std::vector<long> offsets(dimk, 0);
  for (int s = 0; s < dimk; ++s) {
    for (int q = 0; q < k; ++q) {
      if ((s >> (k - 1 - q)) & 1) offsets[s] |= 1L << bits[q];
    }
  }
  // Row-major copy of the matrix.
  std::vector<detail::cplx> mat(static_cast<size_t>(dimk) * dimk);
  for (int r = 0; r < dimk; ++r) {
    for (int c = 0; c < dimk; ++c) mat[static_cast<size_t>(r) * dimk + c] = m(r, c);
  }
  const detail::ApplyPlan plan{num_bits, k, sorted.data(), offsets.data(), mat.data()};
#if defined(MCMKIT_HAVE_AVX2_TU)
  if (b == Backend::kAvx2) {
    if (!backend_available(b)) throw Error(ErrorKind::kUnsupported, "avx2 backend not available");
    detail::apply_matrix_avx2(state.data(), plan);
    return;
  }
#else
  if (b == Backend::kAvx2) throw Error(ErrorKind::kUnsupported, "avx2 backend not compiled in");
#endif
  detail::apply_matrix_scalar(state.data(), plan);
}

}  // namespace mcmkit::kernels
