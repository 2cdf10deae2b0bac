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

#include <gtest/gtest.h>

#include "mcmkit/random.hpp"
#include "test_util.hpp"

using namespace mcmkit;

namespace {

// Dense reference: embed the matrix with the same bit convention.
ComplexVector reference(const ComplexVector& state, int num_bits, const std::vector<int>& bits,
                        const ComplexMatrix& m) {
  std::vector<int> targets;
  for (int b : bits) targets.push_back(num_bits - 1 - b);  // qubit index from the MSB
  return embed_operator(m, targets, num_bits) * state;
}

ComplexVector random_vector(long n, Rng& rng) {
  std::normal_distribution<double> g;
  ComplexVector v(n);
  for (long i = 0; i < n; ++i) v(i) = cplx(g(rng), g(rng));
  return v;
}

}  // namespace

TEST(Kernels, ScalarMatchesDenseReference) {
  Rng rng(10);
  for (int n : {1, 3, 6}) {
    for (int k = 1; k <= std::min(n, 3); ++k) {
      std::vector<int> all(n);
      for (int i = 0; i < n; ++i) all[i] = i;
      std::shuffle(all.begin(), all.end(), rng);
      const std::vector<int> bits(all.begin(), all.begin() + k);
      const ComplexMatrix m = ComplexMatrix::Random(1 << k, 1 << k);
      const ComplexVector s = random_vector(1L << n, rng);
      ComplexVector out = s;
      kernels::apply_matrix(out, n, bits, m, kernels::Backend::kScalar);
      EXPECT_LT((out - reference(s, n, bits, m)).cwiseAbs().maxCoeff(), 1e-12) << "n=" << n << " k=" << k;
    }
  }
}

TEST(Kernels, Avx2MatchesScalar) {
  if (!kernels::backend_available(kernels::Backend::kAvx2)) GTEST_SKIP() << "no AVX2 on this CPU";
  Rng rng(11);
  for (int n : {1, 2, 4, 7, 10}) {
    for (int k = 1; k <= std::min(n, 4); ++k) {
      std::vector<int> all(n);
      for (int i = 0; i < n; ++i) all[i] = i;
      std::shuffle(all.begin(), all.end(), rng);
      const std::vector<int> bits(all.begin(), all.begin() + k);
      const ComplexMatrix m = ComplexMatrix::Random(1 << k, 1 << k);
      const ComplexVector s = random_vector(1L << n, rng);
      ComplexVector a = s, b = s;
      kernels::apply_matrix(a, n, bits, m, kernels::Backend::kScalar);
      kernels::apply_matrix(b, n, bits, m, kernels::Backend::kAvx2);
      const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
      EXPECT_LT((a - b).cwiseAbs().maxCoeff() / scale, 1e-14) << "n=" << n << " k=" << k;
    }
  }
}

TEST(Kernels, SixBitMatrixOnBothBackends) {
  Rng rng(12);
  const int n = 8;
  const std::vector<int> bits{7, 0, 3, 5, 1, 6};
  const ComplexMatrix m = haar_unitary(64, rng);
  const ComplexVector s = random_vector(1L << n, rng);
  const ComplexVector ref = reference(s, n, bits, m);
  for (auto b : {kernels::Backend::kScalar, kernels::Backend::kAvx2}) {
    if (!kernels::backend_available(b)) continue;
    ComplexVector v = s;
    kernels::apply_matrix(v, n, bits, m, b);
    EXPECT_LT((v - ref).cwiseAbs().maxCoeff(), 1e-12) << kernels::backend_name(b);
  }
}

TEST(Kernels, DispatchSwitchesBackend) {
  const auto before = kernels::active_backend();
  kernels::set_backend(kernels::Backend::kScalar);
  EXPECT_EQ(kernels::active_backend(), kernels::Backend::kScalar);
  kernels::set_backend(before);
  EXPECT_EQ(kernels::active_backend(), before);
  EXPECT_EQ(kernels::detected_backend(), kernels::backend_available(kernels::Backend::kAvx2)
                                             ? kernels::Backend::kAvx2
                                             : kernels::Backend::kScalar);
}

TEST(Kernels, RejectsBadArguments) {
  ComplexVector s = ComplexVector::Zero(8);
  EXPECT_EQ(mcmkit::testing::error_kind_of([&] { kernels::apply_matrix(s, 3, {0, 0}, identity(4)); }),
            ErrorKind::kInvalidArgument);
  EXPECT_EQ(mcmkit::testing::error_kind_of([&] { kernels::apply_matrix(s, 3, {0}, identity(4)); }),
            ErrorKind::kDimensionMismatch);
  EXPECT_EQ(mcmkit::testing::error_kind_of([&] { kernels::apply_matrix(s, 3, {4}, identity(2)); }),
            ErrorKind::kInvalidArgument);
}
