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

#include "mcmkit/linalg.hpp"

#include <gtest/gtest.h>

#include "mcmkit/random.hpp"
#include "test_util.hpp"

using namespace mcmkit;
using mcmkit::testing::error_kind_of;
using mcmkit::testing::max_abs_diff;

TEST(Linalg, SigmaMinusLowersExcitedState) {
  ComplexVector e(2);
  e << 0, 1;
  const ComplexVector g = sigma_minus() * e;
  EXPECT_NEAR(std::abs(g(0)), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(g(1)), 0.0, 1e-15);
  EXPECT_LT(max_abs_diff(sigma_z_energy(), -pauli_z()), 1e-15);
}

TEST(Linalg, VecIdentity) {
  Rng rng(1);
  const ComplexMatrix a = haar_unitary(3, rng), x = haar_unitary(3, rng), b = haar_unitary(3, rng);
  const ComplexVector lhs = vec(a * x * b);
  const ComplexVector rhs = kron(b.transpose(), a) * vec(x);
  EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-13);
  EXPECT_LT(max_abs_diff(unvec(vec(a), 3, 3), a), 1e-15);
}

TEST(Linalg, KronOrderPutsFirstFactorOnTheLeft) {
  ComplexMatrix a = pauli_x(), b = identity(2);
  const ComplexMatrix k = kron(a, b);
  // X on qubit 0 (most significant) maps |00> to |10> = index 2.
  EXPECT_NEAR(std::abs(k(2, 0)), 1.0, 1e-15);
  EXPECT_LT(max_abs_diff(embed_operator(pauli_x(), {0}, 2), k), 1e-15);
  EXPECT_LT(max_abs_diff(embed_operator(pauli_x(), {1}, 2), kron(b, a)), 1e-15);
}

TEST(Linalg, EmbedOperatorMatchesPermutedKron) {
  Rng rng(2);
  const ComplexMatrix u = haar_unitary(4, rng);
  // u on (2, 0) of three qubits: u's first factor is qubit 2.
  const ComplexMatrix full = embed_operator(u, {2, 0}, 3);
  ComplexMatrix ref = ComplexMatrix::Zero(8, 8);
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      if (((i >> 1) & 1) != ((j >> 1) & 1)) continue;
      const int ri = ((i & 1) << 1) | (i >> 2), rj = ((j & 1) << 1) | (j >> 2);
      ref(i, j) = u(ri, rj);
    }
  }
  EXPECT_LT(max_abs_diff(full, ref), 1e-14);
}

TEST(Linalg, PartialTraceOfProductState) {
  Rng rng(3);
  const DensityMatrix a = random_density(2, rng), b = random_density(4, rng), c = random_density(2, rng);
  const ComplexMatrix abc = kron_all({a.matrix(), b.matrix(), c.matrix()});
  EXPECT_LT(max_abs_diff(partial_trace(abc, {2, 4, 2}, {1}), b.matrix()), 1e-14);
  EXPECT_LT(max_abs_diff(partial_trace(abc, {2, 4, 2}, {0, 2}), kron(a.matrix(), c.matrix())), 1e-14);
  // Unsorted keep order permutes the factors.
  EXPECT_LT(max_abs_diff(partial_trace(abc, {2, 4, 2}, {2, 0}), kron(c.matrix(), a.matrix())), 1e-14);
  EXPECT_EQ(error_kind_of([&] { partial_trace(abc, {2, 2, 2}, {0}); }), ErrorKind::kDimensionMismatch);
}

TEST(Linalg, MatrixExpOfPauli) {
  const double t = 0.37;
  const ComplexMatrix u = matrix_exp(cplx(0, -t) * pauli_x());
  ComplexMatrix ref(2, 2);
  ref << std::cos(t), cplx(0, -std::sin(t)), cplx(0, -std::sin(t)), std::cos(t);
  EXPECT_LT(max_abs_diff(u, ref), 1e-15);
}

TEST(Linalg, SchattenNormsAgreeWithSingularValues) {
  Rng rng(4);
  ComplexMatrix a = ComplexMatrix::Random(5, 5);
  const RealVector s = singular_values(a);
  EXPECT_NEAR(schatten_norm(a, 1.0), s.sum(), 1e-12);
  EXPECT_NEAR(schatten_norm(a, 2.0), a.norm(), 1e-12);
  EXPECT_NEAR(schatten_norm(a, kInf), s.maxCoeff(), 1e-12);
  // The Hermitian path.
  const ComplexMatrix h = hermitian_part(a);
  EXPECT_NEAR(trace_norm(h), singular_values(h).sum(), 1e-12);
  EXPECT_EQ(error_kind_of([&] { schatten_norm(a, 3.0); }), ErrorKind::kInvalidArgument);
}

TEST(Linalg, TraceDistanceAndFidelityOfOrthogonalStates) {
  const DensityMatrix g = DensityMatrix::basis_state(2, 0), e = DensityMatrix::basis_state(2, 1);
  EXPECT_NEAR(trace_distance(g, e), 1.0, 1e-15);
  EXPECT_NEAR(fidelity(g, e), 0.0, 1e-15);
  EXPECT_NEAR(fidelity(g, g), 1.0, 1e-12);
  const DensityMatrix mixed = DensityMatrix::maximally_mixed(2);
  EXPECT_NEAR(fidelity(g, mixed), 0.5, 1e-12);
  EXPECT_NEAR(trace_distance(g, mixed), 0.5, 1e-15);
}

TEST(Linalg, FuchsVandeGraafOnRandomStates) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const DensityMatrix a = random_density(4, rng), b = random_density(4, rng);
    const double f = fidelity(a, b), d = trace_distance(a, b);
    EXPECT_LE(1.0 - std::sqrt(f), d + 1e-12);
    EXPECT_LE(d, std::sqrt(1.0 - f) + 1e-12);
    EXPECT_NEAR(f, fidelity(b, a), 1e-10);
  }
}

TEST(Linalg, DensityMatrixValidation) {
  ComplexMatrix bad = identity(2);
  EXPECT_EQ(error_kind_of([&] { DensityMatrix{bad}; }), ErrorKind::kNotTracePreserving);
  ComplexMatrix neg(2, 2);
  neg << 1.2, 0, 0, -0.2;
  EXPECT_EQ(error_kind_of([&] { DensityMatrix{neg}; }), ErrorKind::kNotPositive);
  ComplexMatrix nh(2, 2);
  nh << 0.5, 0.3, 0.1, 0.5;
  EXPECT_EQ(error_kind_of([&] { DensityMatrix{nh}; }), ErrorKind::kNotHermitian);
}

TEST(Linalg, NearestDensityIsAValidState) {
  ComplexMatrix a(2, 2);
  a << 1.1, 0.2, 0.2, -0.1;
  const ComplexMatrix rho = nearest_density(a);
  EXPECT_NO_THROW(DensityMatrix{rho});
  EXPECT_NEAR(rho.trace().real(), 1.0, 1e-14);
  // Already a state: unchanged.
  Rng rng(6);
  const DensityMatrix s = random_density(4, rng);
  EXPECT_LT(max_abs_diff(nearest_density(s.matrix()), s.matrix()), 1e-12);
}

TEST(Linalg, SimplexProjection) {
  RealVector v(4);
  v << 0.7, -0.2, 0.4, 0.3;
  const RealVector p = project_to_simplex(v);
  EXPECT_NEAR(p.sum(), 1.0, 1e-15);
  EXPECT_GE(p.minCoeff(), 0.0);
  EXPECT_NEAR(p(1), 0.0, 1e-15);
  RealVector inside(3);
  inside << 0.2, 0.3, 0.5;
  EXPECT_LT((project_to_simplex(inside) - inside).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Linalg, BasisLabels) {
  EXPECT_EQ(basis_label(1, 2), "01");
  EXPECT_EQ(basis_label(2, 2), "10");
  EXPECT_EQ(basis_index("10"), 2);
  EXPECT_EQ(error_kind_of([] { basis_index("0x"); }), ErrorKind::kParse);
}

TEST(Random, HaarUnitaryIsUnitaryAndSeeded) {
  Rng a(42), b(42);
  const ComplexMatrix u = haar_unitary(4, a);
  EXPECT_TRUE(is_unitary(u, 1e-12));
  EXPECT_LT(max_abs_diff(u, haar_unitary(4, b)), 0.0 + 1e-300);
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_EQ(derive_seed(7, 3), derive_seed(7, 3));
}

TEST(Random, MultinomialSumsToShots) {
  Rng rng(9);
  const auto c = sample_multinomial(10000, {0.25, 0.25, 0.25, 0.25}, rng);
  long total = 0;
  for (long x : c) {
    total += x;
    // 5 sigma of a binomial(10000, 0.25).
    EXPECT_NEAR(static_cast<double>(x), 2500.0, 5.0 * std::sqrt(10000 * 0.25 * 0.75));
  }
  EXPECT_EQ(total, 10000);
  const auto det = sample_multinomial(100, {0.0, 1.0}, rng);
  EXPECT_EQ(det[1], 100);
}

TEST(Linalg, PureStateFidelityIsOverlap) {
  // Pure pairs sit on the upper edge of the trace-distance sandwich, so the
  // fidelity must be accurate to round-off there.
  Rng rng(17);
  for (int i = 0; i < 50; ++i) {
    const ComplexVector a = haar_state(2 << (i % 3), rng), b = haar_state(2 << (i % 3), rng);
    const double f = fidelity(DensityMatrix::from_pure(a), DensityMatrix::from_pure(b));
    EXPECT_NEAR(f, std::norm(a.dot(b)), 1e-13);
    const double td = trace_distance(DensityMatrix::from_pure(a), DensityMatrix::from_pure(b));
    EXPECT_NEAR(td, std::sqrt(1.0 - f), 1e-12);
  }
}
