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

#include "mcmkit/channel.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace mcmkit;
using mcmkit::testing::error_kind_of;
using mcmkit::testing::max_abs_diff;

TEST(Channel, RepresentationsRoundTrip) {
  Rng rng(20);
  for (int d : {2, 4}) {
    for (int rank : {1, 3}) {
      const QuantumChannel ch = random_channel(d, rank, rng);
      EXPECT_TRUE(ch.is_cptp());
      const auto kraus = ch.kraus();
      EXPECT_LE(static_cast<int>(kraus.size()), rank);
      const QuantumChannel from_k = QuantumChannel::from_kraus(kraus);
      const QuantumChannel from_s = QuantumChannel::from_liouville(ch.liouville(), d, d);
      const QuantumChannel from_r = QuantumChannel::from_pauli_liouville(ch.pauli_liouville());
      EXPECT_LT(max_abs_diff(from_k.choi(), ch.choi()), 1e-12);
      EXPECT_LT(max_abs_diff(from_s.choi(), ch.choi()), 1e-12);
      EXPECT_LT(max_abs_diff(from_r.choi(), ch.choi()), 1e-12);
    }
  }
}

TEST(Channel, ApplyAgreesAcrossRepresentations) {
  Rng rng(21);
  const QuantumChannel ch = random_channel(4, 2, rng);
  const DensityMatrix rho = random_density(4, rng);
  ComplexMatrix kraus_out = ComplexMatrix::Zero(4, 4);
  for (const auto& k : ch.kraus()) kraus_out += k * rho.matrix() * k.adjoint();
  const ComplexMatrix s_out = unvec(ch.liouville() * vec(rho.matrix()), 4, 4);
  EXPECT_LT(max_abs_diff(ch.apply(rho).matrix(), kraus_out), 1e-12);
  EXPECT_LT(max_abs_diff(s_out, kraus_out), 1e-12);
}

TEST(Channel, UnitaryLiouvilleIsConjKronU) {
  Rng rng(22);
  const ComplexMatrix u = haar_unitary(2, rng);
  const QuantumChannel ch = QuantumChannel::unitary(u);
  EXPECT_LT(max_abs_diff(ch.liouville(), kron(u.conjugate(), u)), 1e-13);
  EXPECT_EQ(error_kind_of([] { QuantumChannel::unitary(2.0 * identity(2)); }), ErrorKind::kNotUnitary);
}

TEST(Channel, ChoiPartialTraceIsIdentity) {
  Rng rng(23);
  const QuantumChannel ch = random_channel(2, 2, rng);
  EXPECT_LT(max_abs_diff(partial_trace(ch.choi(), {2, 2}, {0}), identity(2)), 1e-13);
  EXPECT_LT(ch.tp_residual(), 1e-13);
}

TEST(Channel, ConstructionRejectsNonCptp) {
  ComplexMatrix j = QuantumChannel::identity(2).choi();
  EXPECT_EQ(error_kind_of([&] { QuantumChannel::from_choi(2.0 * j, 2, 2); }), ErrorKind::kNotTracePreserving);
  ComplexMatrix neg = j;
  neg(0, 0) = -0.5;
  neg(3, 3) = 1.5;  // keeps Tr_out J off the identity too, but CP breaks first
  EXPECT_NE(error_kind_of([&] { QuantumChannel::from_choi(neg, 2, 2); }), ErrorKind::kIo);
  EXPECT_NO_THROW(QuantumChannel::from_choi(neg, 2, 2, QuantumChannel::Check::kNone));
  // Transpose map: TP but not CP.
  ComplexMatrix t = ComplexMatrix::Zero(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) t(i * 2 + k, k * 2 + i) = 1.0;
  EXPECT_EQ(error_kind_of([&] { QuantumChannel::from_choi(t, 2, 2); }), ErrorKind::kNotPositive);
}

TEST(Channel, ComposeAppliesFirstThenSecond) {
  Rng rng(24);
  const QuantumChannel a = random_channel(2, 2, rng), b = random_channel(2, 2, rng);
  const DensityMatrix rho = random_density(2, rng);
  EXPECT_LT(max_abs_diff(compose(a, b).apply(rho).matrix(), b.apply(a.apply(rho)).matrix()), 1e-13);
  EXPECT_LT(max_abs_diff(compose_all({a, b, a}).choi(), compose(compose(a, b), a).choi()), 1e-13);
}

TEST(Channel, TensorActsOnProducts) {
  Rng rng(25);
  const QuantumChannel a = random_channel(2, 2, rng), b = random_channel(2, 3, rng);
  const DensityMatrix r = random_density(2, rng), s = random_density(2, rng);
  const ComplexMatrix out = tensor(a, b).apply(kron(r.matrix(), s.matrix()));
  EXPECT_LT(max_abs_diff(out, kron(a.apply(r).matrix(), b.apply(s).matrix())), 1e-13);
}

TEST(Channel, DepolarizingPauliLiouvilleIsDiagonal) {
  for (double p : {0.1, 0.5, 1.0}) {
    const RealMatrix r = depolarizing(2, p).pauli_liouville();
    RealMatrix ref = RealMatrix::Identity(4, 4) * (1.0 - p);
    ref(0, 0) = 1.0;
    EXPECT_LT((r - ref).cwiseAbs().maxCoeff(), 1e-14);
  }
  EXPECT_EQ(error_kind_of([] { depolarizing(2, 1.5); }), ErrorKind::kInvalidArgument);
}

TEST(Channel, NamedQubitChannels) {
  const DensityMatrix e = DensityMatrix::basis_state(2, 1);
  EXPECT_NEAR(amplitude_damping(0.3).apply(e).population(0), 0.3, 1e-15);
  ComplexMatrix plus = ComplexMatrix::Constant(2, 2, 0.5);
  EXPECT_NEAR(std::abs(phase_damping(0.4).apply(plus)(0, 1)), 0.3, 1e-15);
}

TEST(Channel, PauliBasisIsOrthonormal) {
  const auto basis = normalized_pauli_basis(2);
  ASSERT_EQ(basis.size(), 16u);
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = 0; j < basis.size(); ++j) {
      EXPECT_NEAR(std::abs((basis[i].adjoint() * basis[j]).trace()), i == j ? 1.0 : 0.0, 1e-14);
    }
  }
  // Lexicographic: index 1 is I kron X.
  EXPECT_LT(max_abs_diff(basis[1], kron(identity(2), pauli_x()) / 2.0), 1e-15);
}

TEST(Channel, PermuteSubsystemsSwapsFactors) {
  Rng rng(26);
  const DensityMatrix a = random_density(2, rng), b = random_density(4, rng);
  const ComplexMatrix p = permute_subsystems(kron(a.matrix(), b.matrix()), {2, 4}, {1, 0});
  EXPECT_LT(max_abs_diff(p, kron(b.matrix(), a.matrix())), 1e-14);
}

TEST(Channel, DifferenceIsUncheckedMap) {
  const QuantumChannel d = depolarizing(2, 0.2) - QuantumChannel::identity(2);
  EXPECT_FALSE(d.is_tp());
  EXPECT_LT(partial_trace(d.choi(), {2, 2}, {0}).cwiseAbs().maxCoeff(), 1e-15);
}
