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

#include "mcmkit/noise.hpp"

#include <gtest/gtest.h>

#include "mcmkit/metrics.hpp"
#include "test_util.hpp"

using namespace mcmkit;
using mcmkit::testing::error_kind_of;
using mcmkit::testing::max_abs_diff;

namespace {

CompiledCircuit circuit(const std::string& label, int steps = 3) {
  const auto spec = superradiance_spec({1.0, DecayMode::kCollective}, 0.1, steps);
  return compile_mcm(spec, Topology::guadalupe(), Placement::guadalupe(DecayMode::kCollective), label, steps);
}

NoiseModel ibm(double p2, double t1, double t2) {
  NoiseModel m;
  m.kind = NoiseKind::kIbmStyle;
  m.one_qubit = {1e-4, t1, t2, 0.035};
  m.two_qubit = {p2, t1, t2, 0.4};
  return m;
}

}  // namespace

TEST(Noise, ThermalRelaxationRates) {
  const QuantumChannel ch = thermal_relaxation(100.0, 80.0, 0.4);
  const DensityMatrix e = DensityMatrix::basis_state(2, 1);
  EXPECT_NEAR(ch.apply(e).population(0), 1.0 - std::exp(-0.4 / 100.0), 1e-15);
  ComplexMatrix plus = ComplexMatrix::Constant(2, 2, 0.5);
  EXPECT_NEAR(std::abs(ch.apply(plus)(0, 1)), 0.5 * std::exp(-0.4 / 80.0), 1e-15);
  EXPECT_TRUE(ch.is_cptp());
  EXPECT_LT(max_abs_diff(thermal_relaxation(kInf, kInf, 0.4).choi(), QuantumChannel::identity(2).choi()), 1e-15);
  EXPECT_EQ(error_kind_of([] { thermal_relaxation(10.0, 30.0, 0.1); }), ErrorKind::kInvalidArgument);
}

TEST(Noise, EveryAttachedChannelIsCptp) {
  const CompiledCircuit c = circuit("sup");
  for (const NoiseModel& m : {ibm(0.01, 100.0, 80.0), NoiseModel{NoiseKind::kDepolarizing, 1e-3, 2e-2}}) {
    for (const auto& op : attach(c, m)) {
      const int d = 1 << op.qubits.size();
      EXPECT_TRUE(QuantumChannel::from_liouville(op.liouville, d, d, QuantumChannel::Check::kNone).is_cptp(1e-10));
    }
  }
}

TEST(Noise, ZeroRateIbmStyleIsIdeal) {
  const NoiseModel zero = ibm(0.0, kInf, kInf);
  NoiseModel zero1 = zero;
  zero1.one_qubit.depolarizing = 0.0;
  for (const auto& label : {"sub", "sup", "ee"}) {
    const CompiledCircuit c = circuit(label);
    const CircuitRun a = noisy_simulate(c, zero1);
    const CircuitRun b = simulate_circuit(c);
    for (size_t n = 0; n < a.step_states.size(); ++n) {
      EXPECT_LE(trace_distance(a.step_states[n], b.step_states[n]), 1e-10);
    }
  }
}

TEST(Noise, ChoiInjectionReproducesIbmStyleExactly) {
  NoiseModel truth = ibm(0.02, 100.0, 80.0);
  truth.one_qubit = GateNoise{};  // injection keeps 1q gates ideal
  truth.cnot_overrides[{0, 1}] = GateNoise{0.03, 90.0, 70.0, 0.45};
  const CompiledCircuit c = circuit("sup");
  NoiseModel inj;
  inj.kind = NoiseKind::kChoiInjection;
  GateOp op;
  op.kind = GateKind::kCnot;
  for (const auto& p : cnot_pairs(c)) {
    op.qubits = {p.first, p.second};
    inj.injected[p] = noisy_gate_channel(truth, op);
  }
  const CircuitRun a = noisy_simulate(c, truth), b = noisy_simulate(c, inj);
  for (size_t n = 0; n < a.step_states.size(); ++n) {
    EXPECT_LT((a.step_states[n].populations() - b.step_states[n].populations()).cwiseAbs().maxCoeff(), 1e-8);
  }
}

TEST(Noise, HeavyNoiseErodesSubradiance) {
  const CompiledCircuit c = circuit("sub");
  const CircuitRun clean = simulate_circuit(c);
  const CircuitRun noisy = noisy_simulate(c, NoiseModel{NoiseKind::kDepolarizing, 0.0, 0.5});
  // Mixing keeps the mean excitation of the singlet near one, so compare states.
  EXPECT_GT(trace_distance(clean.step_states.back(), noisy.step_states.back()), 0.1);
  EXPECT_LT(noisy.step_states.back().purity(), 0.6);
}

TEST(Noise, DepolarizingGateChannel) {
  GateOp op;
  op.kind = GateKind::kCnot;
  op.qubits = {0, 1};
  const QuantumChannel ch = noisy_gate_channel(NoiseModel{NoiseKind::kDepolarizing, 0.0, 0.04}, op);
  EXPECT_NEAR(average_gate_fidelity(cnot_matrix(), ch), 0.97, 1e-12);
}

TEST(Noise, OverridesAreDirected) {
  NoiseModel m = ibm(0.01, kInf, kInf);
  m.cnot_overrides[{2, 1}] = GateNoise{0.05};
  EXPECT_NEAR(m.cnot_noise({2, 1}).depolarizing, 0.05, 0.0);
  EXPECT_NEAR(m.cnot_noise({1, 2}).depolarizing, 0.01, 0.0);
}

TEST(Noise, InjectionErrors) {
  NoiseModel m;
  m.kind = NoiseKind::kChoiInjection;
  GateOp op;
  op.kind = GateKind::kCnot;
  op.qubits = {0, 1};
  EXPECT_EQ(error_kind_of([&] { noisy_gate_channel(m, op); }), ErrorKind::kInvalidArgument);
  m.injected[{0, 1}] = QuantumChannel::identity(2);
  EXPECT_EQ(error_kind_of([&] { m.validate(); }), ErrorKind::kDimensionMismatch);
  EXPECT_EQ(parse_noise_kind("ibm_style"), NoiseKind::kIbmStyle);
  EXPECT_EQ(error_kind_of([] { parse_noise_kind("crosstalk"); }), ErrorKind::kInvalidArgument);
}

TEST(Noise, CnotPairsInFirstUseOrder) {
  const auto pairs = cnot_pairs(circuit("sup", 1));
  ASSERT_FALSE(pairs.empty());
  std::set<QubitPair> seen(pairs.begin(), pairs.end());
  EXPECT_EQ(seen.size(), pairs.size());
}
