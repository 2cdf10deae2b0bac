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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mcmkit/channel.hpp"
#include "mcmkit/circuit.hpp"

namespace mcmkit {

// Amplitude damping 1 - exp(-t/T1) towards |0> plus dephasing so that
// coherences decay as exp(-t/T2). Needs T2 <= 2 T1; infinite times allowed.
QuantumChannel thermal_relaxation(double t1, double t2, double duration);

struct GateNoise {
  double depolarizing = 0.0;
  double t1 = kInf;
  double t2 = kInf;
  double duration = 0.0;

  void validate(int num_qubits) const;
};

enum class NoiseKind { kIdeal, kDepolarizing, kIbmStyle, kChoiInjection };
const char* noise_kind_name(NoiseKind k);
NoiseKind parse_noise_kind(const std::string& s);

using QubitPair = std::pair<int, int>;  // (control, target)

struct NoiseModel {
  NoiseKind kind = NoiseKind::kIdeal;
  // kDepolarizing: p after every 1q / 2q gate.
  double p1q = 0.0;
  double p2q = 0.0;
  // kIbmStyle: gate, then depolarizing on the gate qubits, then thermal
  // relaxation on each gate qubit for the gate duration.
  GateNoise one_qubit;
  GateNoise two_qubit;
  std::map<QubitPair, GateNoise> cnot_overrides;
  // kChoiInjection: every CNOT is replaced by this channel (qubit order
  // control, target); single-qubit gates stay ideal.
  std::map<QubitPair, QuantumChannel> injected;

  void validate() const;
  const GateNoise& cnot_noise(const QubitPair& q) const;
};

// The full noisy channel of one gate on its own qubits.
QuantumChannel noisy_gate_channel(const NoiseModel& model, const GateOp& op);

// One channel per gate, SWAPs expanded to CNOTs first.
std::vector<ChannelOp> attach(const CompiledCircuit& circuit, const NoiseModel& model);

CircuitRun noisy_simulate(const CompiledCircuit& circuit, const NoiseModel& model, const SimulationOptions& opts = {});

// Every directed CNOT pair used by the circuit, in first-use order.
std::vector<QubitPair> cnot_pairs(const CompiledCircuit& circuit);

}  // namespace mcmkit
