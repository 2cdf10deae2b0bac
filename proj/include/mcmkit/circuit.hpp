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

#include <array>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mcmkit/linalg.hpp"
#include "mcmkit/mcm.hpp"

namespace mcmkit {

struct Topology {
  int num_qubits = 0;
  std::vector<std::pair<int, int>> edges;  // undirected

  bool adjacent(int a, int b) const;
  void validate() const;
  // 16-qubit heavy-hex coupling map of the device used for the
  // superradiance runs.
  static Topology guadalupe();
};

// System qubits plus one ordered ancilla train per jump. train[k][0] must be
// adjacent to every system qubit jump k acts on; consecutive train entries
// must be adjacent.
struct Placement {
  std::vector<int> system;
  std::vector<std::vector<int>> trains;

  static Placement guadalupe(DecayMode mode);
};

enum class GateKind { kRot1q, kCnot, kSwap };
const char* gate_kind_name(GateKind k);
GateKind parse_gate_kind(const std::string& s);

struct GateOp {
  GateKind kind = GateKind::kRot1q;
  std::vector<int> qubits;           // CNOT: {control, target}
  std::array<double, 3> angles{};    // U3(theta, phi, lambda) for kRot1q
  int step = 0;                      // 0 = state preparation
  std::string tag;                   // "prep", "collision", "route"
};

// U3(theta, phi, lambda) = Rz(phi) Ry(theta) Rz(lambda) up to phase.
ComplexMatrix u3(double theta, double phi, double lambda);
// Angles of a 2 x 2 unitary, up to global phase.
std::array<double, 3> zyz_angles(const ComplexMatrix& u);
ComplexMatrix cnot_matrix();
ComplexMatrix swap_matrix();
// Matrix of the op on its own qubits (qubits[0] most significant).
ComplexMatrix gate_matrix(const GateOp& op);

// exp[-i theta (s^- s^+ + s^+ s^-)] on (a, b).
ComplexMatrix exchange_gate(double theta);
// Two CNOTs and six single-qubit rotations; exact up to global phase.
std::vector<GateOp> decompose_exchange(double theta, int a, int b);
// Checks that `u` is the exchange gate at `theta` (to 1e-10) and decomposes
// it. Other two-qubit unitaries throw kUnsupported.
std::vector<GateOp> decompose_collision_gate(const ComplexMatrix& u, double theta, int a, int b);

struct CompiledCircuit {
  int num_qubits = 0;
  std::vector<GateOp> ops;
  std::vector<int> system;
  // ops[step_end[n-1] .. step_end[n]) belong to step n; step_end[0] closes
  // the state preparation.
  std::vector<size_t> step_end;
  std::string initial_label;

  int steps() const { return static_cast<int>(step_end.size()) - 1; }
  long cnot_count() const;
  long cnot_count_in_step(int n) const;
};

// Swaps that bring train entry n-1 (0-based) next to the system before
// collision n. A swap whose incoming qubit has never been touched uses the
// two-CNOT form when `fresh_optimization` is set.
std::vector<GateOp> route_step(const Topology& topo, const Placement& placement, int n, std::set<int>& touched,
                               bool fresh_optimization = true);

// CNOTs of the unoptimized ancilla train at collision n: (n - 1)(3n - 1).
long cnot_count_train(int n);

struct CompileOptions {
  bool fresh_optimization = true;
};

// Preparation for "gg", "ee", "sup", "sub", followed by `steps` collision
// blocks. Requires zero system Hamiltonian and factors c sigma^- with
// real non-negative lambda c.
CompiledCircuit compile_mcm(const CollisionSpec& spec, const Topology& topo, const Placement& placement,
                            const std::string& initial_label, int steps, const CompileOptions& opts = {});

// A channel on `qubits` as a column-stacked Liouville matrix
// (4^k x 4^k, qubits[0] most significant); gate_index ties it to a GateOp.
struct ChannelOp {
  std::vector<int> qubits;
  ComplexMatrix liouville;
  size_t gate_index = 0;
};

ComplexMatrix unitary_liouville(const ComplexMatrix& u);
std::vector<ChannelOp> ideal_channel_ops(const CompiledCircuit& circuit);
// SWAP ops replaced by three CNOTs.
CompiledCircuit expand_swaps(const CompiledCircuit& circuit);

struct SimulationOptions {
  int max_live_qubits = 8;
  // When the live register is full, park the least urgent ancilla as a
  // product state instead of failing. Exact for noiseless circuits.
  bool allow_eviction = false;
};

struct CircuitRun {
  std::vector<DensityMatrix> step_states;  // system state after block n
  int max_live = 0;
  int evictions = 0;
};

CircuitRun simulate_circuit(const CompiledCircuit& circuit, const std::vector<ChannelOp>& ops,
                            const SimulationOptions& opts = {});
CircuitRun simulate_circuit(const CompiledCircuit& circuit, const SimulationOptions& opts = {});

}  // namespace mcmkit
