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

#include <utility>
#include <vector>

#include "mcmkit/channel.hpp"
#include "mcmkit/lindblad.hpp"

namespace mcmkit {

enum class TrotterOrder { kFirst, kSecond };

// Jump k of the target generator: L_k = sum_m F_m^(k) with rate |lambda_k|^2.
// An empty factor matrix means F_m^(k) = 0.
struct CollisionJump {
  cplx lambda = 1.0;
  std::vector<ComplexMatrix> factors;
};

// Collision model on M qubit subsystems. One fresh ancilla per jump and
// step, each starting in |0>; the coupling is g_I = dt^(-1/2).
struct CollisionSpec {
  int subsystems = 2;
  double dt = 0.1;
  int steps = 5;
  std::vector<CollisionJump> jumps;
  ComplexMatrix system_hamiltonian;  // empty means zero
  TrotterOrder order = TrotterOrder::kSecond;

  double coupling() const;
  int num_ancillas() const { return static_cast<int>(jumps.size()); }
  int system_dim() const { return 1 << subsystems; }
  bool factor_is_zero(int k, int m) const;
  void validate() const;
};

// Collective: one jump with F_1 = F_2 = sigma^-, lambda = sqrt(gamma).
// Local: two jumps, each acting on one qubit; first-order ordering.
CollisionSpec superradiance_spec(const SuperradianceModel& model, double dt, int steps);

LindbladGenerator target_generator(const CollisionSpec& spec);

// exp[-i g_I duration (lambda_k F_m sigma_E^+ + h.c.)] on subsystem m kron
// ancilla k (4 x 4).
ComplexMatrix collision_gate(const CollisionSpec& spec, int k, int m, double duration);

struct GateSlot {
  int subsystem;
  double duration;
};
// Gates of collision k in time order. Second order is the symmetric
// sandwich M..2 (dt/2), 1 (dt), 2..M (dt/2) over non-zero factors.
std::vector<GateSlot> trotter_sequence(const CollisionSpec& spec, int k);

// U_S U_I on the system (qubits 0..M-1) kron ancillas (qubit M + k); the
// ancilla collisions run in ascending k.
ComplexMatrix step_unitary(const CollisionSpec& spec);
// phi[rho] = Tr_E[U (rho kron |0..0><0..0|) U^+].
QuantumChannel step_map(const CollisionSpec& spec);

// states[n] = phi^n rho0 for n = 0..steps. Each state is cleaned by clipping
// eigenvalues below -1e-10 and rescaling the trace.
std::vector<DensityMatrix> simulate(const CollisionSpec& spec, const DensityMatrix& rho0, int steps);

// errors[n-1] = || e^{L n dt} rho0 - phi^n rho0 ||_1 for n = 1..steps.
std::vector<double> ideal_error(const CollisionSpec& spec, const DensityMatrix& rho0, int steps);

// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace mcmkit
