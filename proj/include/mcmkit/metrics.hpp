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

#include <string>
#include <vector>

#include "mcmkit/channel.hpp"
#include "mcmkit/random.hpp"
#include "mcmkit/sdp.hpp"

namespace mcmkit {

struct DiamondOptions {
  double certify_tol = 1e-6;  // required upper - lower
  SdpOptions sdp;
};

struct DiamondResult {
  double value = 0.0;  // midpoint of the certified interval
  double lower = 0.0;  // achieved by an explicit input state
  double upper = 0.0;  // from a dual feasible point
  int iterations = 0;
};

// ||Phi||_diamond of a Hermiticity-preserving map given by its Choi matrix
// (same convention as QuantumChannel). kNonConvergence if the certified
// interval is wider than certify_tol.
DiamondResult diamond_norm(const ComplexMatrix& choi, int dim_in, int dim_out, const DiamondOptions& opts = {});
DiamondResult diamond_norm(const QuantumChannel& phi, const DiamondOptions& opts = {});
// 0.5 ||a - b||_diamond.
DiamondResult diamond_distance(const QuantumChannel& a, const QuantumChannel& b, const DiamondOptions& opts = {});
DiamondResult diamond_distance(const ComplexMatrix& u, const QuantumChannel& t, const DiamondOptions& opts = {});

// max over random pure inputs on reference kron input of
// ||(id kron Phi)(psi)||_1; a lower bound on the diamond norm.
double diamond_norm_lower_bound(const ComplexMatrix& choi, int dim_in, int dim_out, int starts, Rng& rng);
// max over random pure inputs of ||Phi(psi)||_1 (no reference system).
double induced_trace_norm_lower_bound(const QuantumChannel& phi, int starts, Rng& rng);

// <Omega| (id kron T)(Omega) |Omega> with the normalized maximally
// entangled state, so F_e(identity) = 1.
double entanglement_fidelity(const QuantumChannel& t);
// Entanglement fidelity of U^+ composed with T.
double entanglement_fidelity(const ComplexMatrix& u, const QuantumChannel& t);
// (d F_e + 1) / (d + 1).
double average_gate_fidelity(const ComplexMatrix& u, const QuantumChannel& t);
double average_gate_infidelity(const ComplexMatrix& u, const QuantumChannel& t);
// Tr[T_u^+ T_u] / (d^2 - 1) from the normalized Pauli-Liouville matrix.
double unitarity(const QuantumChannel& t);
// (d - 1)/d (1 - sqrt(u)).
double incoherence(const QuantumChannel& t);

// Diamond-distance upper bounds from the average infidelity r alone, and
// from r together with the unitarity u.
double diamond_bound_from_infidelity(int d, double r);
double diamond_bound_from_unitarity(int d, double r, double u);

// Haar averages (cross-checks for the closed forms).
double average_gate_fidelity_monte_carlo(const ComplexMatrix& u, const QuantumChannel& t, int samples, Rng& rng);
double unitarity_monte_carlo(const QuantumChannel& t, int samples, Rng& rng);

struct MetricsReport {
  std::string name;
  int dim = 0;
  double infidelity = 0.0;
  double unitarity = 0.0;
  double incoherence = 0.0;
  double incoherence_ratio = 0.0;  // omega / r (0 when r = 0)
  double diamond = 0.0;
  double diamond_lower = 0.0;
  double diamond_upper = 0.0;
  double bound_infidelity = 0.0;
  double bound_unitarity = 0.0;
  double infidelity_std = -1.0;  // bootstrap, < 0 when not computed

  // Lists every violated ordering (empty when all hold):
  // d <= both bounds, omega <= r, u >= (1 - d r/(d-1))^2.
  std::vector<std::string> violations(double tol = 1e-7) const;
};

MetricsReport compute_metrics(const ComplexMatrix& u, const QuantumChannel& t, const std::string& name = "",
                              const DiamondOptions& opts = {});

}  // namespace mcmkit
