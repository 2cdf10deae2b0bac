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
#include "mcmkit/linalg.hpp"

namespace mcmkit {

struct JumpOperator {
  double rate = 0.0;  // Gamma_k >= 0
  ComplexMatrix op;
};

// L[rho] = -i[H, rho] + sum_k Gamma_k (L_k rho L_k^+ - 1/2 {L_k^+ L_k, rho}).
class LindbladGenerator {
 public:
  LindbladGenerator(ComplexMatrix hamiltonian, std::vector<JumpOperator> jumps);

  int dim() const { return static_cast<int>(h_.rows()); }
  const ComplexMatrix& hamiltonian() const { return h_; }
  const std::vector<JumpOperator>& jumps() const { return jumps_; }

  // Column-stacking superoperator (d^2 x d^2).
  ComplexMatrix liouvillian() const;
  // L[rho] from the operator form directly, without the superoperator.
  ComplexMatrix apply(const ComplexMatrix& rho) const;
  // exp(L t) as a channel.
  QuantumChannel propagator(double t) const;

 private:
  ComplexMatrix h_;
  std::vector<JumpOperator> jumps_;
};

DensityMatrix evolve(const LindbladGenerator& gen, const DensityMatrix& rho0, double t);

enum class DecayMode { kCollective, kLocal };
const char* decay_mode_name(DecayMode m);
DecayMode parse_decay_mode(const std::string& s);

// Two-qubit decay with |e> = |1>, qubit 1 the left tensor factor.
// Collective: one jump sigma1^- + sigma2^- at rate gamma.
// Local: sigma1^- and sigma2^-, each at rate gamma. No Hamiltonian.
struct SuperradianceModel {
  double gamma = 1.0;
  DecayMode mode = DecayMode::kCollective;

  LindbladGenerator generator() const;
  // H = (sigma1^z + sigma2^z) / 2 with sigma^z = |e><e| - |g><g|.
  static ComplexMatrix energy();
};

// Named two-qubit states: "gg", "ee", "sup" = (|ge> + |eg>)/sqrt2,
// "sub" = (|eg> - |ge>)/sqrt2.
DensityMatrix named_state(const std::string& label);
std::vector<std::string> named_state_labels();

// Closed-form solutions. Supported: collective {sub, sup, ee, gg};
// local {sub, gg}. Anything else throws kUnsupported.
DensityMatrix analytic_oracle(const SuperradianceModel& model, const std::string& label, double t);
bool has_analytic_oracle(DecayMode mode, const std::string& label);

// P_em(t) = -Tr[H L[e^{Lt} rho0]].
double emission_power(const SuperradianceModel& model, const DensityMatrix& rho0, double t);
// Same quantity evaluated on the closed-form state.
double emission_power_analytic(const SuperradianceModel& model, const std::string& label, double t);

}  // namespace mcmkit
