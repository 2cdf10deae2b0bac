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

#include "mcmkit/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace mcmkit {

double interaction_scale(const CollisionSpec& spec) {
  spec.validate();
  double lam = 0.0;
  if (spec.system_hamiltonian.size() != 0) lam = operator_norm(spec.system_hamiltonian);
  for (int k = 0; k < spec.num_ancillas(); ++k) {
    for (int m = 0; m < spec.subsystems; ++m) {
      if (spec.factor_is_zero(k, m)) continue;
      const ComplexMatrix a = spec.jumps[k].lambda * kron(spec.jumps[k].factors[m], sigma_plus());
      lam = std::max(lam, operator_norm(a + a.adjoint()));
    }
  }
  return lam;
}

StepBound single_step_bound(const StepBoundParams& p) {
  if (p.subsystems < 1 || p.jumps < 1 || !(p.scale >= 0.0) || !(p.dt > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "step bound: M, J >= 1, Lambda >= 0 and dt > 0 required");
  }
  StepBound b;
  double r = 1.0;
  if (p.r) {
    if (!(*p.r >= 0.0)) throw Error(ErrorKind::kInvalidArgument, "step bound: R must be >= 0");
    r = *p.r;
  } else if (p.strict) {
    throw Error(ErrorKind::kInvalidArgument, "step bound: R is required in strict mode");
  } else {
    b.r_placeholder = true;
  }
  const double x = p.subsystems * p.scale * (1.0 + p.jumps * r * p.scale) * p.dt;
  b.value = 2.0 * M_E * x * x;
  if (p.pol1 || p.pol2) {
    b.leading_term_only = false;
    b.value += p.pol1.value_or(0.0) * p.dt * p.dt + p.pol2.value_or(0.0) * p.dt * p.dt * p.dt;
  }
  return b;
}

double noisy_map_bound(const std::vector<double>& gate_distances, const std::vector<double>& prep_distances) {
  double s = 0.0;
  for (const auto* list : {&gate_distances, &prep_distances}) {
    for (double d : *list) {
      if (!(d >= 0.0 && d <= 1.0)) throw Error(ErrorKind::kInvalidArgument, "diamond distances must lie in [0, 1]");
      s += d;
    }
  }
  return 2.0 * s;
}

GlobalBound global_bound(int n, double step_error, double noisy_step_error) {
  if (n < 0 || !(step_error >= 0.0) || !(noisy_step_error >= 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "global bound: n, errors must be >= 0");
  }
  GlobalBound g;
  g.value = n * (step_error + noisy_step_error);
  g.vacuous = g.value > 1.0;
  return g;
}

double composed_infidelity_bound(int m, double r, ErrorRegime regime) {
  if (m < 0 || !(r >= 0.0 && r <= 1.0)) throw Error(ErrorKind::kInvalidArgument, "infidelity bound: bad inputs");
  const double v = regime == ErrorRegime::kCoherent ? static_cast<double>(m) * m * r : m * r;
  return std::min(1.0, v);
}

BoundReport bound_report(const StepBoundParams& params, const std::vector<double>& gate_distances,
                         const std::vector<double>& prep_distances, int steps) {
  BoundReport rep;
  rep.step = single_step_bound(params);
  rep.noisy_step_error = noisy_map_bound(gate_distances, prep_distances);
  for (int n = 1; n <= steps; ++n) {
    BoundRow row;
    row.n = n;
    row.step_error = rep.step.value;
    row.noisy_step_error = rep.noisy_step_error;
    row.global = global_bound(n, rep.step.value, rep.noisy_step_error);
    if (row.global.vacuous && rep.first_vacuous_step < 0) rep.first_vacuous_step = n;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace mcmkit
