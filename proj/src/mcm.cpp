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

#include "mcmkit/mcm.hpp"

#include <cmath>

namespace mcmkit {

double CollisionSpec::coupling() const { return 1.0 / std::sqrt(dt); }

bool CollisionSpec::factor_is_zero(int k, int m) const {
  const ComplexMatrix& f = jumps[k].factors[m];
  return f.size() == 0 || f.cwiseAbs().maxCoeff() == 0.0 || jumps[k].lambda == 0.0;
}

void CollisionSpec::validate() const {
  if (subsystems < 1 || subsystems > 6) throw Error(ErrorKind::kInvalidArgument, "subsystem count must be in 1..6");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw Error(ErrorKind::kInvalidArgument, "dt must be positive");
  if (steps < 0) throw Error(ErrorKind::kInvalidArgument, "steps must be >= 0");
  if (jumps.empty()) throw Error(ErrorKind::kInvalidArgument, "collision model needs at least one jump");
  for (const auto& j : jumps) {
    if (static_cast<int>(j.factors.size()) != subsystems) {
      throw Error(ErrorKind::kDimensionMismatch, "each jump needs one local factor per subsystem");
    }
    for (const auto& f : j.factors) {
      if (f.size() != 0 && (f.rows() != 2 || f.cols() != 2)) {
        throw Error(ErrorKind::kDimensionMismatch, "local factors must be 2 x 2");
      }
    }
  }
  if (system_hamiltonian.size() != 0) {
    if (system_hamiltonian.rows() != system_dim() || system_hamiltonian.cols() != system_dim()) {
      throw Error(ErrorKind::kDimensionMismatch, "system Hamiltonian dimension");
    }
    if (!is_hermitian(system_hamiltonian)) throw Error(ErrorKind::kNotHermitian, "system Hamiltonian");
  }
}

CollisionSpec superradiance_spec(const SuperradianceModel& model, double dt, int steps) {
  if (!(model.gamma >= 0.0)) throw Error(ErrorKind::kInvalidArgument, "gamma must be >= 0");
  CollisionSpec s;
  s.subsystems = 2;
  s.dt = dt;
  s.steps = steps;
  const cplx lam = std::sqrt(model.gamma);
  if (model.mode == DecayMode::kCollective) {
    s.jumps.push_back({lam, {sigma_minus(), sigma_minus()}});
    s.order = TrotterOrder::kSecond;
  } else {
    s.jumps.push_back({lam, {sigma_minus(), ComplexMatrix()}});
    s.jumps.push_back({lam, {ComplexMatrix(), sigma_minus()}});
    s.order = TrotterOrder::kFirst;
  }
  s.validate();
  return s;
}

LindbladGenerator target_generator(const CollisionSpec& spec) {
  spec.validate();
  const int n = spec.subsystems;
  std::vector<JumpOperator> jumps;
  for (int k = 0; k < spec.num_ancillas(); ++k) {
    ComplexMatrix l = ComplexMatrix::Zero(spec.system_dim(), spec.system_dim());
    for (int m = 0; m < n; ++m) {
      if (spec.factor_is_zero(k, m)) continue;
      l += embed_operator(spec.jumps[k].factors[m], {m}, n);
    }
    jumps.push_back({std::norm(spec.jumps[k].lambda), l});
  }
  ComplexMatrix h = spec.system_hamiltonian.size() ? spec.system_hamiltonian
                                                   : ComplexMatrix::Zero(spec.system_dim(), spec.system_dim());
  return LindbladGenerator(h, jumps);
}

ComplexMatrix collision_gate(const CollisionSpec& spec, int k, int m, double duration) {
  if (k < 0 || k >= spec.num_ancillas() || m < 0 || m >= spec.subsystems) {
    throw Error(ErrorKind::kInvalidArgument, "collision_gate: index out of range");
  }
  if (!(duration >= 0.0) || !std::isfinite(duration)) {
    throw Error(ErrorKind::kInvalidArgument, "collision_gate: duration must be >= 0");
  }
  if (spec.factor_is_zero(k, m)) return identity(4);
  const ComplexMatrix a = spec.jumps[k].lambda * kron(spec.jumps[k].factors[m], sigma_plus());
  const ComplexMatrix h = a + a.adjoint();
  return matrix_exp(cplx(0.0, -spec.coupling() * duration) * h);
}

std::vector<GateSlot> trotter_sequence(const CollisionSpec& spec, int k) {
  std::vector<int> active;
  for (int m = 0; m < spec.subsystems; ++m) {
    if (!spec.factor_is_zero(k, m)) active.push_back(m);
  }
  std::vector<GateSlot> seq;
  if (active.empty()) return seq;
  if (spec.order == TrotterOrder::kFirst) {
    for (int m : active) seq.push_back({m, spec.dt});
    return seq;
  }
  const double h = 0.5 * spec.dt;
  for (size_t i = active.size(); i-- > 1;) seq.push_back({active[i], h});
  seq.push_back({active[0], spec.dt});
  for (size_t i = 1; i < active.size(); ++i) seq.push_back({active[i], h});
  return seq;
}

ComplexMatrix step_unitary(const CollisionSpec& spec) {
  spec.validate();
  const int n = spec.subsystems + spec.num_ancillas();
  ComplexMatrix u = identity(1 << n);
  for (int k = 0; k < spec.num_ancillas(); ++k) {
    for (const GateSlot& g : trotter_sequence(spec, k)) {
      u = embed_operator(collision_gate(spec, k, g.subsystem, g.duration), {g.subsystem, spec.subsystems + k}, n) * u;
    }
  }
  if (spec.system_hamiltonian.size() != 0) {
    const ComplexMatrix us = matrix_exp(cplx(0.0, -spec.dt) * spec.system_hamiltonian);
    u = kron(us, identity(1 << spec.num_ancillas())) * u;
  }
  return u;
}

QuantumChannel step_map(const CollisionSpec& spec) {
  const ComplexMatrix u = step_unitary(spec);
  const int ds = spec.system_dim();
  const int de = 1 << spec.num_ancillas();
  std::vector<ComplexMatrix> kraus;
  for (int e = 0; e < de; ++e) {
    ComplexMatrix k(ds, ds);
    for (int s = 0; s < ds; ++s) {
      for (int s2 = 0; s2 < ds; ++s2) k(s, s2) = u(static_cast<long>(s) * de + e, static_cast<long>(s2) * de);
    }
    kraus.push_back(k);
  }
  return QuantumChannel::from_kraus(kraus);
}

std::vector<DensityMatrix> simulate(const CollisionSpec& spec, const DensityMatrix& rho0, int steps) {
  if (steps < 0) throw Error(ErrorKind::kInvalidArgument, "steps must be >= 0");
  if (rho0.dim() != spec.system_dim()) throw Error(ErrorKind::kDimensionMismatch, "initial state dimension");
  const ComplexMatrix s = step_map(spec).liouville();
  std::vector<DensityMatrix> out{rho0};
  ComplexMatrix rho = rho0.matrix();
  for (int n = 1; n <= steps; ++n) {
    rho = clip_and_renormalize(unvec(s * vec(rho), spec.system_dim(), spec.system_dim()));
    out.emplace_back(rho);
  }
  return out;
}

std::vector<double> ideal_error(const CollisionSpec& spec, const DensityMatrix& rho0, int steps) {
  const auto traj = simulate(spec, rho0, steps);
  const LindbladGenerator gen = target_generator(spec);
  std::vector<double> err;
  for (int n = 1; n <= steps; ++n) {
    const DensityMatrix exact = evolve(gen, rho0, n * spec.dt);
    err.push_back(trace_norm(exact.matrix() - traj[n].matrix()));
  }
  return err;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw Error(ErrorKind::kInvalidArgument, "loglog_slope: need >= 2 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw Error(ErrorKind::kInvalidArgument, "loglog_slope: values must be > 0");
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace mcmkit
