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

#include <cmath>

namespace mcmkit {

QuantumChannel thermal_relaxation(double t1, double t2, double duration) {
  if (!(t1 > 0.0) || !(t2 > 0.0)) throw Error(ErrorKind::kInvalidArgument, "T1 and T2 must be positive");
  if (!(duration >= 0.0) || !std::isfinite(duration)) throw Error(ErrorKind::kInvalidArgument, "bad gate duration");
  if (std::isfinite(t2) && t2 > 2.0 * t1 * (1.0 + 1e-12)) {
    throw Error(ErrorKind::kInvalidArgument, "thermal relaxation needs T2 <= 2 T1");
  }
  const double gamma = std::isfinite(t1) ? -std::expm1(-duration / t1) : 0.0;
  const double f = std::isfinite(t2) ? std::exp(-duration / t2) : 1.0;
  // Column-stacked order: rho00, rho10, rho01, rho11.
  ComplexMatrix s = ComplexMatrix::Zero(4, 4);
  s(0, 0) = 1.0;
  s(0, 3) = gamma;
  s(1, 1) = f;
  s(2, 2) = f;
  s(3, 3) = 1.0 - gamma;
  return QuantumChannel::from_liouville(s, 2, 2);
}

void GateNoise::validate(int num_qubits) const {
  const double d = static_cast<double>(1 << num_qubits);
  if (!(depolarizing >= 0.0 && depolarizing <= d * d / (d * d - 1.0))) {
    throw Error(ErrorKind::kInvalidArgument, "depolarizing rate out of range");
  }
  thermal_relaxation(t1, t2, duration);
}

const char* noise_kind_name(NoiseKind k) {
  switch (k) {
    case NoiseKind::kIdeal: return "ideal";
    case NoiseKind::kDepolarizing: return "depolarizing";
    case NoiseKind::kIbmStyle: return "ibm_style";
    case NoiseKind::kChoiInjection: return "choi_injection";
  }
  return "?";
}

NoiseKind parse_noise_kind(const std::string& s) {
  if (s == "ideal") return NoiseKind::kIdeal;
  if (s == "depolarizing") return NoiseKind::kDepolarizing;
  if (s == "ibm_style") return NoiseKind::kIbmStyle;
  if (s == "choi_injection") return NoiseKind::kChoiInjection;
  throw Error(ErrorKind::kInvalidArgument, "unknown noise model kind '" + s + "'");
}

void NoiseModel::validate() const {
  switch (kind) {
    case NoiseKind::kIdeal: break;
    case NoiseKind::kDepolarizing:
      GateNoise{p1q}.validate(1);
      GateNoise{p2q}.validate(2);
      break;
    case NoiseKind::kIbmStyle:
      one_qubit.validate(1);
      two_qubit.validate(2);
      for (const auto& [q, g] : cnot_overrides) g.validate(2);
      break;
    case NoiseKind::kChoiInjection:
      for (const auto& [q, ch] : injected) {
        if (ch.dim_in() != 4 || ch.dim_out() != 4) {
          throw Error(ErrorKind::kDimensionMismatch, "injected CNOT channels must be two-qubit");
        }
        if (!ch.is_cptp(1e-7)) throw Error(ErrorKind::kNotPositive, "injected channel is not CPTP");
      }
      break;
  }
}

const GateNoise& NoiseModel::cnot_noise(const QubitPair& q) const {
  auto it = cnot_overrides.find(q);
  return it == cnot_overrides.end() ? two_qubit : it->second;
}

namespace {

QuantumChannel relax_each(const GateNoise& g, int num_qubits) {
  const QuantumChannel tr = thermal_relaxation(g.t1, g.t2, g.duration);
  QuantumChannel out = tr;
  for (int q = 1; q < num_qubits; ++q) out = tensor(out, tr);
  return out;
}

QuantumChannel ibm_gate(const ComplexMatrix& u, const GateNoise& g) {
  const int n = log2_exact(u.rows());
  return compose_all({QuantumChannel::unitary(u), depolarizing(static_cast<int>(u.rows()), g.depolarizing),
                      relax_each(g, n)});
}

}  // namespace

QuantumChannel noisy_gate_channel(const NoiseModel& model, const GateOp& op) {
  const ComplexMatrix u = gate_matrix(op);
  const bool two = op.qubits.size() == 2;
  switch (model.kind) {
    case NoiseKind::kIdeal: return QuantumChannel::unitary(u);
    case NoiseKind::kDepolarizing:
      return compose(QuantumChannel::unitary(u), depolarizing(static_cast<int>(u.rows()), two ? model.p2q : model.p1q));
    case NoiseKind::kIbmStyle:
      if (op.kind == GateKind::kCnot) return ibm_gate(u, model.cnot_noise({op.qubits[0], op.qubits[1]}));
      return ibm_gate(u, two ? model.two_qubit : model.one_qubit);
    case NoiseKind::kChoiInjection: {
      if (op.kind == GateKind::kRot1q) return QuantumChannel::unitary(u);
      if (op.kind != GateKind::kCnot) throw Error(ErrorKind::kUnsupported, "choi_injection handles CNOT gates only");
      auto it = model.injected.find({op.qubits[0], op.qubits[1]});
      if (it == model.injected.end()) {
        throw Error(ErrorKind::kInvalidArgument, "no injected channel for CNOT(" + std::to_string(op.qubits[0]) + "," +
                                                     std::to_string(op.qubits[1]) + ")");
      }
      return it->second;
    }
  }
  throw Error(ErrorKind::kUnsupported, "unknown noise kind");
}

std::vector<ChannelOp> attach(const CompiledCircuit& circuit, const NoiseModel& model) {
  model.validate();
  const CompiledCircuit c = expand_swaps(circuit);
  if (c.ops.size() != circuit.ops.size()) {
    throw Error(ErrorKind::kInvalidArgument, "attach: expand SWAP gates before attaching noise");
  }
  std::vector<ChannelOp> out;
  out.reserve(c.ops.size());
  for (size_t i = 0; i < c.ops.size(); ++i) {
    out.push_back({c.ops[i].qubits, noisy_gate_channel(model, c.ops[i]).liouville(), i});
  }
  return out;
}

CircuitRun noisy_simulate(const CompiledCircuit& circuit, const NoiseModel& model, const SimulationOptions& opts) {
  const CompiledCircuit c = expand_swaps(circuit);
  return simulate_circuit(c, attach(c, model), opts);
}

std::vector<QubitPair> cnot_pairs(const CompiledCircuit& circuit) {
  std::vector<QubitPair> out;
  for (const auto& op : expand_swaps(circuit).ops) {
    if (op.kind != GateKind::kCnot) continue;
    const QubitPair q{op.qubits[0], op.qubits[1]};
    if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
  }
  return out;
}

}  // namespace mcmkit
