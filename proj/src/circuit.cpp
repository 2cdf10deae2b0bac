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

#include "mcmkit/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "mcmkit/kernels.hpp"

namespace mcmkit {

bool Topology::adjacent(int a, int b) const {
  for (const auto& [x, y] : edges) {
    if ((x == a && y == b) || (x == b && y == a)) return true;
  }
  return false;
}

void Topology::validate() const {
  if (num_qubits <= 0) throw Error(ErrorKind::kInvalidArgument, "topology needs at least one qubit");
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= num_qubits || b >= num_qubits || a == b) {
      throw Error(ErrorKind::kInvalidArgument,
                  "topology edge [" + std::to_string(a) + "," + std::to_string(b) + "] is invalid");
    }
  }
}

Topology Topology::guadalupe() {
  Topology t;
  t.num_qubits = 16;
  t.edges = {{0, 1},  {1, 2},  {1, 4},  {2, 3},   {3, 5},   {4, 7},   {5, 8},   {6, 7},
             {7, 10}, {8, 9},  {8, 11}, {10, 12}, {11, 14}, {12, 13}, {12, 15}, {13, 14}};
  return t;
}

Placement Placement::guadalupe(DecayMode mode) {
  Placement p;
  p.system = {0, 2};
  p.trains.push_back({1, 4, 7, 10, 12});
  if (mode == DecayMode::kLocal) p.trains.push_back({3, 5, 8, 11, 14});
  return p;
}

const char* gate_kind_name(GateKind k) {
  switch (k) {
    case GateKind::kRot1q: return "ROT1Q";
    case GateKind::kCnot: return "CNOT";
    case GateKind::kSwap: return "SWAP";
  }
  return "?";
}

GateKind parse_gate_kind(const std::string& s) {
  if (s == "ROT1Q") return GateKind::kRot1q;
  if (s == "CNOT") return GateKind::kCnot;
  if (s == "SWAP") return GateKind::kSwap;
  throw Error(ErrorKind::kParse, "unknown gate kind '" + s + "'");
}

ComplexMatrix u3(double theta, double phi, double lambda) {
  const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
  ComplexMatrix m(2, 2);
  m << c, -std::polar(s, lambda), std::polar(s, phi), std::polar(c, phi + lambda);
  return m;
}

std::array<double, 3> zyz_angles(const ComplexMatrix& u) {
  if (u.rows() != 2 || !is_unitary(u, 1e-9)) throw Error(ErrorKind::kNotUnitary, "zyz_angles needs a 2x2 unitary");
  const double a = std::abs(u(0, 0)), b = std::abs(u(1, 0));
  const double theta = 2.0 * std::atan2(b, a);
  constexpr double eps = 1e-12;
  double phi, lambda;
  if (a > eps && b > eps) {
    const double g = std::arg(u(0, 0));
    phi = std::arg(u(1, 0)) - g;
    lambda = std::arg(-u(0, 1)) - g;
  } else if (b <= eps) {
    lambda = 0.0;
    phi = std::arg(u(1, 1)) - std::arg(u(0, 0));
  } else {
    lambda = 0.0;
    const double g = std::arg(-u(0, 1));
    phi = std::arg(u(1, 0)) - g;
  }
  return {theta, phi, lambda};
}

ComplexMatrix cnot_matrix() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
  return m;
}

ComplexMatrix swap_matrix() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
  return m;
}

ComplexMatrix gate_matrix(const GateOp& op) {
  switch (op.kind) {
    case GateKind::kRot1q: return u3(op.angles[0], op.angles[1], op.angles[2]);
    case GateKind::kCnot: return cnot_matrix();
    case GateKind::kSwap: return swap_matrix();
  }
  throw Error(ErrorKind::kUnsupported, "unknown gate kind");
}

ComplexMatrix exchange_gate(double theta) {
  ComplexMatrix u = ComplexMatrix::Identity(4, 4);
  u(1, 1) = u(2, 2) = std::cos(theta);
  u(1, 2) = u(2, 1) = cplx(0.0, -std::sin(theta));
  return u;
}

namespace {

GateOp rot(int q, const ComplexMatrix& u, const std::string& tag) {
  GateOp g;
  g.kind = GateKind::kRot1q;
  g.qubits = {q};
  g.angles = zyz_angles(u);
  g.tag = tag;
  return g;
}

GateOp cx(int c, int t, const std::string& tag) {
  GateOp g;
  g.kind = GateKind::kCnot;
  g.qubits = {c, t};
  g.tag = tag;
  return g;
}

ComplexMatrix rx(double t) {
  ComplexMatrix m(2, 2);
  m << std::cos(0.5 * t), cplx(0, -std::sin(0.5 * t)), cplx(0, -std::sin(0.5 * t)), std::cos(0.5 * t);
  return m;
}

ComplexMatrix rz(double t) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = std::polar(1.0, -0.5 * t);
  m(1, 1) = std::polar(1.0, 0.5 * t);
  return m;
}

ComplexMatrix hadamard() {
  ComplexMatrix m(2, 2);
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}

}  // namespace

// XX + YY = 2 (s^- s^+ + s^+ s^-). Conjugating by Rx(pi/2) on both qubits
// turns ZZ into YY, and CNOT (a -> b) maps X_a to X_a X_b and Z_b to Z_a Z_b.
std::vector<GateOp> decompose_exchange(double theta, int a, int b) {
  const std::string tag = "collision";
  return {rot(a, rx(-M_PI / 2), tag), rot(b, rx(-M_PI / 2), tag), cx(a, b, tag),
          rot(a, rx(theta), tag),     rot(b, rz(theta), tag),      cx(a, b, tag),
          rot(a, rx(M_PI / 2), tag),  rot(b, rx(M_PI / 2), tag)};
}

std::vector<GateOp> decompose_collision_gate(const ComplexMatrix& u, double theta, int a, int b) {
  if (u.rows() != 4 || u.cols() != 4) throw Error(ErrorKind::kDimensionMismatch, "collision gate must be 4 x 4");
  if (!is_unitary(u, 1e-9)) throw Error(ErrorKind::kNotUnitary, "collision gate is not unitary");
  const ComplexMatrix target = exchange_gate(theta);
  cplx overlap = (target.adjoint() * u).trace();
  if (std::abs(overlap) < 1e-12) throw Error(ErrorKind::kUnsupported, "gate is not an exchange rotation");
  overlap /= std::abs(overlap);
  if ((u - overlap * target).cwiseAbs().maxCoeff() > 1e-10) {
    throw Error(ErrorKind::kUnsupported, "gate is not exp[-i theta (s-s+ + s+s-)] at the given theta");
  }
  return decompose_exchange(theta, a, b);
}

long CompiledCircuit::cnot_count() const {
  long c = 0;
  for (const auto& op : ops) c += op.kind == GateKind::kCnot ? 1 : (op.kind == GateKind::kSwap ? 3 : 0);
  return c;
}

long CompiledCircuit::cnot_count_in_step(int n) const {
  if (n < 0 || n > steps()) throw Error(ErrorKind::kInvalidArgument, "step out of range");
  const size_t lo = n == 0 ? 0 : step_end[n - 1], hi = step_end[n];
  long c = 0;
  for (size_t i = lo; i < hi; ++i) {
    c += ops[i].kind == GateKind::kCnot ? 1 : (ops[i].kind == GateKind::kSwap ? 3 : 0);
  }
  return c;
}

namespace {

void append_swap(std::vector<GateOp>& out, int holder, int incoming, std::set<int>& touched, bool fresh_opt,
                 const std::string& tag) {
  if (fresh_opt && !touched.count(incoming)) {
    // incoming is still |0>: two CNOTs move holder's state onto it.
    out.push_back(cx(holder, incoming, tag));
    out.push_back(cx(incoming, holder, tag));
  } else {
    out.push_back(cx(holder, incoming, tag));
    out.push_back(cx(incoming, holder, tag));
    out.push_back(cx(holder, incoming, tag));
  }
  touched.insert(holder);
  touched.insert(incoming);
}

}  // namespace

std::vector<GateOp> route_step(const Topology& topo, const Placement& placement, int n, std::set<int>& touched,
                               bool fresh_optimization) {
  std::vector<GateOp> out;
  if (n <= 1) return out;
  for (const auto& train : placement.trains) {
    if (n > static_cast<int>(train.size())) {
      throw Error(ErrorKind::kInvalidArgument, "ancilla train shorter than the collision count");
    }
    for (int j = n - 2; j >= 0; --j) {
      if (!topo.adjacent(train[j], train[j + 1])) {
        throw Error(ErrorKind::kInvalidArgument, "train qubits " + std::to_string(train[j]) + " and " +
                                                     std::to_string(train[j + 1]) + " are not coupled");
      }
      append_swap(out, train[j], train[j + 1], touched, fresh_optimization, "route");
    }
  }
  for (auto& g : out) g.step = n;
  return out;
}

long cnot_count_train(int n) {
  if (n < 1) throw Error(ErrorKind::kInvalidArgument, "collision index must be >= 1");
  return static_cast<long>(n - 1) * (3L * n - 1);
}

namespace {

double collision_angle(const CollisionSpec& spec, int k, int m, double duration) {
  const ComplexMatrix& f = spec.jumps[k].factors[m];
  const cplx c = spec.jumps[k].lambda * f(0, 1);
  if (std::abs(f(0, 0)) + std::abs(f(1, 0)) + std::abs(f(1, 1)) > 1e-14 || std::abs(c.imag()) > 1e-14 ||
      c.real() < 0.0) {
    throw Error(ErrorKind::kUnsupported, "compiler supports local factors c sigma^- with real c lambda >= 0");
  }
  return spec.coupling() * duration * c.real();
}

void validate_placement(const CollisionSpec& spec, const Topology& topo, const Placement& p, int steps) {
  if (static_cast<int>(p.system.size()) != spec.subsystems) {
    throw Error(ErrorKind::kInvalidArgument, "placement system size differs from the model");
  }
  if (static_cast<int>(p.trains.size()) != spec.num_ancillas()) {
    throw Error(ErrorKind::kInvalidArgument, "placement needs one ancilla train per jump");
  }
  std::set<int> seen;
  auto claim = [&](int q) {
    if (q < 0 || q >= topo.num_qubits) throw Error(ErrorKind::kInvalidArgument, "placement qubit out of range");
    if (!seen.insert(q).second) throw Error(ErrorKind::kInvalidArgument, "placement reuses qubit " + std::to_string(q));
  };
  for (int q : p.system) claim(q);
  for (int k = 0; k < spec.num_ancillas(); ++k) {
    const auto& train = p.trains[k];
    if (static_cast<int>(train.size()) < std::max(1, steps)) {
      throw Error(ErrorKind::kInvalidArgument, "ancilla train shorter than the step count");
    }
    for (int q : train) claim(q);
    for (int m = 0; m < spec.subsystems; ++m) {
      if (!spec.factor_is_zero(k, m) && !topo.adjacent(train[0], p.system[m])) {
        throw Error(ErrorKind::kInvalidArgument, "first ancilla of train " + std::to_string(k) +
                                                     " is not coupled to system qubit " + std::to_string(p.system[m]));
      }
    }
    for (size_t j = 0; j + 1 < train.size() && static_cast<int>(j + 1) < steps; ++j) {
      if (!topo.adjacent(train[j], train[j + 1])) {
        throw Error(ErrorKind::kInvalidArgument, "train qubits are not coupled in sequence");
      }
    }
  }
}

std::vector<GateOp> state_prep(const std::string& label, const Topology& topo, const Placement& p,
                               std::set<int>& touched, bool fresh_opt) {
  std::vector<GateOp> out;
  if (p.system.size() != 2) throw Error(ErrorKind::kUnsupported, "state preparation is defined for two qubits");
  const int s0 = p.system[0], s1 = p.system[1];
  const ComplexMatrix x = pauli_x();
  if (label == "gg") return out;
  if (label == "ee") {
    out.push_back(rot(s0, x, "prep"));
    out.push_back(rot(s1, x, "prep"));
    touched.insert(s0);
    touched.insert(s1);
    return out;
  }
  if (label != "sup" && label != "sub") {
    throw Error(ErrorKind::kUnsupported, "no preparation circuit for state '" + label + "'");
  }
  int helper = -1;
  for (const auto& train : p.trains) {
    if (topo.adjacent(train[0], s0) && topo.adjacent(train[0], s1)) {
      helper = train[0];
      break;
    }
  }
  if (helper < 0) throw Error(ErrorKind::kInvalidArgument, "no ancilla coupled to both system qubits");
  // Bell pair on (s0, helper), then move helper's half onto s1.
  const ComplexMatrix first = label == "sup" ? hadamard() : ComplexMatrix(hadamard() * x);
  out.push_back(rot(s0, first, "prep"));
  out.push_back(cx(s0, helper, "prep"));
  out.push_back(rot(helper, x, "prep"));
  touched.insert(s0);
  touched.insert(helper);
  append_swap(out, helper, s1, touched, fresh_opt, "prep");
  return out;
}

}  // namespace

CompiledCircuit compile_mcm(const CollisionSpec& spec, const Topology& topo, const Placement& placement,
                            const std::string& initial_label, int steps, const CompileOptions& opts) {
  spec.validate();
  topo.validate();
  if (steps < 0) throw Error(ErrorKind::kInvalidArgument, "steps must be >= 0");
  if (spec.system_hamiltonian.size() != 0 && spec.system_hamiltonian.cwiseAbs().maxCoeff() > 0.0) {
    throw Error(ErrorKind::kUnsupported, "compiler does not handle a system Hamiltonian");
  }
  validate_placement(spec, topo, placement, steps);

  CompiledCircuit c;
  c.num_qubits = topo.num_qubits;
  c.system = placement.system;
  c.initial_label = initial_label;
  std::set<int> touched;
  c.ops = state_prep(initial_label, topo, placement, touched, opts.fresh_optimization);
  c.step_end.push_back(c.ops.size());
  for (int n = 1; n <= steps; ++n) {
    for (auto& g : route_step(topo, placement, n, touched, opts.fresh_optimization)) c.ops.push_back(g);
    for (int k = 0; k < spec.num_ancillas(); ++k) {
      const int anc = placement.trains[k][0];
      for (const GateSlot& slot : trotter_sequence(spec, k)) {
        const double theta = collision_angle(spec, k, slot.subsystem, slot.duration);
        for (auto& g : decompose_exchange(theta, placement.system[slot.subsystem], anc)) {
          g.step = n;
          c.ops.push_back(g);
        }
        touched.insert(anc);
        touched.insert(placement.system[slot.subsystem]);
      }
    }
    c.step_end.push_back(c.ops.size());
  }
  return c;
}

ComplexMatrix unitary_liouville(const ComplexMatrix& u) { return kron(u.conjugate(), u); }

std::vector<ChannelOp> ideal_channel_ops(const CompiledCircuit& circuit) {
  std::vector<ChannelOp> out;
  out.reserve(circuit.ops.size());
  for (size_t i = 0; i < circuit.ops.size(); ++i) {
    out.push_back({circuit.ops[i].qubits, unitary_liouville(gate_matrix(circuit.ops[i])), i});
  }
  return out;
}

CompiledCircuit expand_swaps(const CompiledCircuit& circuit) {
  CompiledCircuit out = circuit;
  out.ops.clear();
  out.step_end.clear();
  size_t b = 0;
  for (size_t i = 0; i <= circuit.ops.size(); ++i) {
    while (b < circuit.step_end.size() && circuit.step_end[b] == i) {
      out.step_end.push_back(out.ops.size());
      ++b;
    }
    if (i == circuit.ops.size()) break;
    const GateOp& g = circuit.ops[i];
    if (g.kind != GateKind::kSwap) {
      out.ops.push_back(g);
      continue;
    }
    const int a = g.qubits[0], c = g.qubits[1];
    for (auto [x, y] : {std::pair{a, c}, std::pair{c, a}, std::pair{a, c}}) {
      GateOp h = cx(x, y, g.tag);
      h.step = g.step;
      out.ops.push_back(h);
    }
  }
  return out;
}

namespace {

// Density matrix of the currently live qubits, stored column-stacked so the
// Liouville kernels act on it directly.
class LiveRegister {
 public:
  int size() const { return static_cast<int>(live_.size()); }
  bool is_live(int q) const { return std::find(live_.begin(), live_.end(), q) != live_.end(); }
  const std::vector<int>& qubits() const { return live_; }

  int pos(int q) const {
    auto it = std::find(live_.begin(), live_.end(), q);
    if (it == live_.end()) throw Error(ErrorKind::kInvalidArgument, "qubit is not live");
    return static_cast<int>(it - live_.begin());
  }

  void add(int q, const ComplexMatrix& rho1) {
    const long d = 1L << size();
    ComplexMatrix m = live_.empty() ? ComplexMatrix(rho1) : kron(unvec(v_, d, d), rho1);
    live_.push_back(q);
    v_ = vec(m);
  }

  ComplexMatrix reduced(const std::vector<int>& qs) const {
    const long d = 1L << size();
    std::vector<int> keep;
    for (int q : qs) keep.push_back(pos(q));
    return partial_trace(unvec(v_, d, d), std::vector<int>(size(), 2), keep);
  }

  void trace_out(int q) {
    const int p = pos(q);
    std::vector<int> rest;
    for (int i = 0; i < size(); ++i) {
      if (i != p) rest.push_back(live_[i]);
    }
    if (rest.empty()) {
      live_.clear();
      v_.resize(0);
      return;
    }
    ComplexMatrix m = reduced(rest);
    live_ = rest;
    v_ = vec(m);
  }

  void apply(const ChannelOp& op) {
    const int l = size();
    std::vector<int> bits;
    for (int q : op.qubits) bits.push_back(2 * l - 1 - pos(q));
    for (int q : op.qubits) bits.push_back(l - 1 - pos(q));
    kernels::apply_matrix(v_, 2 * l, bits, op.liouville);
  }

 private:
  std::vector<int> live_;
  ComplexVector v_;
};

}  // namespace

CircuitRun simulate_circuit(const CompiledCircuit& circuit, const std::vector<ChannelOp>& ops,
                            const SimulationOptions& opts) {
  if (opts.max_live_qubits < static_cast<int>(circuit.system.size()) + 1 || opts.max_live_qubits > 12) {
    throw Error(ErrorKind::kInvalidArgument, "max_live_qubits out of range");
  }
  std::set<int> system(circuit.system.begin(), circuit.system.end());
  std::map<int, std::vector<size_t>> uses;
  for (size_t t = 0; t < ops.size(); ++t) {
    const auto& op = ops[t];
    if (op.liouville.rows() != (1L << (2 * op.qubits.size()))) {
      throw Error(ErrorKind::kDimensionMismatch, "channel op size does not match its qubits");
    }
    for (int q : op.qubits) {
      if (q < 0 || q >= circuit.num_qubits) throw Error(ErrorKind::kInvalidArgument, "op qubit out of range");
      uses[q].push_back(t);
    }
  }
  auto next_use = [&](int q, size_t after) -> size_t {
    const auto& u = uses[q];
    auto it = std::upper_bound(u.begin(), u.end(), after);
    return it == u.end() ? std::numeric_limits<size_t>::max() : *it;
  };

  ComplexMatrix ground = ComplexMatrix::Zero(2, 2);
  ground(0, 0) = 1.0;
  LiveRegister reg;
  for (int q : circuit.system) reg.add(q, ground);

  CircuitRun run;
  run.max_live = reg.size();
  std::map<int, ComplexMatrix> parked;
  size_t boundary = 0;
  auto snapshot = [&]() {
    // Channels are CPTP to about 1e-8 each; rounding the accumulated drift
    // away is fine, anything larger means a broken channel.
    const ComplexMatrix m = hermitian_part(reg.reduced(circuit.system));
    const double drift = std::abs(m.trace().real() - 1.0);
    if (drift > 1e-6) {
      throw Error(ErrorKind::kNotTracePreserving, "circuit lost trace: " + std::to_string(drift));
    }
    run.step_states.emplace_back(clip_and_renormalize(m), 1e-8);
  };

  for (size_t t = 0; t < ops.size(); ++t) {
    const ChannelOp& op = ops[t];
    while (boundary < circuit.step_end.size() && op.gate_index >= circuit.step_end[boundary]) {
      snapshot();
      ++boundary;
    }
    for (int q : op.qubits) {
      if (reg.is_live(q)) continue;
      if (reg.size() >= opts.max_live_qubits) {
        int victim = -1;
        size_t best = 0;
        for (int c : reg.qubits()) {
          if (system.count(c) || std::find(op.qubits.begin(), op.qubits.end(), c) != op.qubits.end()) continue;
          const size_t nu = next_use(c, t);
          if (victim < 0 || nu > best) {
            victim = c;
            best = nu;
          }
        }
        if (victim < 0 || !opts.allow_eviction) {
          throw Error(ErrorKind::kBudgetExceeded,
                      "circuit needs more than " + std::to_string(opts.max_live_qubits) + " live qubits");
        }
        parked[victim] = reg.reduced({victim});
        reg.trace_out(victim);
        ++run.evictions;
      }
      auto it = parked.find(q);
      if (it != parked.end()) {
        reg.add(q, it->second);
        parked.erase(it);
      } else {
        reg.add(q, ground);
      }
    }
    run.max_live = std::max(run.max_live, reg.size());
    reg.apply(op);
    for (int q : op.qubits) {
      if (!system.count(q) && next_use(q, t) == std::numeric_limits<size_t>::max()) reg.trace_out(q);
    }
  }
  while (boundary < circuit.step_end.size()) {
    snapshot();
    ++boundary;
  }
  return run;
}

CircuitRun simulate_circuit(const CompiledCircuit& circuit, const SimulationOptions& opts) {
  const CompiledCircuit c = expand_swaps(circuit);
  return simulate_circuit(c, ideal_channel_ops(c), opts);
}

}  // namespace mcmkit
