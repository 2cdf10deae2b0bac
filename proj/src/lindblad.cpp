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

#include "mcmkit/lindblad.hpp"

#include <cmath>

namespace mcmkit {

LindbladGenerator::LindbladGenerator(ComplexMatrix hamiltonian, std::vector<JumpOperator> jumps)
    : h_(std::move(hamiltonian)), jumps_(std::move(jumps)) {
  if (!is_square(h_)) throw Error(ErrorKind::kDimensionMismatch, "Hamiltonian must be square");
  if (!is_hermitian(h_, 1e-10)) throw Error(ErrorKind::kNotHermitian, "Hamiltonian is not Hermitian");
  for (const auto& j : jumps_) {
    if (j.op.rows() != h_.rows() || j.op.cols() != h_.cols()) {
      throw Error(ErrorKind::kDimensionMismatch, "jump operator dimension differs from the Hamiltonian");
    }
    if (!(j.rate >= 0.0) || !std::isfinite(j.rate)) throw Error(ErrorKind::kInvalidArgument, "negative jump rate");
  }
}

ComplexMatrix LindbladGenerator::liouvillian() const {
  const int d = dim();
  const ComplexMatrix id = mcmkit::identity(d);
  const cplx i(0.0, 1.0);
  ComplexMatrix l = -i * (kron(id, h_) - kron(h_.transpose(), id));
  for (const auto& j : jumps_) {
    const ComplexMatrix ldl = j.op.adjoint() * j.op;
    l += j.rate * (kron(j.op.conjugate(), j.op) - 0.5 * kron(id, ldl) - 0.5 * kron(ldl.transpose(), id));
  }
  return l;
}

ComplexMatrix LindbladGenerator::apply(const ComplexMatrix& rho) const {
  const cplx i(0.0, 1.0);
  ComplexMatrix out = -i * (h_ * rho - rho * h_);
  for (const auto& j : jumps_) {
    const ComplexMatrix ldl = j.op.adjoint() * j.op;
    out += j.rate * (j.op * rho * j.op.adjoint() - 0.5 * (ldl * rho + rho * ldl));
  }
  return out;
}

QuantumChannel LindbladGenerator::propagator(double t) const {
  if (!(t >= 0.0) || !std::isfinite(t)) throw Error(ErrorKind::kInvalidArgument, "propagator: t must be >= 0");
  return QuantumChannel::from_liouville(matrix_exp(liouvillian() * t), dim(), dim(),
                                        QuantumChannel::Check::kCptp, 1e-8);
}

DensityMatrix evolve(const LindbladGenerator& gen, const DensityMatrix& rho0, double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw Error(ErrorKind::kInvalidArgument, "evolve: t must be >= 0");
  if (rho0.dim() != gen.dim()) throw Error(ErrorKind::kDimensionMismatch, "evolve: state dimension");
  const ComplexMatrix s = matrix_exp(gen.liouvillian() * t);
  return DensityMatrix(hermitian_part(unvec(s * vec(rho0.matrix()), gen.dim(), gen.dim())));
}

const char* decay_mode_name(DecayMode m) { return m == DecayMode::kCollective ? "collective" : "local"; }

DecayMode parse_decay_mode(const std::string& s) {
  if (s == "collective") return DecayMode::kCollective;
  if (s == "local") return DecayMode::kLocal;
  throw Error(ErrorKind::kInvalidArgument, "unknown decay mode '" + s + "'");
}

LindbladGenerator SuperradianceModel::generator() const {
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw Error(ErrorKind::kInvalidArgument, "gamma must be >= 0");
  const ComplexMatrix s1 = kron(sigma_minus(), mcmkit::identity(2));
  const ComplexMatrix s2 = kron(mcmkit::identity(2), sigma_minus());
  const ComplexMatrix h = ComplexMatrix::Zero(4, 4);
  if (mode == DecayMode::kCollective) return LindbladGenerator(h, {{gamma, s1 + s2}});
  return LindbladGenerator(h, {{gamma, s1}, {gamma, s2}});
}

ComplexMatrix SuperradianceModel::energy() {
  return 0.5 * (kron(sigma_z_energy(), mcmkit::identity(2)) + kron(mcmkit::identity(2), sigma_z_energy()));
}

namespace {

// Basis order |gg>, |ge>, |eg>, |ee> = |00>, |01>, |10>, |11>.
ComplexVector ket(std::initializer_list<cplx> c) {
  ComplexVector v(4);
  int k = 0;
  for (cplx x : c) v(k++) = x;
  return v;
}

}  // namespace

DensityMatrix named_state(const std::string& label) {
  const double r = 1.0 / std::sqrt(2.0);
  if (label == "gg") return DensityMatrix::from_pure(ket({1, 0, 0, 0}));
  if (label == "ee") return DensityMatrix::from_pure(ket({0, 0, 0, 1}));
  if (label == "sup") return DensityMatrix::from_pure(ket({0, r, r, 0}));
  if (label == "sub") return DensityMatrix::from_pure(ket({0, -r, r, 0}));
  throw Error(ErrorKind::kInvalidArgument, "unknown state label '" + label + "'");
}

std::vector<std::string> named_state_labels() { return {"sub", "sup", "ee", "gg"}; }

bool has_analytic_oracle(DecayMode mode, const std::string& label) {
  if (mode == DecayMode::kCollective) return label == "sub" || label == "sup" || label == "ee" || label == "gg";
  return label == "sub" || label == "gg";
}

DensityMatrix analytic_oracle(const SuperradianceModel& model, const std::string& label, double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw Error(ErrorKind::kInvalidArgument, "analytic_oracle: t must be >= 0");
  if (!has_analytic_oracle(model.mode, label)) {
    throw Error(ErrorKind::kUnsupported, std::string("no closed form for ") + decay_mode_name(model.mode) + "/" + label);
  }
  const ComplexMatrix gg = named_state("gg").matrix();
  if (label == "gg") return DensityMatrix(gg);
  const double g = model.gamma;
  if (model.mode == DecayMode::kLocal) {
    const double a = std::exp(-g * t);
    return DensityMatrix(a * named_state("sub").matrix() + (1.0 - a) * gg);
  }
  if (label == "sub") return named_state("sub");
  const double a = std::exp(-2.0 * g * t);
  const ComplexMatrix sup = named_state("sup").matrix();
  if (label == "sup") return DensityMatrix(a * sup + (1.0 - a) * gg);
  // ee: cascade ee -> sup -> gg.
  const ComplexMatrix ee = named_state("ee").matrix();
  const double x = 2.0 * g * t;
  return DensityMatrix(a * ee + x * a * sup + (1.0 - a * (1.0 + x)) * gg);
}

double emission_power(const SuperradianceModel& model, const DensityMatrix& rho0, double t) {
  const LindbladGenerator gen = model.generator();
  const DensityMatrix rho = evolve(gen, rho0, t);
  return -(SuperradianceModel::energy() * gen.apply(rho.matrix())).trace().real();
}

double emission_power_analytic(const SuperradianceModel& model, const std::string& label, double t) {
  const LindbladGenerator gen = model.generator();
  const DensityMatrix rho = analytic_oracle(model, label, t);
  return -(SuperradianceModel::energy() * gen.apply(rho.matrix())).trace().real();
}

}  // namespace mcmkit
