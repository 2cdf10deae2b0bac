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

#include "mcmkit/channel.hpp"

#include <cmath>

namespace mcmkit {

ComplexMatrix permute_subsystems(const ComplexMatrix& a, const std::vector<int>& dims, const std::vector<int>& perm) {
  const int n = static_cast<int>(dims.size());
  if (static_cast<int>(perm.size()) != n) throw Error(ErrorKind::kInvalidArgument, "permute_subsystems: bad perm");
  long total = 1;
  for (int d : dims) total *= d;
  if (a.rows() != total || a.cols() != total) {
    throw Error(ErrorKind::kDimensionMismatch, "permute_subsystems: dims do not match");
  }
  std::vector<int> out_dims(n);
  std::vector<bool> used(n, false);
  for (int q = 0; q < n; ++q) {
    if (perm[q] < 0 || perm[q] >= n || used[perm[q]]) {
      throw Error(ErrorKind::kInvalidArgument, "permute_subsystems: perm is not a permutation");
    }
    used[perm[q]] = true;
    out_dims[q] = dims[perm[q]];
  }
  std::vector<long> map(total);
  std::vector<int> digit(n);
  for (long i = 0; i < total; ++i) {
    long rem = i;
    for (int s = n - 1; s >= 0; --s) {
      digit[s] = static_cast<int>(rem % dims[s]);
      rem /= dims[s];
    }
    long j = 0;
    for (int q = 0; q < n; ++q) j = j * out_dims[q] + digit[perm[q]];
    map[i] = j;
  }
  ComplexMatrix out(total, total);
  for (long i = 0; i < total; ++i) {
    for (long j = 0; j < total; ++j) out(map[i], map[j]) = a(i, j);
  }
  return out;
}

std::vector<ComplexMatrix> normalized_pauli_basis(int num_qubits) {
  const ComplexMatrix single[4] = {identity(2), pauli_x(), pauli_y(), pauli_z()};
  std::vector<ComplexMatrix> basis{identity(1)};
  for (int q = 0; q < num_qubits; ++q) {
    std::vector<ComplexMatrix> next;
    next.reserve(basis.size() * 4);
    for (const auto& b : basis) {
      for (const auto& p : single) next.push_back(kron(b, p));
    }
    basis = std::move(next);
  }
  const double norm = std::sqrt(static_cast<double>(1L << num_qubits));
  for (auto& b : basis) b /= norm;
  return basis;
}

ComplexMatrix choi_to_liouville(const ComplexMatrix& choi, int din, int dout) {
  ComplexMatrix s(static_cast<long>(dout) * dout, static_cast<long>(din) * din);
  for (int i = 0; i < din; ++i) {
    for (int j = 0; j < din; ++j) {
      for (int a = 0; a < dout; ++a) {
        for (int b = 0; b < dout; ++b) {
          s(a + static_cast<long>(dout) * b, i + static_cast<long>(din) * j) =
              choi(static_cast<long>(i) * dout + a, static_cast<long>(j) * dout + b);
        }
      }
    }
  }
  return s;
}

ComplexMatrix liouville_to_choi(const ComplexMatrix& s, int din, int dout) {
  ComplexMatrix choi(static_cast<long>(din) * dout, static_cast<long>(din) * dout);
  for (int i = 0; i < din; ++i) {
    for (int j = 0; j < din; ++j) {
      for (int a = 0; a < dout; ++a) {
        for (int b = 0; b < dout; ++b) {
          choi(static_cast<long>(i) * dout + a, static_cast<long>(j) * dout + b) =
              s(a + static_cast<long>(dout) * b, i + static_cast<long>(din) * j);
        }
      }
    }
  }
  return choi;
}

void QuantumChannel::validate(Check check, double tol) const {
  if (!choi_.allFinite()) throw Error(ErrorKind::kInvalidArgument, "channel has non-finite entries");
  if (check == Check::kNone) return;
  if (!is_hermitian(choi_, tol)) throw Error(ErrorKind::kNotHermitian, "Choi matrix is not Hermitian");
  if (!is_cp(tol)) throw Error(ErrorKind::kNotPositive, "map is not completely positive");
  if (!is_tp(tol)) throw Error(ErrorKind::kNotTracePreserving, "map is not trace preserving");
}

QuantumChannel QuantumChannel::from_choi(const ComplexMatrix& choi, int din, int dout, Check check, double tol) {
  if (din <= 0 || dout <= 0 || choi.rows() != static_cast<long>(din) * dout || choi.cols() != choi.rows()) {
    throw Error(ErrorKind::kDimensionMismatch, "Choi matrix size does not match dim_in * dim_out");
  }
  QuantumChannel ch(choi, din, dout);
  ch.validate(check, tol);
  if (check == Check::kCptp) ch.choi_ = hermitian_part(ch.choi_);
  return ch;
}

QuantumChannel QuantumChannel::from_kraus(const std::vector<ComplexMatrix>& kraus, Check check, double tol) {
  if (kraus.empty()) throw Error(ErrorKind::kInvalidArgument, "empty Kraus list");
  const long dout = kraus[0].rows(), din = kraus[0].cols();
  ComplexMatrix choi = ComplexMatrix::Zero(din * dout, din * dout);
  for (const auto& k : kraus) {
    if (k.rows() != dout || k.cols() != din) throw Error(ErrorKind::kDimensionMismatch, "Kraus shapes differ");
    const ComplexVector v = vec(k);
    choi.noalias() += v * v.adjoint();
  }
  return from_choi(choi, static_cast<int>(din), static_cast<int>(dout), check, tol);
}

QuantumChannel QuantumChannel::from_liouville(const ComplexMatrix& s, int din, int dout, Check check, double tol) {
  if (s.rows() != static_cast<long>(dout) * dout || s.cols() != static_cast<long>(din) * din) {
    throw Error(ErrorKind::kDimensionMismatch, "Liouville matrix size mismatch");
  }
  return from_choi(liouville_to_choi(s, din, dout), din, dout, check, tol);
}

QuantumChannel QuantumChannel::from_pauli_liouville(const RealMatrix& r, Check check, double tol) {
  if (r.rows() != r.cols()) throw Error(ErrorKind::kDimensionMismatch, "Pauli-Liouville matrix not square");
  const long d2 = r.rows();
  const int d = static_cast<int>(std::llround(std::sqrt(static_cast<double>(d2))));
  if (static_cast<long>(d) * d != d2 || !is_power_of_two(d)) {
    throw Error(ErrorKind::kDimensionMismatch, "Pauli-Liouville size is not 4^n");
  }
  const auto basis = normalized_pauli_basis(log2_exact(d));
  ComplexMatrix bm(d2, d2);
  for (long k = 0; k < d2; ++k) bm.col(k) = vec(basis[k]);
  const ComplexMatrix s = bm * r.cast<cplx>() * bm.adjoint();
  return from_liouville(s, d, d, check, tol);
}

QuantumChannel QuantumChannel::unitary(const ComplexMatrix& u, double tol) {
  if (!is_unitary(u, tol)) throw Error(ErrorKind::kNotUnitary, "matrix is not unitary");
  return from_kraus({u});
}

QuantumChannel QuantumChannel::identity(int dim) { return unitary(mcmkit::identity(dim)); }

ComplexMatrix QuantumChannel::liouville() const { return choi_to_liouville(choi_, din_, dout_); }

std::vector<ComplexMatrix> QuantumChannel::kraus(double tol) const {
  HermitianEig e = hermitian_eig(choi_);
  const double scale = std::max(1.0, e.values.cwiseAbs().maxCoeff());
  if (e.values.minCoeff() < -1e-8 * scale) {
    throw Error(ErrorKind::kNotPositive, "Kraus form requires a completely positive map");
  }
  std::vector<ComplexMatrix> out;
  for (long k = e.values.size() - 1; k >= 0; --k) {
    if (e.values(k) <= tol * scale) continue;
    out.push_back(std::sqrt(e.values(k)) * unvec(e.vectors.col(k), dout_, din_));
  }
  if (out.empty()) out.push_back(ComplexMatrix::Zero(dout_, din_));
  return out;
}

RealMatrix QuantumChannel::pauli_liouville() const {
  if (din_ != dout_ || !is_power_of_two(din_)) {
    throw Error(ErrorKind::kDimensionMismatch, "Pauli-Liouville form needs equal qubit input and output");
  }
  const auto basis = normalized_pauli_basis(log2_exact(din_));
  const long d2 = static_cast<long>(din_) * din_;
  ComplexMatrix bm(d2, d2);
  for (long k = 0; k < d2; ++k) bm.col(k) = vec(basis[k]);
  return (bm.adjoint() * liouville() * bm).real();
}

ComplexMatrix QuantumChannel::apply(const ComplexMatrix& rho) const {
  if (rho.rows() != din_ || rho.cols() != din_) throw Error(ErrorKind::kDimensionMismatch, "apply: input dimension");
  return unvec(liouville() * vec(rho), dout_, dout_);
}

DensityMatrix QuantumChannel::apply(const DensityMatrix& rho) const { return DensityMatrix(apply(rho.matrix())); }

bool QuantumChannel::is_cp(double tol) const {
  return is_hermitian(choi_, tol) && hermitian_eig(choi_).values.minCoeff() >= -tol;
}

double QuantumChannel::tp_residual() const {
  const ComplexMatrix t = partial_trace(choi_, {din_, dout_}, {0});
  return (t - mcmkit::identity(din_)).cwiseAbs().maxCoeff();
}

bool QuantumChannel::is_tp(double tol) const { return tp_residual() <= tol; }

QuantumChannel QuantumChannel::operator-(const QuantumChannel& other) const {
  if (din_ != other.din_ || dout_ != other.dout_) throw Error(ErrorKind::kDimensionMismatch, "channel dims differ");
  return QuantumChannel(choi_ - other.choi_, din_, dout_);
}

QuantumChannel compose(const QuantumChannel& first, const QuantumChannel& second) {
  if (first.dim_out() != second.dim_in()) throw Error(ErrorKind::kDimensionMismatch, "compose: dims differ");
  const ComplexMatrix s = second.liouville() * first.liouville();
  const bool cptp = first.is_cptp(1e-7) && second.is_cptp(1e-7);
  return QuantumChannel::from_liouville(s, first.dim_in(), second.dim_out(),
                                        cptp ? QuantumChannel::Check::kCptp : QuantumChannel::Check::kNone, 1e-7);
}

QuantumChannel compose_all(const std::vector<QuantumChannel>& in_time_order) {
  if (in_time_order.empty()) throw Error(ErrorKind::kInvalidArgument, "compose_all: empty list");
  QuantumChannel out = in_time_order.front();
  for (size_t k = 1; k < in_time_order.size(); ++k) out = compose(out, in_time_order[k]);
  return out;
}

QuantumChannel tensor(const QuantumChannel& a, const QuantumChannel& b) {
  const ComplexMatrix j = kron(a.choi(), b.choi());
  const ComplexMatrix p =
      permute_subsystems(j, {a.dim_in(), a.dim_out(), b.dim_in(), b.dim_out()}, {0, 2, 1, 3});
  const bool cptp = a.is_cptp(1e-7) && b.is_cptp(1e-7);
  return QuantumChannel::from_choi(p, a.dim_in() * b.dim_in(), a.dim_out() * b.dim_out(),
                                   cptp ? QuantumChannel::Check::kCptp : QuantumChannel::Check::kNone, 1e-7);
}

QuantumChannel depolarizing(int dim, double p) {
  if (dim <= 0) throw Error(ErrorKind::kInvalidArgument, "depolarizing: bad dimension");
  // Complete positivity holds up to p = d^2 / (d^2 - 1).
  const double pmax = static_cast<double>(dim) * dim / (static_cast<double>(dim) * dim - 1.0);
  if (!(p >= 0.0 && p <= pmax + 1e-12)) throw Error(ErrorKind::kInvalidArgument, "depolarizing: p out of range");
  ComplexMatrix omega = ComplexMatrix::Zero(static_cast<long>(dim) * dim, static_cast<long>(dim) * dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) omega(static_cast<long>(i) * dim + i, static_cast<long>(j) * dim + j) = 1.0;
  }
  const ComplexMatrix choi = (1.0 - p) * omega + (p / dim) * mcmkit::identity(dim * dim);
  return QuantumChannel::from_choi(choi, dim, dim);
}

QuantumChannel amplitude_damping(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw Error(ErrorKind::kInvalidArgument, "amplitude_damping: gamma range");
  ComplexMatrix k0(2, 2), k1(2, 2);
  k0 << 1, 0, 0, std::sqrt(1.0 - gamma);
  k1 << 0, std::sqrt(gamma), 0, 0;
  return QuantumChannel::from_kraus({k0, k1});
}

QuantumChannel phase_damping(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw Error(ErrorKind::kInvalidArgument, "phase_damping: lambda range");
  // Liouville action: diagonal kept, coherences scaled by (1 - lambda).
  ComplexMatrix s = ComplexMatrix::Identity(4, 4);
  s(1, 1) = s(2, 2) = 1.0 - lambda;
  return QuantumChannel::from_liouville(s, 2, 2);
}

QuantumChannel random_channel(int dim, int kraus_rank, Rng& rng) {
  if (dim <= 0 || kraus_rank <= 0) throw Error(ErrorKind::kInvalidArgument, "random_channel: bad sizes");
  const ComplexMatrix v = haar_unitary(dim * kraus_rank, rng);
  // System is the left factor, environment the right one, starting in |0>.
  std::vector<ComplexMatrix> kraus;
  for (int e = 0; e < kraus_rank; ++e) {
    ComplexMatrix k(dim, dim);
    for (int a = 0; a < dim; ++a) {
      for (int i = 0; i < dim; ++i) k(a, i) = v(static_cast<long>(a) * kraus_rank + e, static_cast<long>(i) * kraus_rank);
    }
    kraus.push_back(k);
  }
  return QuantumChannel::from_kraus(kraus);
}

QuantumChannel random_channel_near(const ComplexMatrix& u, double strength, Rng& rng) {
  if (!(strength >= 0.0 && strength <= 1.0)) throw Error(ErrorKind::kInvalidArgument, "strength must be in [0,1]");
  const int d = static_cast<int>(u.rows());
  const QuantumChannel target = QuantumChannel::unitary(u);
  const QuantumChannel noisy = compose(random_channel(d, d, rng), target);
  const ComplexMatrix choi = (1.0 - strength) * target.choi() + strength * noisy.choi();
  return QuantumChannel::from_choi(choi, d, d);
}

}  // namespace mcmkit
