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

#include "mcmkit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <unsupported/Eigen/MatrixFunctions>

namespace mcmkit {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "invalid-argument";
    case ErrorKind::kDimensionMismatch: return "dimension-mismatch";
    case ErrorKind::kNotHermitian: return "not-hermitian";
    case ErrorKind::kNotPositive: return "not-positive";
    case ErrorKind::kNotTracePreserving: return "not-trace-preserving";
    case ErrorKind::kNotUnitary: return "not-unitary";
    case ErrorKind::kUnsupported: return "unsupported";
    case ErrorKind::kNonConvergence: return "non-convergence";
    case ErrorKind::kBudgetExceeded: return "budget-exceeded";
    case ErrorKind::kSingular: return "singular";
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kIo: return "io";
  }
  return "unknown";
}

ComplexMatrix identity(int dim) { return ComplexMatrix::Identity(dim, dim); }

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0, cplx(0, -1), cplx(0, 1), 0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

ComplexMatrix sigma_minus() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 0, 0;
  return m;
}

ComplexMatrix sigma_plus() { return sigma_minus().adjoint(); }

ComplexMatrix sigma_z_energy() { return -pauli_z(); }

bool is_square(const ComplexMatrix& a) { return a.rows() == a.cols() && a.rows() > 0; }

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (!is_square(a)) return false;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  if (!is_square(u)) return false;
  return (u.adjoint() * u - identity(static_cast<int>(u.rows()))).cwiseAbs().maxCoeff() <= tol;
}

bool is_psd(const ComplexMatrix& a, double tol) {
  if (!is_hermitian(a, tol)) return false;
  return hermitian_eig(a).values.minCoeff() >= -tol;
}

bool is_power_of_two(long n) { return n > 0 && (n & (n - 1)) == 0; }

int log2_exact(long n) {
  if (!is_power_of_two(n)) {
    throw Error(ErrorKind::kDimensionMismatch, "dimension " + std::to_string(n) + " is not a power of two");
  }
  int k = 0;
  while ((1L << k) < n) ++k;
  return k;
}

ComplexMatrix hermitian_part(const ComplexMatrix& a) { return 0.5 * (a + a.adjoint()); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix kron_all(const std::vector<ComplexMatrix>& factors) {
  if (factors.empty()) return identity(1);
  ComplexMatrix out = factors.front();
  for (size_t k = 1; k < factors.size(); ++k) out = kron(out, factors[k]);
  return out;
}

ComplexMatrix embed_operator(const ComplexMatrix& op, const std::vector<int>& targets, int num_qubits) {
  const int k = static_cast<int>(targets.size());
  if (op.rows() != (1L << k) || op.cols() != (1L << k)) {
    throw Error(ErrorKind::kDimensionMismatch, "embed_operator: operator size does not match target count");
  }
  std::vector<int> seen(num_qubits, 0);
  for (int t : targets) {
    if (t < 0 || t >= num_qubits || seen[t]++) {
      throw Error(ErrorKind::kInvalidArgument, "embed_operator: bad target list");
    }
  }
  const long dim = 1L << num_qubits;
  long target_mask = 0;
  for (int t : targets) target_mask |= 1L << (num_qubits - 1 - t);
  auto sub_index = [&](long full) {
    long s = 0;
    for (int q = 0; q < k; ++q) {
      s = (s << 1) | ((full >> (num_qubits - 1 - targets[q])) & 1L);
    }
    return s;
  };
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (long i = 0; i < dim; ++i) {
    const long si = sub_index(i);
    for (long j = 0; j < dim; ++j) {
      if ((i & ~target_mask) != (j & ~target_mask)) continue;
      out(i, j) = op(si, sub_index(j));
    }
  }
  return out;
}

ComplexVector vec(const ComplexMatrix& a) {
  return Eigen::Map<const ComplexVector>(a.data(), a.size());
}

ComplexMatrix unvec(const ComplexVector& v, int rows, int cols) {
  if (v.size() != static_cast<Eigen::Index>(rows) * cols) {
    throw Error(ErrorKind::kDimensionMismatch, "unvec: size mismatch");
  }
  return Eigen::Map<const ComplexMatrix>(v.data(), rows, cols);
}

ComplexMatrix matrix_exp(const ComplexMatrix& a) {
  if (!is_square(a)) throw Error(ErrorKind::kDimensionMismatch, "matrix_exp: matrix is not square");
  if (!a.allFinite()) throw Error(ErrorKind::kInvalidArgument, "matrix_exp: non-finite entries");
  return a.exp();
}

ComplexMatrix partial_trace(const ComplexMatrix& a, const std::vector<int>& dims, const std::vector<int>& keep) {
  long total = 1;
  for (int d : dims) {
    if (d <= 0) throw Error(ErrorKind::kInvalidArgument, "partial_trace: non-positive dimension");
    total *= d;
  }
  if (a.rows() != total || a.cols() != total) {
    throw Error(ErrorKind::kDimensionMismatch, "partial_trace: dims do not match the matrix");
  }
  const int n = static_cast<int>(dims.size());
  std::vector<bool> kept(n, false);
  for (int k : keep) {
    if (k < 0 || k >= n || kept[k]) throw Error(ErrorKind::kInvalidArgument, "partial_trace: bad keep list");
    kept[k] = true;
  }
  long kept_dim = 1, traced_dim = 1;
  for (int s = 0; s < n; ++s) (kept[s] ? kept_dim : traced_dim) *= dims[s];

  // Split every full index into (kept index, traced index), both in
  // leftmost-factor-major order.
  std::vector<std::vector<std::pair<long, long>>> groups(traced_dim);
  std::vector<int> digit(n);
  for (long i = 0; i < total; ++i) {
    long rem = i;
    for (int s = n - 1; s >= 0; --s) {
      digit[s] = static_cast<int>(rem % dims[s]);
      rem /= dims[s];
    }
    long ki = 0, ti = 0;
    for (int s = 0; s < n; ++s) {
      if (kept[s]) ki = ki * dims[s] + digit[s];
      else ti = ti * dims[s] + digit[s];
    }
    groups[ti].emplace_back(ki, i);
  }
  // `keep` may list subsystems out of order; the output follows `keep`.
  std::vector<int> order(keep.begin(), keep.end());
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  ComplexMatrix out = ComplexMatrix::Zero(kept_dim, kept_dim);
  for (const auto& g : groups) {
    for (const auto& [kr, ir] : g) {
      for (const auto& [kc, ic] : g) out(kr, kc) += a(ir, ic);
    }
  }
  if (order == sorted) return out;

  // Permute the kept factors into the requested order.
  std::vector<int> kdims;
  for (int s : sorted) kdims.push_back(dims[s]);
  std::vector<int> pos(order.size());
  for (size_t q = 0; q < order.size(); ++q) {
    pos[q] = static_cast<int>(std::find(sorted.begin(), sorted.end(), order[q]) - sorted.begin());
  }
  std::vector<long> perm(kept_dim);
  const int m = static_cast<int>(kdims.size());
  std::vector<int> dg(m);
  for (long i = 0; i < kept_dim; ++i) {
    long rem = i;
    for (int s = m - 1; s >= 0; --s) {
      dg[s] = static_cast<int>(rem % kdims[s]);
      rem /= kdims[s];
    }
    long j = 0;
    for (int q = 0; q < m; ++q) j = j * kdims[pos[q]] + dg[pos[q]];
    perm[i] = j;
  }
  ComplexMatrix permuted(kept_dim, kept_dim);
  for (long i = 0; i < kept_dim; ++i) {
    for (long j = 0; j < kept_dim; ++j) permuted(perm[i], perm[j]) = out(i, j);
  }
  return permuted;
}

HermitianEig hermitian_eig(const ComplexMatrix& a) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(a));
  if (es.info() != Eigen::Success) throw Error(ErrorKind::kNonConvergence, "hermitian eigensolver failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

RealVector singular_values(const ComplexMatrix& a) {
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return svd.singularValues();
}

double schatten_norm(const ComplexMatrix& a, double p) {
  if (!(p == 1.0 || p == 2.0 || p == kInf)) {
    throw Error(ErrorKind::kInvalidArgument, "schatten_norm: p must be 1, 2 or inf");
  }
  if (p == 2.0) return a.norm();
  RealVector s;
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if (is_square(a) && is_hermitian(a, 1e-13 * scale)) {
    s = hermitian_eig(a).values.cwiseAbs();
  } else {
    s = singular_values(a);
  }
  return p == 1.0 ? s.sum() : s.maxCoeff();
}

double trace_norm(const ComplexMatrix& a) { return schatten_norm(a, 1.0); }
double operator_norm(const ComplexMatrix& a) { return schatten_norm(a, kInf); }

ComplexMatrix psd_sqrt(const ComplexMatrix& a) {
  HermitianEig e = hermitian_eig(a);
  RealVector s = e.values.cwiseMax(0.0).cwiseSqrt();
  return e.vectors * s.asDiagonal() * e.vectors.adjoint();
}

ComplexMatrix clip_and_renormalize(const ComplexMatrix& a, double clip) {
  HermitianEig e = hermitian_eig(a);
  RealVector v = e.values;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) < clip) v(i) = 0.0;
  }
  const double tr = v.sum();
  if (!(tr > 0.0)) throw Error(ErrorKind::kNotPositive, "clip_and_renormalize: no positive spectrum left");
  v /= tr;
  return hermitian_part(e.vectors * v.asDiagonal() * e.vectors.adjoint());
}

RealVector project_to_simplex(const RealVector& v, double total) {
  const Eigen::Index n = v.size();
  std::vector<double> u(v.data(), v.data() + n);
  std::stable_sort(u.begin(), u.end(), std::greater<double>());
  double cumsum = 0.0, theta = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    cumsum += u[j];
    const double t = (cumsum - total) / static_cast<double>(j + 1);
    if (u[j] - t > 0.0) theta = t;
  }
  return (v.array() - theta).cwiseMax(0.0);
}

ComplexMatrix nearest_density(const ComplexMatrix& a) {
  HermitianEig e = hermitian_eig(a);
  RealVector lam = project_to_simplex(e.values, 1.0);
  return hermitian_part(e.vectors * lam.asDiagonal() * e.vectors.adjoint());
}

DensityMatrix::DensityMatrix(const ComplexMatrix& rho, double tol) {
  if (!is_square(rho)) throw Error(ErrorKind::kDimensionMismatch, "density matrix must be square");
  if (!rho.allFinite()) throw Error(ErrorKind::kInvalidArgument, "density matrix has non-finite entries");
  if (!is_hermitian(rho, tol)) throw Error(ErrorKind::kNotHermitian, "density matrix is not Hermitian");
  const double tr = rho.trace().real();
  if (std::abs(tr - 1.0) > tol) {
    throw Error(ErrorKind::kNotTracePreserving, "density matrix trace is " + std::to_string(tr));
  }
  ComplexMatrix h = hermitian_part(rho);
  if (hermitian_eig(h).values.minCoeff() < -tol) {
    throw Error(ErrorKind::kNotPositive, "density matrix has a negative eigenvalue");
  }
  m_ = std::move(h);
}

DensityMatrix DensityMatrix::from_pure(const ComplexVector& psi) {
  const double n = psi.norm();
  if (!(n > 0.0)) throw Error(ErrorKind::kInvalidArgument, "zero state vector");
  ComplexVector v = psi / n;
  return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  return DensityMatrix(identity(dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::basis_state(int dim, int index) {
  if (index < 0 || index >= dim) throw Error(ErrorKind::kInvalidArgument, "basis index out of range");
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  m(index, index) = 1.0;
  return DensityMatrix(m);
}

int DensityMatrix::num_qubits() const { return log2_exact(dim()); }

RealVector DensityMatrix::populations() const { return m_.diagonal().real(); }

double DensityMatrix::purity() const { return (m_ * m_).trace().real(); }

PureState::PureState(const ComplexVector& psi, double tol) {
  if (psi.size() == 0) throw Error(ErrorKind::kDimensionMismatch, "empty state vector");
  if (std::abs(psi.norm() - 1.0) > tol) throw Error(ErrorKind::kInvalidArgument, "state vector is not normalized");
  v_ = psi;
}

double fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
    throw Error(ErrorKind::kDimensionMismatch, "fidelity: dimension mismatch");
  }
  // sqrt F = ||A^dag B||_1 for rho = A A^dag, sigma = B B^dag. Eigenvalues at
  // round-off level are dropped: their square roots would otherwise add
  // ~1e-8 to F for rank-deficient states.
  auto factor = [](const ComplexMatrix& m) {
    HermitianEig e = hermitian_eig(m);
    const double cut = 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, e.values.cwiseAbs().maxCoeff());
    RealVector s = e.values;
    for (Eigen::Index i = 0; i < s.size(); ++i) s(i) = s(i) > cut ? std::sqrt(s(i)) : 0.0;
    return ComplexMatrix(e.vectors * s.asDiagonal());
  };
  const double f = singular_values(factor(rho).adjoint() * factor(sigma)).sum();
  return std::min(1.0, f * f);
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return fidelity(rho.matrix(), sigma.matrix());
}

double trace_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
    throw Error(ErrorKind::kDimensionMismatch, "trace_distance: dimension mismatch");
  }
  return 0.5 * trace_norm(rho - sigma);
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return trace_distance(rho.matrix(), sigma.matrix());
}

std::string basis_label(int index, int num_qubits) {
  std::string s(num_qubits, '0');
  for (int q = 0; q < num_qubits; ++q) {
    if ((index >> (num_qubits - 1 - q)) & 1) s[q] = '1';
  }
  return s;
}

int basis_index(const std::string& label) {
  int idx = 0;
  for (char c : label) {
    if (c != '0' && c != '1') throw Error(ErrorKind::kParse, "bad bitstring '" + label + "'");
    idx = (idx << 1) | (c - '0');
  }
  return idx;
}

}  // namespace mcmkit
