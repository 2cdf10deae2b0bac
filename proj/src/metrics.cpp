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

#include "mcmkit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mcmkit {

namespace {

// Triplets of a Hermitian basis: index k -> list of (row, col, value).
struct BasisElem {
  long p, q;
  bool imag;  // false: E_pq + E_qp (or E_pp); true: i E_pq - i E_qp
};

std::vector<BasisElem> hermitian_basis(long n) {
  std::vector<BasisElem> out;
  for (long q = 0; q < n; ++q) {
    for (long p = 0; p <= q; ++p) {
      out.push_back({p, q, false});
      if (p != q) out.push_back({p, q, true});
    }
  }
  return out;
}

ComplexMatrix basis_matrix_sum(const std::vector<BasisElem>& basis, const RealVector& y, long n) {
  ComplexMatrix z = ComplexMatrix::Zero(n, n);
  for (size_t k = 0; k < basis.size(); ++k) {
    const auto& e = basis[k];
    if (e.p == e.q) {
      z(e.p, e.p) += y(k);
    } else if (!e.imag) {
      z(e.p, e.q) += y(k);
      z(e.q, e.p) += y(k);
    } else {
      z(e.p, e.q) += cplx(0, y(k));
      z(e.q, e.p) += cplx(0, -y(k));
    }
  }
  return z;
}

double value_for_input(const ComplexMatrix& choi, const ComplexMatrix& r, int dout) {
  const ComplexMatrix big = kron(r, identity(dout));
  return trace_norm(hermitian_part(big * choi * big.adjoint()));
}

}  // namespace

DiamondResult diamond_norm(const ComplexMatrix& choi, int din, int dout, const DiamondOptions& opts) {
  const long n = static_cast<long>(din) * dout;
  if (choi.rows() != n || choi.cols() != n) throw Error(ErrorKind::kDimensionMismatch, "diamond_norm: Choi size");
  const double scale = choi.norm();
  if (!is_hermitian(choi, 1e-10 * std::max(1.0, scale))) {
    throw Error(ErrorKind::kNotHermitian, "diamond_norm needs a Hermiticity-preserving map");
  }
  if (n > 64) throw Error(ErrorKind::kUnsupported, "diamond_norm: Choi matrix larger than 64");
  DiamondResult out;
  if (scale < 1e-14) return out;
  const ComplexMatrix j = hermitian_part(choi) / scale;

  // max <J, P0 - P1> s.t. P0 + P1 = rho kron I, Tr rho = 1: primal in
  // standard form with blocks (P0, P1, rho).
  const auto basis = hermitian_basis(n);
  const int m = static_cast<int>(basis.size()) + 1;
  SdpProblem prob;
  prob.m = m;
  prob.b = RealVector::Zero(m);
  prob.b(m - 1) = 1.0;
  std::vector<Eigen::Triplet<cplx>> t12, t3;
  for (size_t k = 0; k < basis.size(); ++k) {
    const auto& e = basis[k];
    const long col = static_cast<long>(k);
    if (e.p == e.q) {
      t12.emplace_back(e.p + n * e.p, col, 1.0);
    } else if (!e.imag) {
      t12.emplace_back(e.p + n * e.q, col, 1.0);
      t12.emplace_back(e.q + n * e.p, col, 1.0);
    } else {
      t12.emplace_back(e.p + n * e.q, col, cplx(0, 1));
      t12.emplace_back(e.q + n * e.p, col, cplx(0, -1));
    }
    // -Tr_out of the basis element; non-zero only if the output indices agree.
    const long ip = e.p / dout, ap = e.p % dout, iq = e.q / dout, aq = e.q % dout;
    if (ap != aq) continue;
    if (ip == iq) {
      t3.emplace_back(ip + din * ip, col, e.p == e.q ? -1.0 : -2.0);
    } else if (!e.imag) {
      t3.emplace_back(ip + din * iq, col, -1.0);
      t3.emplace_back(iq + din * ip, col, -1.0);
    } else {
      t3.emplace_back(ip + din * iq, col, cplx(0, -1));
      t3.emplace_back(iq + din * ip, col, cplx(0, 1));
    }
  }
  for (int i = 0; i < din; ++i) t3.emplace_back(i + static_cast<long>(din) * i, m - 1, 1.0);
  SdpBlock b1, b2, b3;
  b1.dim = b2.dim = static_cast<int>(n);
  b3.dim = din;
  b1.c = -j;
  b2.c = j;
  b3.c = ComplexMatrix::Zero(din, din);
  b1.a.resize(n * n, m);
  b1.a.setFromTriplets(t12.begin(), t12.end());
  b2.a = b1.a;
  b3.a.resize(static_cast<long>(din) * din, m);
  b3.a.setFromTriplets(t3.begin(), t3.end());
  prob.blocks = {b1, b2, b3};

  const SdpResult res = solve_sdp(prob, opts.sdp);
  out.iterations = res.iterations;

  // Upper bound: shift W = -Z until W >= +-J, then lambda_max(Tr_out W).
  RealVector yz = res.y.head(m - 1);
  ComplexMatrix w = -basis_matrix_sum(basis, yz, n);
  const double shift = std::max({0.0, -hermitian_eig(w - j).values.minCoeff(), -hermitian_eig(w + j).values.minCoeff()});
  w += shift * identity(static_cast<int>(n));
  const double upper = hermitian_eig(partial_trace(w, {din, dout}, {0})).values.maxCoeff();

  // Lower bound: purification of the optimal input marginal.
  const ComplexMatrix rho = nearest_density(res.x[2]);
  const ComplexMatrix sq = psd_sqrt(rho);
  const double lower = std::max(value_for_input(j, sq, dout), value_for_input(j, ComplexMatrix(sq.transpose()), dout));

  out.lower = lower * scale;
  out.upper = upper * scale;
  out.value = 0.5 * (out.lower + out.upper);
  if (out.upper - out.lower > opts.certify_tol) {
    std::ostringstream os;
    os << "diamond_norm: certified gap " << (out.upper - out.lower) << " exceeds " << opts.certify_tol;
    throw Error(ErrorKind::kNonConvergence, os.str());
  }
  return out;
}

DiamondResult diamond_norm(const QuantumChannel& phi, const DiamondOptions& opts) {
  return diamond_norm(phi.choi(), phi.dim_in(), phi.dim_out(), opts);
}

DiamondResult diamond_distance(const QuantumChannel& a, const QuantumChannel& b, const DiamondOptions& opts) {
  if (a.dim_in() != b.dim_in() || a.dim_out() != b.dim_out()) {
    throw Error(ErrorKind::kDimensionMismatch, "diamond_distance: channel dimensions differ");
  }
  DiamondOptions o = opts;
  o.certify_tol = 2.0 * opts.certify_tol;
  DiamondResult r = diamond_norm(a.choi() - b.choi(), a.dim_in(), a.dim_out(), o);
  r.value *= 0.5;
  r.lower *= 0.5;
  r.upper *= 0.5;
  return r;
}

DiamondResult diamond_distance(const ComplexMatrix& u, const QuantumChannel& t, const DiamondOptions& opts) {
  return diamond_distance(QuantumChannel::unitary(u), t, opts);
}

double diamond_norm_lower_bound(const ComplexMatrix& choi, int din, int dout, int starts, Rng& rng) {
  double best = value_for_input(choi, identity(din) / std::sqrt(static_cast<double>(din)), dout);
  for (int s = 0; s < starts; ++s) {
    const ComplexVector v = haar_state(din * din, rng);
    // |u> = sum_i R|i> kron |i> with vec(R) = v.
    const ComplexMatrix r = unvec(v, din, din);
    best = std::max(best, value_for_input(choi, r, dout));
  }
  return best;
}

double induced_trace_norm_lower_bound(const QuantumChannel& phi, int starts, Rng& rng) {
  double best = 0.0;
  for (int i = 0; i < phi.dim_in(); ++i) {
    ComplexMatrix e = ComplexMatrix::Zero(phi.dim_in(), phi.dim_in());
    e(i, i) = 1.0;
    best = std::max(best, trace_norm(hermitian_part(phi.apply(e))));
  }
  for (int s = 0; s < starts; ++s) {
    const ComplexVector v = haar_state(phi.dim_in(), rng);
    best = std::max(best, trace_norm(hermitian_part(phi.apply(ComplexMatrix(v * v.adjoint())))));
  }
  return best;
}

double entanglement_fidelity(const QuantumChannel& t) {
  if (t.dim_in() != t.dim_out()) throw Error(ErrorKind::kDimensionMismatch, "entanglement fidelity needs d_in = d_out");
  const int d = t.dim_in();
  cplx s = 0.0;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) s += t.choi()(static_cast<long>(i) * d + i, static_cast<long>(j) * d + j);
  }
  return s.real() / (static_cast<double>(d) * d);
}

double entanglement_fidelity(const ComplexMatrix& u, const QuantumChannel& t) {
  if (!is_unitary(u, 1e-9)) throw Error(ErrorKind::kNotUnitary, "target gate is not unitary");
  if (u.rows() != t.dim_in() || t.dim_in() != t.dim_out()) {
    throw Error(ErrorKind::kDimensionMismatch, "target gate and channel dimensions differ");
  }
  // <<U| J |U>> / d^2 with |U>> = vec(U).
  const ComplexVector v = vec(u);
  const double d = static_cast<double>(u.rows());
  return (v.adjoint() * t.choi() * v)(0).real() / (d * d);
}

double average_gate_fidelity(const ComplexMatrix& u, const QuantumChannel& t) {
  const double d = static_cast<double>(u.rows());
  return (d * entanglement_fidelity(u, t) + 1.0) / (d + 1.0);
}

double average_gate_infidelity(const ComplexMatrix& u, const QuantumChannel& t) {
  return 1.0 - average_gate_fidelity(u, t);
}

double unitarity(const QuantumChannel& t) {
  const RealMatrix r = t.pauli_liouville();
  const long n = r.rows();
  const RealMatrix tu = r.bottomRightCorner(n - 1, n - 1);
  return tu.squaredNorm() / static_cast<double>(n - 1);
}

double incoherence(const QuantumChannel& t) {
  const double d = static_cast<double>(t.dim_in());
  return (d - 1.0) / d * (1.0 - std::sqrt(std::max(0.0, unitarity(t))));
}

double diamond_bound_from_infidelity(int d, double r) {
  if (d < 2 || r < 0.0) throw Error(ErrorKind::kInvalidArgument, "bound needs d >= 2 and r >= 0");
  return d * std::sqrt((1.0 + 1.0 / d) * r);
}

double diamond_bound_from_unitarity(int d, double r, double u) {
  if (d < 2 || r < 0.0) throw Error(ErrorKind::kInvalidArgument, "bound needs d >= 2 and r >= 0");
  const double dd = static_cast<double>(d);
  const double p = 1.0 - dd * r / (dd - 1.0);
  // Tiny negative values come from rounding in u and r.
  const double c2 = std::max(0.0, (dd * dd - 1.0) / (dd * dd) * (u - 2.0 * p + 1.0));
  return std::sqrt(dd * dd * dd * c2 / 4.0 + (dd + 1.0) * (dd + 1.0) * r * r / 2.0);
}

double average_gate_fidelity_monte_carlo(const ComplexMatrix& u, const QuantumChannel& t, int samples, Rng& rng) {
  const int d = t.dim_in();
  double acc = 0.0;
  for (int s = 0; s < samples; ++s) {
    const ComplexVector psi = haar_state(d, rng);
    const ComplexVector target = u * psi;
    acc += (target.adjoint() * t.apply(ComplexMatrix(psi * psi.adjoint())) * target)(0).real();
  }
  return acc / samples;
}

double unitarity_monte_carlo(const QuantumChannel& t, int samples, Rng& rng) {
  const int d = t.dim_in();
  const ComplexMatrix mixed_image = t.apply(ComplexMatrix(identity(d) / static_cast<double>(d)));
  double acc = 0.0;
  for (int s = 0; s < samples; ++s) {
    const ComplexVector psi = haar_state(d, rng);
    const ComplexMatrix out = t.apply(ComplexMatrix(psi * psi.adjoint())) - mixed_image;
    acc += (out * out).trace().real();
  }
  return static_cast<double>(d) / (d - 1.0) * acc / samples;
}

std::vector<std::string> MetricsReport::violations(double tol) const {
  std::vector<std::string> v;
  const double dd = dim;
  if (diamond > bound_infidelity + tol) v.push_back("diamond distance exceeds the infidelity bound");
  if (diamond > bound_unitarity + tol) v.push_back("diamond distance exceeds the unitarity bound");
  if (incoherence > infidelity + tol) v.push_back("incoherence exceeds infidelity");
  const double p = 1.0 - dd * infidelity / (dd - 1.0);
  if (unitarity < p * p - tol) v.push_back("unitarity below the depolarizing floor");
  return v;
}

MetricsReport compute_metrics(const ComplexMatrix& u, const QuantumChannel& t, const std::string& name,
                              const DiamondOptions& opts) {
  MetricsReport m;
  m.name = name;
  m.dim = t.dim_in();
  m.infidelity = std::max(0.0, average_gate_infidelity(u, t));
  m.unitarity = unitarity(t);
  m.incoherence = incoherence(t);
  m.incoherence_ratio = m.infidelity > 0.0 ? m.incoherence / m.infidelity : 0.0;
  const DiamondResult d = diamond_distance(u, t, opts);
  m.diamond = d.value;
  m.diamond_lower = d.lower;
  m.diamond_upper = d.upper;
  m.bound_infidelity = diamond_bound_from_infidelity(m.dim, m.infidelity);
  m.bound_unitarity = diamond_bound_from_unitarity(m.dim, m.infidelity, m.unitarity);
  return m;
}

}  // namespace mcmkit
