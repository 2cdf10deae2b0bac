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

#include "mcmkit/sdp.hpp"

#include <algorithm>
#include <cmath>

namespace mcmkit {

namespace {

struct Point {
  std::vector<ComplexMatrix> x, s;
  RealVector y;
};

double inner(const ComplexMatrix& a, const ComplexMatrix& b) { return (a.adjoint() * b).trace().real(); }

RealVector apply_a(const SdpProblem& p, const std::vector<ComplexMatrix>& x) {
  RealVector out = RealVector::Zero(p.m);
  for (size_t k = 0; k < p.blocks.size(); ++k) {
    out += (p.blocks[k].a.adjoint() * vec(x[k])).real();
  }
  return out;
}

ComplexMatrix apply_at(const SdpBlock& blk, const RealVector& y) {
  const ComplexVector v = blk.a * y.cast<cplx>();
  return unvec(v, blk.dim, blk.dim);
}

// False when `a` is numerically singular, which happens close to a
// low-rank optimum.
bool hermitian_inverse(const ComplexMatrix& a, ComplexMatrix& inv) {
  Eigen::LLT<ComplexMatrix> llt(hermitian_part(a));
  if (llt.info() != Eigen::Success) return false;
  inv = hermitian_part(llt.solve(ComplexMatrix::Identity(a.rows(), a.cols())));
  return inv.allFinite();
}

// Largest alpha with x + alpha d >= 0 (infinity if unbounded).
double max_step(const ComplexMatrix& x, const ComplexMatrix& d) {
  Eigen::LLT<ComplexMatrix> llt(hermitian_part(x));
  if (llt.info() != Eigen::Success) return 0.0;
  const ComplexMatrix l = llt.matrixL();
  const ComplexMatrix li = l.triangularView<Eigen::Lower>().solve(ComplexMatrix::Identity(x.rows(), x.cols()));
  const ComplexMatrix w = li * d * li.adjoint();
  const double lmin = hermitian_eig(w).values.minCoeff();
  return lmin >= 0.0 ? kInf : -1.0 / lmin;
}

}  // namespace

SdpResult solve_sdp(const SdpProblem& p, const SdpOptions& opts) {
  if (p.b.size() != p.m) throw Error(ErrorKind::kDimensionMismatch, "SDP: b has the wrong length");
  int n_total = 0;
  double cnorm = 0.0;
  for (const auto& blk : p.blocks) {
    if (blk.c.rows() != blk.dim || blk.a.rows() != static_cast<long>(blk.dim) * blk.dim || blk.a.cols() != p.m) {
      throw Error(ErrorKind::kDimensionMismatch, "SDP: block shapes are inconsistent");
    }
    n_total += blk.dim;
    cnorm += blk.c.squaredNorm();
  }
  cnorm = std::sqrt(cnorm);
  const double bnorm = p.b.norm();
  const size_t nb = p.blocks.size();

  Point pt;
  const double xi = 10.0, eta = std::max(10.0, cnorm);
  for (const auto& blk : p.blocks) {
    pt.x.push_back(xi * ComplexMatrix::Identity(blk.dim, blk.dim));
    pt.s.push_back(eta * ComplexMatrix::Identity(blk.dim, blk.dim));
  }
  pt.y = RealVector::Zero(p.m);

  SdpResult res;
  for (int it = 0; it <= opts.max_iterations; ++it) {
    const RealVector rp = p.b - apply_a(p, pt.x);
    std::vector<ComplexMatrix> rd(nb);
    double rdn = 0.0, pobj = 0.0, xs = 0.0;
    for (size_t k = 0; k < nb; ++k) {
      rd[k] = p.blocks[k].c - apply_at(p.blocks[k], pt.y) - pt.s[k];
      rdn += rd[k].squaredNorm();
      pobj += inner(p.blocks[k].c, pt.x[k]);
      xs += inner(pt.x[k], pt.s[k]);
    }
    const double dobj = p.b.dot(pt.y);
    res.iterations = it;
    res.primal_objective = pobj;
    res.dual_objective = dobj;
    res.gap = pobj - dobj;
    res.primal_infeasibility = rp.norm() / (1.0 + bnorm);
    res.dual_infeasibility = std::sqrt(rdn) / (1.0 + cnorm);
    const double relgap = std::abs(pobj - dobj) / (1.0 + std::abs(pobj) + std::abs(dobj));
    if (relgap < opts.tol && res.primal_infeasibility < opts.tol && res.dual_infeasibility < opts.tol) {
      res.converged = true;
      break;
    }
    if (it == opts.max_iterations) break;
    const double mu = xs / n_total;

    // Past this point the caller gets the last iterate with converged =
    // false; the diamond norm code certifies it independently.
    std::vector<ComplexMatrix> sinv(nb);
    bool singular = false;
    for (size_t k = 0; k < nb && !singular; ++k) singular = !hermitian_inverse(pt.s[k], sinv[k]);
    if (singular) break;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(p.m, p.m);
    for (size_t k = 0; k < nb; ++k) {
      const ComplexMatrix kr = kron(sinv[k].transpose(), pt.x[k]);
      const ComplexMatrix ka = kr * p.blocks[k].a;
      m += (p.blocks[k].a.adjoint() * ka).real();
    }
    m = 0.5 * (m + m.transpose());
    Eigen::LLT<Eigen::MatrixXd> chol(m);
    if (chol.info() != Eigen::Success) {
      m.diagonal().array() += 1e-14 * std::max(1.0, m.diagonal().maxCoeff());
      chol.compute(m);
      if (chol.info() != Eigen::Success) break;
    }

    // Solves for the direction given G = (sigma mu I - X S - corrector) S^-1.
    auto direction = [&](const std::vector<ComplexMatrix>& g, std::vector<ComplexMatrix>& dx,
                         std::vector<ComplexMatrix>& ds, RealVector& dy) {
      std::vector<ComplexMatrix> t(nb);
      for (size_t k = 0; k < nb; ++k) t[k] = g[k] - pt.x[k] * rd[k] * sinv[k];
      const RealVector rhs = rp - apply_a(p, t);
      dy = chol.solve(rhs);
      dx.resize(nb);
      ds.resize(nb);
      for (size_t k = 0; k < nb; ++k) {
        ds[k] = rd[k] - apply_at(p.blocks[k], dy);
        dx[k] = hermitian_part(g[k] - pt.x[k] * ds[k] * sinv[k]);
      }
    };
    auto step_lengths = [&](const std::vector<ComplexMatrix>& dx, const std::vector<ComplexMatrix>& ds,
                            double tau, double& ap, double& ad) {
      ap = ad = 1.0;
      for (size_t k = 0; k < nb; ++k) {
        ap = std::min(ap, tau * max_step(pt.x[k], dx[k]));
        ad = std::min(ad, tau * max_step(pt.s[k], ds[k]));
      }
    };

    std::vector<ComplexMatrix> g(nb), dxa, dsa, dx, ds;
    RealVector dya, dy;
    for (size_t k = 0; k < nb; ++k) g[k] = -pt.x[k];
    direction(g, dxa, dsa, dya);
    double ap, ad;
    step_lengths(dxa, dsa, 1.0, ap, ad);
    double mu_aff = 0.0;
    for (size_t k = 0; k < nb; ++k) mu_aff += inner(pt.x[k] + ap * dxa[k], pt.s[k] + ad * dsa[k]);
    mu_aff /= n_total;
    const double sigma = std::clamp(std::pow(std::max(0.0, mu_aff) / mu, 3.0), 0.0, 1.0);

    for (size_t k = 0; k < nb; ++k) g[k] = sigma * mu * sinv[k] - pt.x[k] - dxa[k] * dsa[k] * sinv[k];
    direction(g, dx, ds, dy);
    step_lengths(dx, ds, 0.98, ap, ad);
    for (size_t k = 0; k < nb; ++k) {
      pt.x[k] = hermitian_part(pt.x[k] + ap * dx[k]);
      pt.s[k] = hermitian_part(pt.s[k] + ad * ds[k]);
    }
    pt.y += ad * dy;
  }
  res.x = pt.x;
  res.s = pt.s;
  res.y = pt.y;
  return res;
}

}  // namespace mcmkit
