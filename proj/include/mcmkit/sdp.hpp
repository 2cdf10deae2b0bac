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

#include <vector>

#include <Eigen/Sparse>

#include "mcmkit/linalg.hpp"

namespace mcmkit {

using SparseComplex = Eigen::SparseMatrix<cplx>;

// Complex Hermitian SDP in standard form
//   (P) min <C, X>  s.t. <A_i, X> = b_i, X >= 0
//   (D) max b^T y   s.t. sum_i y_i A_i + S = C, S >= 0
// with block-diagonal X, S. <A, X> = Re Tr(A^+ X).
struct SdpBlock {
  int dim = 0;
  ComplexMatrix c;
  // Column i is vec(A_i restricted to this block), column-stacked.
  SparseComplex a;
};

struct SdpProblem {
  int m = 0;
  RealVector b;
  std::vector<SdpBlock> blocks;
};

struct SdpOptions {
  double tol = 1e-10;
  int max_iterations = 120;
};

struct SdpResult {
  bool converged = false;
  int iterations = 0;
  double primal_objective = 0.0;
  double dual_objective = 0.0;
  double gap = 0.0;
  double primal_infeasibility = 0.0;
  double dual_infeasibility = 0.0;
  std::vector<ComplexMatrix> x;
  std::vector<ComplexMatrix> s;
  RealVector y;
};

// Infeasible-start primal-dual path following with the HKM direction and a
// Mehrotra predictor-corrector step.
SdpResult solve_sdp(const SdpProblem& problem, const SdpOptions& opts = {});

}  // namespace mcmkit
