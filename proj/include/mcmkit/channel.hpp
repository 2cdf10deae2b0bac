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

#include "mcmkit/linalg.hpp"
#include "mcmkit/random.hpp"

namespace mcmkit {

using RealMatrix = Eigen::MatrixXd;

// Reorders the tensor factors of a square operator: output factor q is
// input factor perm[q].
ComplexMatrix permute_subsystems(const ComplexMatrix& a, const std::vector<int>& dims, const std::vector<int>& perm);

// Normalized n-qubit Pauli basis B_k = P_k / sqrt(2^n), lexicographic over
// {I, X, Y, Z}^n with qubit 0 most significant. B_0 = I / sqrt(d).
std::vector<ComplexMatrix> normalized_pauli_basis(int num_qubits);

// A linear map on operators stored by its Choi matrix
//   J = sum_ij |i><j| (input) kron T(|i><j|) (output),
// so Tr_out J = I_in for trace-preserving maps and the identity channel has
// J = sum_ij |ii><jj|. Column-stacked Liouville matrices: S vec(rho) = vec(T(rho)).
class QuantumChannel {
 public:
  enum class Check { kCptp, kNone };

  QuantumChannel() = default;

  static QuantumChannel from_choi(const ComplexMatrix& choi, int dim_in, int dim_out, Check check = Check::kCptp,
                                  double tol = 1e-8);
  static QuantumChannel from_kraus(const std::vector<ComplexMatrix>& kraus, Check check = Check::kCptp,
                                   double tol = 1e-8);
  static QuantumChannel from_liouville(const ComplexMatrix& s, int dim_in, int dim_out, Check check = Check::kCptp,
                                       double tol = 1e-8);
  // Qubit maps only (dim_in == dim_out == 2^n).
  static QuantumChannel from_pauli_liouville(const RealMatrix& r, Check check = Check::kCptp, double tol = 1e-8);
  static QuantumChannel unitary(const ComplexMatrix& u, double tol = 1e-10);
  static QuantumChannel identity(int dim);

  int dim_in() const { return din_; }
  int dim_out() const { return dout_; }
  const ComplexMatrix& choi() const { return choi_; }
  ComplexMatrix liouville() const;
  // Canonical Kraus operators from the eigendecomposition of the Choi
  // matrix; eigenvalues below `tol` are dropped. Requires a CP map.
  std::vector<ComplexMatrix> kraus(double tol = 1e-12) const;
  RealMatrix pauli_liouville() const;

  ComplexMatrix apply(const ComplexMatrix& rho) const;
  DensityMatrix apply(const DensityMatrix& rho) const;

  bool is_cp(double tol = 1e-8) const;
  bool is_tp(double tol = 1e-8) const;
  bool is_cptp(double tol = 1e-8) const { return is_cp(tol) && is_tp(tol); }
  // Largest deviation of Tr_out J from the identity.
  double tp_residual() const;

  QuantumChannel operator-(const QuantumChannel& other) const;

 private:
  QuantumChannel(ComplexMatrix choi, int din, int dout) : choi_(std::move(choi)), din_(din), dout_(dout) {}
  void validate(Check check, double tol) const;

  ComplexMatrix choi_;
  int din_ = 0;
  int dout_ = 0;
};

ComplexMatrix choi_to_liouville(const ComplexMatrix& choi, int dim_in, int dim_out);
ComplexMatrix liouville_to_choi(const ComplexMatrix& s, int dim_in, int dim_out);

// second after first.
QuantumChannel compose(const QuantumChannel& first, const QuantumChannel& second);
QuantumChannel compose_all(const std::vector<QuantumChannel>& in_time_order);
// Channel on (a's space) kron (b's space).
QuantumChannel tensor(const QuantumChannel& a, const QuantumChannel& b);

// (1 - p) rho + p Tr(rho) I / d.
QuantumChannel depolarizing(int dim, double p);
QuantumChannel amplitude_damping(double gamma);
// Off-diagonal elements scaled by (1 - lambda).
QuantumChannel phase_damping(double lambda);

// Random CPTP map via a Haar unitary on system kron environment
// (environment dimension `kraus_rank`).
QuantumChannel random_channel(int dim, int kraus_rank, Rng& rng);
// (1 - strength) U + strength (U after a random channel); strength in [0, 1].
QuantumChannel random_channel_near(const ComplexMatrix& u, double strength, Rng& rng);

}  // namespace mcmkit
