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

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace mcmkit {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

enum class ErrorKind {
  kInvalidArgument,
  kDimensionMismatch,
  kNotHermitian,
  kNotPositive,
  kNotTracePreserving,
  kNotUnitary,
  kUnsupported,
  kNonConvergence,
  kBudgetExceeded,
  kSingular,
  kParse,
  kIo,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Single-qubit operators. Computational basis |0> = ground, |1> = excited.
ComplexMatrix identity(int dim);
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
// |0><1|: lowers the excited state |1> to the ground state |0>.
ComplexMatrix sigma_minus();
ComplexMatrix sigma_plus();
// Energy-ordered sigma^z = |e><e| - |g><g| = diag(-1, +1). Note the sign is
// opposite to pauli_z().
ComplexMatrix sigma_z_energy();

bool is_square(const ComplexMatrix& a);
bool is_hermitian(const ComplexMatrix& a, double tol = 1e-10);
bool is_unitary(const ComplexMatrix& u, double tol = 1e-10);
bool is_psd(const ComplexMatrix& a, double tol = 1e-10);
bool is_power_of_two(long n);
int log2_exact(long n);

ComplexMatrix hermitian_part(const ComplexMatrix& a);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron_all(const std::vector<ComplexMatrix>& factors);

// Embeds a k-qubit operator acting on `targets` (targets[0] is the most
// significant factor of `op`) into an n-qubit register where qubit 0 is the
// leftmost tensor factor.
ComplexMatrix embed_operator(const ComplexMatrix& op, const std::vector<int>& targets, int num_qubits);

// Column-stacking vectorization: vec(A)[i + rows*j] = A(i, j), so
// vec(A X B) = (B^T kron A) vec(X).
ComplexVector vec(const ComplexMatrix& a);
ComplexMatrix unvec(const ComplexVector& v, int rows, int cols);

// Scaling-and-squaring Pade exponential (Eigen's MatrixFunctions module).
ComplexMatrix matrix_exp(const ComplexMatrix& a);

// Traces out every subsystem not listed in `keep`. `dims` lists the
// subsystem dimensions from the leftmost tensor factor.
ComplexMatrix partial_trace(const ComplexMatrix& a, const std::vector<int>& dims,
                            const std::vector<int>& keep);

struct HermitianEig {
  RealVector values;      // ascending
  ComplexMatrix vectors;  // columns
};
HermitianEig hermitian_eig(const ComplexMatrix& a);

RealVector singular_values(const ComplexMatrix& a);
// p in {1, 2, kInf}.
double schatten_norm(const ComplexMatrix& a, double p);
double trace_norm(const ComplexMatrix& a);
double operator_norm(const ComplexMatrix& a);

ComplexMatrix psd_sqrt(const ComplexMatrix& a);

// Clips eigenvalues below `clip` to zero and rescales to unit trace.
ComplexMatrix clip_and_renormalize(const ComplexMatrix& a, double clip = -1e-10);
// Frobenius-nearest unit-trace PSD matrix (eigenvalue projection onto the
// probability simplex).
ComplexMatrix nearest_density(const ComplexMatrix& a);
// Euclidean projection of `v` onto {x >= 0, sum x = total}.
RealVector project_to_simplex(const RealVector& v, double total = 1.0);

class DensityMatrix {
 public:
  DensityMatrix() = default;
  // Validates Hermiticity, unit trace and positivity to `tol`, then stores
  // the Hermitian part.
  explicit DensityMatrix(const ComplexMatrix& rho, double tol = 1e-9);

  static DensityMatrix from_pure(const ComplexVector& psi);
  static DensityMatrix maximally_mixed(int dim);
  static DensityMatrix basis_state(int dim, int index);

  int dim() const { return static_cast<int>(m_.rows()); }
  int num_qubits() const;
  const ComplexMatrix& matrix() const { return m_; }
  double population(int index) const { return m_(index, index).real(); }
  RealVector populations() const;
  double purity() const;

 private:
  ComplexMatrix m_;
};

class PureState {
 public:
  PureState() = default;
  explicit PureState(const ComplexVector& psi, double tol = 1e-10);
  const ComplexVector& vector() const { return v_; }
  int dim() const { return static_cast<int>(v_.size()); }
  DensityMatrix density() const { return DensityMatrix::from_pure(v_); }

 private:
  ComplexVector v_;
};

// Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);
double fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma);
// 0.5 * ||rho - sigma||_1
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);
double trace_distance(const ComplexMatrix& rho, const ComplexMatrix& sigma);

// Bitstring label of a computational basis index, qubit 0 first: "01" is
// qubit 0 in |0>, qubit 1 in |1>.
std::string basis_label(int index, int num_qubits);
int basis_index(const std::string& label);

}  // namespace mcmkit
