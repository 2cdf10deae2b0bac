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

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcmkit/channel.hpp"
#include "mcmkit/random.hpp"

namespace mcmkit {

// Outcome counts keyed by bitstring, qubit 0 first.
struct CountsTable {
  int num_qubits = 0;
  long shots = 0;
  std::map<std::string, long> counts;

  static CountsTable from_vector(const std::vector<long>& v, int num_qubits);
  std::vector<long> to_vector() const;
  std::vector<double> frequencies() const;
  void validate() const;
};

CountsTable sample_counts(const std::vector<double>& probs, long shots, int num_qubits, Rng& rng);

// Independent per-qubit readout errors: m(i, j) = P(read i | prepared j),
// columns sum to one.
struct ConfusionMatrix {
  std::vector<Eigen::Matrix2d> per_qubit;

  static ConfusionMatrix symmetric(int num_qubits, double flip);
  static ConfusionMatrix asymmetric(int num_qubits, double p01, double p10);
  int num_qubits() const { return static_cast<int>(per_qubit.size()); }
  // Throws kSingular when a per-qubit matrix cannot be inverted.
  void validate() const;
  Eigen::MatrixXd full() const;
};

// Forward model: each shot's bits are flipped independently.
CountsTable apply_readout_error(const CountsTable& ideal, const ConfusionMatrix& cm, Rng& rng);
// Inverts the tensor-product confusion model and projects the result onto
// the probability simplex (negative quasi-probabilities clipped, the rest
// renormalized).
std::vector<double> mitigate_readout(const std::vector<double>& freqs, const ConfusionMatrix& cm);

// 3^n settings over {X, Y, Z}, lexicographic, qubit 0 first.
std::vector<std::string> pauli_settings(int num_qubits);
// U such that a Z-basis readout after U measures the given setting.
ComplexMatrix measurement_rotation(const std::string& setting);
std::vector<double> setting_probabilities(const ComplexMatrix& rho, const std::string& setting);

struct TomographyOptions {
  long shots = 8192;
  int repetitions = 37;
  bool exact = false;  // use exact probabilities instead of sampling
  std::optional<ConfusionMatrix> readout;
  bool mitigate = true;
  // Depolarizing strength applied after preparation and before readout.
  double spam_depolarizing = 0.0;
};

struct MeasurementRecord {
  std::string setting;
  long shots = 0;              // pooled over repetitions; 0 in exact mode
  std::vector<long> counts;    // raw counts, empty in exact mode
  std::vector<double> freqs;   // after mitigation when enabled
};

struct StateTomographyData {
  int num_qubits = 0;
  std::vector<MeasurementRecord> records;
  std::optional<ConfusionMatrix> mitigation;
};

StateTomographyData collect_state_data(const ComplexMatrix& rho, const TomographyOptions& opts, Rng& rng);
// Unconstrained estimate (Hermitian, unit trace, possibly not PSD).
ComplexMatrix linear_inversion_state(const StateTomographyData& data);
// Nearest density matrix to the linear-inversion estimate.
DensityMatrix state_tomography(const StateTomographyData& data);

// Product preparations over {"0", "1", "+", "+i"}, qubit 0 first, each
// label a string of per-qubit tokens separated by ','.
std::vector<std::string> process_preparations(int num_qubits);
ComplexMatrix preparation_state(const std::string& label);

struct ProcessTomographyData {
  int num_qubits = 0;
  std::vector<std::string> preparations;
  std::vector<StateTomographyData> outputs;
};

ProcessTomographyData collect_process_data(const QuantumChannel& gate, const TomographyOptions& opts, Rng& rng);
// Choi matrix of the least-squares linear map (not projected).
ComplexMatrix linear_inversion_process(const ProcessTomographyData& data);

struct CptpProjection {
  ComplexMatrix choi;
  int iterations = 0;
  double residual = 0.0;  // max |Tr_out J - I| after the last PSD step
};
// Alternating PSD and trace-preserving projections with Dykstra
// corrections, stopping at residual <= tol or max_iterations.
CptpProjection project_cptp(const ComplexMatrix& choi, int dim, double tol = 1e-8, int max_iterations = 1000);

QuantumChannel process_tomography(const ProcessTomographyData& data);

struct BootstrapResult {
  double estimate = 0.0;  // statistic on the original data
  double mean = 0.0;
  double std = 0.0;
  std::vector<double> samples;
};

BootstrapResult bootstrap_process(const ProcessTomographyData& data,
                                  const std::function<double(const QuantumChannel&)>& statistic, int resamples,
                                  std::uint64_t seed);
BootstrapResult bootstrap_state(const StateTomographyData& data,
                                const std::function<double(const DensityMatrix&)>& statistic, int resamples,
                                std::uint64_t seed);

}  // namespace mcmkit
