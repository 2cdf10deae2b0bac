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

#include "mcmkit/tomo.hpp"

#include <cmath>
#include <sstream>

namespace mcmkit {

CountsTable CountsTable::from_vector(const std::vector<long>& v, int num_qubits) {
  if (static_cast<long>(v.size()) != (1L << num_qubits)) {
    throw Error(ErrorKind::kDimensionMismatch, "counts vector length is not 2^n");
  }
  CountsTable t;
  t.num_qubits = num_qubits;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) throw Error(ErrorKind::kInvalidArgument, "negative count");
    t.shots += v[i];
    if (v[i] > 0) t.counts[basis_label(static_cast<int>(i), num_qubits)] = v[i];
  }
  return t;
}

std::vector<long> CountsTable::to_vector() const {
  std::vector<long> v(1L << num_qubits, 0);
  for (const auto& [label, c] : counts) {
    if (static_cast<int>(label.size()) != num_qubits) {
      throw Error(ErrorKind::kParse, "bitstring '" + label + "' has the wrong length");
    }
    v[basis_index(label)] += c;
  }
  return v;
}

std::vector<double> CountsTable::frequencies() const {
  if (shots <= 0) throw Error(ErrorKind::kInvalidArgument, "counts table has no shots");
  std::vector<double> f;
  for (long c : to_vector()) f.push_back(static_cast<double>(c) / shots);
  return f;
}

void CountsTable::validate() const {
  if (num_qubits <= 0 || num_qubits > 16) throw Error(ErrorKind::kInvalidArgument, "counts: bad qubit count");
  long total = 0;
  for (const auto& [label, c] : counts) {
    if (static_cast<int>(label.size()) != num_qubits) {
      throw Error(ErrorKind::kParse, "bitstring '" + label + "' has the wrong length");
    }
    basis_index(label);
    if (c < 0) throw Error(ErrorKind::kInvalidArgument, "negative count for '" + label + "'");
    total += c;
  }
  if (total != shots) {
    throw Error(ErrorKind::kInvalidArgument,
                "counts sum to " + std::to_string(total) + " but shots is " + std::to_string(shots));
  }
}

CountsTable sample_counts(const std::vector<double>& probs, long shots, int num_qubits, Rng& rng) {
  return CountsTable::from_vector(sample_multinomial(shots, probs, rng), num_qubits);
}

ConfusionMatrix ConfusionMatrix::symmetric(int num_qubits, double flip) { return asymmetric(num_qubits, flip, flip); }

ConfusionMatrix ConfusionMatrix::asymmetric(int num_qubits, double p01, double p10) {
  // p01 = P(read 1 | prepared 0), p10 = P(read 0 | prepared 1).
  ConfusionMatrix cm;
  Eigen::Matrix2d m;
  m << 1.0 - p01, p10, p01, 1.0 - p10;
  cm.per_qubit.assign(num_qubits, m);
  cm.validate();
  return cm;
}

void ConfusionMatrix::validate() const {
  if (per_qubit.empty()) throw Error(ErrorKind::kInvalidArgument, "confusion matrix has no qubits");
  for (const auto& m : per_qubit) {
    if ((m.array() < 0.0).any() || (m.array() > 1.0).any()) {
      throw Error(ErrorKind::kInvalidArgument, "confusion entries must lie in [0, 1]");
    }
    if (std::abs(m.col(0).sum() - 1.0) > 1e-12 || std::abs(m.col(1).sum() - 1.0) > 1e-12) {
      throw Error(ErrorKind::kInvalidArgument, "confusion columns must sum to one");
    }
    if (std::abs(m.determinant()) < 1e-9) throw Error(ErrorKind::kSingular, "confusion matrix is singular");
  }
}

Eigen::MatrixXd ConfusionMatrix::full() const {
  Eigen::MatrixXd out = Eigen::MatrixXd::Ones(1, 1);
  for (const auto& m : per_qubit) {
    Eigen::MatrixXd next(out.rows() * 2, out.cols() * 2);
    for (long i = 0; i < out.rows(); ++i) {
      for (long j = 0; j < out.cols(); ++j) next.block(2 * i, 2 * j, 2, 2) = out(i, j) * m;
    }
    out = next;
  }
  return out;
}

CountsTable apply_readout_error(const CountsTable& ideal, const ConfusionMatrix& cm, Rng& rng) {
  cm.validate();
  if (cm.num_qubits() != ideal.num_qubits) throw Error(ErrorKind::kDimensionMismatch, "confusion matrix qubit count");
  const Eigen::MatrixXd a = cm.full();
  const std::vector<long> in = ideal.to_vector();
  std::vector<long> out(in.size(), 0);
  for (size_t j = 0; j < in.size(); ++j) {
    if (in[j] == 0) continue;
    std::vector<double> col(a.rows());
    for (long i = 0; i < a.rows(); ++i) col[i] = a(i, static_cast<long>(j));
    const auto c = sample_multinomial(in[j], col, rng);
    for (size_t i = 0; i < c.size(); ++i) out[i] += c[i];
  }
  return CountsTable::from_vector(out, ideal.num_qubits);
}

std::vector<double> mitigate_readout(const std::vector<double>& freqs, const ConfusionMatrix& cm) {
  cm.validate();
  if (static_cast<long>(freqs.size()) != (1L << cm.num_qubits())) {
    throw Error(ErrorKind::kDimensionMismatch, "frequency vector does not match the confusion model");
  }
  ConfusionMatrix inv;
  for (const auto& m : cm.per_qubit) inv.per_qubit.push_back(m.inverse());
  const Eigen::MatrixXd ainv = inv.full();
  const RealVector f = Eigen::Map<const RealVector>(freqs.data(), freqs.size());
  const RealVector p = project_to_simplex(ainv * f, 1.0);
  return std::vector<double>(p.data(), p.data() + p.size());
}

std::vector<std::string> pauli_settings(int num_qubits) {
  std::vector<std::string> out{""};
  for (int q = 0; q < num_qubits; ++q) {
    std::vector<std::string> next;
    for (const auto& s : out) {
      for (char c : {'X', 'Y', 'Z'}) next.push_back(s + c);
    }
    out = std::move(next);
  }
  return out;
}

ComplexMatrix measurement_rotation(const std::string& setting) {
  ComplexMatrix h(2, 2), sdg = ComplexMatrix::Zero(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  sdg(0, 0) = 1.0;
  sdg(1, 1) = cplx(0, -1);
  std::vector<ComplexMatrix> f;
  for (char c : setting) {
    if (c == 'X') f.push_back(h);
    else if (c == 'Y') f.push_back(h * sdg);
    else if (c == 'Z') f.push_back(identity(2));
    else throw Error(ErrorKind::kInvalidArgument, std::string("bad measurement basis '") + c + "'");
  }
  return kron_all(f);
}

std::vector<double> setting_probabilities(const ComplexMatrix& rho, const std::string& setting) {
  const ComplexMatrix u = measurement_rotation(setting);
  if (u.rows() != rho.rows()) throw Error(ErrorKind::kDimensionMismatch, "setting does not match the state");
  const ComplexMatrix r = u * rho * u.adjoint();
  std::vector<double> p(r.rows());
  for (long i = 0; i < r.rows(); ++i) p[i] = std::max(0.0, r(i, i).real());
  return p;
}

namespace {

void fill_frequencies(MeasurementRecord& rec, int n, const std::optional<ConfusionMatrix>& mitigation) {
  std::vector<double> f(rec.counts.size());
  for (size_t i = 0; i < f.size(); ++i) f[i] = static_cast<double>(rec.counts[i]) / rec.shots;
  rec.freqs = mitigation ? mitigate_readout(f, *mitigation) : f;
  (void)n;
}

ComplexMatrix spam(const ComplexMatrix& rho, double p) {
  if (p == 0.0) return rho;
  return depolarizing(static_cast<int>(rho.rows()), p).apply(rho);
}

}  // namespace

StateTomographyData collect_state_data(const ComplexMatrix& rho_in, const TomographyOptions& opts, Rng& rng) {
  if (!is_square(rho_in) || !is_power_of_two(rho_in.rows())) {
    throw Error(ErrorKind::kDimensionMismatch, "state tomography needs a qubit state");
  }
  if (!opts.exact && (opts.shots <= 0 || opts.repetitions <= 0)) {
    throw Error(ErrorKind::kInvalidArgument, "shots and repetitions must be positive");
  }
  const int n = log2_exact(rho_in.rows());
  if (opts.readout && opts.readout->num_qubits() != n) {
    throw Error(ErrorKind::kDimensionMismatch, "readout model qubit count");
  }
  const ComplexMatrix rho = spam(rho_in, opts.spam_depolarizing);
  StateTomographyData data;
  data.num_qubits = n;
  if (opts.readout && opts.mitigate) data.mitigation = opts.readout;
  for (const auto& s : pauli_settings(n)) {
    MeasurementRecord rec;
    rec.setting = s;
    std::vector<double> p = setting_probabilities(rho, s);
    if (opts.exact) {
      if (opts.readout) {
        const Eigen::MatrixXd a = opts.readout->full();
        const RealVector q = a * Eigen::Map<const RealVector>(p.data(), p.size());
        p.assign(q.data(), q.data() + q.size());
      }
      rec.freqs = data.mitigation ? mitigate_readout(p, *data.mitigation) : p;
    } else {
      rec.shots = opts.shots * opts.repetitions;
      CountsTable c = sample_counts(p, rec.shots, n, rng);
      if (opts.readout) c = apply_readout_error(c, *opts.readout, rng);
      rec.counts = c.to_vector();
      fill_frequencies(rec, n, data.mitigation);
    }
    data.records.push_back(std::move(rec));
  }
  return data;
}

ComplexMatrix linear_inversion_state(const StateTomographyData& data) {
  const int n = data.num_qubits;
  const auto basis = normalized_pauli_basis(n);
  const long d = 1L << n;
  ComplexMatrix rho = ComplexMatrix::Zero(d, d);
  const double norm = std::sqrt(static_cast<double>(d));
  for (size_t k = 0; k < basis.size(); ++k) {
    // Pauli string of basis element k, base-4 digits I, X, Y, Z.
    std::string pauli(n, 'I');
    long rem = static_cast<long>(k);
    for (int q = n - 1; q >= 0; --q) {
      pauli[q] = "IXYZ"[rem % 4];
      rem /= 4;
    }
    double sum = 0.0;
    int used = 0;
    for (const auto& rec : data.records) {
      bool ok = true;
      for (int q = 0; q < n; ++q) {
        if (pauli[q] != 'I' && pauli[q] != rec.setting[q]) ok = false;
      }
      if (!ok) continue;
      double e = 0.0;
      for (size_t o = 0; o < rec.freqs.size(); ++o) {
        int sign = 1;
        for (int q = 0; q < n; ++q) {
          if (pauli[q] != 'I' && ((o >> (n - 1 - q)) & 1)) sign = -sign;
        }
        e += sign * rec.freqs[o];
      }
      sum += e;
      ++used;
    }
    if (used == 0) throw Error(ErrorKind::kInvalidArgument, "tomography data misses a Pauli setting");
    // rho = sum_P <P> P / d and B_k = P / sqrt(d).
    rho += (sum / used) * basis[k] * (norm / static_cast<double>(d));
  }
  return hermitian_part(rho);
}

DensityMatrix state_tomography(const StateTomographyData& data) {
  return DensityMatrix(nearest_density(linear_inversion_state(data)));
}

std::vector<std::string> process_preparations(int num_qubits) {
  std::vector<std::string> out{""};
  for (int q = 0; q < num_qubits; ++q) {
    std::vector<std::string> next;
    for (const auto& s : out) {
      for (const char* t : {"0", "1", "+", "+i"}) next.push_back(s.empty() ? std::string(t) : s + "," + t);
    }
    out = std::move(next);
  }
  return out;
}

ComplexMatrix preparation_state(const std::string& label) {
  std::vector<ComplexMatrix> f;
  std::stringstream ss(label);
  std::string tok;
  const double r = 1.0 / std::sqrt(2.0);
  while (std::getline(ss, tok, ',')) {
    ComplexVector v(2);
    if (tok == "0") v << 1, 0;
    else if (tok == "1") v << 0, 1;
    else if (tok == "+") v << r, r;
    else if (tok == "+i") v << r, cplx(0, r);
    else throw Error(ErrorKind::kInvalidArgument, "unknown preparation '" + tok + "'");
    f.push_back(v * v.adjoint());
  }
  if (f.empty()) throw Error(ErrorKind::kInvalidArgument, "empty preparation label");
  return kron_all(f);
}

ProcessTomographyData collect_process_data(const QuantumChannel& gate, const TomographyOptions& opts, Rng& rng) {
  if (gate.dim_in() != gate.dim_out() || !is_power_of_two(gate.dim_in())) {
    throw Error(ErrorKind::kDimensionMismatch, "process tomography needs a qubit channel");
  }
  ProcessTomographyData data;
  data.num_qubits = log2_exact(gate.dim_in());
  data.preparations = process_preparations(data.num_qubits);
  for (const auto& label : data.preparations) {
    const ComplexMatrix in = spam(preparation_state(label), opts.spam_depolarizing);
    TomographyOptions o = opts;
    data.outputs.push_back(collect_state_data(gate.apply(in), o, rng));
  }
  return data;
}

ComplexMatrix linear_inversion_process(const ProcessTomographyData& data) {
  const long d = 1L << data.num_qubits;
  const long k = static_cast<long>(data.preparations.size());
  ComplexMatrix in(d * d, k), out(d * d, k);
  for (long i = 0; i < k; ++i) {
    in.col(i) = vec(preparation_state(data.preparations[i]));
    out.col(i) = vec(linear_inversion_state(data.outputs[i]));
  }
  // S in = out in the least-squares sense.
  const ComplexMatrix s = in.transpose().colPivHouseholderQr().solve(out.transpose()).transpose();
  return hermitian_part(liouville_to_choi(s, static_cast<int>(d), static_cast<int>(d)));
}

CptpProjection project_cptp(const ComplexMatrix& choi, int dim, double tol, int max_iterations) {
  const long n = static_cast<long>(dim) * dim;
  if (choi.rows() != n || choi.cols() != n) throw Error(ErrorKind::kDimensionMismatch, "project_cptp: Choi size");
  auto psd = [](const ComplexMatrix& a) {
    HermitianEig e = hermitian_eig(a);
    return ComplexMatrix(e.vectors * e.values.cwiseMax(0.0).asDiagonal() * e.vectors.adjoint());
  };
  const ComplexMatrix id_out = identity(dim);
  auto tp = [&](const ComplexMatrix& a) {
    const ComplexMatrix delta = partial_trace(a, {dim, dim}, {0}) - identity(dim);
    return ComplexMatrix(a - kron(delta, id_out) / static_cast<double>(dim));
  };
  auto residual = [&](const ComplexMatrix& a) {
    return (partial_trace(a, {dim, dim}, {0}) - identity(dim)).cwiseAbs().maxCoeff();
  };
  CptpProjection res;
  ComplexMatrix x = psd(hermitian_part(choi));
  ComplexMatrix p = ComplexMatrix::Zero(n, n), q = ComplexMatrix::Zero(n, n);
  res.residual = residual(x);
  // Dykstra: starting from the PSD projection of the input keeps the
  // iterates on the cone; the TP step is affine so it needs no correction
  // term in exact arithmetic but carrying it costs nothing.
  x = hermitian_part(choi);
  while (res.iterations < max_iterations) {
    const ComplexMatrix y = tp(x + p);
    p = x + p - y;
    const ComplexMatrix z = psd(y + q);
    q = y + q - z;
    x = hermitian_part(z);
    ++res.iterations;
    res.residual = residual(x);
    if (res.residual <= tol) break;
  }
  res.choi = x;
  return res;
}

QuantumChannel process_tomography(const ProcessTomographyData& data) {
  const int d = 1 << data.num_qubits;
  const CptpProjection p = project_cptp(linear_inversion_process(data), d);
  if (p.residual > 1e-6) {
    throw Error(ErrorKind::kNonConvergence, "CPTP projection stalled at residual " + std::to_string(p.residual));
  }
  // A last affine TP step makes the trace exact; it moves the spectrum by
  // at most the residual.
  const ComplexMatrix delta = partial_trace(p.choi, {d, d}, {0}) - identity(d);
  const ComplexMatrix choi = hermitian_part(p.choi - kron(delta, identity(d)) / static_cast<double>(d));
  return QuantumChannel::from_choi(choi, d, d, QuantumChannel::Check::kCptp, 1e-6);
}

namespace {

StateTomographyData resample(const StateTomographyData& data, Rng& rng) {
  StateTomographyData out = data;
  for (auto& rec : out.records) {
    if (rec.shots <= 0 || rec.counts.empty()) {
      throw Error(ErrorKind::kInvalidArgument, "bootstrap needs sampled counts, not exact probabilities");
    }
    std::vector<double> f(rec.counts.begin(), rec.counts.end());
    rec.counts = sample_multinomial(rec.shots, f, rng);
    fill_frequencies(rec, data.num_qubits, data.mitigation);
  }
  return out;
}

void summarize(BootstrapResult& r) {
  const double n = static_cast<double>(r.samples.size());
  double s = 0.0, s2 = 0.0;
  for (double v : r.samples) s += v;
  r.mean = s / n;
  for (double v : r.samples) s2 += (v - r.mean) * (v - r.mean);
  r.std = n > 1 ? std::sqrt(s2 / (n - 1.0)) : 0.0;
}

}  // namespace

BootstrapResult bootstrap_process(const ProcessTomographyData& data,
                                  const std::function<double(const QuantumChannel&)>& statistic, int resamples,
                                  std::uint64_t seed) {
  if (resamples < 2) throw Error(ErrorKind::kInvalidArgument, "bootstrap needs at least two resamples");
  BootstrapResult r;
  r.estimate = statistic(process_tomography(data));
  for (int b = 0; b < resamples; ++b) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(b)));
    ProcessTomographyData d = data;
    for (auto& o : d.outputs) o = resample(o, rng);
    r.samples.push_back(statistic(process_tomography(d)));
  }
  summarize(r);
  return r;
}

BootstrapResult bootstrap_state(const StateTomographyData& data,
                                const std::function<double(const DensityMatrix&)>& statistic, int resamples,
                                std::uint64_t seed) {
  if (resamples < 2) throw Error(ErrorKind::kInvalidArgument, "bootstrap needs at least two resamples");
  BootstrapResult r;
  r.estimate = statistic(state_tomography(data));
  for (int b = 0; b < resamples; ++b) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(b)));
    r.samples.push_back(statistic(state_tomography(resample(data, rng))));
  }
  summarize(r);
  return r;
}

}  // namespace mcmkit
