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

#include "mcmkit/runner.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "mcmkit/bounds.hpp"
#include "mcmkit/mcm.hpp"
#include "mcmkit/metrics.hpp"
#include "mcmkit/tomo.hpp"

namespace mcmkit {

namespace {

std::string format_cell(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* l = std::get_if<long>(&c)) return std::to_string(*l);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", std::get<double>(c) + 0.0);  // no "-0"
  return buf;
}

std::vector<Cell> populations(const DensityMatrix& rho) {
  return {rho.population(0), rho.population(1), rho.population(2), rho.population(3)};
}

void append(std::vector<Cell>& row, const std::vector<Cell>& more) { row.insert(row.end(), more.begin(), more.end()); }

TomographyOptions tomo_options(const ExperimentConfig& cfg, int num_qubits) {
  TomographyOptions o;
  o.shots = cfg.tomography.shots;
  o.repetitions = cfg.tomography.repetitions;
  o.exact = cfg.tomography.exact;
  o.mitigate = cfg.tomography.mitigate;
  o.spam_depolarizing = cfg.tomography.spam_depolarizing;
  if (cfg.tomography.readout_flip > 0.0) o.readout = ConfusionMatrix::symmetric(num_qubits, cfg.tomography.readout_flip);
  return o;
}

GateOp cnot_op(const QubitPair& p) {
  GateOp op;
  op.kind = GateKind::kCnot;
  op.qubits = {p.first, p.second};
  return op;
}

ComplexMatrix target_unitary(const std::string& target, int dim) {
  if (target == "identity") return identity(dim);
  if (target == "cnot" && dim == 4) return cnot_matrix();
  if (target == "swap" && dim == 4) return swap_matrix();
  throw Error(ErrorKind::kInvalidArgument, "target '" + target + "' does not fit dimension " + std::to_string(dim));
}

std::vector<CompiledCircuit> compile_all(const ExperimentConfig& cfg, const CollisionSpec& spec) {
  const Topology topo = cfg.topology();
  const Placement place = cfg.resolved_placement();
  std::vector<CompiledCircuit> out;
  for (const auto& label : cfg.initial_states) out.push_back(compile_mcm(spec, topo, place, label, cfg.steps));
  return out;
}

std::vector<QubitPair> all_pairs(const std::vector<CompiledCircuit>& circuits) {
  std::vector<QubitPair> pairs;
  std::set<QubitPair> seen;
  for (const auto& c : circuits) {
    for (const auto& p : cnot_pairs(c)) {
      if (seen.insert(p).second) pairs.push_back(p);
    }
  }
  return pairs;
}

const NoiseModel& require_noise(const ExperimentConfig& cfg, const char* command) {
  if (!cfg.noise) throw Error(ErrorKind::kInvalidArgument, std::string(command) + " needs a noise model in the config");
  return *cfg.noise;
}

}  // namespace

void Table::add(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw Error(ErrorKind::kDimensionMismatch, "table row width");
  rows.push_back(std::move(row));
}

size_t Table::column(const std::string& name) const {
  for (size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw Error(ErrorKind::kInvalidArgument, "no column '" + name + "'");
}

double Table::number(size_t row, const std::string& name) const {
  const Cell& c = rows.at(row).at(column(name));
  if (const auto* d = std::get_if<double>(&c)) return *d;
  if (const auto* l = std::get_if<long>(&c)) return static_cast<double>(*l);
  throw Error(ErrorKind::kInvalidArgument, "column '" + name + "' is not numeric");
}

std::string Table::text(size_t row, const std::string& name) const { return format_cell(rows.at(row).at(column(name))); }

std::string Table::to_csv(const std::string& header) const {
  std::string out = header + "\n";
  for (size_t i = 0; i < columns.size(); ++i) out += (i ? "," : "") + columns[i];
  out += "\n";
  for (const auto& r : rows) {
    for (size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + format_cell(r[i]);
    out += "\n";
  }
  return out;
}

RunResult cmd_exact(const ExperimentConfig& cfg) {
  Table t;
  t.columns = {"label", "source", "t", "P_em", "p_gg", "p_ge", "p_eg", "p_ee"};
  const LindbladGenerator gen = cfg.model.generator();
  for (const auto& label : cfg.initial_states) {
    const bool analytic = has_analytic_oracle(cfg.model.mode, label);
    for (int i = 0; i < cfg.exact_points; ++i) {
      const double time = cfg.exact_t_max * i / (cfg.exact_points - 1);
      DensityMatrix rho;
      double p;
      if (analytic) {
        rho = analytic_oracle(cfg.model, label, time);
        p = emission_power_analytic(cfg.model, label, time);
      } else {
        rho = evolve(gen, named_state(label), time);
        p = emission_power(cfg.model, named_state(label), time);
      }
      std::vector<Cell> row{label, std::string(analytic ? "oracle" : "numeric"), time, p};
      append(row, populations(rho));
      t.add(row);
    }
  }
  RunResult r;
  r.tables["exact"] = t;
  return r;
}

RunResult cmd_mcm(const ExperimentConfig& cfg) {
  const CollisionSpec spec = superradiance_spec(cfg.model, cfg.dt, cfg.steps);
  Table t;
  t.columns = {"label", "n", "t", "p_gg", "p_ge", "p_eg", "p_ee", "eps_ideal"};
  for (const auto& label : cfg.initial_states) {
    const DensityMatrix rho0 = named_state(label);
    const auto states = simulate(spec, rho0, cfg.steps);
    const auto errs = ideal_error(spec, rho0, cfg.steps);
    // One row per collision step; the initial state is not a row.
    for (int n = 1; n <= cfg.steps; ++n) {
      std::vector<Cell> row{label, static_cast<long>(n), n * cfg.dt};
      append(row, populations(states[n]));
      row.push_back(errs[n - 1]);
      t.add(row);
    }
  }
  RunResult r;
  r.tables["mcm"] = t;
  return r;
}

RunResult cmd_noisy(const ExperimentConfig& cfg) {
  const NoiseModel& truth = require_noise(cfg, "noisy");
  NoiseModel reported = truth;
  reported.cnot_overrides.clear();
  const CollisionSpec spec = superradiance_spec(cfg.model, cfg.dt, cfg.steps);
  const auto circuits = compile_all(cfg, spec);
  const auto pairs = all_pairs(circuits);
  const TomographyOptions two_q = tomo_options(cfg, 2);

  // Rebuild every CNOT from simulated process tomography of the truth.
  NoiseModel rebuilt;
  rebuilt.kind = NoiseKind::kChoiInjection;
  json gates = json::array();
  for (size_t i = 0; i < pairs.size(); ++i) {
    const QuantumChannel actual = noisy_gate_channel(truth, cnot_op(pairs[i]));
    Rng rng(derive_seed(cfg.seed, 1000 + i));
    const QuantumChannel est = process_tomography(collect_process_data(actual, two_q, rng));
    rebuilt.injected[pairs[i]] = est;
    gates.push_back(json{{"control", pairs[i].first},
                         {"target", pairs[i].second},
                         {"infidelity_truth", average_gate_infidelity(cnot_matrix(), actual)},
                         {"infidelity_reported", average_gate_infidelity(cnot_matrix(),
                                                                         noisy_gate_channel(reported, cnot_op(pairs[i])))},
                         {"infidelity_tomography", average_gate_infidelity(cnot_matrix(), est)}});
  }

  Table t;
  t.columns = {"label", "n", "cnots", "p_gg", "p_ge", "p_eg", "p_ee", "infid_ideal", "td_ideal", "infid_ibm",
               "td_ibm", "infid_choi", "td_choi", "pop_dev_ibm", "pop_dev_choi", "gate_infid_sum"};
  for (size_t c = 0; c < circuits.size(); ++c) {
    const CompiledCircuit& circ = circuits[c];
    const CompiledCircuit flat = expand_swaps(circ);
    const auto ideal = simulate(spec, named_state(circ.initial_label), cfg.steps);
    const CircuitRun run_truth = noisy_simulate(circ, truth, cfg.simulation);
    const CircuitRun run_ibm = noisy_simulate(circ, reported, cfg.simulation);
    const CircuitRun run_choi = noisy_simulate(circ, rebuilt, cfg.simulation);
    Rng rng(derive_seed(cfg.seed, c));
    long cnots = 0;
    double gate_sum = 0.0;
    size_t op = 0;
    for (int n = 0; n <= cfg.steps; ++n) {
      for (; op < flat.step_end[n]; ++op) {
        const GateOp& g = flat.ops[op];
        if (g.kind == GateKind::kCnot) ++cnots;
        gate_sum += average_gate_infidelity(gate_matrix(g), noisy_gate_channel(truth, g));
      }
      const DensityMatrix experiment =
          cfg.tomography.exact ? run_truth.step_states[n]
                               : state_tomography(collect_state_data(run_truth.step_states[n].matrix(), two_q, rng));
      auto pop_dev = [&](const DensityMatrix& other) {
        return (experiment.populations() - other.populations()).cwiseAbs().maxCoeff();
      };
      std::vector<Cell> row{circ.initial_label, static_cast<long>(n), cnots};
      append(row, populations(experiment));
      append(row, {1.0 - fidelity(experiment, ideal[n]), trace_distance(experiment, ideal[n]),
                   1.0 - fidelity(experiment, run_ibm.step_states[n]), trace_distance(experiment, run_ibm.step_states[n]),
                   1.0 - fidelity(experiment, run_choi.step_states[n]),
                   trace_distance(experiment, run_choi.step_states[n]), pop_dev(run_ibm.step_states[n]),
                   pop_dev(run_choi.step_states[n]), gate_sum});
      t.add(row);
    }
  }
  RunResult r;
  r.tables["noisy"] = t;
  r.reports["noisy"] = json{{"truth", noise_model_to_json(truth)}, {"cnot_gates", gates}};
  return r;
}

RunResult cmd_metrics(const ExperimentConfig& cfg) {
  Table t;
  t.columns = {"name", "dim", "cptp", "r", "omega", "omega_over_r", "u", "d_diamond", "d_lower", "d_upper",
               "bound_r", "bound_ru", "r_std", "flags"};
  json reports = json::array();
  auto add_row = [&](const std::string& name, const ComplexMatrix& u, const QuantumChannel& ch, double r_std) {
    const bool cptp = ch.is_cptp(1e-7);
    std::vector<Cell> row{name, static_cast<long>(ch.dim_in()), static_cast<long>(cptp ? 1 : 0)};
    std::string flags = cptp ? "" : "not_cptp";
    try {
      MetricsReport m = compute_metrics(u, ch, name);
      m.infidelity_std = r_std;
      for (const auto& v : m.violations()) flags += (flags.empty() ? "" : ";") + v;
      append(row, {m.infidelity, m.incoherence, m.incoherence_ratio, m.unitarity, m.diamond, m.diamond_lower,
                   m.diamond_upper, m.bound_infidelity, m.bound_unitarity, r_std});
      json j = metrics_report_to_json(m);
      j["cptp"] = cptp;
      reports.push_back(j);
    } catch (const Error& e) {
      flags += (flags.empty() ? "" : ";") + std::string("error:") + error_kind_name(e.kind());
      for (int i = 0; i < 10; ++i) row.push_back(std::nan(""));
      reports.push_back(json{{"name", name}, {"cptp", cptp}, {"error", e.what()}});
    }
    row.push_back(flags);
    t.add(row);
  };

  if (!cfg.metrics.inputs.empty()) {
    for (const auto& in : cfg.metrics.inputs) {
      std::filesystem::path p(in.file);
      if (p.is_relative()) p = std::filesystem::path(cfg.base_dir) / p;
      const QuantumChannel ch = load_channel(p.string(), QuantumChannel::Check::kNone);
      if (ch.dim_in() != ch.dim_out()) throw Error(ErrorKind::kDimensionMismatch, in.name + ": dim_in != dim_out");
      add_row(in.name, target_unitary(in.target, ch.dim_in()), ch, -1.0);
    }
  } else {
    const NoiseModel& model = require_noise(cfg, "metrics");
    const CollisionSpec spec = superradiance_spec(cfg.model, cfg.dt, cfg.steps);
    const auto pairs = all_pairs(compile_all(cfg, spec));
    GateOp one;
    one.kind = GateKind::kRot1q;
    one.qubits = {cfg.resolved_placement().system[0]};
    add_row("u3_q" + std::to_string(one.qubits[0]), identity(2), noisy_gate_channel(model, one), -1.0);
    for (size_t i = 0; i < pairs.size(); ++i) {
      const QuantumChannel ch = noisy_gate_channel(model, cnot_op(pairs[i]));
      double r_std = -1.0;
      if (cfg.metrics.bootstrap) {
        Rng rng(derive_seed(cfg.seed, 2000 + i));
        TomographyOptions o = tomo_options(cfg, 2);
        o.exact = false;
        const auto data = collect_process_data(ch, o, rng);
        const auto stat = [](const QuantumChannel& c) { return average_gate_infidelity(cnot_matrix(), c); };
        r_std = bootstrap_process(data, stat, cfg.tomography.resamples, derive_seed(cfg.seed, 3000 + i)).std;
      }
      add_row("cnot_" + std::to_string(pairs[i].first) + "_" + std::to_string(pairs[i].second), cnot_matrix(), ch,
              r_std);
    }
  }
  RunResult r;
  r.tables["metrics"] = t;
  r.reports["metrics"] = reports;
  return r;
}

RunResult cmd_bounds(const ExperimentConfig& cfg) {
  const CollisionSpec spec = superradiance_spec(cfg.model, cfg.dt, cfg.steps);
  StepBoundParams p;
  p.subsystems = spec.subsystems;
  p.jumps = spec.num_ancillas();
  p.scale = interaction_scale(spec);
  p.dt = cfg.dt;
  p.r = cfg.bounds.r;
  p.pol1 = cfg.bounds.pol1;
  p.pol2 = cfg.bounds.pol2;
  p.strict = cfg.bounds.strict;

  std::vector<double> gates = cfg.bounds.gate_distances;
  if (gates.empty() && cfg.noise) {
    // One collision block of the first circuit, each gate against its ideal.
    const auto circuits = compile_all(cfg, superradiance_spec(cfg.model, cfg.dt, std::max(1, cfg.steps)));
    const CompiledCircuit flat = expand_swaps(circuits.front());
    for (size_t i = flat.step_end[0]; i < flat.step_end[1]; ++i) {
      const GateOp& g = flat.ops[i];
      gates.push_back(diamond_distance(gate_matrix(g), noisy_gate_channel(*cfg.noise, g)).value);
    }
  }
  const int steps = cfg.bounds.steps < 0 ? cfg.steps : cfg.bounds.steps;
  const BoundReport rep = bound_report(p, gates, cfg.bounds.prep_distances, steps);

  Table t;
  t.columns = {"n", "step_error", "noisy_step_error", "global_bound", "vacuous"};
  for (const auto& row : rep.rows) {
    t.add({static_cast<long>(row.n), row.step_error, row.noisy_step_error, row.global.value,
           static_cast<long>(row.global.vacuous ? 1 : 0)});
  }
  Table sweep;
  sweep.columns = {"dt", "step_bound", "steps_to_t1", "ideal_bound_at_t1"};
  for (double dt : {0.2, 0.1, 0.05, 0.025, 0.0125}) {
    StepBoundParams q = p;
    q.dt = dt;
    const StepBound b = single_step_bound(q);
    const int n = static_cast<int>(std::lround(1.0 / dt));
    sweep.add({dt, b.value, static_cast<long>(n), global_bound(n, b.value, 0.0).value});
  }
  RunResult r;
  r.tables["bounds"] = t;
  r.tables["bounds_sweep"] = sweep;
  json j = bound_report_to_json(rep);
  j["gate_distances"] = gates;
  j["prep_distances"] = cfg.bounds.prep_distances;
  j["params"] = {{"M", p.subsystems}, {"J", p.jumps}, {"Lambda", p.scale}, {"dt", p.dt},
                 {"R", p.r ? json(*p.r) : json(nullptr)}};
  r.reports["bounds"] = j;
  return r;
}

RunResult cmd_tomo(const ExperimentConfig& cfg) {
  RunResult r;
  const TomographyOptions sampled = [&] {
    TomographyOptions o = tomo_options(cfg, 2);
    o.exact = false;
    return o;
  }();
  TomographyOptions exact = tomo_options(cfg, 2);
  exact.exact = true;

  Table states;
  states.columns = {"label", "td_exact", "fidelity_sampled", "fidelity_mean", "fidelity_std"};
  for (size_t i = 0; i < cfg.initial_states.size(); ++i) {
    const std::string& label = cfg.initial_states[i];
    const DensityMatrix truth = named_state(label);
    Rng rng(derive_seed(cfg.seed, 4000 + i));
    const DensityMatrix e = state_tomography(collect_state_data(truth.matrix(), exact, rng));
    const auto data = collect_state_data(truth.matrix(), sampled, rng);
    const auto stat = [&](const DensityMatrix& rho) { return fidelity(rho, truth); };
    const BootstrapResult b = bootstrap_state(data, stat, cfg.tomography.resamples, derive_seed(cfg.seed, 5000 + i));
    states.add({label, trace_distance(e, truth), b.estimate, b.mean, b.std});
    if (i == 0) {
      json counts = json::object();
      for (const auto& rec : data.records) counts[rec.setting] = counts_to_json(CountsTable::from_vector(rec.counts, 2));
      r.reports["tomo_counts_" + label] = counts;
    }
  }

  const QuantumChannel cnot = QuantumChannel::unitary(cnot_matrix());
  const QuantumChannel noisy = compose(cnot, depolarizing(4, 0.04));
  Rng rng(derive_seed(cfg.seed, 6000));
  const QuantumChannel cnot_est = process_tomography(collect_process_data(cnot, exact, rng));
  const QuantumChannel noisy_est = process_tomography(collect_process_data(noisy, exact, rng));
  const auto data = collect_process_data(noisy, sampled, rng);
  const auto agf = [](const QuantumChannel& c) { return average_gate_fidelity(cnot_matrix(), c); };
  const BootstrapResult b = bootstrap_process(data, agf, cfg.tomography.resamples, derive_seed(cfg.seed, 6001));

  Table procs;
  procs.columns = {"gate", "mode", "agf", "agf_truth", "agf_std", "choi_max_abs_error"};
  procs.add({std::string("cnot"), std::string("exact"), agf(cnot_est), 1.0, 0.0,
             (cnot_est.choi() - cnot.choi()).cwiseAbs().maxCoeff()});
  procs.add({std::string("cnot_dep0.04"), std::string("exact"), agf(noisy_est), agf(noisy), 0.0,
             (noisy_est.choi() - noisy.choi()).cwiseAbs().maxCoeff()});
  procs.add({std::string("cnot_dep0.04"), std::string("sampled"), b.estimate, agf(noisy), b.std, std::nan("")});
  r.tables["tomo_states"] = states;
  r.tables["tomo_process"] = procs;
  r.reports["tomo_cnot_dep_choi"] = choi_to_json(process_tomography(data));
  r.reports["tomo"] = json{{"agf_bootstrap", {{"estimate", b.estimate}, {"mean", b.mean}, {"std", b.std},
                                              {"resamples", b.samples.size()}}},
                           {"shots", sampled.shots},
                           {"repetitions", sampled.repetitions}};
  return r;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"exact", "mcm", "noisy", "metrics", "bounds", "tomo"};
  return names;
}

RunResult run_command(const std::string& command, const ExperimentConfig& cfg) {
  if (command == "exact") return cmd_exact(cfg);
  if (command == "mcm") return cmd_mcm(cfg);
  if (command == "noisy") return cmd_noisy(cfg);
  if (command == "metrics") return cmd_metrics(cfg);
  if (command == "bounds") return cmd_bounds(cfg);
  if (command == "tomo") return cmd_tomo(cfg);
  throw Error(ErrorKind::kInvalidArgument, "unknown command '" + command + "'");
}

std::string output_header(const ExperimentConfig& cfg, const std::string& command) {
  return std::string("# mcmkit ") + MCMKIT_VERSION + " command=" + command + " config_hash=" + cfg.hash() +
         " seed=" + std::to_string(cfg.seed);
}

std::vector<std::string> write_outputs(const RunResult& result, const ExperimentConfig& cfg,
                                       const std::string& command, const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::kIo, "cannot create " + dir + ": " + ec.message());
  std::vector<std::string> written;
  const std::string header = output_header(cfg, command);
  for (const auto& [name, table] : result.tables) {
    const std::string path = (std::filesystem::path(dir) / (name + ".csv")).string();
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::kIo, "cannot write " + path);
    out << table.to_csv(header);
    written.push_back(path);
  }
  for (const auto& [name, report] : result.reports) {
    const std::string path = (std::filesystem::path(dir) / (name + ".json")).string();
    json j = report;
    if (j.is_object()) {
      j["_meta"] = {{"version", MCMKIT_VERSION}, {"command", command}, {"config_hash", cfg.hash()}, {"seed", cfg.seed}};
    }
    write_json_file(path, j);
    written.push_back(path);
  }
  return written;
}

}  // namespace mcmkit
