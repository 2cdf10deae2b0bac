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
#include <optional>
#include <string>
#include <vector>

#include "mcmkit/circuit.hpp"
#include "mcmkit/json_io.hpp"
#include "mcmkit/lindblad.hpp"
#include "mcmkit/noise.hpp"

namespace mcmkit {

struct TomographyConfig {
  long shots = 8192;
  int repetitions = 37;
  int resamples = 100;
  bool exact = false;
  double readout_flip = 0.0;  // symmetric per-qubit flip probability
  bool mitigate = true;
  double spam_depolarizing = 0.0;
};

struct BoundsConfig {
  std::optional<double> r;
  std::optional<double> pol1;
  std::optional<double> pol2;
  bool strict = true;
  std::vector<double> gate_distances;
  std::vector<double> prep_distances;
  int steps = -1;  // < 0 means mcm.steps
};

struct MetricsInput {
  std::string name;
  std::string file;
  std::string target = "cnot";  // identity | cnot | swap
};

struct MetricsConfig {
  std::vector<MetricsInput> inputs;  // empty: use the noise model's gates
  bool bootstrap = false;
};

struct ExperimentConfig {
  SuperradianceModel model;
  double dt = 0.1;
  int steps = 5;
  std::vector<std::string> initial_states{"sub", "sup", "ee", "gg"};
  double exact_t_max = 1.0;
  int exact_points = 11;
  std::string topology_file;  // empty: built-in 16-qubit device map
  std::optional<Placement> placement;
  // Ground-truth noise for `noisy`. Its cnot_overrides stand for the
  // per-pair hardware deviations; the reported model drops them.
  std::optional<NoiseModel> noise;
  TomographyConfig tomography;
  SimulationOptions simulation;
  BoundsConfig bounds;
  MetricsConfig metrics;
  std::uint64_t seed = 1234;
  std::string output_dir = "out";
  std::string base_dir = ".";  // directory of the config file

  Topology topology() const;
  Placement resolved_placement() const;
  // Every field with defaults filled in; the output directory is left out
  // so it does not change the hash.
  json normalized() const;
  // FNV-1a 64 of normalized().dump(), as 16 hex digits.
  std::string hash() const;
};

const json& config_schema();

// Schema violations and semantic errors are collected and thrown together
// as one kParse error, one "file:line: pointer: message" per line.
ExperimentConfig config_from_document(const JsonDocument& doc, const std::string& base_dir = ".");
ExperimentConfig load_config(const std::string& path);

std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace mcmkit
