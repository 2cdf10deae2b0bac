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

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "mcmkit/config.hpp"

namespace mcmkit {

using Cell = std::variant<double, long, std::string>;

// A CSV table with a fixed column order.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row);
  size_t column(const std::string& name) const;
  double number(size_t row, const std::string& name) const;
  std::string text(size_t row, const std::string& name) const;
  // `header` goes first as a '#' comment line.
  std::string to_csv(const std::string& header) const;
};

// Tables are written as <name>.csv and reports as <name>.json.
struct RunResult {
  std::map<std::string, Table> tables;
  std::map<std::string, json> reports;
};

RunResult cmd_exact(const ExperimentConfig& cfg);
RunResult cmd_mcm(const ExperimentConfig& cfg);
RunResult cmd_noisy(const ExperimentConfig& cfg);
RunResult cmd_metrics(const ExperimentConfig& cfg);
RunResult cmd_bounds(const ExperimentConfig& cfg);
RunResult cmd_tomo(const ExperimentConfig& cfg);

const std::vector<std::string>& command_names();
RunResult run_command(const std::string& command, const ExperimentConfig& cfg);

// "# mcmkit <version> command=<c> config_hash=<h> seed=<s>"
std::string output_header(const ExperimentConfig& cfg, const std::string& command);
// Creates `dir` if needed; returns the written paths.
std::vector<std::string> write_outputs(const RunResult& result, const ExperimentConfig& cfg,
                                       const std::string& command, const std::string& dir);

}  // namespace mcmkit
