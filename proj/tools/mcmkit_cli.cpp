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

#include <iostream>

#include <CLI11.hpp>

#include "mcmkit/kernels.hpp"
#include "mcmkit/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"mcmkit: collision-model simulation of collective decay"};
  app.set_version_flag("--version", std::string("mcmkit ") + MCMKIT_VERSION);
  app.require_subcommand(0, 1);

  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool print_config = false;
  app.add_option("--config", config_path, "Experiment config (JSON)")->check(CLI::ExistingFile);
  auto* seed_opt = app.add_option("--seed", seed, "Overrides the config seed");
  app.add_option("--out", out_dir, "Output directory (overrides the config)");
  app.add_flag("--print-config", print_config, "Print the normalized config and exit");

  for (const auto& name : mcmkit::command_names()) app.add_subcommand(name)->fallthrough();
  app.get_subcommand("exact")->description("Closed-form populations and emission power vs t");
  app.get_subcommand("mcm")->description("Ideal collision-model populations and trace-norm error per step");
  app.get_subcommand("noisy")->description("Compiled noisy circuits against ideal, reported and rebuilt models");
  app.get_subcommand("metrics")->description("Gate metrics table from Choi files or the noise model");
  app.get_subcommand("bounds")->description("Single-step and global error bounds");
  app.get_subcommand("tomo")->description("Tomography round trips with bootstrap errors");

  CLI11_PARSE(app, argc, argv);

  try {
    mcmkit::ExperimentConfig cfg;
    if (!config_path.empty()) cfg = mcmkit::load_config(config_path);
    if (*seed_opt) cfg.seed = seed;
    if (!out_dir.empty()) cfg.output_dir = out_dir;
    if (print_config) {
      mcmkit::json j = cfg.normalized();
      j["_meta"] = {{"version", MCMKIT_VERSION}, {"config_hash", cfg.hash()}};
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (app.get_subcommands().empty()) {
      std::cerr << "a subcommand is required\n" << app.help();
      return 2;
    }
    const std::string command = app.get_subcommands().front()->get_name();
    std::cerr << "mcmkit " << MCMKIT_VERSION << " " << command << " config_hash=" << cfg.hash()
              << " kernels=" << mcmkit::kernels::backend_name(mcmkit::kernels::active_backend()) << "\n";
    const auto result = mcmkit::run_command(command, cfg);
    for (const auto& path : mcmkit::write_outputs(result, cfg, command, cfg.output_dir)) std::cout << path << "\n";
  } catch (const mcmkit::Error& e) {
    std::cerr << "error [" << mcmkit::error_kind_name(e.kind()) << "]: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
