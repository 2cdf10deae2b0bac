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

#include <optional>
#include <string>
#include <vector>

#include "mcmkit/mcm.hpp"

namespace mcmkit {

// Largest operator norm among the system Hamiltonian and the collision
// interactions lambda_k F_m sigma^+ + h.c.
double interaction_scale(const CollisionSpec& spec);

struct StepBoundParams {
  int subsystems = 2;          // M
  int jumps = 1;               // J
  double scale = 1.0;          // Lambda
  double dt = 0.1;
  std::optional<double> r;     // constant of the expansion remainder
  // Optional remainder coefficients: the bound gains pol1 dt^2 + pol2 dt^3.
  std::optional<double> pol1;
  std::optional<double> pol2;
  bool strict = true;          // strict mode refuses a missing r
};

struct StepBound {
  double value = 0.0;
  bool leading_term_only = true;
  bool r_placeholder = false;
};

// 2e (M Lambda (1 + J R Lambda) dt)^2 [+ pol1 dt^2 + pol2 dt^3].
StepBound single_step_bound(const StepBoundParams& p);

// 2 (sum of gate diamond distances + sum of preparation diamond distances).
double noisy_map_bound(const std::vector<double>& gate_distances, const std::vector<double>& prep_distances = {});

struct GlobalBound {
  double value = 0.0;
  bool vacuous = false;  // value > 1
};
GlobalBound global_bound(int n, double step_error, double noisy_step_error);

enum class ErrorRegime { kCoherent, kIncoherent };
// Infidelity after m repetitions of a gate with infidelity r: m^2 r for
// coherent errors, m r for incoherent ones, clamped to 1.
double composed_infidelity_bound(int m, double r, ErrorRegime regime);

struct BoundRow {
  int n = 0;
  double step_error = 0.0;
  double noisy_step_error = 0.0;
  GlobalBound global;
};

struct BoundReport {
  StepBound step;
  double noisy_step_error = 0.0;
  std::vector<BoundRow> rows;
  int first_vacuous_step = -1;  // -1 if never vacuous
};

BoundReport bound_report(const StepBoundParams& params, const std::vector<double>& gate_distances,
                         const std::vector<double>& prep_distances, int steps);

}  // namespace mcmkit
