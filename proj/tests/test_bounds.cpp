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

#include "mcmkit/bounds.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace mcmkit;
using mcmkit::testing::error_kind_of;

TEST(Bounds, InteractionScaleOfCollectiveDecay) {
  // lambda = sqrt(gamma); ||sigma^- sigma^+ + h.c.|| = 1.
  EXPECT_NEAR(interaction_scale(superradiance_spec({1.0, DecayMode::kCollective}, 0.1, 1)), 1.0, 1e-14);
  EXPECT_NEAR(interaction_scale(superradiance_spec({4.0, DecayMode::kCollective}, 0.1, 1)), 2.0, 1e-14);
}

TEST(Bounds, SingleStepBoundIsQuadraticInDt) {
  StepBoundParams p;
  p.r = 1.0;
  p.dt = 0.1;
  const double a = single_step_bound(p).value;
  p.dt = 0.05;
  const double b = single_step_bound(p).value;
  EXPECT_NEAR(a / b, 4.0, 1e-12);
  // 2e (M Lambda (1 + J R Lambda) dt)^2 with M = 2, J = R = Lambda = 1.
  EXPECT_NEAR(b, 2.0 * std::exp(1.0) * std::pow(2.0 * 2.0 * 0.05, 2), 1e-14);
  EXPECT_TRUE(single_step_bound(p).leading_term_only);
}

TEST(Bounds, StrictModeNeedsR) {
  StepBoundParams p;
  EXPECT_EQ(error_kind_of([&] { single_step_bound(p); }), ErrorKind::kInvalidArgument);
  p.strict = false;
  const StepBound b = single_step_bound(p);
  EXPECT_TRUE(b.r_placeholder);
  p.r = 1.0;
  EXPECT_NEAR(single_step_bound(p).value, b.value, 1e-15);
}

TEST(Bounds, RemainderCoefficients) {
  StepBoundParams p;
  p.r = 0.5;
  p.pol1 = 2.0;
  p.pol2 = 3.0;
  const StepBound with = single_step_bound(p);
  p.pol1.reset();
  p.pol2.reset();
  EXPECT_FALSE(with.leading_term_only);
  EXPECT_NEAR(with.value - single_step_bound(p).value, 2.0 * 0.01 + 3.0 * 0.001, 1e-15);
}

TEST(Bounds, NoisyMapAndGlobalBound) {
  EXPECT_NEAR(noisy_map_bound({}), 0.0, 0.0);
  EXPECT_NEAR(noisy_map_bound({0.01, 0.02}, {0.005}), 0.07, 1e-15);
  EXPECT_EQ(error_kind_of([] { noisy_map_bound({1.5}); }), ErrorKind::kInvalidArgument);
  const GlobalBound g = global_bound(10, 0.0, 0.1);
  EXPECT_NEAR(g.value, 1.0, 1e-15);
  EXPECT_FALSE(g.vacuous);
  EXPECT_TRUE(global_bound(11, 0.0, 0.1).vacuous);
}

TEST(Bounds, ReportFlagsFirstVacuousStep) {
  StepBoundParams p;
  p.r = 1.0;
  p.dt = 0.001;
  const BoundReport rep = bound_report(p, {0.05}, {}, 20);
  ASSERT_EQ(rep.rows.size(), 20u);
  // 2 * 0.05 per step plus a tiny ideal term: vacuous from n = 10.
  EXPECT_EQ(rep.first_vacuous_step, 10);
  for (const auto& row : rep.rows) EXPECT_EQ(row.global.vacuous, row.n >= 10);
  const BoundReport ideal = bound_report(p, {}, {}, 3);
  EXPECT_NEAR(ideal.noisy_step_error, 0.0, 0.0);
}

TEST(Bounds, ComposedInfidelityRegimes) {
  EXPECT_NEAR(composed_infidelity_bound(3, 0.01, ErrorRegime::kIncoherent), 0.03, 1e-15);
  EXPECT_NEAR(composed_infidelity_bound(3, 0.01, ErrorRegime::kCoherent), 0.09, 1e-15);
  EXPECT_NEAR(composed_infidelity_bound(100, 0.01, ErrorRegime::kCoherent), 1.0, 0.0);
}
