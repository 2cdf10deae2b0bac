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

#include "mcmkit/lindblad.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace mcmkit;
using mcmkit::testing::error_kind_of;
using mcmkit::testing::max_abs_diff;

TEST(Lindblad, LiouvillianMatchesOperatorForm) {
  Rng rng(30);
  for (auto mode : {DecayMode::kCollective, DecayMode::kLocal}) {
    const LindbladGenerator gen = SuperradianceModel{0.7, mode}.generator();
    const DensityMatrix rho = random_density(4, rng);
    const ComplexMatrix a = unvec(gen.liouvillian() * vec(rho.matrix()), 4, 4);
    EXPECT_LT(max_abs_diff(a, gen.apply(rho.matrix())), 1e-13);
  }
}

TEST(Lindblad, GeneratorIsTraceless) {
  Rng rng(31);
  const LindbladGenerator gen = SuperradianceModel{}.generator();
  const DensityMatrix rho = random_density(4, rng);
  EXPECT_NEAR(std::abs(gen.apply(rho.matrix()).trace()), 0.0, 1e-14);
  EXPECT_TRUE(gen.propagator(0.3).is_cptp(1e-10));
}

TEST(Lindblad, SemigroupProperty) {
  const LindbladGenerator gen = SuperradianceModel{1.0, DecayMode::kCollective}.generator();
  const auto p = compose(gen.propagator(0.2), gen.propagator(0.3));
  EXPECT_LT(max_abs_diff(p.choi(), gen.propagator(0.5).choi()), 1e-12);
}

TEST(Lindblad, ClosedFormsMatchNumerics) {
  for (auto mode : {DecayMode::kCollective, DecayMode::kLocal}) {
    const SuperradianceModel model{1.0, mode};
    for (const auto& label : named_state_labels()) {
      if (!has_analytic_oracle(mode, label)) continue;
      for (int i = 0; i <= 10; ++i) {
        const double t = 0.1 * i;
        const DensityMatrix num = evolve(model.generator(), named_state(label), t);
        EXPECT_LT(trace_distance(num, analytic_oracle(model, label, t)), 1e-10)
            << decay_mode_name(mode) << "/" << label << " t=" << t;
      }
    }
  }
}

TEST(Lindblad, SubradiantStateIsStationaryUnderCollectiveDecay) {
  const SuperradianceModel model{2.5, DecayMode::kCollective};
  EXPECT_LT(max_abs_diff(model.generator().apply(named_state("sub").matrix()), ComplexMatrix::Zero(4, 4)), 1e-15);
}

TEST(Lindblad, SuperradiantEmission) {
  for (double g : {0.5, 1.0}) {
    const SuperradianceModel model{g, DecayMode::kCollective};
    for (double t : {0.0, 0.4, 1.0}) {
      const double ref = 2.0 * g * std::exp(-2.0 * g * t);
      EXPECT_NEAR(emission_power_analytic(model, "sup", t), ref, 1e-12);
      EXPECT_NEAR(emission_power(model, named_state("sup"), t), ref, 1e-10);
      EXPECT_NEAR(emission_power(model, named_state("sub"), t), 0.0, 1e-12);
    }
  }
}

TEST(Lindblad, LocalSubradiantDecaysLikeSingleEmitter) {
  const SuperradianceModel model{1.0, DecayMode::kLocal};
  const DensityMatrix rho = analytic_oracle(model, "sub", 0.6);
  EXPECT_NEAR(rho.population(1) + rho.population(2), std::exp(-0.6), 1e-14);
}

TEST(Lindblad, NamedStatesAndErrors) {
  const DensityMatrix sup = named_state("sup");
  EXPECT_NEAR(sup.population(1), 0.5, 1e-15);
  EXPECT_NEAR(sup.matrix()(1, 2).real(), 0.5, 1e-15);
  EXPECT_NEAR(named_state("sub").matrix()(1, 2).real(), -0.5, 1e-15);
  EXPECT_NEAR(named_state("ee").population(3), 1.0, 1e-15);
  EXPECT_EQ(error_kind_of([] { named_state("xx"); }), ErrorKind::kInvalidArgument);
  EXPECT_EQ(error_kind_of([] { analytic_oracle(SuperradianceModel{1.0, DecayMode::kLocal}, "sup", 0.1); }),
            ErrorKind::kUnsupported);
  EXPECT_EQ(error_kind_of([] { LindbladGenerator(pauli_z(), {{-1.0, sigma_minus()}}); }),
            ErrorKind::kInvalidArgument);
  EXPECT_EQ(error_kind_of([] { LindbladGenerator(pauli_x() * cplx(0, 1), {}); }), ErrorKind::kNotHermitian);
}
