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

#include "mcmkit/json_io.hpp"

#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "mcmkit/config.hpp"
#include "mcmkit/runner.hpp"
#include "test_util.hpp"

using namespace mcmkit;
using mcmkit::testing::error_kind_of;
using mcmkit::testing::max_abs_diff;

namespace {

const std::string kSrc = MCMKIT_SOURCE_DIR;

std::string error_text(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

ExperimentConfig config_text(const std::string& text) {
  return config_from_document(parse_json_document(text, "cfg.json"), kSrc + "/configs");
}

}  // namespace

TEST(Io, ChoiRoundTrip) {
  Rng rng(21);
  const QuantumChannel ch = compose(QuantumChannel::unitary(haar_unitary(4, rng)), depolarizing(4, 0.1));
  const QuantumChannel back = channel_from_json(json::parse(choi_to_json(ch).dump()));
  EXPECT_LT(max_abs_diff(back.choi(), ch.choi()), 1e-15);
  json bad = choi_to_json(ch);
  bad["dim_in"] = 3;
  EXPECT_EQ(error_kind_of([&] { channel_from_json(bad); }), ErrorKind::kParse);
  json not_tp = choi_to_json(ch);
  not_tp["choi_re"][0] = 2.0;
  EXPECT_NE(error_kind_of([&] { channel_from_json(not_tp); }), ErrorKind::kParse);
}

TEST(Io, TopologyAndCountsRoundTrip) {
  const Topology t = load_topology(kSrc + "/data/guadalupe_topology.json");
  EXPECT_EQ(t.num_qubits, 16);
  EXPECT_EQ(t.edges, Topology::guadalupe().edges);
  EXPECT_EQ(topology_from_json(topology_to_json(t)).edges, t.edges);
  const CountsTable c = CountsTable::from_vector({1, 2, 3, 4}, 2);
  EXPECT_EQ(counts_from_json(counts_to_json(c)).counts, c.counts);
}

TEST(Io, NoiseModelRoundTrip) {
  NoiseModel m;
  m.kind = NoiseKind::kIbmStyle;
  m.one_qubit = {3e-4, 100.0, 80.0, 0.035};
  m.two_qubit = {1e-2, kInf, kInf, 0.4};
  m.cnot_overrides[{2, 1}] = GateNoise{0.008, 110.0, 95.0, 0.36};
  const json j = noise_model_to_json(m);
  EXPECT_TRUE(j["two_qubit"]["t1"].is_null());
  const NoiseModel back = noise_model_from_json(json::parse(j.dump()));
  EXPECT_EQ(back.kind, m.kind);
  EXPECT_NEAR(back.cnot_noise({2, 1}).t2, 95.0, 0.0);
  EXPECT_TRUE(std::isinf(back.two_qubit.t1));

  NoiseModel inj;
  inj.kind = NoiseKind::kChoiInjection;
  inj.injected[{0, 1}] = depolarizing(4, 0.02);
  const NoiseModel inj_back = noise_model_from_json(json::parse(noise_model_to_json(inj).dump()));
  EXPECT_LT(max_abs_diff(inj_back.injected.at({0, 1}).choi(), inj.injected.at({0, 1}).choi()), 1e-15);
}

TEST(Io, ParseErrorsCarryLineAndColumn) {
  const std::string msg = error_text([] { parse_json_document("{\n  \"a\": 1,\n  \"b\": ]\n}", "x.json"); });
  EXPECT_NE(msg.find("x.json:3:"), std::string::npos) << msg;
  EXPECT_EQ(error_kind_of([] { parse_json_document("{", "x.json"); }), ErrorKind::kParse);
  EXPECT_EQ(error_kind_of([] { load_json_document("/nonexistent/cfg.json"); }), ErrorKind::kIo);
}

TEST(Io, DocumentTracksValueLines) {
  const JsonDocument d = parse_json_document("{\n  \"mcm\": {\n    \"dt\": 0.1\n  }\n}");
  EXPECT_EQ(d.line_of("/mcm/dt"), 3);
  EXPECT_EQ(d.line_of("/mcm/missing"), 2);
}

TEST(Io, SchemaErrorsPointAtTheValue) {
  const std::string msg =
      error_text([] { config_text("{\n  \"mcm\": {\"dt\": 0.1, \"steps\": 5},\n  \"model\": {\"gamma\": -1}\n}"); });
  EXPECT_NE(msg.find("cfg.json:3:"), std::string::npos) << msg;
  EXPECT_NE(msg.find("/model/gamma"), std::string::npos) << msg;
  const std::string unknown = error_text([] { config_text("{\n  \"shots\": 5\n}"); });
  EXPECT_NE(unknown.find("shots"), std::string::npos) << unknown;
  EXPECT_EQ(error_kind_of([] { config_text("{\"seed\": \"x\"}"); }), ErrorKind::kParse);
}

TEST(Io, ErrorsAreCollectedTogether) {
  const std::string msg = error_text([] { config_text("{\"mcm\": {\"dt\": 0, \"steps\": -1}, \"seed\": -1}"); });
  EXPECT_NE(msg.find("/mcm/dt"), std::string::npos) << msg;
  EXPECT_NE(msg.find("/mcm/steps"), std::string::npos) << msg;
  EXPECT_NE(msg.find("/seed"), std::string::npos) << msg;
}

TEST(Io, SemanticChecks) {
  EXPECT_EQ(error_kind_of([] { config_text("{\"tomography\": {\"readout_flip\": 0.5}}"); }), ErrorKind::kParse);
  EXPECT_EQ(error_kind_of([] { config_text("{\"topology\": \"missing.json\"}"); }), ErrorKind::kParse);
}

TEST(Io, ConfigDefaultsAndHash) {
  const ExperimentConfig a = config_text("{}");
  EXPECT_NEAR(a.dt, 0.1, 0.0);
  EXPECT_EQ(a.steps, 5);
  EXPECT_EQ(a.initial_states.size(), 4u);
  EXPECT_EQ(a.hash().size(), 16u);
  EXPECT_EQ(a.hash(), config_text("{\"mcm\": {\"dt\": 0.1}}").hash());
  EXPECT_NE(a.hash(), config_text("{\"seed\": 99}").hash());
  EXPECT_EQ(a.hash(), config_text("{\"output\": \"elsewhere\"}").hash());
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
}

TEST(Io, ShippedConfigsLoad) {
  for (const char* name : {"collective.json", "long_run.json", "local.json", "bounds_demo.json"}) {
    EXPECT_NO_THROW(load_config(kSrc + "/configs/" + name)) << name;
  }
}

TEST(Runner, ExactEmissionRate) {
  ExperimentConfig cfg = config_text("{\"initial_states\": [\"sub\", \"sup\"]}");
  const Table t = cmd_exact(cfg).tables.at("exact");
  bool saw_sub = false, saw_sup = false;
  for (size_t i = 0; i < t.rows.size(); ++i) {
    if (t.number(i, "t") != 0.0) continue;
    if (t.text(i, "label") == "sub") {
      saw_sub = true;
      EXPECT_NEAR(t.number(i, "P_em"), 0.0, 1e-12);
    }
    if (t.text(i, "label") == "sup") {
      saw_sup = true;
      EXPECT_NEAR(t.number(i, "P_em"), 2.0, 1e-12);
    }
  }
  EXPECT_TRUE(saw_sub && saw_sup);
}

TEST(Runner, McmRowsAndGroundState) {
  const ExperimentConfig cfg = config_text("{\"mcm\": {\"steps\": 10}, \"initial_states\": [\"gg\"]}");
  const Table t = cmd_mcm(cfg).tables.at("mcm");
  EXPECT_EQ(t.rows.size(), 10u);
  for (size_t i = 0; i < t.rows.size(); ++i) EXPECT_LE(t.number(i, "eps_ideal"), 1e-10);
  const std::string csv = t.to_csv(output_header(cfg, "mcm"));
  EXPECT_EQ(csv.rfind("# mcmkit " MCMKIT_VERSION " command=mcm config_hash=" + cfg.hash(), 0), 0u);
  EXPECT_NE(csv.find("\nlabel,n,t,p_gg,p_ge,p_eg,p_ee,eps_ideal\n"), std::string::npos);
}

TEST(Runner, MetricsOfIdealNoiseModel) {
  const ExperimentConfig cfg = config_text("{\"noise\": {\"kind\": \"depolarizing\", \"p1q\": 0, \"p2q\": 0}}");
  const Table t = cmd_metrics(cfg).tables.at("metrics");
  ASSERT_FALSE(t.rows.empty());
  for (size_t i = 0; i < t.rows.size(); ++i) {
    EXPECT_NEAR(t.number(i, "r"), 0.0, 1e-12);
    EXPECT_NEAR(t.number(i, "d_diamond"), 0.0, 1e-6);
  }
}

TEST(Runner, BoundsNeedR) {
  EXPECT_EQ(error_kind_of([] { cmd_bounds(config_text("{}")); }), ErrorKind::kInvalidArgument);
  const Table t = cmd_bounds(config_text("{\"bounds\": {\"r\": 1, \"gate_distances\": [0.05]}}")).tables.at("bounds");
  EXPECT_EQ(t.rows.size(), 5u);
}

TEST(Runner, WritesHeaderedOutputs) {
  const ExperimentConfig cfg = config_text("{\"initial_states\": [\"sub\"], \"mcm\": {\"steps\": 2}}");
  const auto dir = std::filesystem::temp_directory_path() / "mcmkit_io_test";
  std::filesystem::remove_all(dir);
  const auto paths = write_outputs(cmd_mcm(cfg), cfg, "mcm", dir.string());
  ASSERT_EQ(paths.size(), 1u);
  std::ifstream in(paths[0]);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first, output_header(cfg, "mcm"));
  std::filesystem::remove_all(dir);
}
