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

#include "mcmkit/config.hpp"

#include <cstdio>
#include <filesystem>

namespace mcmkit {

namespace {

const char* kSchema = R"({
  "type": "object",
  "additionalProperties": false,
  "properties": {
    "model": {
      "type": "object", "additionalProperties": false,
      "properties": {
        "gamma": {"type": "number", "exclusiveMinimum": 0},
        "mode": {"type": "string", "enum": ["collective", "local"]}
      }
    },
    "mcm": {
      "type": "object", "additionalProperties": false,
      "properties": {
        "dt": {"type": "number", "exclusiveMinimum": 0},
        "steps": {"type": "integer", "minimum": 0, "maximum": 1000}
      }
    },
    "initial_states": {
      "type": "array", "minItems": 1,
      "items": {"type": "string", "enum": ["sub", "sup", "ee", "gg"]}
    },
    "exact": {
      "type": "object", "additionalProperties": false,
      "properties": {
        "t_max": {"type": "number", "minimum": 0},
        "points": {"type": "integer", "minimum": 2, "maximum": 100000}
      }
    },
    "topology": {"type": "string"},
    "placement": {
      "type": "object", "additionalProperties": false, "required": ["system", "trains"],
      "properties": {
        "system": {"type": "array", "minItems": 2, "maxItems": 2, "items": {"type": "integer", "minimum": 0}},
        "trains": {"type": "array", "minItems": 1,
                   "items": {"type": "array", "minItems": 1, "items": {"type": "integer", "minimum": 0}}}
      }
    },
    "noise": {"type": ["object", "string"]},
    "tomography": {
      "type": "object", "additionalProperties": false,
      "properties": {
        "shots": {"type": "integer", "minimum": 1},
        "repetitions": {"type": "integer", "minimum": 1},
        "resamples": {"type": "integer", "minimum": 2},
        "exact": {"type": "boolean"},
        "readout_flip": {"type": "number", "minimum": 0, "maximum": 1},
        "mitigate": {"type": "boolean"},
        "spam_depolarizing": {"type": "number", "minimum": 0, "maximum": 1}
      }
    },
    "simulation": {
      "type": "object", "additionalProperties": false,
      "properties": {
        "max_live_qubits": {"type": "integer", "minimum": 3, "maximum": 12},
        "allow_eviction": {"type": "boolean"}
      }
    },
    "bounds": {
      "type": "object", "additionalProperties": false,
      "properties": {
        "r": {"type": "number", "minimum": 0},
        "pol1": {"type": "number"},
        "pol2": {"type": "number"},
        "strict": {"type": "boolean"},
        "gate_distances": {"type": "array", "items": {"type": "number", "minimum": 0, "maximum": 1}},
        "prep_distances": {"type": "array", "items": {"type": "number", "minimum": 0, "maximum": 1}},
        "steps": {"type": "integer", "minimum": 1, "maximum": 100000}
      }
    },
    "metrics": {
      "type": "object", "additionalProperties": false,
      "properties": {
        "inputs": {
          "type": "array",
          "items": {
            "type": "object", "additionalProperties": false, "required": ["file"],
            "properties": {
              "name": {"type": "string"},
              "file": {"type": "string"},
              "target": {"type": "string", "enum": ["identity", "cnot", "swap"]}
            }
          }
        },
        "bootstrap": {"type": "boolean"}
      }
    },
    "seed": {"type": "integer", "minimum": 0},
    "output": {"type": "string"}
  }
})";

const char* kNoiseSchema = R"({
  "type": "object", "additionalProperties": false,
  "properties": {
    "kind": {"type": "string", "enum": ["ideal", "depolarizing", "ibm_style", "choi_injection"]},
    "p1q": {"type": "number", "minimum": 0, "maximum": 1},
    "p2q": {"type": "number", "minimum": 0, "maximum": 1},
    "one_qubit": {"$ref": "gate"},
    "two_qubit": {"$ref": "gate"},
    "cnot_overrides": {"type": "array", "items": {"$ref": "pair_gate"}},
    "injected": {
      "type": "array",
      "items": {
        "type": "object", "additionalProperties": false, "required": ["control", "target"],
        "properties": {
          "control": {"type": "integer", "minimum": 0},
          "target": {"type": "integer", "minimum": 0},
          "choi": {"type": "object"},
          "file": {"type": "string"}
        }
      }
    }
  }
})";

json gate_schema(bool with_pair) {
  json g = {{"type", "object"},
            {"additionalProperties", false},
            {"properties",
             {{"depolarizing", {{"type", "number"}, {"minimum", 0}, {"maximum", 1}}},
              {"t1", {{"type", json::array({"number", "null"})}, {"exclusiveMinimum", 0}}},
              {"t2", {{"type", json::array({"number", "null"})}, {"exclusiveMinimum", 0}}},
              {"duration", {{"type", "number"}, {"minimum", 0}}}}}};
  if (with_pair) {
    g["properties"]["control"] = {{"type", "integer"}, {"minimum", 0}};
    g["properties"]["target"] = {{"type", "integer"}, {"minimum", 0}};
    g["required"] = json::array({"control", "target"});
  }
  return g;
}

json noise_schema() {
  json s = json::parse(kNoiseSchema);
  s["properties"]["one_qubit"] = gate_schema(false);
  s["properties"]["two_qubit"] = gate_schema(false);
  s["properties"]["cnot_overrides"]["items"] = gate_schema(true);
  return s;
}

JsonDocument subdocument(const JsonDocument& doc, const std::string& pointer) {
  JsonDocument sub;
  sub.source = doc.source;
  sub.value = doc.value.at(json::json_pointer(pointer));
  for (const auto& [p, line] : doc.lines) {
    if (p.rfind(pointer, 0) == 0) sub.lines[p.substr(pointer.size())] = line;
  }
  return sub;
}

std::string resolve(const std::string& base, const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) p = std::filesystem::path(base) / p;
  return p.string();
}

json placement_json(const Placement& p) { return json{{"system", p.system}, {"trains", p.trains}}; }

}  // namespace

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

const json& config_schema() {
  static const json schema = [] {
    json s = json::parse(kSchema);
    s["properties"]["noise"] = json{{"type", json::array({"object", "string"})}};
    return s;
  }();
  return schema;
}

Topology ExperimentConfig::topology() const {
  return topology_file.empty() ? Topology::guadalupe() : load_topology(resolve(base_dir, topology_file));
}

Placement ExperimentConfig::resolved_placement() const {
  return placement ? *placement : Placement::guadalupe(model.mode);
}

json ExperimentConfig::normalized() const {
  json j;
  j["model"] = {{"gamma", model.gamma}, {"mode", decay_mode_name(model.mode)}};
  j["mcm"] = {{"dt", dt}, {"steps", steps}};
  j["initial_states"] = initial_states;
  j["exact"] = {{"t_max", exact_t_max}, {"points", exact_points}};
  j["topology"] = topology_file.empty() ? json("builtin") : json(topology_file);
  j["placement"] = placement_json(resolved_placement());
  j["noise"] = noise ? noise_model_to_json(*noise) : json(nullptr);
  j["tomography"] = {{"shots", tomography.shots},
                     {"repetitions", tomography.repetitions},
                     {"resamples", tomography.resamples},
                     {"exact", tomography.exact},
                     {"readout_flip", tomography.readout_flip},
                     {"mitigate", tomography.mitigate},
                     {"spam_depolarizing", tomography.spam_depolarizing}};
  j["simulation"] = {{"max_live_qubits", simulation.max_live_qubits},
                     {"allow_eviction", simulation.allow_eviction}};
  auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
  j["bounds"] = {{"r", opt(bounds.r)},
                 {"pol1", opt(bounds.pol1)},
                 {"pol2", opt(bounds.pol2)},
                 {"strict", bounds.strict},
                 {"gate_distances", bounds.gate_distances},
                 {"prep_distances", bounds.prep_distances},
                 {"steps", bounds.steps < 0 ? steps : bounds.steps}};
  json inputs = json::array();
  for (const auto& in : metrics.inputs) inputs.push_back({{"name", in.name}, {"file", in.file}, {"target", in.target}});
  j["metrics"] = {{"inputs", inputs}, {"bootstrap", metrics.bootstrap}};
  j["seed"] = seed;
  return j;
}

std::string ExperimentConfig::hash() const {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fnv1a64(normalized().dump())));
  return buf;
}

ExperimentConfig config_from_document(const JsonDocument& doc, const std::string& base_dir) {
  std::vector<std::string> errs = validate_schema(doc, config_schema());
  const json& j = doc.value;
  if (errs.empty() && j.contains("noise") && j["noise"].is_object()) {
    const auto more = validate_schema(subdocument(doc, "/noise"), noise_schema());
    for (const auto& e : more) {
      // Re-prefix the pointer with /noise; `where` already carries the line.
      const auto colon = e.find(": ");
      errs.push_back(e.substr(0, colon + 2) + "/noise" + e.substr(colon + 2));
    }
  }
  auto flush = [&]() {
    if (errs.empty()) return;
    std::string msg = "invalid config:";
    for (const auto& e : errs) msg += "\n  " + e;
    throw Error(ErrorKind::kParse, msg);
  };
  flush();

  ExperimentConfig c;
  c.base_dir = base_dir;
  if (j.contains("model")) {
    c.model.gamma = j["model"].value("gamma", c.model.gamma);
    if (j["model"].contains("mode")) c.model.mode = parse_decay_mode(j["model"]["mode"].get<std::string>());
  }
  if (j.contains("mcm")) {
    c.dt = j["mcm"].value("dt", c.dt);
    c.steps = j["mcm"].value("steps", c.steps);
  }
  if (j.contains("initial_states")) c.initial_states = j["initial_states"].get<std::vector<std::string>>();
  if (j.contains("exact")) {
    c.exact_t_max = j["exact"].value("t_max", c.exact_t_max);
    c.exact_points = j["exact"].value("points", c.exact_points);
  }
  if (j.contains("topology")) {
    c.topology_file = j["topology"].get<std::string>();
    if (!std::filesystem::exists(resolve(base_dir, c.topology_file))) {
      errs.push_back(doc.where("/topology") + "/topology: file not found: " + c.topology_file);
    }
  }
  if (j.contains("placement")) {
    Placement p;
    p.system = j["placement"]["system"].get<std::vector<int>>();
    p.trains = j["placement"]["trains"].get<std::vector<std::vector<int>>>();
    c.placement = p;
  }
  if (j.contains("tomography")) {
    const json& t = j["tomography"];
    c.tomography.shots = t.value("shots", c.tomography.shots);
    c.tomography.repetitions = t.value("repetitions", c.tomography.repetitions);
    c.tomography.resamples = t.value("resamples", c.tomography.resamples);
    c.tomography.exact = t.value("exact", c.tomography.exact);
    c.tomography.readout_flip = t.value("readout_flip", c.tomography.readout_flip);
    c.tomography.mitigate = t.value("mitigate", c.tomography.mitigate);
    c.tomography.spam_depolarizing = t.value("spam_depolarizing", c.tomography.spam_depolarizing);
    if (c.tomography.readout_flip == 0.5) {
      errs.push_back(doc.where("/tomography/readout_flip") +
                     "/tomography/readout_flip: 0.5 makes the confusion matrix singular");
    }
  }
  if (j.contains("simulation")) {
    c.simulation.max_live_qubits = j["simulation"].value("max_live_qubits", c.simulation.max_live_qubits);
    c.simulation.allow_eviction = j["simulation"].value("allow_eviction", c.simulation.allow_eviction);
  }
  if (j.contains("bounds")) {
    const json& b = j["bounds"];
    if (b.contains("r")) c.bounds.r = b["r"].get<double>();
    if (b.contains("pol1")) c.bounds.pol1 = b["pol1"].get<double>();
    if (b.contains("pol2")) c.bounds.pol2 = b["pol2"].get<double>();
    c.bounds.strict = b.value("strict", c.bounds.strict);
    if (b.contains("gate_distances")) c.bounds.gate_distances = b["gate_distances"].get<std::vector<double>>();
    if (b.contains("prep_distances")) c.bounds.prep_distances = b["prep_distances"].get<std::vector<double>>();
    c.bounds.steps = b.value("steps", c.bounds.steps);
  }
  if (j.contains("metrics")) {
    const json& m = j["metrics"];
    for (size_t i = 0; i < m.value("inputs", json::array()).size(); ++i) {
      const json& in = m["inputs"][i];
      MetricsInput mi;
      mi.file = in["file"].get<std::string>();
      mi.name = in.value("name", std::filesystem::path(mi.file).stem().string());
      mi.target = in.value("target", mi.target);
      const std::string ptr = "/metrics/inputs/" + std::to_string(i) + "/file";
      if (!std::filesystem::exists(resolve(base_dir, mi.file))) {
        errs.push_back(doc.where(ptr) + ptr + ": file not found: " + mi.file);
      }
      c.metrics.inputs.push_back(mi);
    }
    c.metrics.bootstrap = m.value("bootstrap", c.metrics.bootstrap);
  }
  if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("output")) c.output_dir = j["output"].get<std::string>();

  // Semantic checks that need more than the schema.
  if (j.contains("noise")) {
    try {
      if (j["noise"].is_string()) {
        const std::string path = resolve(base_dir, j["noise"].get<std::string>());
        const JsonDocument nd = load_json_document(path);
        const auto ne = validate_schema(nd, noise_schema());
        errs.insert(errs.end(), ne.begin(), ne.end());
        if (ne.empty()) c.noise = noise_model_from_json(nd.value, std::filesystem::path(path).parent_path().string());
      } else {
        c.noise = noise_model_from_json(j["noise"], base_dir);
      }
    } catch (const Error& e) {
      errs.push_back(doc.where("/noise") + "/noise: " + e.what());
    }
  }
  if (errs.empty()) {
    try {
      const Topology topo = c.topology();
      const Placement p = c.resolved_placement();
      for (int q : p.system) {
        if (q >= topo.num_qubits) throw Error(ErrorKind::kInvalidArgument, "system qubit outside the topology");
      }
      const int need = c.model.mode == DecayMode::kCollective ? 1 : 2;
      if (static_cast<int>(p.trains.size()) != need) {
        throw Error(ErrorKind::kInvalidArgument,
                    std::string(decay_mode_name(c.model.mode)) + " decay needs " + std::to_string(need) +
                        " ancilla train(s)");
      }
      for (const auto& t : p.trains) {
        for (size_t i = 0; i < t.size(); ++i) {
          if (t[i] >= topo.num_qubits) throw Error(ErrorKind::kInvalidArgument, "train qubit outside the topology");
          if (i > 0 && !topo.adjacent(t[i - 1], t[i])) {
            throw Error(ErrorKind::kInvalidArgument, "train qubits " + std::to_string(t[i - 1]) + " and " +
                                                         std::to_string(t[i]) + " are not coupled");
          }
        }
      }
    } catch (const Error& e) {
      const std::string ptr = j.contains("placement") ? "/placement" : (j.contains("topology") ? "/topology" : "");
      errs.push_back(doc.where(ptr) + (ptr.empty() ? "/" : ptr) + ": " + e.what());
    }
  }
  flush();
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  const JsonDocument doc = load_json_document(path);
  return config_from_document(doc, std::filesystem::path(path).parent_path().string());
}

}  // namespace mcmkit
