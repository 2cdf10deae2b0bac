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

#include <json.hpp>

#include "mcmkit/bounds.hpp"
#include "mcmkit/channel.hpp"
#include "mcmkit/circuit.hpp"
#include "mcmkit/metrics.hpp"
#include "mcmkit/noise.hpp"
#include "mcmkit/tomo.hpp"

namespace mcmkit {

using json = nlohmann::json;

// A parsed JSON text plus the source line of every value, keyed by JSON
// pointer ("" is the root, "/mcm/dt" a nested member).
struct JsonDocument {
  json value;
  std::string source;  // file name or "<string>"
  std::map<std::string, int> lines;

  // Line of the closest located ancestor of `pointer`; 0 if unknown.
  int line_of(const std::string& pointer) const;
  // "source:line: message" for errors tied to a value.
  std::string where(const std::string& pointer) const;
};

// Throws kParse with "source:line:column: ..." on malformed input.
JsonDocument parse_json_document(const std::string& text, const std::string& source = "<string>");
// Throws kIo when the file cannot be read.
JsonDocument load_json_document(const std::string& path);
void write_json_file(const std::string& path, const json& value);

// Minimal JSON-schema subset: type, properties, required,
// additionalProperties (false only), enum, minimum, maximum,
// exclusiveMinimum, items, minItems, maxItems, oneOf of types. Returns one
// "source:line: pointer: message" entry per violation.
std::vector<std::string> validate_schema(const JsonDocument& doc, const json& schema);

// Choi files: {"dim_in", "dim_out", "choi_re", "choi_im"} with row-major
// (dim_in dim_out)^2 entries.
json choi_to_json(const ComplexMatrix& choi, int dim_in, int dim_out);
json choi_to_json(const QuantumChannel& ch);
QuantumChannel channel_from_json(const json& j, QuantumChannel::Check check = QuantumChannel::Check::kCptp,
                                 double tol = 1e-8);
QuantumChannel load_channel(const std::string& path, QuantumChannel::Check check = QuantumChannel::Check::kCptp,
                            double tol = 1e-8);

// {"qubits": N, "edges": [[a, b], ...]}
json topology_to_json(const Topology& t);
Topology topology_from_json(const json& j);
Topology load_topology(const std::string& path);

// List of {"kind", "operands", "angles", "step", "tag"}.
json circuit_to_json(const CompiledCircuit& c);

// {"kind": "ideal" | "depolarizing" | "ibm_style" | "choi_injection",
//  "p1q", "p2q", "one_qubit": GateNoise, "two_qubit": GateNoise,
//  "cnot_overrides": [{"control", "target", GateNoise...}],
//  "injected": [{"control", "target", "choi": Choi JSON | "file": path}]}
// GateNoise is {"depolarizing", "t1", "t2", "duration"}; a missing or null
// t1/t2 means infinite. Relative injection files resolve against base_dir.
json noise_model_to_json(const NoiseModel& m);
NoiseModel noise_model_from_json(const json& j, const std::string& base_dir = ".");

// {"shots": n, "counts": {"01": c, ...}}
json counts_to_json(const CountsTable& t);
CountsTable counts_from_json(const json& j);

json metrics_report_to_json(const MetricsReport& r);
json bound_report_to_json(const BoundReport& r);

}  // namespace mcmkit
