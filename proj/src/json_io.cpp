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

#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace mcmkit {

namespace {

std::string escape_token(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

// Walks already-validated JSON text and records the line where each value
// starts. Lenient on purpose: nlohmann has rejected malformed input first.
class LineScanner {
 public:
  LineScanner(const std::string& text, std::map<std::string, int>& lines) : s_(text), lines_(lines) {}
  void run() {
    skip_ws();
    value("");
  }

 private:
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) {
      if (s_[i_] == '\n') ++line_;
      ++i_;
    }
  }
  std::string string_token() {
    std::string out;
    ++i_;  // opening quote
    while (i_ < s_.size() && s_[i_] != '"') {
      if (s_[i_] == '\\' && i_ + 1 < s_.size()) {
        out += s_[i_ + 1];
        i_ += 2;
        continue;
      }
      out += s_[i_++];
    }
    ++i_;
    return out;
  }
  void value(const std::string& ptr) {
    lines_[ptr] = line_;
    if (i_ >= s_.size()) return;
    const char c = s_[i_];
    if (c == '{') {
      ++i_;
      skip_ws();
      while (i_ < s_.size() && s_[i_] != '}') {
        const std::string key = string_token();
        skip_ws();
        ++i_;  // ':'
        skip_ws();
        value(ptr + "/" + escape_token(key));
        skip_ws();
        if (i_ < s_.size() && s_[i_] == ',') {
          ++i_;
          skip_ws();
        }
      }
      ++i_;
    } else if (c == '[') {
      ++i_;
      skip_ws();
      int idx = 0;
      while (i_ < s_.size() && s_[i_] != ']') {
        value(ptr + "/" + std::to_string(idx++));
        skip_ws();
        if (i_ < s_.size() && s_[i_] == ',') {
          ++i_;
          skip_ws();
        }
      }
      ++i_;
    } else if (c == '"') {
      string_token();
    } else {
      while (i_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[i_])) && s_[i_] != ',' &&
             s_[i_] != ']' && s_[i_] != '}') {
        ++i_;
      }
    }
  }

  const std::string& s_;
  std::map<std::string, int>& lines_;
  size_t i_ = 0;
  int line_ = 1;
};

std::string type_name(const json& v) {
  if (v.is_number_integer()) return "integer";
  if (v.is_number()) return "number";
  return v.type_name();
}

bool type_matches(const json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "boolean") return v.is_boolean();
  if (t == "null") return v.is_null();
  if (t == "integer") return v.is_number_integer() || (v.is_number_float() && std::floor(v.get<double>()) == v.get<double>());
  if (t == "number") return v.is_number();
  return false;
}

void check(const JsonDocument& doc, const json& v, const json& schema, const std::string& ptr,
           std::vector<std::string>& errs) {
  auto fail = [&](const std::string& msg) { errs.push_back(doc.where(ptr) + (ptr.empty() ? "/" : ptr) + ": " + msg); };
  if (schema.contains("type")) {
    const json& t = schema["type"];
    bool ok = false;
    std::string expected;
    if (t.is_array()) {
      for (const auto& e : t) {
        ok = ok || type_matches(v, e.get<std::string>());
        expected += (expected.empty() ? "" : " or ") + e.get<std::string>();
      }
    } else {
      ok = type_matches(v, t.get<std::string>());
      expected = t.get<std::string>();
    }
    if (!ok) {
      fail("expected " + expected + ", got " + type_name(v));
      return;
    }
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& e : schema["enum"]) found = found || e == v;
    if (!found) fail("value " + v.dump() + " is not one of " + schema["enum"].dump());
  }
  if (v.is_number()) {
    const double x = v.get<double>();
    if (schema.contains("minimum") && x < schema["minimum"].get<double>()) {
      fail("value " + v.dump() + " is below the minimum " + schema["minimum"].dump());
    }
    if (schema.contains("exclusiveMinimum") && x <= schema["exclusiveMinimum"].get<double>()) {
      fail("value " + v.dump() + " must be greater than " + schema["exclusiveMinimum"].dump());
    }
    if (schema.contains("maximum") && x > schema["maximum"].get<double>()) {
      fail("value " + v.dump() + " exceeds the maximum " + schema["maximum"].dump());
    }
  }
  if (v.is_object()) {
    if (schema.contains("required")) {
      for (const auto& r : schema["required"]) {
        if (!v.contains(r.get<std::string>())) fail("missing required member \"" + r.get<std::string>() + "\"");
      }
    }
    const json props = schema.value("properties", json::object());
    const bool closed = schema.contains("additionalProperties") && schema["additionalProperties"] == false;
    for (const auto& [key, member] : v.items()) {
      const std::string sub = ptr + "/" + escape_token(key);
      if (props.contains(key)) {
        check(doc, member, props[key], sub, errs);
      } else if (closed) {
        errs.push_back(doc.where(sub) + sub + ": unknown member \"" + key + "\"");
      }
    }
  }
  if (v.is_array()) {
    if (schema.contains("minItems") && v.size() < schema["minItems"].get<size_t>()) {
      fail("needs at least " + schema["minItems"].dump() + " items");
    }
    if (schema.contains("maxItems") && v.size() > schema["maxItems"].get<size_t>()) {
      fail("allows at most " + schema["maxItems"].dump() + " items");
    }
    if (schema.contains("items")) {
      for (size_t i = 0; i < v.size(); ++i) check(doc, v[i], schema["items"], ptr + "/" + std::to_string(i), errs);
    }
  }
}

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::kParse, std::string("missing member \"") + key + "\"");
  return j.at(key);
}

int integer(const json& j, const char* key) {
  const json& v = member(j, key);
  if (!v.is_number_integer()) throw Error(ErrorKind::kParse, std::string("member \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::string text_of(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json gate_noise_to_json(const GateNoise& g) {
  json j{{"depolarizing", g.depolarizing}, {"duration", g.duration}};
  j["t1"] = std::isinf(g.t1) ? json(nullptr) : json(g.t1);
  j["t2"] = std::isinf(g.t2) ? json(nullptr) : json(g.t2);
  return j;
}

GateNoise gate_noise_from_json(const json& j) {
  GateNoise g;
  g.depolarizing = j.value("depolarizing", 0.0);
  g.duration = j.value("duration", 0.0);
  if (j.contains("t1") && !j["t1"].is_null()) g.t1 = j["t1"].get<double>();
  if (j.contains("t2") && !j["t2"].is_null()) g.t2 = j["t2"].get<double>();
  return g;
}

}  // namespace

int JsonDocument::line_of(const std::string& pointer) const {
  std::string p = pointer;
  while (true) {
    auto it = lines.find(p);
    if (it != lines.end()) return it->second;
    if (p.empty()) return 0;
    p = p.substr(0, p.rfind('/'));
  }
}

std::string JsonDocument::where(const std::string& pointer) const {
  const int line = line_of(pointer);
  return source + ":" + (line > 0 ? std::to_string(line) : std::string("?")) + ": ";
}

JsonDocument parse_json_document(const std::string& text, const std::string& source) {
  JsonDocument doc;
  doc.source = source;
  try {
    doc.value = json::parse(text);
  } catch (const json::parse_error& e) {
    // Byte offsets from nlohmann point one past the offending character.
    const size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    int line = 1, col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    const auto cut = what.find("parse error");
    if (cut != std::string::npos) what = what.substr(cut);
    throw Error(ErrorKind::kParse, source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
  }
  LineScanner(text, doc.lines).run();
  return doc;
}

JsonDocument load_json_document(const std::string& path) { return parse_json_document(text_of(path), path); }

void write_json_file(const std::string& path, const json& value) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kIo, "cannot write " + path);
  out << value.dump(2) << "\n";
}

std::vector<std::string> validate_schema(const JsonDocument& doc, const json& schema) {
  std::vector<std::string> errs;
  check(doc, doc.value, schema, "", errs);
  return errs;
}

json choi_to_json(const ComplexMatrix& choi, int dim_in, int dim_out) {
  const long n = static_cast<long>(dim_in) * dim_out;
  if (choi.rows() != n || choi.cols() != n) throw Error(ErrorKind::kDimensionMismatch, "choi_to_json: size");
  json re = json::array(), im = json::array();
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      re.push_back(choi(i, j).real());
      im.push_back(choi(i, j).imag());
    }
  }
  return json{{"dim_in", dim_in}, {"dim_out", dim_out}, {"choi_re", re}, {"choi_im", im}};
}

json choi_to_json(const QuantumChannel& ch) { return choi_to_json(ch.choi(), ch.dim_in(), ch.dim_out()); }

QuantumChannel channel_from_json(const json& j, QuantumChannel::Check check_mode, double tol) {
  const int din = integer(j, "dim_in"), dout = integer(j, "dim_out");
  if (din <= 0 || dout <= 0) throw Error(ErrorKind::kParse, "Choi dimensions must be positive");
  const json& re = member(j, "choi_re");
  const json& im = member(j, "choi_im");
  const long n = static_cast<long>(din) * dout;
  if (!re.is_array() || !im.is_array() || static_cast<long>(re.size()) != n * n ||
      static_cast<long>(im.size()) != n * n) {
    throw Error(ErrorKind::kParse, "choi_re and choi_im need " + std::to_string(n * n) + " entries each");
  }
  ComplexMatrix c(n, n);
  for (long i = 0; i < n; ++i) {
    for (long k = 0; k < n; ++k) c(i, k) = cplx(re[i * n + k].get<double>(), im[i * n + k].get<double>());
  }
  return QuantumChannel::from_choi(c, din, dout, check_mode, tol);
}

QuantumChannel load_channel(const std::string& path, QuantumChannel::Check check_mode, double tol) {
  const JsonDocument doc = load_json_document(path);
  try {
    return channel_from_json(doc.value, check_mode, tol);
  } catch (const Error& e) {
    throw Error(e.kind(), doc.where("") + e.what());
  }
}

json topology_to_json(const Topology& t) {
  json edges = json::array();
  for (const auto& [a, b] : t.edges) edges.push_back({a, b});
  return json{{"qubits", t.num_qubits}, {"edges", edges}};
}

Topology topology_from_json(const json& j) {
  Topology t;
  t.num_qubits = integer(j, "qubits");
  for (const auto& e : member(j, "edges")) {
    if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::kParse, "edges must be [a, b] pairs");
    t.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  t.validate();
  return t;
}

Topology load_topology(const std::string& path) {
  const JsonDocument doc = load_json_document(path);
  try {
    return topology_from_json(doc.value);
  } catch (const Error& e) {
    throw Error(e.kind(), doc.where("") + e.what());
  }
}

json circuit_to_json(const CompiledCircuit& c) {
  json ops = json::array();
  for (const auto& op : c.ops) {
    json o{{"kind", gate_kind_name(op.kind)}, {"operands", op.qubits}, {"step", op.step}, {"tag", op.tag}};
    o["angles"] = op.kind == GateKind::kRot1q ? json(op.angles) : json::array();
    ops.push_back(o);
  }
  return ops;
}

json noise_model_to_json(const NoiseModel& m) {
  json j{{"kind", noise_kind_name(m.kind)},
         {"p1q", m.p1q},
         {"p2q", m.p2q},
         {"one_qubit", gate_noise_to_json(m.one_qubit)},
         {"two_qubit", gate_noise_to_json(m.two_qubit)}};
  json over = json::array();
  for (const auto& [pair, g] : m.cnot_overrides) {
    json o = gate_noise_to_json(g);
    o["control"] = pair.first;
    o["target"] = pair.second;
    over.push_back(o);
  }
  j["cnot_overrides"] = over;
  json inj = json::array();
  for (const auto& [pair, ch] : m.injected) {
    inj.push_back(json{{"control", pair.first}, {"target", pair.second}, {"choi", choi_to_json(ch)}});
  }
  j["injected"] = inj;
  return j;
}

NoiseModel noise_model_from_json(const json& j, const std::string& base_dir) {
  if (!j.is_object()) throw Error(ErrorKind::kParse, "noise model must be an object");
  NoiseModel m;
  m.kind = parse_noise_kind(j.value("kind", std::string("ideal")));
  m.p1q = j.value("p1q", 0.0);
  m.p2q = j.value("p2q", 0.0);
  if (j.contains("one_qubit")) m.one_qubit = gate_noise_from_json(j["one_qubit"]);
  if (j.contains("two_qubit")) m.two_qubit = gate_noise_from_json(j["two_qubit"]);
  for (const auto& o : j.value("cnot_overrides", json::array())) {
    m.cnot_overrides[{integer(o, "control"), integer(o, "target")}] = gate_noise_from_json(o);
  }
  for (const auto& o : j.value("injected", json::array())) {
    const QubitPair pair{integer(o, "control"), integer(o, "target")};
    if (o.contains("choi")) {
      m.injected[pair] = channel_from_json(o["choi"]);
    } else if (o.contains("file")) {
      std::filesystem::path p(o["file"].get<std::string>());
      if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
      m.injected[pair] = load_channel(p.string());
    } else {
      throw Error(ErrorKind::kParse, "injected entries need \"choi\" or \"file\"");
    }
  }
  m.validate();
  return m;
}

json counts_to_json(const CountsTable& t) {
  json c = json::object();
  for (const auto& [k, v] : t.counts) c[k] = v;
  return json{{"shots", t.shots}, {"counts", c}};
}

CountsTable counts_from_json(const json& j) {
  CountsTable t;
  t.shots = member(j, "shots").get<long>();
  const json& c = member(j, "counts");
  if (!c.is_object()) throw Error(ErrorKind::kParse, "counts must be an object");
  for (const auto& [k, v] : c.items()) {
    if (t.num_qubits == 0) t.num_qubits = static_cast<int>(k.size());
    if (!v.is_number_integer()) throw Error(ErrorKind::kParse, "count for '" + k + "' must be an integer");
    t.counts[k] = v.get<long>();
  }
  t.validate();
  return t;
}

json metrics_report_to_json(const MetricsReport& r) {
  json j{{"name", r.name},
         {"dim", r.dim},
         {"infidelity", r.infidelity},
         {"unitarity", r.unitarity},
         {"incoherence", r.incoherence},
         {"incoherence_ratio", r.incoherence_ratio},
         {"diamond_distance", r.diamond},
         {"diamond_lower", r.diamond_lower},
         {"diamond_upper", r.diamond_upper},
         {"bound_infidelity", r.bound_infidelity},
         {"bound_unitarity", r.bound_unitarity},
         {"violations", r.violations()}};
  if (r.infidelity_std >= 0.0) j["infidelity_std"] = r.infidelity_std;
  return j;
}

json bound_report_to_json(const BoundReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back(json{{"n", row.n},
                        {"step_error", row.step_error},
                        {"noisy_step_error", row.noisy_step_error},
                        {"global_bound", row.global.value},
                        {"vacuous", row.global.vacuous}});
  }
  return json{{"single_step_bound", r.step.value},
              {"leading_term_only", r.step.leading_term_only},
              {"r_placeholder", r.step.r_placeholder},
              {"noisy_step_error", r.noisy_step_error},
              {"first_vacuous_step", r.first_vacuous_step},
              {"rows", rows}};
}

}  // namespace mcmkit
