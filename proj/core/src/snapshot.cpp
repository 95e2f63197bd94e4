// Copyright 2026 The mdolap Authors
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

#include "mdolap/snapshot.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "mdolap/error.hpp"
#include "mdolap/ingest.hpp"
#include "mdolap/serialize.hpp"
#include "mdolap/validation.hpp"

namespace mdolap {

namespace {

using nlohmann::json;

constexpr std::string_view kFormat = "mdolap-snapshot";
constexpr int kVersion = 1;

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::MalformedSnapshot, "malformed snapshot: " + what);
}

const json& array_at(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_array()) malformed(std::string("'") + key + "' must be an array");
  return *it;
}

std::string string_at(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) malformed(std::string("'") + key + "' must be a string");
  return it->get<std::string>();
}

json measure_json(const MeasureSpec& m, Decimal v) {
  if (m.kind == ValueKind::Int) return v.cents / 100;
  return v.to_string();
}

Decimal measure_of(const MeasureSpec& m, const json& j) {
  if (m.kind == ValueKind::Int) {
    if (!j.is_number_integer()) malformed("measure " + m.name + " must be an integer");
    return Decimal::from_units(j.get<std::int64_t>());
  }
  if (!j.is_string()) malformed("measure " + m.name + " must be a decimal string");
  auto d = Decimal::parse(j.get<std::string>());
  if (!d) malformed("measure " + m.name + ": bad decimal");
  return *d;
}

Dimension dimension_of(const json& j) {
  std::vector<AttributeSpec> attrs;
  for (const auto& a : array_at(j, "attributes")) {
    auto kind = parse_value_kind(string_at(a, "kind"));
    if (!kind) malformed("unknown attribute kind");
    attrs.push_back({string_at(a, "name"), *kind});
  }
  Dimension d = Dimension::make(string_at(j, "name"), std::move(attrs));
  for (const auto& hj : array_at(j, "hierarchies")) {
    Hierarchy h;
    h.name = string_at(hj, "name");
    for (const auto& p : array_at(hj, "params")) {
      if (!p.is_string()) malformed("hierarchy params must be strings");
      h.params.push_back(p.get<std::string>());
    }
    auto weak = hj.find("weak");
    if (weak == hj.end() || !weak->is_object()) malformed("'weak' must be an object");
    for (const auto& [owner, list] : weak->items()) {
      if (!list.is_array()) malformed("weak attribute lists must be arrays");
      auto& dest = h.weak[owner];
      for (const auto& w : list) {
        if (!w.is_string()) malformed("weak attributes must be strings");
        dest.push_back(w.get<std::string>());
      }
    }
    auto cond = hj.find("condition");
    if (cond == hj.end()) malformed("missing hierarchy condition");
    h.condition = condition_from_json(*cond);
    d.hierarchies.push_back(std::move(h));
  }
  for (const auto& ij : array_at(j, "instances")) {
    DimInstance inst = d.blank_instance(string_at(ij, "id"));
    auto values = ij.find("values");
    if (values == ij.end() || !values->is_object()) malformed("instance values must be an object");
    for (const auto& [name, v] : values->items()) {
      auto idx = d.attribute_index(name);
      if (!idx || *idx == 0 || *idx + 1 == d.attributes.size()) malformed("unknown attribute " + name);
      inst.values[*idx] = field_from_json(v, d.attributes[*idx].kind);
    }
    if (d.instances.count(inst.id)) malformed("duplicate instance " + inst.id + " in " + d.name);
    d.put(std::move(inst));
  }
  return d;
}

Fact fact_of(const json& j) {
  Fact f;
  f.name = string_at(j, "name");
  for (const auto& m : array_at(j, "measures")) {
    auto kind = parse_value_kind(string_at(m, "kind"));
    auto agg = parse_aggregation(string_at(m, "agg"));
    if (!kind || !agg) malformed("bad measure in " + f.name);
    f.measures.push_back({string_at(m, "name"), *kind, *agg});
  }
  for (const auto& d : array_at(j, "dimensions")) {
    if (!d.is_string()) malformed("fact dimensions must be strings");
    f.dimensions.push_back(d.get<std::string>());
  }
  for (const auto& ij : array_at(j, "instances")) {
    const json& ms = array_at(ij, "measures");
    const json& ls = array_at(ij, "links");
    if (ms.size() != f.measures.size() || ls.size() != f.dimensions.size()) malformed("fact instance arity in " + f.name);
    FactInstance inst;
    for (std::size_t k = 0; k < ms.size(); ++k) inst.measures.push_back(measure_of(f.measures[k], ms[k]));
    for (const auto& l : ls) {
      if (!l.is_string()) malformed("fact links must be strings");
      inst.links.push_back(l.get<std::string>());
    }
    f.instances.push_back(std::move(inst));
  }
  return f;
}

}  // namespace

std::string snapshot_save(const Constellation& c) {
  json root = schema_to_json(c);
  root["format"] = kFormat;
  root["version"] = kVersion;
  for (std::size_t i = 0; i < c.dimensions.size(); ++i) {
    const Dimension& d = c.dimensions[i];
    json instances = json::array();
    for (const auto& [id, inst] : d.instances) {
      json values = json::object();
      for (std::size_t a = 1; a + 1 < d.attributes.size(); ++a) values[d.attributes[a].name] = field_to_json(inst.values[a]);
      instances.push_back({{"id", id}, {"values", std::move(values)}});
    }
    root["dimensions"][i]["instances"] = std::move(instances);
    for (auto& h : root["dimensions"][i]["hierarchies"]) h.erase("conditionText");
  }
  for (std::size_t i = 0; i < c.facts.size(); ++i) {
    const Fact& f = c.facts[i];
    json instances = json::array();
    for (const auto& inst : f.instances) {
      json ms = json::array();
      for (std::size_t k = 0; k < inst.measures.size(); ++k) ms.push_back(measure_json(f.measures[k], inst.measures[k]));
      instances.push_back({{"links", inst.links}, {"measures", std::move(ms)}});
    }
    root["facts"][i]["instances"] = std::move(instances);
  }
  for (auto& k : root["constraints"]) k.erase("text");
  return root.dump(2) + "\n";
}

Constellation snapshot_load(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    malformed(std::string("invalid JSON (") + e.what() + ")");
  }
  if (!root.is_object()) malformed("top level must be an object");
  if (root.value("format", std::string{}) != kFormat) malformed("not an mdolap snapshot");
  if (!root["version"].is_number_integer() || root["version"].get<int>() != kVersion) malformed("unsupported version");
  Constellation c;
  c.name = string_at(root, "name");
  auto consistency = parse_consistency(string_at(root, "consistency"));
  if (!consistency) malformed("unknown consistency status");
  c.consistency = *consistency;
  for (const auto& d : array_at(root, "dimensions")) c.dimensions.push_back(dimension_of(d));
  for (const auto& f : array_at(root, "facts")) c.facts.push_back(fact_of(f));
  for (const auto& k : array_at(root, "constraints")) c.constraints.push_back(constraint_from_json(k));
  ValidationReport report = validate_schema(c);
  if (!report.well_formed()) malformed(report.errors.front().code + ": " + report.errors.front().message);
  return c;
}

void snapshot_write_file(const Constellation& c, const std::filesystem::path& path) {
  std::string text = snapshot_save(c);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + tmp.string(), tmp.string());
    out << text;
    if (!out.flush()) throw Error(ErrorCode::Io, "error writing " + tmp.string(), tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot replace " + path.string() + ": " + ec.message(), path.string());
}

Constellation snapshot_read_file(const std::filesystem::path& path) { return snapshot_load(read_file(path)); }

std::shared_ptr<const Constellation> Store::current() const {
  std::lock_guard lock(mu_);
  return current_;
}

void Store::publish(Constellation c) { publish(std::make_shared<const Constellation>(std::move(c))); }

void Store::publish(std::shared_ptr<const Constellation> c) {
  std::lock_guard lock(mu_);
  current_ = std::move(c);
}

}  // namespace mdolap
