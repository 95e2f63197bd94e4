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

#include "mdolap/model.hpp"

#include <algorithm>

#include "mdolap/error.hpp"

namespace mdolap {

std::optional<std::size_t> Hierarchy::level_of(std::string_view param) const noexcept {
  auto it = std::find(params.begin(), params.end(), param);
  if (it == params.end()) return std::nullopt;
  return static_cast<std::size_t>(it - params.begin());
}

Dimension Dimension::make(std::string name, std::vector<AttributeSpec> user_attributes) {
  Dimension d;
  d.name = std::move(name);
  d.attributes.push_back({std::string(kIdAttribute), ValueKind::Id});
  for (auto& a : user_attributes) d.attributes.push_back(std::move(a));
  d.attributes.push_back({std::string(kAllAttribute), ValueKind::All});
  return d;
}

std::optional<std::size_t> Dimension::attribute_index(std::string_view attr) const noexcept {
  for (std::size_t i = 0; i < attributes.size(); ++i) {
    if (attributes[i].name == attr) return i;
  }
  return std::nullopt;
}

const Hierarchy* Dimension::find_hierarchy(std::string_view h) const noexcept {
  for (const auto& hier : hierarchies) {
    if (hier.name == h) return &hier;
  }
  return nullptr;
}

const Hierarchy& Dimension::hierarchy(std::string_view h) const {
  if (const auto* found = find_hierarchy(h)) return *found;
  throw Error(ErrorCode::UnknownHierarchy,
              "dimension " + name + " has no hierarchy '" + std::string(h) + "'", std::string(h));
}

const DimInstance& Dimension::instance(std::string_view id) const {
  auto it = instances.find(id);
  if (it == instances.end()) {
    throw Error(ErrorCode::InvalidValue, "dimension " + name + " has no instance '" + std::string(id) + "'",
                std::string(id));
  }
  return it->second;
}

DimInstance Dimension::blank_instance(std::string id) const {
  DimInstance inst;
  inst.values.resize(attributes.size());
  inst.id = std::move(id);
  inst.values.front() = Value::text(inst.id);
  inst.values.back() = Value::all();
  return inst;
}

void Dimension::put(DimInstance inst) {
  inst.values.resize(attributes.size());
  inst.values.front() = Value::text(inst.id);
  inst.values.back() = Value::all();
  std::string key = inst.id;
  instances.insert_or_assign(std::move(key), std::move(inst));
}

std::string_view to_string(Aggregation agg) noexcept {
  switch (agg) {
    case Aggregation::Sum: return "SUM";
    case Aggregation::Avg: return "AVG";
    case Aggregation::Count: return "COUNT";
    case Aggregation::Min: return "MIN";
    case Aggregation::Max: return "MAX";
  }
  return "?";
}

std::optional<Aggregation> parse_aggregation(std::string_view word) noexcept {
  if (word == "SUM") return Aggregation::Sum;
  if (word == "AVG") return Aggregation::Avg;
  if (word == "COUNT") return Aggregation::Count;
  if (word == "MIN") return Aggregation::Min;
  if (word == "MAX") return Aggregation::Max;
  return std::nullopt;
}

std::optional<std::size_t> Fact::link_index(std::string_view dim) const noexcept {
  auto it = std::find(dimensions.begin(), dimensions.end(), dim);
  if (it == dimensions.end()) return std::nullopt;
  return static_cast<std::size_t>(it - dimensions.begin());
}

std::optional<std::size_t> Fact::measure_index(std::string_view m) const noexcept {
  for (std::size_t i = 0; i < measures.size(); ++i) {
    if (measures[i].name == m) return i;
  }
  return std::nullopt;
}

std::string_view to_string(ConstraintKind kind) noexcept {
  switch (kind) {
    case ConstraintKind::Exclusion: return "EXCLUSION";
    case ConstraintKind::Inclusion: return "INCLUSION";
    case ConstraintKind::Simultaneity: return "SIMULTANEITY";
    case ConstraintKind::Totality: return "TOTALITY";
    case ConstraintKind::Partition: return "PARTITION";
  }
  return "?";
}

std::string_view to_string(ConstraintScope scope) noexcept {
  return scope == ConstraintScope::Intra ? "INTRA" : "INTER";
}

std::optional<ConstraintKind> parse_constraint_kind(std::string_view word) noexcept {
  if (word == "EXCLUSION") return ConstraintKind::Exclusion;
  if (word == "INCLUSION") return ConstraintKind::Inclusion;
  if (word == "SIMULTANEITY") return ConstraintKind::Simultaneity;
  if (word == "TOTALITY") return ConstraintKind::Totality;
  if (word == "PARTITION") return ConstraintKind::Partition;
  return std::nullopt;
}

std::string Constraint::describe() const {
  std::string out = "CONSTRAINT ";
  if (scope == ConstraintScope::Intra) {
    out += "INTRA " + left.dimension + " : " + left.hierarchy + " " + std::string(to_string(kind)) + " " +
           right.hierarchy;
  } else {
    out += "INTER ON " + fact + " : " + left.dimension + "." + left.hierarchy + " " +
           std::string(to_string(kind)) + " " + right.dimension + "." + right.hierarchy;
  }
  return out;
}

std::string_view to_string(Consistency c) noexcept {
  switch (c) {
    case Consistency::Unchecked: return "unchecked";
    case Consistency::Consistent: return "consistent";
    case Consistency::Inconsistent: return "inconsistent";
  }
  return "?";
}

std::optional<Consistency> parse_consistency(std::string_view word) noexcept {
  if (word == "unchecked") return Consistency::Unchecked;
  if (word == "consistent") return Consistency::Consistent;
  if (word == "inconsistent") return Consistency::Inconsistent;
  return std::nullopt;
}

const Dimension* Constellation::find_dimension(std::string_view d) const noexcept {
  for (const auto& dim : dimensions) {
    if (dim.name == d) return &dim;
  }
  return nullptr;
}

Dimension* Constellation::find_dimension(std::string_view d) noexcept {
  for (auto& dim : dimensions) {
    if (dim.name == d) return &dim;
  }
  return nullptr;
}

const Fact* Constellation::find_fact(std::string_view f) const noexcept {
  for (const auto& fact : facts) {
    if (fact.name == f) return &fact;
  }
  return nullptr;
}

Fact* Constellation::find_fact(std::string_view f) noexcept {
  for (auto& fact : facts) {
    if (fact.name == f) return &fact;
  }
  return nullptr;
}

const Dimension& Constellation::dimension(std::string_view d) const {
  if (const auto* found = find_dimension(d)) return *found;
  throw Error(ErrorCode::UnknownDimension, "unknown dimension '" + std::string(d) + "'", std::string(d));
}

const Fact& Constellation::fact(std::string_view f) const {
  if (const auto* found = find_fact(f)) return *found;
  throw Error(ErrorCode::UnknownFact, "unknown fact '" + std::string(f) + "'", std::string(f));
}

bool eval_condition(const Condition& cond, const Dimension& dim, const DimInstance& inst) {
  return evaluate(cond, [&](std::string_view attr) -> const Value* {
    auto idx = dim.attribute_index(attr);
    if (!idx || *idx >= inst.values.size()) return nullptr;
    return &inst.values[*idx];
  });
}

IdSet hierarchy_members(const Dimension& dim, std::string_view hierarchy) {
  const Hierarchy& h = dim.hierarchy(hierarchy);
  IdSet out;
  for (const auto& [id, inst] : dim.instances) {
    if (eval_condition(h.condition, dim, inst)) out.insert(id);
  }
  return out;
}

Value roll_value(const Dimension& dim, std::string_view inst_id, std::string_view hierarchy,
                 std::string_view param, Membership mode) {
  const Hierarchy& h = dim.hierarchy(hierarchy);
  if (!h.level_of(param)) {
    throw Error(ErrorCode::UnknownParam,
                std::string(param) + " is not a parameter of " + dim.name + "." + h.name, std::string(param));
  }
  const DimInstance& inst = dim.instance(inst_id);
  if (mode == Membership::Strict && !eval_condition(h.condition, dim, inst)) {
    throw Error(ErrorCode::NotMember,
                "instance " + inst.id + " does not belong to " + dim.name + "." + h.name, inst.id);
  }
  if (param == kAllAttribute) return Value::all();
  auto idx = dim.attribute_index(param);
  if (!idx) throw Error(ErrorCode::UnknownAttribute, "unknown attribute '" + std::string(param) + "'");
  return inst.values[*idx];
}

}  // namespace mdolap
