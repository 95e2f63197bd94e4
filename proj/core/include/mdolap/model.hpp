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

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mdolap/condition.hpp"
#include "mdolap/value.hpp"

namespace mdolap {

inline constexpr std::string_view kIdAttribute = "Id";
inline constexpr std::string_view kAllAttribute = "All";

using IdSet = std::set<std::string, IdLess>;

struct AttributeSpec {
  std::string name;
  ValueKind kind = ValueKind::String;

  friend bool operator==(const AttributeSpec&, const AttributeSpec&) = default;
};

/// An acyclic parameter path from Id to All, the weak attributes that
/// describe each parameter, and the condition selecting member instances.
struct Hierarchy {
  std::string name;
  std::vector<std::string> params;  // finest first: params.front() == Id, params.back() == All
  std::map<std::string, std::vector<std::string>> weak;
  Condition condition;

  std::optional<std::size_t> level_of(std::string_view param) const noexcept;
  /// The parameter directly below All, i.e. the coarsest displayable level.
  const std::string& top_param() const { return params.at(params.size() - 2); }

  friend bool operator==(const Hierarchy&, const Hierarchy&) = default;
};

struct DimInstance {
  std::string id;
  std::vector<Value> values;  // aligned with Dimension::attributes

  friend bool operator==(const DimInstance&, const DimInstance&) = default;
};

struct Dimension {
  std::string name;
  std::vector<AttributeSpec> attributes;  // Id first, All last
  std::vector<Hierarchy> hierarchies;
  std::map<std::string, DimInstance, IdLess> instances;

  /// Builds a dimension from user attributes, injecting Id and All.
  static Dimension make(std::string name, std::vector<AttributeSpec> user_attributes);

  std::optional<std::size_t> attribute_index(std::string_view attr) const noexcept;
  const Hierarchy* find_hierarchy(std::string_view h) const noexcept;
  /// Throws Error(UnknownHierarchy).
  const Hierarchy& hierarchy(std::string_view h) const;
  /// Throws Error(InvalidValue) for an unknown id.
  const DimInstance& instance(std::string_view id) const;

  /// Creates an instance with every attribute null except Id and All.
  DimInstance blank_instance(std::string id) const;
  /// Inserts or replaces an instance after filling Id/All.
  void put(DimInstance inst);

  friend bool operator==(const Dimension&, const Dimension&) = default;
};

enum class Aggregation { Sum, Avg, Count, Min, Max };

std::string_view to_string(Aggregation agg) noexcept;
std::optional<Aggregation> parse_aggregation(std::string_view word) noexcept;

/// A fact measure. Values are kept as Decimal; INT measures hold whole
/// numbers. Display: DECIMAL measures print two fraction digits, INT
/// measures print integers (AVG rounded half away from zero).
struct MeasureSpec {
  std::string name;
  ValueKind kind = ValueKind::Decimal;  // Int or Decimal
  Aggregation agg = Aggregation::Sum;

  friend bool operator==(const MeasureSpec&, const MeasureSpec&) = default;
};

struct FactInstance {
  std::vector<Decimal> measures;   // aligned with Fact::measures
  std::vector<std::string> links;  // aligned with Fact::dimensions

  friend bool operator==(const FactInstance&, const FactInstance&) = default;
};

struct Fact {
  std::string name;
  std::vector<MeasureSpec> measures;
  std::vector<std::string> dimensions;  // Star image, declaration order
  std::vector<FactInstance> instances;

  std::optional<std::size_t> link_index(std::string_view dim) const noexcept;
  std::optional<std::size_t> measure_index(std::string_view m) const noexcept;

  friend bool operator==(const Fact&, const Fact&) = default;
};

enum class ConstraintKind { Exclusion, Inclusion, Simultaneity, Totality, Partition };
enum class ConstraintScope { Intra, Inter };

std::string_view to_string(ConstraintKind kind) noexcept;
std::string_view to_string(ConstraintScope scope) noexcept;
std::optional<ConstraintKind> parse_constraint_kind(std::string_view word) noexcept;

struct HierarchyRef {
  std::string dimension;
  std::string hierarchy;

  friend bool operator==(const HierarchyRef&, const HierarchyRef&) = default;
};

/// A semantic constraint between two hierarchies. Intra constraints relate
/// two hierarchies of one dimension over its instances; inter constraints
/// relate hierarchies of two dimensions over the instances of `fact`.
struct Constraint {
  ConstraintKind kind = ConstraintKind::Exclusion;
  ConstraintScope scope = ConstraintScope::Intra;
  HierarchyRef left;
  HierarchyRef right;
  std::string fact;  // inter only

  std::string describe() const;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

enum class Consistency { Unchecked, Consistent, Inconsistent };

std::string_view to_string(Consistency c) noexcept;
std::optional<Consistency> parse_consistency(std::string_view word) noexcept;

struct Constellation {
  std::string name;
  std::vector<Dimension> dimensions;
  std::vector<Fact> facts;
  std::vector<Constraint> constraints;
  Consistency consistency = Consistency::Unchecked;

  const Dimension* find_dimension(std::string_view d) const noexcept;
  Dimension* find_dimension(std::string_view d) noexcept;
  const Fact* find_fact(std::string_view f) const noexcept;
  Fact* find_fact(std::string_view f) noexcept;
  /// Throw Error(UnknownDimension) / Error(UnknownFact).
  const Dimension& dimension(std::string_view d) const;
  const Fact& fact(std::string_view f) const;

  friend bool operator==(const Constellation&, const Constellation&) = default;
};

/// True when the instance satisfies the condition. Throws
/// Error(UnknownAttribute) if the condition names a missing attribute.
bool eval_condition(const Condition& cond, const Dimension& dim, const DimInstance& inst);

/// Identifiers of the instances satisfying the hierarchy's condition.
/// Throws Error(UnknownHierarchy).
IdSet hierarchy_members(const Dimension& dim, std::string_view hierarchy);

enum class Membership { Strict, Lenient };

/// Projects an instance onto a hierarchy parameter. In strict mode the
/// instance must belong to the hierarchy (Error(NotMember)).
/// Throws Error(UnknownParam) when `param` is not on the hierarchy path.
Value roll_value(const Dimension& dim, std::string_view inst_id, std::string_view hierarchy,
                 std::string_view param, Membership mode = Membership::Strict);

}  // namespace mdolap
