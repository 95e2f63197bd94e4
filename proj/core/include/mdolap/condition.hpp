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

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "mdolap/value.hpp"

namespace mdolap {

enum class CompareOp { Eq, Ne, Lt, Le, Gt, Ge };

std::string_view to_string(CompareOp op) noexcept;

/// Membership condition of a hierarchy, also reused for table predicates.
///
/// Leaves are TRUE, `attr op literal`, `attr IS NULL` and `attr IS NOT NULL`;
/// interior nodes are AND, OR (n-ary) and NOT.
class Condition {
 public:
  enum class Kind { True, Compare, IsNull, IsNotNull, And, Or, Not };

  Condition() = default;  // TRUE

  static Condition always() { return Condition{}; }
  static Condition compare(std::string attribute, CompareOp op, Value literal);
  static Condition is_null(std::string attribute);
  static Condition is_not_null(std::string attribute);
  static Condition all_of(Condition lhs, Condition rhs);
  static Condition any_of(Condition lhs, Condition rhs);
  static Condition negate(Condition operand);

  Kind kind() const noexcept { return kind_; }
  const std::string& attribute() const noexcept { return attribute_; }
  CompareOp op() const noexcept { return op_; }
  const Value& literal() const noexcept { return literal_; }
  const std::vector<Condition>& children() const noexcept { return children_; }

  bool is_true() const noexcept { return kind_ == Kind::True; }

  friend bool operator==(const Condition&, const Condition&) = default;

 private:
  Kind kind_ = Kind::True;
  std::string attribute_;
  CompareOp op_ = CompareOp::Eq;
  Value literal_;
  std::vector<Condition> children_;
};

/// Resolves an attribute name to the instance's value; nullptr means the
/// attribute does not exist.
using AttributeLookup = std::function<const Value*(std::string_view)>;

/// Total two-valued evaluation. Comparisons touching NULL (or comparing
/// text with numbers) are unknown; unknown propagates through NOT/AND/OR
/// like SQL and collapses to false at the top. So `NOT (x = v)` and
/// `x <> v` are both false when x is NULL.
/// Throws Error(UnknownAttribute).
bool evaluate(const Condition& cond, const AttributeLookup& lookup);

/// DSL text form. With a qualifier, attributes print as `DIM.attr`.
std::string to_text(const Condition& cond, std::string_view qualifier = {});

/// Every attribute name referenced by the condition, in first-use order.
std::vector<std::string> referenced_attributes(const Condition& cond);

}  // namespace mdolap
