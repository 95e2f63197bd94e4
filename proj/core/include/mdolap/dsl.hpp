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

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "mdolap/condition.hpp"
#include "mdolap/error.hpp"
#include "mdolap/model.hpp"

namespace mdolap::dsl {

enum class Severity { Error, Warning };

std::string_view to_string(Severity s) noexcept;

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string message;
  SourcePos pos;      // 1-based
  std::string token;  // offending token text, may be empty

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

/// "line:column: error: message" one-liner.
std::string format_diagnostic(const Diagnostic& d);

template <class T>
struct ParseResult {
  std::optional<T> value;
  std::vector<Diagnostic> diagnostics;

  bool ok() const noexcept { return value.has_value(); }
};

/// An identifier with the place it was written. Equality ignores the position.
struct Ident {
  std::string text;
  SourcePos pos;

  Ident() = default;
  Ident(std::string t, SourcePos p = {}) : text(std::move(t)), pos(p) {}  // NOLINT(google-explicit-constructor)
  Ident(const char* t) : text(t) {}                                        // NOLINT(google-explicit-constructor)

  friend bool operator==(const Ident& a, const Ident& b) { return a.text == b.text; }
};

struct QueryExpr;
using QueryPtr = std::shared_ptr<const QueryExpr>;

struct DisplayNode {
  Ident fact;
  Ident row;
  Ident col;
  Ident row_hierarchy;
  Ident col_hierarchy;
};

struct DrillDownNode {
  QueryPtr input;
  Ident dimension;
  Ident parameter;
};

struct RollUpNode {
  QueryPtr input;
  Ident dimension;
  Ident parameter;
};

struct HRotateNode {
  QueryPtr input;
  Ident dimension;
  Ident from;
  Ident to;
  std::optional<bool> flag;  // omitted means false
};

struct DRotateNode {
  QueryPtr input;
  Ident from;
  Ident to;
  Ident hierarchy;
  std::optional<bool> flag;
};

struct QueryExpr {
  std::variant<DisplayNode, DrillDownNode, RollUpNode, HRotateNode, DRotateNode> node;
  SourcePos pos;  // operator name

  std::string_view op_name() const noexcept;
  /// Child expression, or nullptr for Display.
  const QueryExpr* input() const noexcept;
};

bool operator==(const QueryExpr& a, const QueryExpr& b);
bool operator==(const DisplayNode& a, const DisplayNode& b);
bool operator==(const DrillDownNode& a, const DrillDownNode& b);
bool operator==(const RollUpNode& a, const RollUpNode& b);
bool operator==(const HRotateNode& a, const HRotateNode& b);
bool operator==(const DRotateNode& a, const DRotateNode& b);

QueryPtr make_display(Ident fact, Ident row, Ident col, Ident row_hierarchy, Ident col_hierarchy);
QueryPtr make_drilldown(QueryPtr input, Ident dim, Ident param);
QueryPtr make_rollup(QueryPtr input, Ident dim, Ident param);
QueryPtr make_hrotate(QueryPtr input, Ident dim, Ident from, Ident to, std::optional<bool> flag = {});
QueryPtr make_drotate(QueryPtr input, Ident from, Ident to, Ident hierarchy, std::optional<bool> flag = {});

/// Parses a schema file into a constellation without instances.
ParseResult<Constellation> parse_schema(std::string_view text);

/// Parses a standalone condition (the WHEN grammar).
ParseResult<Condition> parse_condition(std::string_view text);

ParseResult<QueryPtr> parse_query(std::string_view text);

/// Canonical single-line form: `Op(arg, arg, ...)`.
std::string format_query(const QueryExpr& e);

nlohmann::json query_to_json(const QueryExpr& e);
/// Throws Error(ParseError) on a malformed document.
QueryPtr query_from_json(const nlohmann::json& j);

/// Canonical schema text; parse_schema(format_schema(c)) rebuilds the schema of c.
std::string format_schema(const Constellation& c);

}  // namespace mdolap::dsl
