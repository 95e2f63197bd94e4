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

#include "mdolap/serialize.hpp"

#include <charconv>

#include "mdolap/error.hpp"

namespace mdolap {

namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedSnapshot, "malformed snapshot: " + what); }

const json& member(const json& j, const char* key) {
  if (!j.is_object()) malformed(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing '") + key + "'");
  return *it;
}

std::string text(const json& j, const char* key) {
  const json& v = member(j, key);
  if (!v.is_string()) malformed(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

Decimal decimal_of(const json& j) {
  if (!j.is_string()) malformed("decimal values are encoded as strings");
  auto d = Decimal::parse(j.get<std::string>());
  if (!d) malformed("bad decimal '" + j.get<std::string>() + "'");
  return *d;
}

std::string_view op_token(CompareOp op) { return to_string(op); }

CompareOp op_of(const std::string& s) {
  for (CompareOp op : {CompareOp::Eq, CompareOp::Ne, CompareOp::Lt, CompareOp::Le, CompareOp::Gt, CompareOp::Ge}) {
    if (to_string(op) == s) return op;
  }
  malformed("unknown operator '" + s + "'");
}

json ref_json(const HierarchyRef& r) { return {{"dimension", r.dimension}, {"hierarchy", r.hierarchy}}; }
HierarchyRef ref_of(const json& j) { return {text(j, "dimension"), text(j, "hierarchy")}; }

}  // namespace

json literal_to_json(const Value& v) {
  if (v.is_int()) return {{"int", v.as_int()}};
  if (v.is_decimal()) return {{"decimal", v.as_decimal().to_string()}};
  if (v.is_text()) return {{"string", v.as_text()}};
  return nullptr;
}

Value literal_from_json(const json& j) {
  if (j.is_null()) return Value::null();
  if (!j.is_object() || j.size() != 1) malformed("bad literal");
  if (j.contains("int")) {
    if (!j["int"].is_number_integer()) malformed("bad integer literal");
    return Value::integer(j["int"].get<std::int64_t>());
  }
  if (j.contains("decimal")) return Value::decimal(decimal_of(j["decimal"]));
  if (j.contains("string") && j["string"].is_string()) return Value::text(j["string"].get<std::string>());
  malformed("bad literal");
}

json condition_to_json(const Condition& c) {
  switch (c.kind()) {
    case Condition::Kind::True: return {{"kind", "true"}};
    case Condition::Kind::Compare:
      return {{"kind", "compare"}, {"attribute", c.attribute()}, {"op", op_token(c.op())},
              {"value", literal_to_json(c.literal())}};
    case Condition::Kind::IsNull: return {{"kind", "isNull"}, {"attribute", c.attribute()}};
    case Condition::Kind::IsNotNull: return {{"kind", "isNotNull"}, {"attribute", c.attribute()}};
    case Condition::Kind::Not: return {{"kind", "not"}, {"operand", condition_to_json(c.children().front())}};
    case Condition::Kind::And:
    case Condition::Kind::Or: {
      json kids = json::array();
      for (const auto& k : c.children()) kids.push_back(condition_to_json(k));
      return {{"kind", c.kind() == Condition::Kind::And ? "and" : "or"}, {"operands", std::move(kids)}};
    }
  }
  return nullptr;
}

Condition condition_from_json(const json& j) {
  std::string kind = text(j, "kind");
  if (kind == "true") return Condition::always();
  if (kind == "compare") {
    return Condition::compare(text(j, "attribute"), op_of(text(j, "op")), literal_from_json(member(j, "value")));
  }
  if (kind == "isNull") return Condition::is_null(text(j, "attribute"));
  if (kind == "isNotNull") return Condition::is_not_null(text(j, "attribute"));
  if (kind == "not") return Condition::negate(condition_from_json(member(j, "operand")));
  if (kind == "and" || kind == "or") {
    const json& kids = member(j, "operands");
    if (!kids.is_array() || kids.size() < 2) malformed("'" + kind + "' needs at least two operands");
    Condition out = condition_from_json(kids[0]);
    for (std::size_t i = 1; i < kids.size(); ++i) {
      Condition next = condition_from_json(kids[i]);
      out = kind == "and" ? Condition::all_of(std::move(out), std::move(next))
                          : Condition::any_of(std::move(out), std::move(next));
    }
    return out;
  }
  malformed("unknown condition kind '" + kind + "'");
}

json field_to_json(const Value& v) {
  if (v.is_null()) return nullptr;
  if (v.is_int()) return v.as_int();
  if (v.is_decimal()) return v.as_decimal().to_string();
  return v.to_display();
}

Value field_from_json(const json& j, ValueKind kind) {
  if (j.is_null()) return Value::null();
  switch (kind) {
    case ValueKind::Int:
      if (!j.is_number_integer()) malformed("expected an integer");
      return Value::integer(j.get<std::int64_t>());
    case ValueKind::Decimal: return Value::decimal(decimal_of(j));
    case ValueKind::Id:
    case ValueKind::String:
      if (!j.is_string()) malformed("expected a string");
      return Value::text(j.get<std::string>());
    case ValueKind::All: break;
  }
  malformed("unexpected All value");
}

json constraint_to_json(const Constraint& k) {
  json j = {{"kind", to_string(k.kind)},
            {"scope", to_string(k.scope)},
            {"left", ref_json(k.left)},
            {"right", ref_json(k.right)},
            {"text", k.describe()}};
  if (k.scope == ConstraintScope::Inter) j["fact"] = k.fact;
  return j;
}

Constraint constraint_from_json(const json& j) {
  Constraint k;
  auto kind = parse_constraint_kind(text(j, "kind"));
  if (!kind) malformed("unknown constraint kind");
  k.kind = *kind;
  std::string scope = text(j, "scope");
  if (scope != "INTRA" && scope != "INTER") malformed("unknown constraint scope");
  k.scope = scope == "INTRA" ? ConstraintScope::Intra : ConstraintScope::Inter;
  k.left = ref_of(member(j, "left"));
  k.right = ref_of(member(j, "right"));
  if (k.scope == ConstraintScope::Inter) k.fact = text(j, "fact");
  return k;
}

json schema_to_json(const Constellation& c) {
  json dims = json::array();
  for (const auto& d : c.dimensions) {
    json attrs = json::array();
    for (std::size_t i = 1; i + 1 < d.attributes.size(); ++i) {
      attrs.push_back({{"name", d.attributes[i].name}, {"kind", to_string(d.attributes[i].kind)}});
    }
    json hs = json::array();
    for (const auto& h : d.hierarchies) {
      hs.push_back({{"name", h.name},
                    {"params", h.params},
                    {"weak", h.weak},
                    {"condition", condition_to_json(h.condition)},
                    {"conditionText", to_text(h.condition)}});
    }
    dims.push_back({{"name", d.name}, {"attributes", std::move(attrs)}, {"hierarchies", std::move(hs)}});
  }
  json facts = json::array();
  for (const auto& f : c.facts) {
    json ms = json::array();
    for (const auto& m : f.measures) {
      ms.push_back({{"name", m.name}, {"kind", to_string(m.kind)}, {"agg", to_string(m.agg)}});
    }
    facts.push_back({{"name", f.name}, {"measures", std::move(ms)}, {"dimensions", f.dimensions}});
  }
  json ks = json::array();
  for (const auto& k : c.constraints) ks.push_back(constraint_to_json(k));
  return {{"name", c.name},
          {"consistency", to_string(c.consistency)},
          {"dimensions", std::move(dims)},
          {"facts", std::move(facts)},
          {"constraints", std::move(ks)}};
}

json result_to_json(const ConstraintResult& r) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses) {
    std::size_t row = 0;
    bool numeric = r.constraint.scope == ConstraintScope::Inter &&
                   std::from_chars(w.data(), w.data() + w.size(), row).ec == std::errc{};
    if (numeric) {
      witnesses.push_back(row);
    } else {
      witnesses.push_back(w);
    }
  }
  json j = constraint_to_json(r.constraint);
  j["holds"] = r.holds;
  j["violations"] = r.violations;
  j["truncated"] = r.truncated;
  j["witnesses"] = std::move(witnesses);
  if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
  return j;
}

json results_to_json(const std::vector<ConstraintResult>& rs) {
  json out = json::array();
  for (const auto& r : rs) out.push_back(result_to_json(r));
  return out;
}

json report_to_json(const ValidationReport& r) {
  auto issues = [](const std::vector<ValidationIssue>& is) {
    json out = json::array();
    for (const auto& i : is) out.push_back({{"code", i.code}, {"message", i.message}});
    return out;
  };
  return {{"wellFormed", r.well_formed()}, {"errors", issues(r.errors)}, {"notes", issues(r.notes)}};
}

}  // namespace mdolap
