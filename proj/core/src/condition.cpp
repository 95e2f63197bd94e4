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

#include "mdolap/condition.hpp"

#include <algorithm>

#include "mdolap/error.hpp"

namespace mdolap {

namespace {

enum class Truth { False, True, Unknown };

Truth negate(Truth t) {
  switch (t) {
    case Truth::False: return Truth::True;
    case Truth::True: return Truth::False;
    case Truth::Unknown: return Truth::Unknown;
  }
  return Truth::Unknown;
}

const Value& lookup_or_throw(const AttributeLookup& lookup, const std::string& name) {
  const Value* v = lookup(name);
  if (v == nullptr) throw Error(ErrorCode::UnknownAttribute, "unknown attribute '" + name + "'", name);
  return *v;
}

Truth eval(const Condition& c, const AttributeLookup& lookup) {
  using K = Condition::Kind;
  switch (c.kind()) {
    case K::True: return Truth::True;
    case K::IsNull: return lookup_or_throw(lookup, c.attribute()).is_null() ? Truth::True : Truth::False;
    case K::IsNotNull: return lookup_or_throw(lookup, c.attribute()).is_null() ? Truth::False : Truth::True;
    case K::Compare: {
      auto ord = compare_values(lookup_or_throw(lookup, c.attribute()), c.literal());
      if (!ord) return Truth::Unknown;
      bool r = false;
      switch (c.op()) {
        case CompareOp::Eq: r = *ord == 0; break;
        case CompareOp::Ne: r = *ord != 0; break;
        case CompareOp::Lt: r = *ord < 0; break;
        case CompareOp::Le: r = *ord <= 0; break;
        case CompareOp::Gt: r = *ord > 0; break;
        case CompareOp::Ge: r = *ord >= 0; break;
      }
      return r ? Truth::True : Truth::False;
    }
    case K::Not: return negate(eval(c.children().front(), lookup));
    case K::And: {
      Truth acc = Truth::True;
      for (const auto& child : c.children()) {
        Truth t = eval(child, lookup);
        if (t == Truth::False) acc = Truth::False;
        else if (t == Truth::Unknown && acc == Truth::True) acc = Truth::Unknown;
      }
      return acc;
    }
    case K::Or: {
      Truth acc = Truth::False;
      for (const auto& child : c.children()) {
        Truth t = eval(child, lookup);
        if (t == Truth::True) acc = Truth::True;
        else if (t == Truth::Unknown && acc == Truth::False) acc = Truth::Unknown;
      }
      return acc;
    }
  }
  return Truth::Unknown;
}

std::string name(const std::string& attr, std::string_view qualifier) {
  if (qualifier.empty()) return attr;
  return std::string(qualifier) + "." + attr;
}

// Precedence: OR 1, AND 2, NOT/leaf 3.
int precedence(const Condition& c) {
  switch (c.kind()) {
    case Condition::Kind::Or: return 1;
    case Condition::Kind::And: return 2;
    default: return 3;
  }
}

std::string text(const Condition& c, std::string_view q) {
  using K = Condition::Kind;
  auto child_text = [&](const Condition& child, int min_prec) {
    std::string s = text(child, q);
    return precedence(child) < min_prec ? "(" + s + ")" : s;
  };
  switch (c.kind()) {
    case K::True: return "TRUE";
    case K::IsNull: return name(c.attribute(), q) + " IS NULL";
    case K::IsNotNull: return name(c.attribute(), q) + " IS NOT NULL";
    case K::Compare:
      return name(c.attribute(), q) + " " + std::string(to_string(c.op())) + " " + c.literal().to_literal();
    case K::Not: return "NOT " + child_text(c.children().front(), 3);
    case K::And:
    case K::Or: {
      std::string out;
      int prec = precedence(c);
      for (const auto& child : c.children()) {
        if (!out.empty()) out += c.kind() == K::And ? " AND " : " OR ";
        out += child_text(child, prec + 1);
      }
      return out;
    }
  }
  return {};
}

void collect(const Condition& c, std::vector<std::string>& out) {
  if (!c.attribute().empty() && std::find(out.begin(), out.end(), c.attribute()) == out.end()) {
    out.push_back(c.attribute());
  }
  for (const auto& child : c.children()) collect(child, out);
}

void append_flat(std::vector<Condition>& out, Condition c, Condition::Kind kind) {
  if (c.kind() == kind) {
    for (const auto& child : c.children()) out.push_back(child);
  } else {
    out.push_back(std::move(c));
  }
}

}  // namespace

std::string_view to_string(CompareOp op) noexcept {
  switch (op) {
    case CompareOp::Eq: return "=";
    case CompareOp::Ne: return "<>";
    case CompareOp::Lt: return "<";
    case CompareOp::Le: return "<=";
    case CompareOp::Gt: return ">";
    case CompareOp::Ge: return ">=";
  }
  return "?";
}

Condition Condition::compare(std::string attribute, CompareOp op, Value literal) {
  Condition c;
  c.kind_ = Kind::Compare;
  c.attribute_ = std::move(attribute);
  c.op_ = op;
  c.literal_ = std::move(literal);
  return c;
}

Condition Condition::is_null(std::string attribute) {
  Condition c;
  c.kind_ = Kind::IsNull;
  c.attribute_ = std::move(attribute);
  return c;
}

Condition Condition::is_not_null(std::string attribute) {
  Condition c;
  c.kind_ = Kind::IsNotNull;
  c.attribute_ = std::move(attribute);
  return c;
}

Condition Condition::all_of(Condition lhs, Condition rhs) {
  Condition c;
  c.kind_ = Kind::And;
  append_flat(c.children_, std::move(lhs), Kind::And);
  append_flat(c.children_, std::move(rhs), Kind::And);
  return c;
}

Condition Condition::any_of(Condition lhs, Condition rhs) {
  Condition c;
  c.kind_ = Kind::Or;
  append_flat(c.children_, std::move(lhs), Kind::Or);
  append_flat(c.children_, std::move(rhs), Kind::Or);
  return c;
}

Condition Condition::negate(Condition operand) {
  Condition c;
  c.kind_ = Kind::Not;
  c.children_ = {std::move(operand)};
  return c;
}

bool evaluate(const Condition& cond, const AttributeLookup& lookup) {
  return eval(cond, lookup) == Truth::True;
}

std::string to_text(const Condition& cond, std::string_view qualifier) { return text(cond, qualifier); }

std::vector<std::string> referenced_attributes(const Condition& cond) {
  std::vector<std::string> out;
  collect(cond, out);
  return out;
}

}  // namespace mdolap
