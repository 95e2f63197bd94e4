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

#include "mdolap/value.hpp"

#include <charconv>
#include <limits>

#include "mdolap/error.hpp"

namespace mdolap {

namespace {

bool all_digits(std::string_view s) noexcept {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

std::optional<std::int64_t> parse_int(std::string_view s) noexcept {
  std::int64_t out = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return out;
}

int rank(const Value& v) noexcept {
  if (v.is_numeric()) return 0;
  if (v.is_null()) return 2;
  return 1;
}

std::string_view text_of(const Value& v) noexcept {
  if (v.is_all()) return "all";
  return v.as_text();
}

}  // namespace

std::optional<Decimal> Decimal::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  auto dot = text.find('.');
  std::string_view whole = text.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (!all_digits(whole)) return std::nullopt;
  if (dot != std::string_view::npos && !all_digits(frac)) return std::nullopt;
  // Digits past the second must be zeros: the representation is exact.
  for (std::size_t i = 2; i < frac.size(); ++i) {
    if (frac[i] != '0') return std::nullopt;
  }
  auto units = parse_int(whole);
  if (!units || *units > std::numeric_limits<std::int64_t>::max() / 100 - 1) return std::nullopt;
  std::int64_t cents = *units * 100;
  if (!frac.empty()) cents += (frac[0] - '0') * 10;
  if (frac.size() > 1) cents += frac[1] - '0';
  return Decimal{negative ? -cents : cents};
}

std::string Decimal::to_string() const {
  std::int64_t v = cents < 0 ? -cents : cents;
  std::string frac = std::to_string(v % 100);
  if (frac.size() < 2) frac.insert(0, "0");
  return (cents < 0 ? "-" : "") + std::to_string(v / 100) + "." + frac;
}

std::string_view to_string(ValueKind kind) noexcept {
  switch (kind) {
    case ValueKind::Id: return "ID";
    case ValueKind::String: return "STRING";
    case ValueKind::Int: return "INT";
    case ValueKind::Decimal: return "DECIMAL";
    case ValueKind::All: return "ALL";
  }
  return "?";
}

std::optional<ValueKind> parse_value_kind(std::string_view word) noexcept {
  if (word == "STRING") return ValueKind::String;
  if (word == "INT") return ValueKind::Int;
  if (word == "DECIMAL") return ValueKind::Decimal;
  return std::nullopt;
}

std::optional<std::int64_t> Value::numeric_cents() const noexcept {
  if (is_int()) return as_int() * 100;
  if (is_decimal()) return as_decimal().cents;
  return std::nullopt;
}

std::string Value::to_display() const {
  if (is_null()) return "NULL";
  if (is_all()) return "all";
  if (is_int()) return std::to_string(as_int());
  if (is_decimal()) return as_decimal().to_string();
  return as_text();
}

std::string Value::to_literal() const {
  if (is_null()) return "NULL";
  if (is_int()) return std::to_string(as_int());
  if (is_decimal()) return as_decimal().to_string();
  std::string out = "'";
  for (char c : text_of(*this)) {
    if (c == '\'') out += '\'';
    out += c;
  }
  out += '\'';
  return out;
}

std::optional<std::strong_ordering> compare_values(const Value& a, const Value& b) noexcept {
  if (a.is_null() || b.is_null()) return std::nullopt;
  if (a.is_numeric() && b.is_numeric()) return *a.numeric_cents() <=> *b.numeric_cents();
  if (a.is_numeric() || b.is_numeric()) return std::nullopt;
  int c = text_of(a).compare(text_of(b));
  return c <=> 0;
}

bool header_less(const Value& a, const Value& b) noexcept {
  int ra = rank(a), rb = rank(b);
  if (ra != rb) return ra < rb;
  if (ra == 0) return *a.numeric_cents() < *b.numeric_cents();
  if (ra == 2) return false;
  return text_of(a) < text_of(b);
}

Value parse_field(std::string_view text, ValueKind kind) {
  if (text.empty()) return Value::null();
  switch (kind) {
    case ValueKind::Id: return Value::text(canonical_id(text));
    case ValueKind::String: return Value::text(std::string(text));
    case ValueKind::Int: {
      auto v = parse_int(text.front() == '+' ? text.substr(1) : text);
      if (!v) throw Error(ErrorCode::InvalidValue, "not an integer: '" + std::string(text) + "'");
      return Value::integer(*v);
    }
    case ValueKind::Decimal: {
      auto d = Decimal::parse(text);
      if (!d) throw Error(ErrorCode::InvalidValue, "not a decimal: '" + std::string(text) + "'");
      return Value::decimal(*d);
    }
    case ValueKind::All:
      if (text != "all") throw Error(ErrorCode::InvalidValue, "All only takes the value 'all'");
      return Value::all();
  }
  return Value::null();
}

std::string canonical_id(std::string_view raw) {
  if (all_digits(raw) && raw.size() < 19) return std::to_string(*parse_int(raw));
  return std::string(raw);
}

bool IdLess::operator()(std::string_view a, std::string_view b) const noexcept {
  bool na = all_digits(a) && a.size() < 19;
  bool nb = all_digits(b) && b.size() < 19;
  if (na && nb) {
    auto x = *parse_int(a), y = *parse_int(b);
    if (x != y) return x < y;
    return a < b;
  }
  if (na != nb) return na;
  return a < b;
}

}  // namespace mdolap
