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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace mdolap {

/// Fixed-point number with two fractional digits, stored as hundredths.
/// Money-like data (montant 540.00) is exact in this representation.
struct Decimal {
  std::int64_t cents = 0;

  static constexpr Decimal from_units(std::int64_t units) { return Decimal{units * 100}; }
  static std::optional<Decimal> parse(std::string_view text);
  std::string to_string() const;

  friend auto operator<=>(const Decimal&, const Decimal&) = default;
};

enum class ValueKind { Id, String, Int, Decimal, All };

std::string_view to_string(ValueKind kind) noexcept;
/// Accepts the DSL kind keywords STRING, INT and DECIMAL.
std::optional<ValueKind> parse_value_kind(std::string_view word) noexcept;

struct AllToken {
  friend bool operator==(AllToken, AllToken) = default;
};

/// A dimension attribute value: text, integer, decimal, null, or the
/// distinguished token of the All attribute.
class Value {
 public:
  using Storage = std::variant<std::monostate, std::string, std::int64_t, Decimal, AllToken>;

  Value() = default;
  static Value null() { return Value{}; }
  static Value text(std::string s) { return Value{Storage{std::move(s)}}; }
  static Value integer(std::int64_t v) { return Value{Storage{v}}; }
  static Value decimal(Decimal d) { return Value{Storage{d}}; }
  static Value all() { return Value{Storage{AllToken{}}}; }

  bool is_null() const noexcept { return std::holds_alternative<std::monostate>(v_); }
  bool is_text() const noexcept { return std::holds_alternative<std::string>(v_); }
  bool is_int() const noexcept { return std::holds_alternative<std::int64_t>(v_); }
  bool is_decimal() const noexcept { return std::holds_alternative<Decimal>(v_); }
  bool is_all() const noexcept { return std::holds_alternative<AllToken>(v_); }
  bool is_numeric() const noexcept { return is_int() || is_decimal(); }

  const std::string& as_text() const { return std::get<std::string>(v_); }
  std::int64_t as_int() const { return std::get<std::int64_t>(v_); }
  Decimal as_decimal() const { return std::get<Decimal>(v_); }
  /// Numeric value scaled to hundredths, for int/decimal values.
  std::optional<std::int64_t> numeric_cents() const noexcept;

  /// Human form: NULL, all, 31, 540.00, Toulouse.
  std::string to_display() const;
  /// DSL literal form: NULL, 'all', 31, 540.00, 'Toulouse'.
  std::string to_literal() const;

  const Storage& storage() const noexcept { return v_; }

  friend bool operator==(const Value&, const Value&) = default;

 private:
  explicit Value(Storage v) : v_(std::move(v)) {}
  Storage v_;
};

/// Comparison used by membership conditions. Empty when either side is
/// null or the two sides are not comparable (text against number).
/// The All token compares as the text "all".
std::optional<std::strong_ordering> compare_values(const Value& a, const Value& b) noexcept;

/// Header ordering: numbers ascending, then text by byte order, NULL last.
bool header_less(const Value& a, const Value& b) noexcept;

/// Converts a CSV field to a value of the given kind; the empty field is
/// null for every kind. Throws Error(InvalidValue).
Value parse_field(std::string_view text, ValueKind kind);

/// Integer-looking identifiers are canonicalized to their decimal form.
std::string canonical_id(std::string_view raw);

/// Orders identifiers numerically when both are integers, else by bytes
/// (integers first).
struct IdLess {
  using is_transparent = void;
  bool operator()(std::string_view a, std::string_view b) const noexcept;
};

}  // namespace mdolap
