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

#include <string>
#include <string_view>
#include <vector>

#include "mdolap/condition.hpp"
#include "mdolap/model.hpp"

namespace mdolap {

enum class EvalMode {
  Strict,  // only instances belonging to the displayed hierarchies contribute
  Legacy,  // no membership filtering; missing parameter values group under NULL
};

std::string_view to_string(EvalMode mode) noexcept;
std::optional<EvalMode> parse_eval_mode(std::string_view word) noexcept;

/// A restriction on the instances of one dimension: either an attribute
/// condition or "belongs to hierarchy h".
struct DimPredicate {
  enum class Kind { Attribute, Membership };

  std::string dimension;
  Kind kind = Kind::Attribute;
  Condition condition;    // Attribute
  std::string hierarchy;  // Membership

  static DimPredicate attribute(std::string dim, Condition cond);
  static DimPredicate membership(std::string dim, std::string hierarchy);

  /// Footer text: `AGENCES.Pays = 'France'` or `AGENCES IN geo_fr`.
  std::string to_text() const;

  friend bool operator==(const DimPredicate&, const DimPredicate&) = default;
};

/// One displayed axis: its dimension, hierarchy, and the displayed
/// parameters, coarsest first. Rolling up to All leaves params == {"All"}.
struct Axis {
  std::string dimension;
  std::string hierarchy;
  std::vector<std::string> params;

  friend bool operator==(const Axis&, const Axis&) = default;
};

struct TableWarning {
  std::string code;  // "EmptyResultWarning"
  std::string message;

  friend bool operator==(const TableWarning&, const TableWarning&) = default;
};

/// The visualisation state of one fact: D1 (`row`) and D2 (`col`) with
/// their hierarchies and displayed parameters, the remaining linked
/// dimensions collapsed at All, and the predicate set.
struct DimensionalTable {
  std::string fact;
  std::vector<std::string> dims;  // row dimension, col dimension, then collapsed ones
  Axis row;
  Axis col;
  std::vector<DimPredicate> predicates;
  EvalMode mode = EvalMode::Strict;
  std::vector<TableWarning> warnings;

  const Axis& axis(std::string_view dim) const;
  Axis& axis(std::string_view dim);
  bool displays(std::string_view dim) const noexcept { return row.dimension == dim || col.dimension == dim; }
  std::vector<std::string> collapsed() const { return {dims.begin() + 2, dims.end()}; }

  friend bool operator==(const DimensionalTable&, const DimensionalTable&) = default;
};

/// Display(F, Drow, Dcol, hrow, hcol): both axes at the parameter right
/// below All, no predicates, strict mode.
DimensionalTable display(const Constellation& c, std::string_view fact, std::string_view row_dim,
                         std::string_view col_dim, std::string_view row_hierarchy, std::string_view col_hierarchy);

/// Extends the displayed list of `dim` down to `param`, inserting every
/// intermediate parameter. Errors: NotCurrentDimension, NotAParameter, NotFiner.
DimensionalTable drilldown(const Constellation& c, const DimensionalTable& t, std::string_view dim,
                           std::string_view param);

/// Truncates the displayed list of `dim` so that `param` is the finest;
/// rolling up to All leaves a single "all" header.
/// Errors: NotCurrentDimension, NotAParameter, NotCoarser.
DimensionalTable rollup(const Constellation& c, const DimensionalTable& t, std::string_view dim,
                        std::string_view param);

/// Switches the hierarchy of a displayed dimension. With `maintain` the
/// former instance set is kept through a membership predicate on the old
/// hierarchy; a declared exclusion/partition between the two hierarchies
/// then attaches an EmptyResultWarning.
DimensionalTable hrotate(const Constellation& c, const DimensionalTable& t, std::string_view dim,
                         std::string_view from, std::string_view to, bool maintain = false);

/// Replaces displayed dimension `from` by `to` (at hierarchy `hierarchy`).
/// With `maintain`, the membership condition of the hierarchy `from` was
/// displayed with becomes an attribute predicate on `from`.
DimensionalTable drotate(const Constellation& c, const DimensionalTable& t, std::string_view from,
                         std::string_view to, std::string_view hierarchy, bool maintain = false);

}  // namespace mdolap
