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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mdolap/algebra.hpp"
#include "mdolap/model.hpp"

namespace mdolap {

/// Values of the displayed parameters of one axis, coarsest first.
using HeaderPath = std::vector<Value>;

bool path_less(const HeaderPath& a, const HeaderPath& b) noexcept;

struct MeasureCell {
  double raw = 0;       // unrounded aggregate
  std::string display;  // per the measure's display rule
  std::size_t count = 0;

  friend bool operator==(const MeasureCell&, const MeasureCell&) = default;
};

struct Cell {
  std::size_t row = 0;  // index into CellGrid::row_paths
  std::size_t col = 0;  // index into CellGrid::col_paths
  std::vector<MeasureCell> measures;

  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Computed contents of a dimensional table. Only non-empty groups have
/// cells; row/col paths list the header leaves in header order.
struct CellGrid {
  std::vector<std::string> measure_names;
  std::vector<HeaderPath> row_paths;
  std::vector<HeaderPath> col_paths;
  std::vector<Cell> cells;  // ordered by (row, col)

  const Cell* find(const HeaderPath& row, const HeaderPath& col) const;
  bool empty() const noexcept { return cells.empty(); }

  friend bool operator==(const CellGrid&, const CellGrid&) = default;
};

struct AggregateValue {
  double raw = 0;
  std::string display;
};

/// Running aggregate over hundredths; exact for SUM/COUNT/MIN/MAX, and
/// AVG is rounded from the exact rational sum/count.
class Accumulator {
 public:
  void add(Decimal v) noexcept;
  std::size_t count() const noexcept { return count_; }
  /// Throws Error(EmptyGroup) when nothing was added.
  AggregateValue finish(const MeasureSpec& spec) const;

 private:
  std::int64_t sum_ = 0;
  std::int64_t min_ = 0;
  std::int64_t max_ = 0;
  std::size_t count_ = 0;
};

/// Throws Error(EmptyGroup) for an empty span.
AggregateValue aggregate(const MeasureSpec& spec, std::span<const Decimal> values);

/// Integer division rounding half away from zero; `den` > 0.
std::int64_t round_half_away(std::int64_t num, std::int64_t den) noexcept;

struct ComputeOptions {
  bool allow_inconsistent = false;
};

/// Groups the fact instances that pass the table's predicates (and, in
/// strict mode, whose row/col instances belong to the displayed
/// hierarchies) by their projected header paths.
/// Throws Error(InconsistentStore) in strict mode on an inconsistent store
/// unless `allow_inconsistent` is set.
CellGrid compute_cells(const Constellation& c, const DimensionalTable& t, const ComputeOptions& opts = {});

}  // namespace mdolap
