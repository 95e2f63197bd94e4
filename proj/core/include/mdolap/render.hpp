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

#include <nlohmann/json.hpp>

#include "mdolap/algebra.hpp"
#include "mdolap/cells.hpp"

namespace mdolap {

/// Footer lines: `DIM.All = 'all'` for every collapsed dimension without a
/// predicate (sorted by name), then each predicate in insertion order.
std::vector<std::string> footer_lines(const DimensionalTable& t);

/// Monospace rendering of a table. Row-dimension values run across the top
/// as nested column headers; column-dimension values run down the left.
/// Absent cells stay blank. Ends with footers and `warning:` lines.
std::string render_text(const DimensionalTable& t, const CellGrid& grid);

/// Number of UTF-8 code points in `s`.
std::size_t display_width(std::string_view s) noexcept;

nlohmann::json axis_to_json(const Axis& a);
nlohmann::json header_value_json(const Value& v);
nlohmann::json table_to_json(const DimensionalTable& t, const CellGrid& grid);

}  // namespace mdolap
