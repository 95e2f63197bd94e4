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
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "mdolap/constraints.hpp"
#include "mdolap/model.hpp"

namespace mdolap {

struct RejectedRow {
  std::size_t line = 0;
  std::string reason;

  friend bool operator==(const RejectedRow&, const RejectedRow&) = default;
};

struct LoadReport {
  std::string target;  // dimension or fact name
  std::size_t read = 0;
  std::size_t loaded = 0;
  std::vector<RejectedRow> rejected;
  Consistency consistency = Consistency::Unchecked;
  std::vector<ConstraintResult> constraints;  // check_all after the load
};

// Both loaders are atomic: on an exception `c` is left untouched. Row-level
// problems (duplicate id, dangling link, unparsable value, wrong field
// count) reject the row; after loading, check_all refreshes c.consistency.

/// Header names Id plus any declared attributes. Errors: UnknownDimension,
/// MissingIdColumn, UnknownAttribute, MalformedCsv.
LoadReport load_dimension_csv(Constellation& c, std::string_view dim, std::string_view source);

/// Header names every measure plus `<DIM>_id` for each linked dimension.
/// Errors: UnknownFact, MissingLinkColumn, MissingMeasureColumn,
/// UnknownAttribute, MalformedCsv.
LoadReport load_fact_csv(Constellation& c, std::string_view fact, std::string_view source);

/// Loads DIR/<NAME>.csv for every dimension, then every fact, skipping
/// missing files. Atomic as a whole. Errors: those of the loaders, Io.
std::vector<LoadReport> load_directory(Constellation& c, const std::filesystem::path& dir);

/// Throws Error(Io).
std::string read_file(const std::filesystem::path& path);

nlohmann::json load_report_to_json(const LoadReport& r);

}  // namespace mdolap
