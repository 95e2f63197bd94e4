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
#include <vector>

#include "mdolap/model.hpp"

namespace mdolap {

struct ValidationIssue {
  std::string code;  // e.g. "repeated-parameter", "dangling-link"
  std::string message;

  friend bool operator==(const ValidationIssue&, const ValidationIssue&) = default;
};

/// Structural problems of a constellation. `errors` empty means the schema
/// and its instances are well-formed; `notes` carries informational
/// findings such as instances that belong to no hierarchy.
struct ValidationReport {
  std::vector<ValidationIssue> errors;
  std::vector<ValidationIssue> notes;

  bool well_formed() const noexcept { return errors.empty(); }
  bool has(std::string_view code) const noexcept;
};

ValidationReport validate_schema(const Constellation& c);

}  // namespace mdolap
