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

#include <nlohmann/json.hpp>

#include "mdolap/condition.hpp"
#include "mdolap/constraints.hpp"
#include "mdolap/model.hpp"
#include "mdolap/validation.hpp"

namespace mdolap {

// Decoders throw Error(MalformedSnapshot) on any shape or type mismatch.

nlohmann::json literal_to_json(const Value& v);
Value literal_from_json(const nlohmann::json& j);

nlohmann::json condition_to_json(const Condition& c);
Condition condition_from_json(const nlohmann::json& j);

/// Instance value of an attribute of known kind: null, string, integer or
/// a decimal string.
nlohmann::json field_to_json(const Value& v);
Value field_from_json(const nlohmann::json& j, ValueKind kind);

nlohmann::json constraint_to_json(const Constraint& k);
Constraint constraint_from_json(const nlohmann::json& j);

/// Dimensions, facts and constraints without instances.
nlohmann::json schema_to_json(const Constellation& c);

nlohmann::json result_to_json(const ConstraintResult& r);
nlohmann::json results_to_json(const std::vector<ConstraintResult>& rs);
nlohmann::json report_to_json(const ValidationReport& r);

}  // namespace mdolap
