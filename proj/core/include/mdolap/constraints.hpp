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
#include <string>
#include <vector>

#include "mdolap/model.hpp"

namespace mdolap {

/// Outcome of checking one constraint. Witnesses are dimension-instance
/// ids for intra constraints and fact-instance indices (decimal strings)
/// for inter constraints. `holds` is exact even when the witness list is
/// truncated. A constraint that could not be resolved is reported with
/// holds=false, no witnesses and a diagnostic.
struct ConstraintResult {
  Constraint constraint;
  bool holds = true;
  std::vector<std::string> witnesses;
  std::size_t violations = 0;
  bool truncated = false;
  std::string diagnostic;
};

struct CheckOptions {
  std::size_t witness_limit = 100;
};

/// Throws Error(InvalidConstraint) for a malformed intra constraint and
/// Error(UnknownDimension/UnknownHierarchy) on resolution failure.
ConstraintResult check_intra(const Constellation& c, const Constraint& k, const CheckOptions& opts = {});

/// Throws Error(UnknownFact), Error(DimensionNotLinked) and the resolution
/// errors of check_intra.
ConstraintResult check_inter(const Constellation& c, const Constraint& k, const CheckOptions& opts = {});

ConstraintResult check_constraint(const Constellation& c, const Constraint& k, const CheckOptions& opts = {});

/// One result per declared constraint, in declaration order. Never throws
/// for resolution problems; those become failed results.
std::vector<ConstraintResult> check_all(const Constellation& c, const CheckOptions& opts = {});

bool all_hold(const std::vector<ConstraintResult>& results) noexcept;

}  // namespace mdolap
