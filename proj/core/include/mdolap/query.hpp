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

#include "mdolap/algebra.hpp"
#include "mdolap/dsl.hpp"
#include "mdolap/model.hpp"

namespace mdolap {

/// Evaluates an expression tree bottom-up. Errors raised by an operator are
/// rethrown with the source position of the offending identifier (or of the
/// operator name when no argument matches).
DimensionalTable evaluate_query(const Constellation& c, const dsl::QueryExpr& e, EvalMode mode = EvalMode::Strict);

}  // namespace mdolap
