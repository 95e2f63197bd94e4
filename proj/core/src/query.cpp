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

#include "mdolap/query.hpp"

#include <type_traits>
#include <variant>
#include <vector>

namespace mdolap {

namespace {

std::vector<const dsl::Ident*> idents(const dsl::QueryExpr& e) {
  return std::visit(
      [](const auto& n) -> std::vector<const dsl::Ident*> {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, dsl::DisplayNode>) {
          return {&n.fact, &n.row, &n.col, &n.row_hierarchy, &n.col_hierarchy};
        } else if constexpr (std::is_same_v<T, dsl::DrillDownNode> || std::is_same_v<T, dsl::RollUpNode>) {
          return {&n.dimension, &n.parameter};
        } else if constexpr (std::is_same_v<T, dsl::HRotateNode>) {
          return {&n.dimension, &n.from, &n.to};
        } else {
          return {&n.from, &n.to, &n.hierarchy};
        }
      },
      e.node);
}

DimensionalTable apply(const Constellation& c, const dsl::QueryExpr& e, EvalMode mode) {
  if (const auto* d = std::get_if<dsl::DisplayNode>(&e.node)) {
    DimensionalTable t = display(c, d->fact.text, d->row.text, d->col.text, d->row_hierarchy.text,
                                 d->col_hierarchy.text);
    t.mode = mode;
    return t;
  }
  DimensionalTable in = evaluate_query(c, *e.input(), mode);
  if (const auto* n = std::get_if<dsl::DrillDownNode>(&e.node)) return drilldown(c, in, n->dimension.text, n->parameter.text);
  if (const auto* n = std::get_if<dsl::RollUpNode>(&e.node)) return rollup(c, in, n->dimension.text, n->parameter.text);
  if (const auto* n = std::get_if<dsl::HRotateNode>(&e.node)) {
    return hrotate(c, in, n->dimension.text, n->from.text, n->to.text, n->flag.value_or(false));
  }
  const auto& n = std::get<dsl::DRotateNode>(e.node);
  return drotate(c, in, n.from.text, n.to.text, n.hierarchy.text, n.flag.value_or(false));
}

}  // namespace

DimensionalTable evaluate_query(const Constellation& c, const dsl::QueryExpr& e, EvalMode mode) {
  try {
    return apply(c, e, mode);
  } catch (Error& err) {
    if (err.position()) throw;
    SourcePos pos = e.pos;
    for (const auto* id : idents(e)) {
      if (!err.subject().empty() && id->text == err.subject()) {
        pos = id->pos;
        break;
      }
    }
    if (pos.valid()) err.at(pos);
    throw;
  }
}

}  // namespace mdolap
