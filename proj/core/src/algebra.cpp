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

#include "mdolap/algebra.hpp"

#include <algorithm>
#include <utility>

#include "mdolap/error.hpp"

namespace mdolap {

namespace {

const Dimension& linked_dimension(const Constellation& c, const Fact& f, std::string_view dim) {
  const Dimension& d = c.dimension(dim);
  if (!f.link_index(dim)) {
    throw Error(ErrorCode::DimensionNotLinked, d.name + " is not linked to " + f.name, d.name);
  }
  return d;
}

// Displayed list for a hierarchy when `level` is the finest shown level.
std::vector<std::string> displayed_from(const Hierarchy& h, std::size_t level) {
  if (level + 1 >= h.params.size()) return {h.params.back()};
  std::vector<std::string> out(h.params.begin() + static_cast<std::ptrdiff_t>(level), h.params.end() - 1);
  std::reverse(out.begin(), out.end());
  return out;
}

std::size_t level_or_throw(const Dimension& d, const Hierarchy& h, std::string_view param) {
  auto level = h.level_of(param);
  if (!level) {
    throw Error(ErrorCode::NotAParameter,
                std::string(param) + " is not a parameter of " + d.name + "." + h.name, std::string(param));
  }
  return *level;
}

bool declares_disjoint(const Constellation& c, std::string_view dim, std::string_view a, std::string_view b) {
  return std::any_of(c.constraints.begin(), c.constraints.end(), [&](const Constraint& k) {
    if (k.scope != ConstraintScope::Intra || k.left.dimension != dim) return false;
    if (k.kind != ConstraintKind::Exclusion && k.kind != ConstraintKind::Partition) return false;
    return (k.left.hierarchy == a && k.right.hierarchy == b) || (k.left.hierarchy == b && k.right.hierarchy == a);
  });
}

}  // namespace

std::string_view to_string(EvalMode mode) noexcept { return mode == EvalMode::Strict ? "strict" : "legacy"; }

std::optional<EvalMode> parse_eval_mode(std::string_view word) noexcept {
  if (word == "strict" || word == "STRICT") return EvalMode::Strict;
  if (word == "legacy" || word == "LEGACY") return EvalMode::Legacy;
  return std::nullopt;
}

DimPredicate DimPredicate::attribute(std::string dim, Condition cond) {
  DimPredicate p;
  p.dimension = std::move(dim);
  p.kind = Kind::Attribute;
  p.condition = std::move(cond);
  return p;
}

DimPredicate DimPredicate::membership(std::string dim, std::string hierarchy) {
  DimPredicate p;
  p.dimension = std::move(dim);
  p.kind = Kind::Membership;
  p.hierarchy = std::move(hierarchy);
  return p;
}

std::string DimPredicate::to_text() const {
  if (kind == Kind::Membership) return dimension + " IN " + hierarchy;
  return mdolap::to_text(condition, dimension);
}

const Axis& DimensionalTable::axis(std::string_view dim) const {
  if (row.dimension == dim) return row;
  if (col.dimension == dim) return col;
  throw Error(ErrorCode::NotCurrentDimension, std::string(dim) + " is not a displayed dimension", std::string(dim));
}

Axis& DimensionalTable::axis(std::string_view dim) {
  return const_cast<Axis&>(std::as_const(*this).axis(dim));
}

DimensionalTable display(const Constellation& c, std::string_view fact, std::string_view row_dim,
                         std::string_view col_dim, std::string_view row_hierarchy, std::string_view col_hierarchy) {
  const Fact& f = c.fact(fact);
  const Dimension& rd = linked_dimension(c, f, row_dim);
  const Dimension& cd = linked_dimension(c, f, col_dim);
  if (rd.name == cd.name) {
    throw Error(ErrorCode::SameDimension, "row and column dimensions must differ", rd.name);
  }
  const Hierarchy& rh = rd.hierarchy(row_hierarchy);
  const Hierarchy& ch = cd.hierarchy(col_hierarchy);

  DimensionalTable t;
  t.fact = f.name;
  t.row = Axis{rd.name, rh.name, {rh.top_param()}};
  t.col = Axis{cd.name, ch.name, {ch.top_param()}};
  t.dims = {rd.name, cd.name};
  for (const auto& d : f.dimensions) {
    if (d != rd.name && d != cd.name) t.dims.push_back(d);
  }
  return t;
}

DimensionalTable drilldown(const Constellation& c, const DimensionalTable& t, std::string_view dim,
                           std::string_view param) {
  DimensionalTable out = t;
  Axis& axis = out.axis(dim);
  const Dimension& d = c.dimension(axis.dimension);
  const Hierarchy& h = d.hierarchy(axis.hierarchy);
  std::size_t target = level_or_throw(d, h, param);
  std::size_t finest = level_or_throw(d, h, axis.params.back());
  if (target >= finest) {
    throw Error(ErrorCode::NotFiner,
                std::string(param) + " is not finer than " + axis.params.back() + " in " + d.name + "." + h.name,
                std::string(param));
  }
  axis.params = displayed_from(h, target);
  return out;
}

DimensionalTable rollup(const Constellation& c, const DimensionalTable& t, std::string_view dim,
                        std::string_view param) {
  DimensionalTable out = t;
  Axis& axis = out.axis(dim);
  const Dimension& d = c.dimension(axis.dimension);
  const Hierarchy& h = d.hierarchy(axis.hierarchy);
  std::size_t target = level_or_throw(d, h, param);
  std::size_t finest = level_or_throw(d, h, axis.params.back());
  if (target == 0 || target < finest) {
    throw Error(ErrorCode::NotCoarser,
                std::string(param) + " is not coarser than " + axis.params.back() + " in " + d.name + "." + h.name,
                std::string(param));
  }
  axis.params = displayed_from(h, target);
  return out;
}

DimensionalTable hrotate(const Constellation& c, const DimensionalTable& t, std::string_view dim,
                         std::string_view from, std::string_view to, bool maintain) {
  DimensionalTable out = t;
  Axis& axis = out.axis(dim);
  const Dimension& d = c.dimension(axis.dimension);
  d.hierarchy(from);
  if (axis.hierarchy != from) {
    throw Error(ErrorCode::NotCurrentHierarchy,
                d.name + " is displayed with " + axis.hierarchy + ", not " + std::string(from), std::string(from));
  }
  const Hierarchy& target = d.hierarchy(to);
  if (target.name == axis.hierarchy) return out;

  axis.hierarchy = target.name;
  axis.params = {target.top_param()};
  if (maintain) {
    out.predicates.push_back(DimPredicate::membership(d.name, std::string(from)));
    if (declares_disjoint(c, d.name, from, to)) {
      out.warnings.push_back({"EmptyResultWarning", "maintaining " + d.name + "." + std::string(from) + " under " +
                                                        d.name + "." + target.name +
                                                        " is empty: the hierarchies are declared disjoint"});
    }
  }
  return out;
}

DimensionalTable drotate(const Constellation& c, const DimensionalTable& t, std::string_view from,
                         std::string_view to, std::string_view hierarchy, bool maintain) {
  DimensionalTable out = t;
  Axis& axis = out.axis(from);
  const Fact& f = c.fact(t.fact);
  const Dimension& old_dim = c.dimension(axis.dimension);
  const Dimension& new_dim = linked_dimension(c, f, to);
  if (t.displays(new_dim.name)) {
    throw Error(ErrorCode::AlreadyDisplayed, new_dim.name + " is already displayed", new_dim.name);
  }
  const Hierarchy& h = new_dim.hierarchy(hierarchy);
  const Condition old_condition = old_dim.hierarchy(axis.hierarchy).condition;

  axis = Axis{new_dim.name, h.name, {h.top_param()}};
  std::replace(out.dims.begin() + 2, out.dims.end(), new_dim.name, old_dim.name);
  out.dims[0] = out.row.dimension;
  out.dims[1] = out.col.dimension;
  if (maintain && !old_condition.is_true()) {
    out.predicates.push_back(DimPredicate::attribute(old_dim.name, old_condition));
  }
  return out;
}

}  // namespace mdolap
