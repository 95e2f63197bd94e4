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

#include "mdolap/cells.hpp"

#include <algorithm>
#include <functional>
#include <tuple>
#include <map>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "mdolap/error.hpp"

namespace mdolap {

namespace {

using GroupKey = std::pair<HeaderPath, HeaderPath>;

struct GroupLess {
  bool operator()(const GroupKey& a, const GroupKey& b) const noexcept {
    if (path_less(a.first, b.first)) return true;
    if (path_less(b.first, a.first)) return false;
    return path_less(a.second, b.second);
  }
};

// Header path of every instance of `dim` along the displayed parameters.
std::unordered_map<std::string, HeaderPath> project(const Dimension& dim, const Axis& axis) {
  const Hierarchy& h = dim.hierarchy(axis.hierarchy);
  std::vector<std::size_t> columns;
  for (const auto& p : axis.params) {
    if (!h.level_of(p)) {
      throw Error(ErrorCode::UnknownParam, p + " is not a parameter of " + dim.name + "." + h.name, p);
    }
    columns.push_back(*dim.attribute_index(p));
  }
  std::unordered_map<std::string, HeaderPath> out;
  out.reserve(dim.instances.size());
  for (const auto& [id, inst] : dim.instances) {
    HeaderPath path;
    path.reserve(columns.size());
    for (auto col : columns) path.push_back(inst.values[col]);
    out.emplace(id, std::move(path));
  }
  return out;
}

using Allowed = std::optional<std::unordered_set<std::string>>;

void restrict_to(Allowed& allowed, const Dimension& dim, const std::function<bool(const DimInstance&)>& keep) {
  std::unordered_set<std::string> next;
  for (const auto& [id, inst] : dim.instances) {
    if ((!allowed || allowed->contains(id)) && keep(inst)) next.insert(id);
  }
  allowed = std::move(next);
}

}  // namespace

bool path_less(const HeaderPath& a, const HeaderPath& b) noexcept {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), header_less);
}

const Cell* CellGrid::find(const HeaderPath& row, const HeaderPath& col) const {
  auto r = std::lower_bound(row_paths.begin(), row_paths.end(), row, path_less);
  auto c = std::lower_bound(col_paths.begin(), col_paths.end(), col, path_less);
  if (r == row_paths.end() || *r != row || c == col_paths.end() || *c != col) return nullptr;
  std::size_t ri = static_cast<std::size_t>(r - row_paths.begin());
  std::size_t ci = static_cast<std::size_t>(c - col_paths.begin());
  auto it = std::lower_bound(cells.begin(), cells.end(), std::pair{ri, ci},
                             [](const Cell& cell, const std::pair<std::size_t, std::size_t>& key) {
                               return std::pair{cell.row, cell.col} < key;
                             });
  if (it == cells.end() || it->row != ri || it->col != ci) return nullptr;
  return &*it;
}

std::int64_t round_half_away(std::int64_t num, std::int64_t den) noexcept {
  if (num >= 0) return (2 * num + den) / (2 * den);
  return -((-2 * num + den) / (2 * den));
}

void Accumulator::add(Decimal v) noexcept {
  if (count_ == 0) {
    min_ = max_ = v.cents;
  } else {
    min_ = std::min(min_, v.cents);
    max_ = std::max(max_, v.cents);
  }
  sum_ += v.cents;
  ++count_;
}

AggregateValue Accumulator::finish(const MeasureSpec& spec) const {
  if (count_ == 0) throw Error(ErrorCode::EmptyGroup, "aggregate over an empty group", spec.name);
  const auto n = static_cast<std::int64_t>(count_);
  const bool whole = spec.kind == ValueKind::Int;
  auto show = [&](std::int64_t cents) {
    return whole ? std::to_string(round_half_away(cents, 100)) : Decimal{cents}.to_string();
  };
  switch (spec.agg) {
    case Aggregation::Count: return {static_cast<double>(count_), std::to_string(count_)};
    case Aggregation::Sum: return {static_cast<double>(sum_) / 100.0, show(sum_)};
    case Aggregation::Min: return {static_cast<double>(min_) / 100.0, show(min_)};
    case Aggregation::Max: return {static_cast<double>(max_) / 100.0, show(max_)};
    case Aggregation::Avg: {
      double raw = static_cast<double>(sum_) / 100.0 / static_cast<double>(n);
      if (whole) return {raw, std::to_string(round_half_away(sum_, n * 100))};
      return {raw, Decimal{round_half_away(sum_, n)}.to_string()};
    }
  }
  return {};
}

AggregateValue aggregate(const MeasureSpec& spec, std::span<const Decimal> values) {
  Accumulator acc;
  for (auto v : values) acc.add(v);
  return acc.finish(spec);
}

CellGrid compute_cells(const Constellation& c, const DimensionalTable& t, const ComputeOptions& opts) {
  if (t.mode == EvalMode::Strict && c.consistency == Consistency::Inconsistent && !opts.allow_inconsistent) {
    throw Error(ErrorCode::InconsistentStore, "the store violates declared constraints; strict mode refuses to run");
  }
  const Fact& fact = c.fact(t.fact);
  const Dimension& row_dim = c.dimension(t.row.dimension);
  const Dimension& col_dim = c.dimension(t.col.dimension);
  auto link_of = [&](const std::string& d) {
    auto idx = fact.link_index(d);
    if (!idx) throw Error(ErrorCode::DimensionNotLinked, d + " is not linked to " + fact.name, d);
    return *idx;
  };
  const std::size_t row_link = link_of(row_dim.name);
  const std::size_t col_link = link_of(col_dim.name);

  // Allowed instance ids per linked dimension; nullopt = unrestricted.
  std::vector<Allowed> allowed(fact.dimensions.size());
  for (const auto& pred : t.predicates) {
    const Dimension& d = c.dimension(pred.dimension);
    Allowed& slot = allowed[link_of(d.name)];
    if (pred.kind == DimPredicate::Kind::Membership) {
      const Hierarchy& h = d.hierarchy(pred.hierarchy);
      restrict_to(slot, d, [&](const DimInstance& i) { return eval_condition(h.condition, d, i); });
    } else {
      restrict_to(slot, d, [&](const DimInstance& i) { return eval_condition(pred.condition, d, i); });
    }
  }
  if (t.mode == EvalMode::Strict) {
    for (const auto& [dim, axis, link] : {std::tuple{&row_dim, &t.row, row_link}, std::tuple{&col_dim, &t.col, col_link}}) {
      const Hierarchy& h = dim->hierarchy(axis->hierarchy);
      restrict_to(allowed[link], *dim, [&](const DimInstance& i) { return eval_condition(h.condition, *dim, i); });
    }
  }

  const auto row_proj = project(row_dim, t.row);
  const auto col_proj = project(col_dim, t.col);

  std::map<GroupKey, std::vector<Accumulator>, GroupLess> groups;
  for (const auto& inst : fact.instances) {
    bool keep = true;
    for (std::size_t k = 0; k < allowed.size() && keep; ++k) {
      if (allowed[k] && !allowed[k]->contains(inst.links[k])) keep = false;
    }
    if (!keep) continue;
    auto r = row_proj.find(inst.links[row_link]);
    auto cl = col_proj.find(inst.links[col_link]);
    if (r == row_proj.end() || cl == col_proj.end()) {
      throw Error(ErrorCode::InvalidValue, "fact instance links to a missing dimension instance");
    }
    auto& accs = groups[{r->second, cl->second}];
    accs.resize(fact.measures.size());
    for (std::size_t m = 0; m < fact.measures.size(); ++m) accs[m].add(inst.measures[m]);
  }

  CellGrid grid;
  for (const auto& m : fact.measures) grid.measure_names.push_back(m.name);
  std::vector<HeaderPath> rows, cols;
  for (const auto& [key, accs] : groups) {
    rows.push_back(key.first);
    cols.push_back(key.second);
  }
  auto sort_unique = [](std::vector<HeaderPath>& v) {
    std::sort(v.begin(), v.end(), path_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  sort_unique(rows);
  sort_unique(cols);
  grid.row_paths = std::move(rows);
  grid.col_paths = std::move(cols);

  auto index_of = [](const std::vector<HeaderPath>& paths, const HeaderPath& p) {
    return static_cast<std::size_t>(std::lower_bound(paths.begin(), paths.end(), p, path_less) - paths.begin());
  };
  for (const auto& [key, accs] : groups) {
    Cell cell{index_of(grid.row_paths, key.first), index_of(grid.col_paths, key.second), {}};
    for (std::size_t m = 0; m < fact.measures.size(); ++m) {
      auto v = accs[m].finish(fact.measures[m]);
      cell.measures.push_back({v.raw, std::move(v.display), accs[m].count()});
    }
    grid.cells.push_back(std::move(cell));
  }
  std::sort(grid.cells.begin(), grid.cells.end(),
            [](const Cell& a, const Cell& b) { return std::pair{a.row, a.col} < std::pair{b.row, b.col}; });
  return grid;
}

}  // namespace mdolap
