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

#include "mdolap/render.hpp"

#include <algorithm>
#include <set>

namespace mdolap {

std::vector<std::string> footer_lines(const DimensionalTable& t) {
  std::set<std::string> restricted;
  for (const auto& p : t.predicates) restricted.insert(p.dimension);
  std::vector<std::string> collapsed;
  for (const auto& d : t.collapsed()) {
    if (!restricted.count(d)) collapsed.push_back(d);
  }
  std::sort(collapsed.begin(), collapsed.end());
  std::vector<std::string> out;
  for (const auto& d : collapsed) out.push_back(d + ".All = 'all'");
  for (const auto& p : t.predicates) out.push_back(p.to_text());
  return out;
}

std::size_t display_width(std::string_view s) noexcept {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

namespace {

using Grid = std::vector<std::vector<std::string>>;

std::string cell_text(const Cell& cell) {
  std::string out = "(";
  for (std::size_t i = 0; i < cell.measures.size(); ++i) {
    if (i) out += ", ";
    out += cell.measures[i].display;
  }
  return out + ")";
}

std::string measure_label(const CellGrid& g) {
  std::string out = "(";
  for (std::size_t i = 0; i < g.measure_names.size(); ++i) {
    if (i) out += ", ";
    out += g.measure_names[i];
  }
  return out + ")";
}

/// Prints a nested header value only where the path prefix changes.
bool starts_group(const std::vector<HeaderPath>& paths, std::size_t i, std::size_t level) {
  if (i == 0) return true;
  for (std::size_t k = 0; k <= level; ++k) {
    if (!(paths[i][k] == paths[i - 1][k])) return true;
  }
  return false;
}

/// Row 0 carries the axis title, which may overflow into later columns.
std::string layout(const Grid& grid, std::size_t title_col) {
  std::size_t ncols = 0;
  for (const auto& r : grid) ncols = std::max(ncols, r.size());
  std::vector<std::size_t> width(ncols, 0);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& r = grid[i];
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (i == 0 && c == title_col) continue;
      width[c] = std::max(width[c], display_width(r[c]));
    }
  }
  std::vector<std::size_t> start(ncols, 0);
  for (std::size_t c = 1; c < ncols; ++c) start[c] = start[c - 1] + width[c - 1] + 2;
  std::string out;
  for (const auto& r : grid) {
    std::string line;
    std::size_t used = 0;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (r[c].empty()) continue;
      if (used < start[c]) line.append(start[c] - used, ' ');
      line += r[c];
      used = std::max(used, start[c]) + display_width(r[c]);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

}  // namespace

std::string render_text(const DimensionalTable& t, const CellGrid& g) {
  const std::size_t m = t.col.params.size();    // side header columns
  const std::size_t first = 1 + m;              // first value column
  const std::size_t ncols = first + g.row_paths.size();
  Grid grid;
  auto blank_row = [&] { return std::vector<std::string>(std::max(ncols, first + 1)); };

  auto top = blank_row();
  top[0] = t.fact;
  top[first] = t.row.dimension + "." + t.row.hierarchy;
  grid.push_back(std::move(top));

  for (std::size_t level = 0; level < t.row.params.size(); ++level) {
    auto r = blank_row();
    if (level == 0) r[0] = measure_label(g);
    r[m] = t.row.params[level];
    for (std::size_t i = 0; i < g.row_paths.size(); ++i) {
      if (starts_group(g.row_paths, i, level)) r[first + i] = g.row_paths[i][level].to_display();
    }
    grid.push_back(std::move(r));
  }

  auto side = blank_row();
  side[0] = t.col.dimension + "." + t.col.hierarchy;
  for (std::size_t k = 0; k < m; ++k) side[1 + k] = t.col.params[k];
  grid.push_back(std::move(side));

  auto cell = g.cells.begin();
  for (std::size_t j = 0; j < g.col_paths.size(); ++j) {
    auto r = blank_row();
    for (std::size_t k = 0; k < m; ++k) {
      if (starts_group(g.col_paths, j, k)) r[1 + k] = g.col_paths[j][k].to_display();
    }
    grid.push_back(std::move(r));
  }
  // Cells are ordered by (row, col); row indexes the top header.
  for (; cell != g.cells.end(); ++cell) {
    grid[t.row.params.size() + 2 + cell->col][first + cell->row] = cell_text(*cell);
  }

  std::string out = layout(grid, first);
  for (const auto& f : footer_lines(t)) out += f + "\n";
  for (const auto& w : t.warnings) out += "warning: " + w.code + ": " + w.message + "\n";
  return out;
}

nlohmann::json axis_to_json(const Axis& a) {
  return {{"dim", a.dimension}, {"hierarchy", a.hierarchy}, {"params", a.params}};
}

nlohmann::json header_value_json(const Value& v) {
  if (v.is_null()) return nullptr;
  return v.to_display();
}

nlohmann::json table_to_json(const DimensionalTable& t, const CellGrid& g) {
  auto paths = [](const std::vector<HeaderPath>& ps) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& p : ps) {
      nlohmann::json path = nlohmann::json::array();
      for (const auto& v : p) path.push_back(header_value_json(v));
      out.push_back(std::move(path));
    }
    return out;
  };
  nlohmann::json preds = nlohmann::json::array();
  for (const auto& p : t.predicates) {
    nlohmann::json j = {{"dimension", p.dimension}, {"text", p.to_text()}};
    if (p.kind == DimPredicate::Kind::Membership) {
      j["kind"] = "membership";
      j["hierarchy"] = p.hierarchy;
    } else {
      j["kind"] = "attribute";
      j["condition"] = to_text(p.condition);
    }
    preds.push_back(std::move(j));
  }
  nlohmann::json rows = paths(g.row_paths);
  nlohmann::json cols = paths(g.col_paths);
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : g.cells) {
    nlohmann::json measures = nlohmann::json::object();
    for (std::size_t i = 0; i < c.measures.size(); ++i) {
      const auto& mc = c.measures[i];
      measures[g.measure_names[i]] = {{"raw", mc.raw}, {"display", mc.display}, {"count", mc.count}};
    }
    cells.push_back({{"rowPath", rows[c.row]}, {"colPath", cols[c.col]}, {"measures", std::move(measures)}});
  }
  nlohmann::json warnings = nlohmann::json::array();
  for (const auto& w : t.warnings) warnings.push_back({{"code", w.code}, {"message", w.message}});
  return {
      {"fact", t.fact},
      {"mode", to_string(t.mode)},
      {"dims", t.dims},
      {"axes", {{"row", axis_to_json(t.row)}, {"col", axis_to_json(t.col)}}},
      {"measures", g.measure_names},
      {"predicates", std::move(preds)},
      {"footers", footer_lines(t)},
      {"headers", {{"row", std::move(rows)}, {"col", std::move(cols)}}},
      {"cells", std::move(cells)},
      {"warnings", std::move(warnings)},
  };
}

}  // namespace mdolap
