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

#include "mdolap/ingest.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "mdolap/csv.hpp"
#include "mdolap/error.hpp"
#include "mdolap/serialize.hpp"

namespace mdolap {

namespace {

std::map<std::string, std::size_t> header_index(const CsvRecord& header) {
  std::map<std::string, std::size_t> out;
  for (std::size_t i = 0; i < header.fields.size(); ++i) {
    if (!out.emplace(header.fields[i], i).second) {
      throw Error(ErrorCode::MalformedCsv, "duplicate column '" + header.fields[i] + "'", header.fields[i]);
    }
  }
  return out;
}

void finish(Constellation& c, LoadReport& r) {
  r.constraints = check_all(c);
  c.consistency = all_hold(r.constraints) ? Consistency::Consistent : Consistency::Inconsistent;
  r.consistency = c.consistency;
}

std::string arity_reason(std::size_t want, std::size_t got) {
  return "expected " + std::to_string(want) + " fields, found " + std::to_string(got);
}

}  // namespace

LoadReport load_dimension_csv(Constellation& c, std::string_view dim, std::string_view source) {
  const Dimension* found = c.find_dimension(dim);
  if (!found) throw Error(ErrorCode::UnknownDimension, "unknown dimension '" + std::string(dim) + "'", std::string(dim));
  auto records = read_csv(source);
  LoadReport r;
  r.target = found->name;
  Dimension d = *found;
  if (records.empty()) throw Error(ErrorCode::MissingIdColumn, d.name + ": missing header row");
  auto columns = header_index(records.front());
  if (!columns.count(std::string(kIdAttribute))) {
    throw Error(ErrorCode::MissingIdColumn, d.name + ": header has no Id column");
  }
  std::vector<std::pair<std::size_t, std::size_t>> mapping;  // csv column -> attribute index
  for (const auto& [name, col] : columns) {
    auto idx = d.attribute_index(name);
    if (!idx || name == kAllAttribute) {
      throw Error(ErrorCode::UnknownAttribute, d.name + ": unexpected column '" + name + "'", name);
    }
    mapping.emplace_back(col, *idx);
  }
  const std::size_t width = records.front().fields.size();
  for (std::size_t k = 1; k < records.size(); ++k) {
    const CsvRecord& rec = records[k];
    ++r.read;
    if (rec.fields.size() != width) {
      r.rejected.push_back({rec.line, arity_reason(width, rec.fields.size())});
      continue;
    }
    std::string id = canonical_id(rec.fields[columns.at(std::string(kIdAttribute))]);
    if (id.empty()) {
      r.rejected.push_back({rec.line, "empty id"});
      continue;
    }
    if (d.instances.count(id)) {
      r.rejected.push_back({rec.line, "duplicate id"});
      continue;
    }
    DimInstance inst = d.blank_instance(id);
    std::optional<std::string> bad;
    for (const auto& [col, idx] : mapping) {
      if (idx == 0) continue;
      try {
        inst.values[idx] = parse_field(rec.fields[col], d.attributes[idx].kind);
      } catch (const Error& e) {
        bad = d.attributes[idx].name + ": " + e.what();
        break;
      }
    }
    if (bad) {
      r.rejected.push_back({rec.line, *bad});
      continue;
    }
    d.put(std::move(inst));
    ++r.loaded;
  }
  *c.find_dimension(dim) = std::move(d);
  finish(c, r);
  return r;
}

LoadReport load_fact_csv(Constellation& c, std::string_view fact, std::string_view source) {
  const Fact* found = c.find_fact(fact);
  if (!found) throw Error(ErrorCode::UnknownFact, "unknown fact '" + std::string(fact) + "'", std::string(fact));
  auto records = read_csv(source);
  LoadReport r;
  r.target = found->name;
  Fact f = *found;
  if (records.empty()) throw Error(ErrorCode::MissingMeasureColumn, f.name + ": missing header row");
  auto columns = header_index(records.front());
  std::vector<std::size_t> measure_col, link_col;
  for (const auto& m : f.measures) {
    auto it = columns.find(m.name);
    if (it == columns.end()) throw Error(ErrorCode::MissingMeasureColumn, f.name + ": no column for measure " + m.name, m.name);
    measure_col.push_back(it->second);
  }
  for (const auto& d : f.dimensions) {
    auto it = columns.find(d + "_id");
    if (it == columns.end()) throw Error(ErrorCode::MissingLinkColumn, f.name + ": no column " + d + "_id", d + "_id");
    link_col.push_back(it->second);
  }
  if (columns.size() != f.measures.size() + f.dimensions.size()) {
    for (const auto& [name, col] : columns) {
      bool known = f.measure_index(name) || (name.size() > 3 && name.ends_with("_id") &&
                                             f.link_index(name.substr(0, name.size() - 3)));
      if (!known) throw Error(ErrorCode::UnknownAttribute, f.name + ": unexpected column '" + name + "'", name);
    }
  }
  std::vector<const Dimension*> dims;
  for (const auto& d : f.dimensions) dims.push_back(&c.dimension(d));

  const std::size_t width = records.front().fields.size();
  for (std::size_t k = 1; k < records.size(); ++k) {
    const CsvRecord& rec = records[k];
    ++r.read;
    if (rec.fields.size() != width) {
      r.rejected.push_back({rec.line, arity_reason(width, rec.fields.size())});
      continue;
    }
    FactInstance inst;
    std::optional<std::string> bad;
    for (std::size_t m = 0; m < f.measures.size() && !bad; ++m) {
      const auto& spec = f.measures[m];
      const std::string& raw = rec.fields[measure_col[m]];
      if (raw.empty()) {
        bad = spec.name + ": missing value";
        break;
      }
      try {
        Value v = parse_field(raw, spec.kind);
        inst.measures.push_back(spec.kind == ValueKind::Int ? Decimal::from_units(v.as_int()) : v.as_decimal());
      } catch (const Error& e) {
        bad = spec.name + ": " + e.what();
      }
    }
    for (std::size_t l = 0; l < dims.size() && !bad; ++l) {
      std::string id = canonical_id(rec.fields[link_col[l]]);
      if (!dims[l]->instances.count(id)) {
        bad = "dangling link " + dims[l]->name + "_id=" + rec.fields[link_col[l]];
        break;
      }
      inst.links.push_back(std::move(id));
    }
    if (bad) {
      r.rejected.push_back({rec.line, *bad});
      continue;
    }
    f.instances.push_back(std::move(inst));
    ++r.loaded;
  }
  *c.find_fact(fact) = std::move(f);
  finish(c, r);
  return r;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path.string(), path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::Io, "error reading " + path.string(), path.string());
  return ss.str();
}

std::vector<LoadReport> load_directory(Constellation& c, const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw Error(ErrorCode::Io, "not a directory: " + dir.string(), dir.string());
  Constellation work = c;
  std::vector<LoadReport> out;
  for (const auto& d : c.dimensions) {
    auto path = dir / (d.name + ".csv");
    if (std::filesystem::exists(path)) out.push_back(load_dimension_csv(work, d.name, read_file(path)));
  }
  for (const auto& f : c.facts) {
    auto path = dir / (f.name + ".csv");
    if (std::filesystem::exists(path)) out.push_back(load_fact_csv(work, f.name, read_file(path)));
  }
  c = std::move(work);
  return out;
}

nlohmann::json load_report_to_json(const LoadReport& r) {
  nlohmann::json rejected = nlohmann::json::array();
  for (const auto& row : r.rejected) rejected.push_back({{"line", row.line}, {"reason", row.reason}});
  return {{"target", r.target},
          {"read", r.read},
          {"loaded", r.loaded},
          {"rejected", std::move(rejected)},
          {"consistency", to_string(r.consistency)}};
}

}  // namespace mdolap
