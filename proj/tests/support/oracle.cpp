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

#include "oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace mdolap::oracle {

namespace {

const Value* lookup(const Dimension& d, const DimInstance& inst, const std::string& name) {
  for (std::size_t i = 0; i < d.attributes.size(); ++i) {
    if (d.attributes[i].name == name) return &inst.values[i];
  }
  return nullptr;
}

bool numeric(const Value& v) { return v.is_int() || v.is_decimal(); }

long long cents(const Value& v) { return v.is_int() ? v.as_int() * 100 : v.as_decimal().cents; }

Truth compare(const Value& a, CompareOp op, const Value& b) {
  if (a.is_null() || b.is_null()) return Truth::Unknown;
  int sign = 0;
  if (numeric(a) && numeric(b)) {
    sign = cents(a) < cents(b) ? -1 : cents(a) > cents(b) ? 1 : 0;
  } else if (a.is_text() && b.is_text()) {
    int r = a.as_text().compare(b.as_text());
    sign = r < 0 ? -1 : r > 0 ? 1 : 0;
  } else {
    return Truth::Unknown;
  }
  bool r = false;
  switch (op) {
    case CompareOp::Eq: r = sign == 0; break;
    case CompareOp::Ne: r = sign != 0; break;
    case CompareOp::Lt: r = sign < 0; break;
    case CompareOp::Le: r = sign <= 0; break;
    case CompareOp::Gt: r = sign > 0; break;
    case CompareOp::Ge: r = sign >= 0; break;
  }
  return r ? Truth::True : Truth::False;
}

std::string show(long long c, bool whole) {
  if (whole) {
    return std::to_string(static_cast<long long>(std::round(static_cast<long double>(c) / 100.0L)));
  }
  long long v = c < 0 ? -c : c;
  std::string frac = std::to_string(v % 100);
  if (frac.size() < 2) frac = "0" + frac;
  return (c < 0 ? "-" : "") + std::to_string(v / 100) + "." + frac;
}

std::string aggregate(const MeasureSpec& m, const std::vector<long long>& vs) {
  const bool whole = m.kind == ValueKind::Int;
  long long total = 0;
  for (long long v : vs) total += v;
  long long lo = vs.front(), hi = vs.front();
  for (long long v : vs) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  const auto n = static_cast<long double>(vs.size());
  std::string out;
  switch (m.agg) {
    case Aggregation::Sum: out = show(total, whole); break;
    case Aggregation::Min: out = show(lo, whole); break;
    case Aggregation::Max: out = show(hi, whole); break;
    case Aggregation::Count: out = std::to_string(vs.size()); break;
    case Aggregation::Avg:
      if (whole) {
        out = std::to_string(static_cast<long long>(std::round(static_cast<long double>(total) / 100.0L / n)));
      } else {
        out = show(static_cast<long long>(std::round(static_cast<long double>(total) / n)), false);
      }
      break;
  }
  return out + "#" + std::to_string(vs.size());
}

const DimInstance& instance_of(const Dimension& d, const std::string& id) {
  for (const auto& [k, inst] : d.instances) {
    if (k == id) return inst;
  }
  throw std::out_of_range("dangling link " + id);
}

const Hierarchy& hierarchy_of(const Dimension& d, const std::string& name) {
  for (const auto& h : d.hierarchies) {
    if (h.name == name) return h;
  }
  throw std::out_of_range("unknown hierarchy " + name);
}

Path project(const Dimension& d, const DimInstance& inst, const std::vector<std::string>& params) {
  Path out;
  for (const auto& p : params) out.push_back(p == kAllAttribute ? "all" : lookup(d, inst, p)->to_display());
  return out;
}

bool passes(const Constellation& c, const DimensionalTable& t, const Fact& f, const FactInstance& row) {
  for (const auto& p : t.predicates) {
    std::size_t link = 0;
    while (f.dimensions[link] != p.dimension) ++link;
    const Dimension& d = *c.find_dimension(p.dimension);
    const DimInstance& inst = instance_of(d, row.links[link]);
    bool ok = p.kind == DimPredicate::Kind::Membership ? member(d, hierarchy_of(d, p.hierarchy), inst)
                                                       : eval(p.condition, d, inst) == Truth::True;
    if (!ok) return false;
  }
  return true;
}

template <class Fn>
void for_each_group(const Constellation& c, const DimensionalTable& t, Fn fn) {
  const Fact& f = *c.find_fact(t.fact);
  const Dimension& rd = *c.find_dimension(t.row.dimension);
  const Dimension& cd = *c.find_dimension(t.col.dimension);
  std::size_t rl = 0, cl = 0;
  for (std::size_t i = 0; i < f.dimensions.size(); ++i) {
    if (f.dimensions[i] == rd.name) rl = i;
    if (f.dimensions[i] == cd.name) cl = i;
  }
  for (const auto& row : f.instances) {
    const DimInstance& ri = instance_of(rd, row.links[rl]);
    const DimInstance& ci = instance_of(cd, row.links[cl]);
    if (t.mode == EvalMode::Strict) {
      if (!member(rd, hierarchy_of(rd, t.row.hierarchy), ri)) continue;
      if (!member(cd, hierarchy_of(cd, t.col.hierarchy), ci)) continue;
    }
    if (!passes(c, t, f, row)) continue;
    fn(Key{project(rd, ri, t.row.params), project(cd, ci, t.col.params)}, row);
  }
}

}  // namespace

Truth eval(const Condition& c, const Dimension& d, const DimInstance& inst) {
  switch (c.kind()) {
    case Condition::Kind::True: return Truth::True;
    case Condition::Kind::Compare: return compare(*lookup(d, inst, c.attribute()), c.op(), c.literal());
    case Condition::Kind::IsNull: return lookup(d, inst, c.attribute())->is_null() ? Truth::True : Truth::False;
    case Condition::Kind::IsNotNull: return lookup(d, inst, c.attribute())->is_null() ? Truth::False : Truth::True;
    case Condition::Kind::Not: {
      Truth t = eval(c.children().front(), d, inst);
      return t == Truth::Unknown ? t : (t == Truth::True ? Truth::False : Truth::True);
    }
    case Condition::Kind::And: {
      Truth acc = Truth::True;
      for (const auto& k : c.children()) {
        Truth t = eval(k, d, inst);
        if (t == Truth::False) return Truth::False;
        if (t == Truth::Unknown) acc = Truth::Unknown;
      }
      return acc;
    }
    case Condition::Kind::Or: {
      Truth acc = Truth::False;
      for (const auto& k : c.children()) {
        Truth t = eval(k, d, inst);
        if (t == Truth::True) return Truth::True;
        if (t == Truth::Unknown) acc = Truth::Unknown;
      }
      return acc;
    }
  }
  return Truth::Unknown;
}

bool member(const Dimension& d, const Hierarchy& h, const DimInstance& inst) {
  return eval(h.condition, d, inst) == Truth::True;
}

std::set<std::string> members(const Dimension& d, const std::string& hierarchy) {
  std::set<std::string> out;
  const Hierarchy& h = hierarchy_of(d, hierarchy);
  for (const auto& [id, inst] : d.instances) {
    if (member(d, h, inst)) out.insert(id);
  }
  return out;
}

Verdict check(const Constellation& c, const Constraint& k) {
  // Each kind spelled out as its quantified definition over (L, R).
  auto violated = [&k](bool l, bool r) {
    switch (k.kind) {
      case ConstraintKind::Exclusion: return !(!(l && r));
      case ConstraintKind::Inclusion: return !(!l || r);
      case ConstraintKind::Simultaneity: return !((!l || r) && (!r || l));
      case ConstraintKind::Totality: return !(l || r);
      case ConstraintKind::Partition: return !(!(l && r) && (l || r));
    }
    return true;
  };
  Verdict v;
  if (k.scope == ConstraintScope::Intra) {
    const Dimension& d = *c.find_dimension(k.left.dimension);
    auto left = members(d, k.left.hierarchy);
    auto right = members(d, k.right.hierarchy);
    for (const auto& [id, inst] : d.instances) {
      if (violated(left.count(id) > 0, right.count(id) > 0)) v.witnesses.insert(id);
    }
  } else {
    const Fact& f = *c.find_fact(k.fact);
    const Dimension& ld = *c.find_dimension(k.left.dimension);
    const Dimension& rd = *c.find_dimension(k.right.dimension);
    auto left = members(ld, k.left.hierarchy);
    auto right = members(rd, k.right.hierarchy);
    std::size_t li = 0, ri = 0;
    for (std::size_t i = 0; i < f.dimensions.size(); ++i) {
      if (f.dimensions[i] == ld.name) li = i;
      if (f.dimensions[i] == rd.name) ri = i;
    }
    for (std::size_t j = 0; j < f.instances.size(); ++j) {
      const auto& row = f.instances[j];
      if (violated(left.count(row.links[li]) > 0, right.count(row.links[ri]) > 0)) {
        v.witnesses.insert(std::to_string(j));
      }
    }
  }
  v.holds = v.witnesses.empty();
  return v;
}

Grid group_by(const Constellation& c, const DimensionalTable& t) {
  const Fact& f = *c.find_fact(t.fact);
  std::map<Key, std::vector<std::vector<long long>>> raw;
  for_each_group(c, t, [&](const Key& key, const FactInstance& row) {
    auto& slot = raw[key];
    slot.resize(f.measures.size());
    for (std::size_t m = 0; m < f.measures.size(); ++m) slot[m].push_back(row.measures[m].cents);
  });
  Grid out;
  for (const auto& [key, per_measure] : raw) {
    auto& cell = out[key];
    for (std::size_t m = 0; m < f.measures.size(); ++m) cell.push_back(aggregate(f.measures[m], per_measure[m]));
  }
  return out;
}

std::map<Key, long long> sums(const Constellation& c, const DimensionalTable& t, std::size_t measure) {
  std::map<Key, long long> out;
  for_each_group(c, t, [&](const Key& key, const FactInstance& row) { out[key] += row.measures[measure].cents; });
  return out;
}

Grid from_engine(const CellGrid& g) {
  auto path = [](const HeaderPath& p) {
    Path out;
    for (const auto& v : p) out.push_back(v.to_display());
    return out;
  };
  Grid out;
  for (const auto& cell : g.cells) {
    auto& slot = out[Key{path(g.row_paths[cell.row]), path(g.col_paths[cell.col])}];
    for (const auto& m : cell.measures) slot.push_back(m.display + "#" + std::to_string(m.count));
  }
  return out;
}

}  // namespace mdolap::oracle
