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

#include "mdolap/validation.hpp"

#include <algorithm>
#include <set>

namespace mdolap {

namespace {

class Reporter {
 public:
  explicit Reporter(ValidationReport& r) : report_(r) {}
  void error(std::string code, std::string message) {
    report_.errors.push_back({std::move(code), std::move(message)});
  }
  void note(std::string code, std::string message) {
    report_.notes.push_back({std::move(code), std::move(message)});
  }

 private:
  ValidationReport& report_;
};

void check_hierarchy(const Dimension& d, const Hierarchy& h, Reporter& out) {
  const std::string where = d.name + "." + h.name;
  if (h.params.size() < 2) {
    out.error("short-path", where + ": a hierarchy needs at least Id and All");
    return;
  }
  if (h.params.front() != kIdAttribute) out.error("path-start", where + ": path must start at Id");
  if (h.params.back() != kAllAttribute) out.error("path-end", where + ": path must end at All");
  std::set<std::string> seen;
  for (const auto& p : h.params) {
    if (!seen.insert(p).second) out.error("repeated-parameter", where + ": repeated parameter " + p);
    if (!d.attribute_index(p)) out.error("unknown-parameter", where + ": " + p + " is not an attribute");
  }
  for (const auto& [param, weak] : h.weak) {
    if (!h.level_of(param)) out.error("weak-owner", where + ": weak attributes attached to non-parameter " + param);
    for (const auto& w : weak) {
      if (!d.attribute_index(w)) out.error("unknown-weak", where + ": weak attribute " + w + " is not an attribute");
      if (h.level_of(w)) out.error("weak-overlap", where + ": weak attribute " + w + " is also a parameter");
    }
  }
  for (const auto& attr : referenced_attributes(h.condition)) {
    if (!d.attribute_index(attr)) out.error("unknown-condition-attribute", where + ": condition uses unknown " + attr);
  }
}

void check_dimension(const Dimension& d, Reporter& out) {
  if (d.attributes.empty() || d.attributes.front().name != kIdAttribute || d.attributes.back().name != kAllAttribute) {
    out.error("implicit-attributes", d.name + ": Id and All must be present");
  }
  std::set<std::string> names;
  for (const auto& a : d.attributes) {
    if (!names.insert(a.name).second) out.error("duplicate-attribute", d.name + ": duplicate attribute " + a.name);
  }
  std::set<std::string> hnames;
  for (const auto& h : d.hierarchies) {
    if (!hnames.insert(h.name).second) out.error("duplicate-hierarchy", d.name + ": duplicate hierarchy " + h.name);
    check_hierarchy(d, h, out);
  }
  for (const auto& [id, inst] : d.instances) {
    if (inst.id != id) out.error("instance-id", d.name + ": instance keyed " + id + " carries id " + inst.id);
    if (inst.values.size() != d.attributes.size()) {
      out.error("instance-arity", d.name + "." + id + ": wrong number of values");
      continue;
    }
    if (inst.values.front() != Value::text(id)) out.error("instance-id", d.name + "." + id + ": Id value mismatch");
    if (!inst.values.back().is_all()) out.error("instance-all", d.name + "." + id + ": All must be 'all'");
    for (std::size_t i = 1; i + 1 < inst.values.size(); ++i) {
      if (inst.values[i].is_all()) out.error("misplaced-all", d.name + "." + id + ": 'all' outside the All attribute");
    }
  }
  if (d.hierarchies.empty() || d.instances.empty()) return;
  for (const auto& [id, inst] : d.instances) {
    bool member = false;
    for (const auto& h : d.hierarchies) {
      try {
        member = member || eval_condition(h.condition, d, inst);
      } catch (const std::exception&) {
        // reported by check_hierarchy
      }
    }
    if (!member) out.note("no-hierarchy", d.name + "." + id + " belongs to no hierarchy");
  }
}

void check_fact(const Constellation& c, const Fact& f, Reporter& out) {
  if (f.dimensions.empty()) out.error("no-dimensions", f.name + ": a fact links at least one dimension");
  std::set<std::string> seen;
  for (const auto& d : f.dimensions) {
    if (!seen.insert(d).second) out.error("duplicate-link", f.name + ": dimension " + d + " linked twice");
    if (!c.find_dimension(d)) out.error("dangling-dimension", f.name + ": unknown dimension " + d);
  }
  std::set<std::string> mnames;
  for (const auto& m : f.measures) {
    if (!mnames.insert(m.name).second) out.error("duplicate-measure", f.name + ": duplicate measure " + m.name);
    if (m.kind != ValueKind::Int && m.kind != ValueKind::Decimal) {
      out.error("measure-kind", f.name + "." + m.name + ": measures are INT or DECIMAL");
    }
  }
  for (std::size_t j = 0; j < f.instances.size(); ++j) {
    const auto& inst = f.instances[j];
    const std::string where = f.name + "[" + std::to_string(j) + "]";
    if (inst.measures.size() != f.measures.size()) out.error("fact-arity", where + ": wrong number of measures");
    if (inst.links.size() != f.dimensions.size()) {
      out.error("link-mismatch", where + ": links do not match the linked dimensions");
      continue;
    }
    for (std::size_t k = 0; k < inst.links.size(); ++k) {
      const Dimension* d = c.find_dimension(f.dimensions[k]);
      if (d && !d->instances.contains(inst.links[k])) {
        out.error("dangling-link", where + ": " + f.dimensions[k] + " instance " + inst.links[k] + " does not exist");
      }
    }
  }
}

void check_constraint(const Constellation& c, const Constraint& k, Reporter& out) {
  const std::string what = k.describe();
  auto resolve = [&](const HierarchyRef& ref) {
    const Dimension* d = c.find_dimension(ref.dimension);
    if (!d) {
      out.error("constraint-dimension", what + ": unknown dimension " + ref.dimension);
    } else if (!d->find_hierarchy(ref.hierarchy)) {
      out.error("constraint-hierarchy", what + ": unknown hierarchy " + ref.hierarchy);
    }
  };
  resolve(k.left);
  resolve(k.right);
  if (k.scope == ConstraintScope::Intra) {
    if (k.left.dimension != k.right.dimension) out.error("constraint-scope", what + ": intra spans two dimensions");
    if (k.left.hierarchy == k.right.hierarchy) out.error("constraint-scope", what + ": intra needs two hierarchies");
  } else {
    if (k.left.dimension == k.right.dimension) out.error("constraint-scope", what + ": inter needs two dimensions");
    const Fact* f = c.find_fact(k.fact);
    if (!f) {
      out.error("constraint-fact", what + ": unknown fact " + k.fact);
    } else {
      for (const auto* ref : {&k.left, &k.right}) {
        if (!f->link_index(ref->dimension)) {
          out.error("constraint-link", what + ": " + ref->dimension + " is not linked to " + k.fact);
        }
      }
    }
  }
}

}  // namespace

bool ValidationReport::has(std::string_view code) const noexcept {
  return std::any_of(errors.begin(), errors.end(), [&](const auto& e) { return e.code == code; });
}

ValidationReport validate_schema(const Constellation& c) {
  ValidationReport report;
  Reporter out(report);
  std::set<std::string> names;
  for (const auto& d : c.dimensions) {
    if (!names.insert(d.name).second) out.error("duplicate-name", "duplicate name " + d.name);
  }
  for (const auto& f : c.facts) {
    if (!names.insert(f.name).second) out.error("duplicate-name", "duplicate name " + f.name);
  }
  for (const auto& d : c.dimensions) check_dimension(d, out);
  for (const auto& f : c.facts) check_fact(c, f, out);
  for (const auto& k : c.constraints) check_constraint(c, k, out);
  return report;
}

}  // namespace mdolap
