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

#include "mdolap/constraints.hpp"

#include <algorithm>

#include "mdolap/error.hpp"

namespace mdolap {

namespace {

class WitnessSink {
 public:
  WitnessSink(ConstraintResult& r, std::size_t limit) : r_(r), limit_(limit) {}

  void add(std::string w) {
    ++r_.violations;
    r_.holds = false;
    if (r_.witnesses.size() < limit_) {
      r_.witnesses.push_back(std::move(w));
    } else {
      r_.truncated = true;
    }
  }

 private:
  ConstraintResult& r_;
  std::size_t limit_;
};

bool violates(ConstraintKind kind, bool in_left, bool in_right) {
  switch (kind) {
    case ConstraintKind::Exclusion: return in_left && in_right;
    case ConstraintKind::Inclusion: return in_left && !in_right;
    case ConstraintKind::Simultaneity: return in_left != in_right;
    case ConstraintKind::Totality: return !in_left && !in_right;
    case ConstraintKind::Partition: return in_left == in_right;
  }
  return false;
}

}  // namespace

ConstraintResult check_intra(const Constellation& c, const Constraint& k, const CheckOptions& opts) {
  if (k.scope != ConstraintScope::Intra || k.left.dimension != k.right.dimension) {
    throw Error(ErrorCode::InvalidConstraint, k.describe() + ": not an intra-dimension constraint");
  }
  const Dimension& dim = c.dimension(k.left.dimension);
  const IdSet left = hierarchy_members(dim, k.left.hierarchy);
  const IdSet right = hierarchy_members(dim, k.right.hierarchy);

  ConstraintResult result{.constraint = k};
  WitnessSink sink(result, opts.witness_limit);
  // Every per-instance test below is a set identity over (left, right, U):
  // exclusion A∩B, inclusion A\B, simultaneity A△B, totality U\(A∪B),
  // partition the union of the exclusion and totality witnesses.
  for (const auto& [id, inst] : dim.instances) {
    if (violates(k.kind, left.contains(id), right.contains(id))) sink.add(id);
  }
  return result;
}

ConstraintResult check_inter(const Constellation& c, const Constraint& k, const CheckOptions& opts) {
  if (k.scope != ConstraintScope::Inter) {
    throw Error(ErrorCode::InvalidConstraint, k.describe() + ": not an inter-dimension constraint");
  }
  const Fact& fact = c.fact(k.fact);
  auto link_of = [&](const HierarchyRef& ref) {
    auto idx = fact.link_index(ref.dimension);
    if (!idx) {
      throw Error(ErrorCode::DimensionNotLinked, ref.dimension + " is not linked to " + fact.name, ref.dimension);
    }
    return *idx;
  };
  const std::size_t left_link = link_of(k.left);
  const std::size_t right_link = link_of(k.right);
  if (left_link == right_link) {
    throw Error(ErrorCode::InvalidConstraint, k.describe() + ": inter constraints relate two dimensions");
  }
  const IdSet left = hierarchy_members(c.dimension(k.left.dimension), k.left.hierarchy);
  const IdSet right = hierarchy_members(c.dimension(k.right.dimension), k.right.hierarchy);

  ConstraintResult result{.constraint = k};
  WitnessSink sink(result, opts.witness_limit);
  for (std::size_t j = 0; j < fact.instances.size(); ++j) {
    const auto& links = fact.instances[j].links;
    bool l = left.contains(links.at(left_link));
    bool r = right.contains(links.at(right_link));
    if (violates(k.kind, l, r)) sink.add(std::to_string(j));
  }
  return result;
}

ConstraintResult check_constraint(const Constellation& c, const Constraint& k, const CheckOptions& opts) {
  return k.scope == ConstraintScope::Intra ? check_intra(c, k, opts) : check_inter(c, k, opts);
}

std::vector<ConstraintResult> check_all(const Constellation& c, const CheckOptions& opts) {
  std::vector<ConstraintResult> out;
  out.reserve(c.constraints.size());
  for (const auto& k : c.constraints) {
    try {
      out.push_back(check_constraint(c, k, opts));
    } catch (const Error& e) {
      out.push_back(ConstraintResult{.constraint = k, .holds = false, .diagnostic = e.what()});
    }
  }
  return out;
}

bool all_hold(const std::vector<ConstraintResult>& results) noexcept {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.holds; });
}

}  // namespace mdolap
