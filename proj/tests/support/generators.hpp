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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mdolap/algebra.hpp"
#include "mdolap/dsl.hpp"
#include "mdolap/model.hpp"

namespace mdolap::gen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int between(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(engine_); }
  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs[static_cast<std::size_t>(between(0, static_cast<int>(xs.size()) - 1))];
  }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

struct Limits {
  int max_instances = 20;
  int max_fact_rows = 50;
};

Condition random_condition(Rng& rng, const Dimension& d, int depth = 2);

/// 2-3 dimensions with random attributes, hierarchies and membership
/// conditions, one fact linking all of them, and a few random constraints.
Constellation random_constellation(Rng& rng, const Limits& limits = {});

/// A random constraint over the constellation (intra or inter).
Constraint random_constraint(Rng& rng, const Constellation& c, ConstraintScope scope);

/// Display plus a few random operators that happened to apply.
DimensionalTable random_table(Rng& rng, const Constellation& c);

/// Random expression tree of the given maximum depth over random identifiers.
dsl::QueryPtr random_query(Rng& rng, int max_depth);

/// Random bytes, biased towards DSL punctuation and keywords.
std::string random_source(Rng& rng);

}  // namespace mdolap::gen
