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

#include <benchmark/benchmark.h>

#include <string>

#include "mdolap/algebra.hpp"
#include "mdolap/cells.hpp"
#include "mdolap/constraints.hpp"
#include "mdolap/dsl.hpp"
#include "mdolap/ingest.hpp"
#include "mdolap/query.hpp"

namespace {

using namespace mdolap;

const Constellation& seed() {
  static const Constellation c = [] {
    const std::string dir = MDOLAP_DATA_DIR;
    auto parsed = dsl::parse_schema(read_file(dir + "/louevoyage.mdschema"));
    Constellation out = *parsed.value;
    load_directory(out, dir + "/louevoyage");
    return out;
  }();
  return c;
}

// Seed store with every fact instance repeated `times` times.
Constellation scaled(int times) {
  Constellation c = seed();
  for (auto& f : c.facts) {
    const auto base = f.instances;
    for (int i = 1; i < times; ++i) f.instances.insert(f.instances.end(), base.begin(), base.end());
  }
  return c;
}

void BM_ComputeCellsDrill(benchmark::State& state) {
  const Constellation c = scaled(static_cast<int>(state.range(0)));
  const auto t = drilldown(c, display(c, "VENTES", "AGENCES", "TEMPS", "geo_fr", "h_an"), "AGENCES", "Region");
  for (auto _ : state) benchmark::DoNotOptimize(compute_cells(c, t));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(c.find_fact("VENTES")->instances.size()));
}
BENCHMARK(BM_ComputeCellsDrill)->RangeMultiplier(8)->Range(1, 512);

void BM_ComputeCellsMaintainedRotation(benchmark::State& state) {
  const Constellation c = scaled(static_cast<int>(state.range(0)));
  const auto t = drotate(c, display(c, "VENTES", "AGENCES", "TEMPS", "geo_fr", "h_an"), "AGENCES", "VOYAGES",
                         "cla_int", true);
  for (auto _ : state) benchmark::DoNotOptimize(compute_cells(c, t));
}
BENCHMARK(BM_ComputeCellsMaintainedRotation)->RangeMultiplier(8)->Range(1, 512);

void BM_CheckAll(benchmark::State& state) {
  const Constellation c = scaled(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_all(c));
}
BENCHMARK(BM_CheckAll)->RangeMultiplier(8)->Range(1, 512);

void BM_ParseAndEvaluate(benchmark::State& state) {
  const Constellation& c = seed();
  const std::string text =
      "DRotate(HRotate(DrillDown(Display(VENTES, AGENCES, TEMPS, geo_fr, h_an), AGENCES, Region), AGENCES, geo_fr, "
      "geo_zn, true), AGENCES, VOYAGES, cla_int, true)";
  for (auto _ : state) {
    auto parsed = dsl::parse_query(text);
    benchmark::DoNotOptimize(evaluate_query(c, **parsed.value));
  }
}
BENCHMARK(BM_ParseAndEvaluate);

}  // namespace

BENCHMARK_MAIN();
