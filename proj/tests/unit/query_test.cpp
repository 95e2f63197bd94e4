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

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "mdolap/algebra.hpp"
#include "mdolap/dsl.hpp"
#include "mdolap/error.hpp"
#include "mdolap/query.hpp"

namespace mdolap {
namespace {

using testing::seed;

DimensionalTable eval(const std::string& text, EvalMode mode = EvalMode::Strict) {
  auto r = dsl::parse_query(text);
  if (!r.ok()) throw std::runtime_error(dsl::format_diagnostic(r.diagnostics.front()));
  return evaluate_query(seed(), **r.value, mode);
}

Error eval_error(const std::string& text) {
  try {
    eval(text);
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no error for " << text;
  return Error(ErrorCode::Io, "");
}

TEST(EvaluateQuery, MatchesDirectOperatorCalls) {
  const auto& c = seed();
  auto base = display(c, "VENTES", "AGENCES", "TEMPS", "geo_fr", "h_an");
  EXPECT_EQ(eval("Display(VENTES, AGENCES, TEMPS, geo_fr, h_an)"), base);
  EXPECT_EQ(eval("DrillDown(Display(VENTES, AGENCES, TEMPS, geo_fr, h_an), AGENCES, Region)"),
            drilldown(c, base, "AGENCES", "Region"));
  EXPECT_EQ(eval("HRotate(Display(VENTES, AGENCES, TEMPS, geo_fr, h_an), AGENCES, geo_fr, geo_zn)"),
            hrotate(c, base, "AGENCES", "geo_fr", "geo_zn", false));
  EXPECT_EQ(eval("DRotate(Display(VENTES, AGENCES, TEMPS, geo_fr, h_an), AGENCES, VOYAGES, cla_int, true)"),
            drotate(c, base, "AGENCES", "VOYAGES", "cla_int", true));
  EXPECT_EQ(eval("RollUp(Display(VENTES, AGENCES, TEMPS, geo_fr, h_an), TEMPS, All)"),
            rollup(c, base, "TEMPS", "All"));
}

TEST(EvaluateQuery, ModeIsApplied) {
  EXPECT_EQ(eval("Display(VENTES, AGENCES, TEMPS, geo_fr, h_an)", EvalMode::Legacy).mode, EvalMode::Legacy);
}

TEST(EvaluateQuery, ComposedExpression) {
  auto t = eval(
      "DrillDown(HRotate(DRotate(DRotate(Display(VENTES, AGENCES, TEMPS, geo_fr, h_an), AGENCES, VOYAGES, cla_int, "
      "true), TEMPS, AGENCES, ens), VOYAGES, cla_int, cla_fr), VOYAGES, TypeV)");
  EXPECT_EQ(t.row, (Axis{"VOYAGES", "cla_fr", {"Categorie", "TypeV"}}));
  EXPECT_EQ(t.col, (Axis{"AGENCES", "ens", {"Enseigne"}}));
  ASSERT_EQ(t.predicates.size(), 1u);
  EXPECT_EQ(t.predicates[0].to_text(), "AGENCES.Pays = 'France'");
}

TEST(EvaluateQuery, ErrorsCarryTheIdentifierPosition) {
  auto e = eval_error("DrillDown(Display(VENTES, AGENCES, TEMPS, geo_fr, h_an), AGENCES, Etat)");
  EXPECT_EQ(e.code(), ErrorCode::NotAParameter);
  ASSERT_TRUE(e.position());
  EXPECT_EQ(*e.position(), (SourcePos{1, 67}));

  e = eval_error("Display(VENTES, AGENCES, TEMPS, geo_frr, h_an)");
  EXPECT_EQ(e.code(), ErrorCode::UnknownHierarchy);
  EXPECT_EQ(*e.position(), (SourcePos{1, 33}));

  e = eval_error("Display(VENTES, AGENCES,\n  AGENCES, geo_fr, geo_fr)");
  EXPECT_EQ(e.code(), ErrorCode::SameDimension);
  EXPECT_EQ(e.position()->line, 1u);
}

TEST(EvaluateQuery, ErrorWithoutMatchingIdentifierPointsAtOperator) {
  auto e = eval_error("RollUp(DrillDown(Display(VENTES, AGENCES, TEMPS, geo_fr, h_an), AGENCES, Region), AGENCES, Ville)");
  EXPECT_EQ(e.code(), ErrorCode::NotCoarser);
  EXPECT_EQ(*e.position(), (SourcePos{1, 92}));
}

}  // namespace
}  // namespace mdolap
