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
#include "mdolap/constraints.hpp"
#include "mdolap/error.hpp"
#include "mdolap/serialize.hpp"
#include "mdolap/validation.hpp"

namespace mdolap {
namespace {

using nlohmann::json;

TEST(LiteralJson, RoundTrip) {
  for (const Value& v : {Value::integer(31), Value::decimal(Decimal{1234}), Value::text("France")}) {
    EXPECT_EQ(literal_from_json(literal_to_json(v)), v);
  }
  EXPECT_EQ(literal_to_json(Value::decimal(Decimal{1234})), json({{"decimal", "12.34"}}));
  EXPECT_EQ(literal_to_json(Value::integer(31)), json({{"int", 31}}));
}

TEST(ConditionJson, RoundTrip) {
  auto c = Condition::all_of(Condition::compare("Pays", CompareOp::Eq, Value::text("Etats-Unis")),
                             Condition::negate(Condition::any_of(Condition::is_null("Etat"),
                                                                 Condition::is_not_null("Zone"))));
  auto j = condition_to_json(c);
  EXPECT_EQ(j["kind"], "and");
  EXPECT_EQ(condition_from_json(j), c);
  EXPECT_EQ(condition_to_json(Condition::always()), json({{"kind", "true"}}));
}

TEST(ConditionJson, MalformedThrows) {
  for (const char* doc : {R"({"kind":"xor"})", R"({"kind":"compare","attribute":"a"})", R"("true")"}) {
    try {
      condition_from_json(json::parse(doc));
      ADD_FAILURE() << doc;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::MalformedSnapshot);
    }
  }
}

TEST(FieldJson, ByKind) {
  EXPECT_EQ(field_to_json(Value::null()), json(nullptr));
  EXPECT_EQ(field_to_json(Value::integer(4)), json(4));
  EXPECT_EQ(field_to_json(Value::decimal(Decimal{54000})), json("540.00"));
  EXPECT_EQ(field_from_json(json("540.00"), ValueKind::Decimal), Value::decimal(Decimal{54000}));
  EXPECT_EQ(field_from_json(json(4), ValueKind::Int), Value::integer(4));
  EXPECT_TRUE(field_from_json(json(nullptr), ValueKind::String).is_null());
  EXPECT_THROW(field_from_json(json("4"), ValueKind::Int), Error);
  EXPECT_THROW(field_from_json(json(4), ValueKind::String), Error);
}

TEST(ConstraintJson, RoundTripsEverySeedConstraint) {
  for (const auto& k : testing::seed_schema().constraints) {
    auto j = constraint_to_json(k);
    EXPECT_EQ(j["text"], k.describe());
    EXPECT_EQ(constraint_from_json(j), k);
  }
}

TEST(SchemaJson, Shape) {
  auto j = schema_to_json(testing::seed_schema());
  EXPECT_EQ(j["name"], "LOUEVOYAGE");
  ASSERT_EQ(j["dimensions"].size(), 5u);
  const auto& agences = j["dimensions"][2];
  EXPECT_EQ(agences["name"], "AGENCES");
  EXPECT_EQ(agences["attributes"][0]["name"], "Raison");
  EXPECT_EQ(agences["hierarchies"][0]["conditionText"], "Pays = 'France'");
  EXPECT_EQ(agences["hierarchies"][0]["weak"]["Departement"], json({"Nom_dpt"}));
  EXPECT_EQ(j["facts"][0]["measures"][1], json({{"name", "nbpers"}, {"kind", "INT"}, {"agg", "AVG"}}));
  EXPECT_EQ(j["constraints"].size(), 13u);
}

TEST(ResultJson, InterWitnessesAreRowNumbers) {
  Constellation c = testing::seed();
  Fact& f = *c.find_fact("VENTES");
  const IdSet fr_voyages = hierarchy_members(c.dimension("VOYAGES"), "cla_fr");
  std::size_t row = 0;
  while (!fr_voyages.contains(f.instances[row].links[*f.link_index("VOYAGES")])) ++row;
  f.instances[row].links[*f.link_index("AGENCES")] = *hierarchy_members(c.dimension("AGENCES"), "geo_us").begin();
  const Constraint& k = c.constraints[7];
  ASSERT_EQ(k.describe(), "CONSTRAINT INTER ON VENTES : AGENCES.geo_us PARTITION VOYAGES.cla_fr");
  auto r = check_constraint(c, k);
  auto j = result_to_json(r);
  EXPECT_EQ(j["holds"], false);
  EXPECT_EQ(j["violations"], 1);
  EXPECT_EQ(j["witnesses"], json({row}));
  EXPECT_EQ(j["text"], k.describe());
  EXPECT_EQ(results_to_json({r}).size(), 1u);
}

TEST(ReportJson, Shape) {
  auto j = report_to_json(validate_schema(testing::seed()));
  EXPECT_EQ(j["wellFormed"], true);
  EXPECT_TRUE(j["errors"].empty());
  EXPECT_TRUE(j["notes"].is_array());
}

}  // namespace
}  // namespace mdolap
