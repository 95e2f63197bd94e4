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

#include "fixtures.hpp"

#include <stdexcept>

#include "mdolap/dsl.hpp"
#include "mdolap/ingest.hpp"

namespace mdolap::testing {

std::filesystem::path source_dir() { return MDOLAP_SOURCE_DIR; }
std::filesystem::path data_dir() { return source_dir() / "data" / "louevoyage"; }
std::filesystem::path schema_path() { return source_dir() / "data" / "louevoyage.mdschema"; }
std::filesystem::path golden_dir() { return source_dir() / "tests" / "golden"; }
std::filesystem::path cli_path() { return MDOLAP_CLI_PATH; }

std::string read_text(const std::filesystem::path& p) { return read_file(p); }

const Constellation& seed_schema() {
  static const Constellation schema = [] {
    auto parsed = dsl::parse_schema(read_file(schema_path()));
    if (!parsed.ok()) throw std::runtime_error("seed schema does not parse: " + parsed.diagnostics.front().message);
    return *parsed.value;
  }();
  return schema;
}

const Constellation& seed() {
  static const Constellation full = [] {
    Constellation c = seed_schema();
    load_directory(c, data_dir());
    return c;
  }();
  return full;
}

Constellation three_agencies() {
  Constellation c;
  c.name = "LOUEVOYAGE";
  Dimension d = *seed_schema().find_dimension("AGENCES");
  auto add = [&d](const char* id, std::initializer_list<std::pair<const char*, Value>> values) {
    DimInstance inst = d.blank_instance(id);
    for (const auto& [name, v] : values) inst.values[*d.attribute_index(name)] = v;
    d.put(std::move(inst));
  };
  add("1", {{"Raison", Value::text("Agence Campus31")},
            {"Ville", Value::text("Toulouse")},
            {"Departement", Value::integer(31)},
            {"Nom_dpt", Value::text("Hte-Garonne")},
            {"Region", Value::text("Midi-Pyrénées")},
            {"Pays", Value::text("France")},
            {"Zone", Value::text("S-FR")},
            {"Enseigne", Value::text("Fram")}});
  add("2", {{"Raison", Value::text("Agence du Bouchon")},
            {"Ville", Value::text("Lyon")},
            {"Departement", Value::integer(69)},
            {"Nom_dpt", Value::text("Rhône")},
            {"Region", Value::text("Rhône-Alpes")},
            {"Pays", Value::text("France")},
            {"Zone", Value::text("E-FR")},
            {"Enseigne", Value::text("Fram")}});
  add("3", {{"Raison", Value::text("Big Appel Agency")},
            {"Ville", Value::text("New York")},
            {"Pays", Value::text("Etats-Unis")},
            {"Etat", Value::text("New York")},
            {"Zone", Value::text("E-US")},
            {"Enseigne", Value::text("Travel Express")}});
  c.dimensions.push_back(std::move(d));
  for (const auto& k : seed_schema().constraints) {
    if (k.scope == ConstraintScope::Intra) c.constraints.push_back(k);
  }
  return c;
}

}  // namespace mdolap::testing
