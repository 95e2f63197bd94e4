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

#include <filesystem>
#include <string>

#include "mdolap/model.hpp"

namespace mdolap::testing {

std::filesystem::path source_dir();
std::filesystem::path data_dir();  // data/louevoyage
std::filesystem::path schema_path();
std::filesystem::path golden_dir();
std::filesystem::path cli_path();

/// The LOUEVOYAGE schema without instances.
const Constellation& seed_schema();
/// Schema plus every CSV of the seed dataset.
const Constellation& seed();

/// AGENCES with the three agencies written out in the running example
/// (the third one under id 3) and the intra-dimension constraints only.
Constellation three_agencies();

std::string read_text(const std::filesystem::path& p);

}  // namespace mdolap::testing
