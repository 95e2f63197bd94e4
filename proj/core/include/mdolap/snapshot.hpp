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
#include <memory>
#include <mutex>
#include <string>
#include <string_view>

#include "mdolap/model.hpp"

namespace mdolap {

/// Deterministic JSON form of a whole constellation (sorted keys, two-space
/// indent, trailing newline).
std::string snapshot_save(const Constellation& c);

/// Throws Error(MalformedSnapshot) on malformed input, including structural
/// problems found by validate_schema. Nothing is returned on failure.
Constellation snapshot_load(std::string_view text);

void snapshot_write_file(const Constellation& c, const std::filesystem::path& path);
Constellation snapshot_read_file(const std::filesystem::path& path);

/// Holder of the current immutable snapshot. Readers keep whatever they
/// obtained from current() while a writer publishes a replacement.
class Store {
 public:
  Store() = default;
  explicit Store(Constellation c) { publish(std::move(c)); }

  std::shared_ptr<const Constellation> current() const;
  void publish(Constellation c);
  void publish(std::shared_ptr<const Constellation> c);

 private:
  mutable std::mutex mu_;
  std::shared_ptr<const Constellation> current_;
};

}  // namespace mdolap
