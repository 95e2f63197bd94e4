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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mdolap {

enum class ErrorCode {
  UnknownAttribute,
  UnknownHierarchy,
  UnknownDimension,
  UnknownFact,
  UnknownParam,
  NotMember,
  DimensionNotLinked,
  NotCurrentDimension,
  NotCurrentHierarchy,
  NotAParameter,
  NotFiner,
  NotCoarser,
  AlreadyDisplayed,
  SameDimension,
  InvalidConstraint,
  InconsistentStore,
  EmptyGroup,
  TypeMismatch,
  InvalidValue,
  MissingIdColumn,
  MissingLinkColumn,
  MissingMeasureColumn,
  MalformedCsv,
  MalformedSnapshot,
  ParseError,
  NoStore,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// 1-based line/column into a DSL source.
struct SourcePos {
  std::size_t line = 0;
  std::size_t column = 0;

  bool valid() const noexcept { return line > 0; }
  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

/// The single exception type thrown by the engine. `subject` names the
/// offending schema element (attribute, hierarchy, ...) when there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::string subject = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string& subject() const noexcept { return subject_; }
  const std::optional<SourcePos>& position() const noexcept { return pos_; }

  Error& at(SourcePos pos) {
    pos_ = pos;
    return *this;
  }

 private:
  ErrorCode code_;
  std::string subject_;
  std::optional<SourcePos> pos_;
};

}  // namespace mdolap
