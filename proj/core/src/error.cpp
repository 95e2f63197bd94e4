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

#include "mdolap/error.hpp"

namespace mdolap {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnknownAttribute: return "UnknownAttribute";
    case ErrorCode::UnknownHierarchy: return "UnknownHierarchy";
    case ErrorCode::UnknownDimension: return "UnknownDimension";
    case ErrorCode::UnknownFact: return "UnknownFact";
    case ErrorCode::UnknownParam: return "UnknownParam";
    case ErrorCode::NotMember: return "NotMember";
    case ErrorCode::DimensionNotLinked: return "DimensionNotLinked";
    case ErrorCode::NotCurrentDimension: return "NotCurrentDimension";
    case ErrorCode::NotCurrentHierarchy: return "NotCurrentHierarchy";
    case ErrorCode::NotAParameter: return "NotAParameter";
    case ErrorCode::NotFiner: return "NotFiner";
    case ErrorCode::NotCoarser: return "NotCoarser";
    case ErrorCode::AlreadyDisplayed: return "AlreadyDisplayed";
    case ErrorCode::SameDimension: return "SameDimension";
    case ErrorCode::InvalidConstraint: return "InvalidConstraint";
    case ErrorCode::InconsistentStore: return "InconsistentStore";
    case ErrorCode::EmptyGroup: return "EmptyGroup";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::InvalidValue: return "InvalidValue";
    case ErrorCode::MissingIdColumn: return "MissingIdColumn";
    case ErrorCode::MissingLinkColumn: return "MissingLinkColumn";
    case ErrorCode::MissingMeasureColumn: return "MissingMeasureColumn";
    case ErrorCode::MalformedCsv: return "MalformedCsv";
    case ErrorCode::MalformedSnapshot: return "MalformedSnapshot";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NoStore: return "NoStore";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string message, std::string subject)
    : std::runtime_error(std::move(message)), code_(code), subject_(std::move(subject)) {}

}  // namespace mdolap
