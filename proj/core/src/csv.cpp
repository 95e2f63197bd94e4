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

#include "mdolap/csv.hpp"

#include "mdolap/error.hpp"

namespace mdolap {

std::vector<CsvRecord> read_csv(std::string_view text) {
  std::vector<CsvRecord> out;
  std::size_t i = 0;
  std::size_t line = 1;
  if (text.substr(0, 3) == "\xEF\xBB\xBF") i = 3;
  auto malformed = [&](const std::string& what) {
    throw Error(ErrorCode::MalformedCsv, "line " + std::to_string(line) + ": " + what);
  };
  while (i < text.size()) {
    CsvRecord rec;
    rec.line = line;
    std::string field;
    bool blank = true;  // nothing but the line terminator so far
    while (true) {
      if (i < text.size() && text[i] == '"') {
        blank = false;
        ++i;
        while (true) {
          if (i >= text.size()) malformed("unterminated quoted field");
          char c = text[i++];
          if (c == '"') {
            if (i < text.size() && text[i] == '"') {
              field += '"';
              ++i;
              continue;
            }
            break;
          }
          if (c == '\n') ++line;
          field += c;
        }
        if (i < text.size() && text[i] != ',' && text[i] != '\n' && text[i] != '\r') {
          malformed("unexpected character after closing quote");
        }
      } else {
        while (i < text.size() && text[i] != ',' && text[i] != '\n' && text[i] != '\r') {
          if (text[i] == '"') malformed("quote inside an unquoted field");
          field += text[i++];
          blank = false;
        }
      }
      rec.fields.push_back(std::move(field));
      field.clear();
      if (i < text.size() && text[i] == ',') {
        blank = false;
        ++i;
        continue;
      }
      break;
    }
    if (i < text.size() && text[i] == '\r') ++i;
    if (i < text.size() && text[i] == '\n') ++i;
    ++line;
    if (!blank) out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace mdolap
