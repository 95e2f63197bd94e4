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

#include <iosfwd>
#include <string>
#include <vector>

#include "mdolap/algebra.hpp"
#include "mdolap/dsl.hpp"
#include "mdolap/model.hpp"

namespace mdolap::cli {

enum ExitCode : int { kOk = 0, kViolations = 1, kUsage = 2, kIo = 3 };

/// Runs the command line `args` (args[0] is the program name). `in` feeds
/// the REPL. Never throws.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Prints `source:line:col: error: msg`, the offending line and a caret.
void print_diagnostic(std::ostream& err, const std::string& source_name, const std::string& source,
                      const dsl::Diagnostic& d);

/// Interactive state: the current expression plus an undo history. The
/// snapshot is only read.
class ReplSession {
 public:
  explicit ReplSession(const Constellation& c);

  /// Executes one command line; returns false after `quit`.
  bool execute(const std::string& line, std::ostream& out);

  const dsl::QueryPtr& current() const noexcept { return current_; }
  EvalMode mode() const noexcept { return mode_; }
  std::size_t depth() const noexcept { return history_.size(); }

 private:
  void replace(dsl::QueryPtr next, std::ostream& out);
  void show(std::ostream& out) const;

  const Constellation& c_;
  dsl::QueryPtr current_;
  std::vector<dsl::QueryPtr> history_;
  EvalMode mode_ = EvalMode::Strict;
};

/// Reads commands until end of input or `quit`.
void run_repl(ReplSession& session, std::istream& in, std::ostream& out, bool prompt);

}  // namespace mdolap::cli
