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

#include <iostream>
#include <sstream>

#include "mdolap/cells.hpp"
#include "mdolap/cli.hpp"
#include "mdolap/error.hpp"
#include "mdolap/query.hpp"
#include "mdolap/render.hpp"

namespace mdolap::cli {

namespace {

constexpr const char* kHelp =
    "commands:\n"
    "  display FACT ROWDIM COLDIM ROWHIER COLHIER\n"
    "  expr EXPRESSION\n"
    "  drill DIM PARAM | roll DIM PARAM\n"
    "  hrotate DIM FROM TO [true|false]\n"
    "  drotate FROM TO HIER [true|false]\n"
    "  mode strict|legacy | show | undo | reset | help | quit\n";

std::vector<std::string> words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::optional<bool> flag_word(const std::vector<std::string>& w, std::size_t i, bool& bad) {
  if (w.size() <= i) return std::nullopt;
  if (w[i] == "true") return true;
  if (w[i] == "false") return false;
  bad = true;
  return std::nullopt;
}

dsl::QueryPtr innermost(dsl::QueryPtr cur) {
  while (cur->input()) {
    cur = std::visit(
        [](const auto& n) -> dsl::QueryPtr {
          if constexpr (std::is_same_v<std::decay_t<decltype(n)>, dsl::DisplayNode>) {
            return nullptr;
          } else {
            return n.input;
          }
        },
        cur->node);
  }
  return cur;
}

}  // namespace

ReplSession::ReplSession(const Constellation& c) : c_(c) {}

void ReplSession::show(std::ostream& out) const {
  if (!current_) {
    out << "no current expression; start with display or expr\n";
    return;
  }
  out << "expr: " << dsl::format_query(*current_) << "\n";
  try {
    DimensionalTable t = evaluate_query(c_, *current_, mode_);
    out << render_text(t, compute_cells(c_, t));
  } catch (const Error& e) {
    out << "error: " << e.what() << "\n";
  }
}

void ReplSession::replace(dsl::QueryPtr next, std::ostream& out) {
  try {
    DimensionalTable t = evaluate_query(c_, *next, mode_);
    compute_cells(c_, t);
  } catch (const Error& e) {
    out << "error: " << e.what() << "\n";
    return;
  }
  history_.push_back(current_);
  current_ = std::move(next);
  show(out);
}

bool ReplSession::execute(const std::string& line, std::ostream& out) {
  auto w = words(line);
  if (w.empty()) return true;
  const std::string& cmd = w.front();
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (w.size() - 1 >= lo && w.size() - 1 <= hi) return true;
    out << "usage: " << cmd << " takes " << lo << (lo == hi ? "" : "-" + std::to_string(hi)) << " arguments\n";
    return false;
  };
  auto need_current = [&] {
    if (current_) return true;
    out << "no current expression; start with display or expr\n";
    return false;
  };

  if (cmd == "quit" || cmd == "exit") return false;
  if (cmd == "help") {
    out << kHelp;
  } else if (cmd == "show") {
    show(out);
  } else if (cmd == "display") {
    if (need(5, 5)) replace(dsl::make_display(w[1], w[2], w[3], w[4], w[5]), out);
  } else if (cmd == "expr") {
    std::string text = line.substr(line.find("expr") + 4);
    auto parsed = dsl::parse_query(text);
    if (!parsed.ok()) {
      print_diagnostic(out, "<expr>", text, parsed.diagnostics.front());
    } else {
      replace(*parsed.value, out);
    }
  } else if (cmd == "drill" || cmd == "roll") {
    if (need(2, 2) && need_current()) {
      replace(cmd == "drill" ? dsl::make_drilldown(current_, w[1], w[2]) : dsl::make_rollup(current_, w[1], w[2]),
              out);
    }
  } else if (cmd == "hrotate" || cmd == "drotate") {
    if (need(3, 4) && need_current()) {
      bool bad = false;
      auto flag = flag_word(w, 4, bad);
      if (bad) {
        out << "error: flag must be true or false\n";
      } else if (cmd == "hrotate") {
        replace(dsl::make_hrotate(current_, w[1], w[2], w[3], flag), out);
      } else {
        replace(dsl::make_drotate(current_, w[1], w[2], w[3], flag), out);
      }
    }
  } else if (cmd == "mode") {
    auto m = w.size() == 2 ? parse_eval_mode(w[1]) : std::nullopt;
    if (!m) {
      out << "usage: mode strict|legacy\n";
    } else {
      mode_ = *m;
      show(out);
    }
  } else if (cmd == "undo") {
    if (history_.empty()) {
      out << "nothing to undo\n";
    } else {
      current_ = history_.back();
      history_.pop_back();
      show(out);
    }
  } else if (cmd == "reset") {
    if (need_current()) replace(innermost(current_), out);
  } else {
    out << "unknown command '" << cmd << "' (try help)\n";
  }
  return true;
}

void run_repl(ReplSession& session, std::istream& in, std::ostream& out, bool prompt) {
  std::string line;
  while (true) {
    if (prompt) out << "mdolap> " << std::flush;
    if (!std::getline(in, line)) break;
    if (!session.execute(line, out)) break;
  }
}

}  // namespace mdolap::cli
