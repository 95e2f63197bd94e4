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

#include "mdolap/cli.hpp"

#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "mdolap/cells.hpp"
#include "mdolap/constraints.hpp"
#include "mdolap/error.hpp"
#include "mdolap/ingest.hpp"
#include "mdolap/query.hpp"
#include "mdolap/render.hpp"
#include "mdolap/service.hpp"
#include "mdolap/snapshot.hpp"
#include "mdolap/validation.hpp"

namespace mdolap::cli {

namespace {

std::string source_line(const std::string& source, std::size_t line) {
  std::size_t start = 0;
  for (std::size_t l = 1; l < line; ++l) {
    start = source.find('\n', start);
    if (start == std::string::npos) return {};
    ++start;
  }
  std::size_t end = source.find('\n', start);
  return source.substr(start, end == std::string::npos ? std::string::npos : end - start);
}

int io_failure(std::ostream& err, const Error& e) {
  err << "error: " << e.what() << "\n";
  return kIo;
}

int report_error(std::ostream& err, const Error& e, const std::string& source_name, const std::string& source) {
  if (e.code() == ErrorCode::Io || e.code() == ErrorCode::MalformedSnapshot) return io_failure(err, e);
  if (e.position() && e.position()->valid()) {
    print_diagnostic(err, source_name, source, dsl::Diagnostic{dsl::Severity::Error, e.what(), *e.position(), e.subject()});
  } else {
    err << "error: " << e.what() << "\n";
  }
  return kUsage;
}

std::optional<Constellation> read_schema(const std::string& path, std::ostream& err, int& code) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const Error& e) {
    code = io_failure(err, e);
    return std::nullopt;
  }
  auto parsed = dsl::parse_schema(text);
  if (!parsed.ok()) {
    for (const auto& d : parsed.diagnostics) print_diagnostic(err, path, text, d);
    code = kUsage;
    return std::nullopt;
  }
  return std::move(*parsed.value);
}

void print_load(std::ostream& out, const LoadReport& r) {
  out << r.target << ": read " << r.read << ", loaded " << r.loaded << ", rejected " << r.rejected.size() << "\n";
  for (const auto& row : r.rejected) out << "  line " << row.line << ": " << row.reason << "\n";
}

/// Loads CSVs when a data directory is given. Returns false after printing.
bool load_data(Constellation& c, const std::string& dir, std::ostream& out, std::ostream& err, int& code) {
  if (dir.empty()) return true;
  try {
    for (const auto& r : load_directory(c, dir)) print_load(out, r);
    return true;
  } catch (const Error& e) {
    code = e.code() == ErrorCode::Io ? kIo : kUsage;
    err << "error: " << e.what() << "\n";
    return false;
  }
}

void print_summary(std::ostream& out, const Constellation& c) {
  out << c.name << ": " << c.dimensions.size() << " dimensions, " << c.facts.size() << " facts, "
      << c.constraints.size() << " constraints\n";
}

void print_results(std::ostream& out, const std::vector<ConstraintResult>& results) {
  std::size_t held = 0;
  for (const auto& r : results) {
    if (r.holds) {
      ++held;
      out << "ok    " << r.constraint.describe() << "\n";
      continue;
    }
    out << "FAIL  " << r.constraint.describe();
    if (!r.diagnostic.empty()) {
      out << ": " << r.diagnostic << "\n";
      continue;
    }
    out << ": " << r.violations << (r.violations == 1 ? " violation" : " violations") << " (witnesses:";
    for (const auto& w : r.witnesses) out << " " << w;
    if (r.truncated) out << " ...";
    out << ")\n";
  }
  out << held << " of " << results.size() << " constraints hold\n";
}

int cmd_validate(const std::string& schema, const std::string& data, std::ostream& out, std::ostream& err) {
  int code = kOk;
  auto c = read_schema(schema, err, code);
  if (!c) return code;
  print_summary(out, *c);
  if (!load_data(*c, data, out, err, code)) return code;
  ValidationReport report = validate_schema(*c);
  for (const auto& e : report.errors) out << "error: " << e.code << ": " << e.message << "\n";
  for (const auto& n : report.notes) out << "note: " << n.code << ": " << n.message << "\n";
  auto results = check_all(*c);
  print_results(out, results);
  return report.well_formed() && all_hold(results) ? kOk : kViolations;
}

int cmd_load(const std::string& schema, const std::string& data, const std::string& snapshot, std::ostream& out,
             std::ostream& err) {
  int code = kOk;
  auto c = read_schema(schema, err, code);
  if (!c) return code;
  if (!load_data(*c, data, out, err, code)) return code;
  if (c->consistency == Consistency::Unchecked) {
    c->consistency = all_hold(check_all(*c)) ? Consistency::Consistent : Consistency::Inconsistent;
  }
  out << "store is " << to_string(c->consistency) << "\n";
  try {
    snapshot_write_file(*c, snapshot);
  } catch (const Error& e) {
    return io_failure(err, e);
  }
  out << "wrote " << snapshot << "\n";
  return kOk;
}

std::optional<Constellation> open_snapshot(const std::string& path, std::ostream& err, int& code) {
  if (path.empty()) {
    err << "error: no snapshot given (use --snapshot or set MDOLAP_SNAPSHOT)\n";
    code = kUsage;
    return std::nullopt;
  }
  try {
    return snapshot_read_file(path);
  } catch (const Error& e) {
    code = io_failure(err, e);
    return std::nullopt;
  }
}

int cmd_query(const std::string& snapshot, const std::string& expr, const std::string& mode_word, std::ostream& out,
              std::ostream& err) {
  int code = kOk;
  auto c = open_snapshot(snapshot, err, code);
  if (!c) return code;
  auto parsed = dsl::parse_query(expr);
  if (!parsed.ok()) {
    for (const auto& d : parsed.diagnostics) print_diagnostic(err, "<expr>", expr, d);
    return kUsage;
  }
  EvalMode mode = parse_eval_mode(mode_word).value_or(EvalMode::Strict);
  try {
    DimensionalTable t = evaluate_query(*c, **parsed.value, mode);
    out << render_text(t, compute_cells(*c, t));
  } catch (const Error& e) {
    return report_error(err, e, "<expr>", expr);
  }
  return kOk;
}

int cmd_repl(const std::string& snapshot, std::istream& in, std::ostream& out, std::ostream& err) {
  int code = kOk;
  auto c = open_snapshot(snapshot, err, code);
  if (!c) return code;
  ReplSession session(*c);
  run_repl(session, in, out, &in == &std::cin && isatty(STDIN_FILENO));
  return kOk;
}

int cmd_serve(const std::string& snapshot, int port, std::ostream& out, std::ostream& err) {
  int code = kOk;
  auto c = open_snapshot(snapshot, err, code);
  if (!c) return code;
  auto store = std::make_shared<Store>(std::move(*c));
  Service service(store);
  try {
    out << "serving http://127.0.0.1:" << port << "\n" << std::flush;
    service.serve("127.0.0.1", port);
  } catch (const Error& e) {
    return io_failure(err, e);
  }
  return kOk;
}

}  // namespace

void print_diagnostic(std::ostream& err, const std::string& source_name, const std::string& source,
                      const dsl::Diagnostic& d) {
  err << source_name << ":" << d.pos.line << ":" << d.pos.column << ": " << to_string(d.severity) << ": "
      << d.message << "\n";
  std::string line = source_line(source, d.pos.line);
  if (line.empty()) return;
  err << "  " << line << "\n  ";
  // The caret column counts code points; pad with one space per code point.
  std::size_t cp = 1;
  for (char ch : line) {
    if (cp >= d.pos.column) break;
    if ((static_cast<unsigned char>(ch) & 0xC0) == 0x80) continue;
    err << (ch == '\t' ? '\t' : ' ');
    ++cp;
  }
  err << "^\n";
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"In-memory OLAP engine for constrained constellations", "mdolap"};
  app.require_subcommand(1);

  std::string schema, data, snapshot, expr, mode = "strict";
  int port = 8080;
  auto snapshot_option = [&](CLI::App* sub) {
    sub->add_option("--snapshot", snapshot, "Snapshot file")->envname("MDOLAP_SNAPSHOT");
  };

  auto* validate = app.add_subcommand("validate", "Check a schema and, with --data, its constraints");
  validate->add_option("--schema", schema, "Schema file (.mdschema)")->required();
  validate->add_option("--data", data, "Directory holding <NAME>.csv files");

  auto* load = app.add_subcommand("load", "Load CSV data and write a snapshot");
  load->add_option("--schema", schema, "Schema file (.mdschema)")->required();
  load->add_option("--data", data, "Directory holding <NAME>.csv files")->required();
  load->add_option("--out", snapshot, "Snapshot to write")->required();

  auto* query = app.add_subcommand("query", "Evaluate a query expression and print the table");
  snapshot_option(query);
  query->add_option("--expr", expr, "Query expression")->required();
  query->add_option("--mode", mode, "Evaluation mode")
      ->check(CLI::IsMember({"strict", "legacy"}, CLI::ignore_case));

  auto* repl = app.add_subcommand("repl", "Interactive table navigation");
  snapshot_option(repl);

  auto* serve = app.add_subcommand("serve", "Serve the HTTP API");
  snapshot_option(serve);
  serve->add_option("--port", port, "TCP port")->check(CLI::Range(0, 65535));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  }

  std::transform(mode.begin(), mode.end(), mode.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (*validate) return cmd_validate(schema, data, out, err);
  if (*load) return cmd_load(schema, data, snapshot, out, err);
  if (*query) return cmd_query(snapshot, expr, mode, out, err);
  if (*repl) return cmd_repl(snapshot, in, out, err);
  return cmd_serve(snapshot, port, out, err);
}

}  // namespace mdolap::cli
