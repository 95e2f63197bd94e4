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

#include "mdolap/service.hpp"

#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "mdolap/cells.hpp"
#include "mdolap/constraints.hpp"
#include "mdolap/dsl.hpp"
#include "mdolap/error.hpp"
#include "mdolap/query.hpp"
#include "mdolap/render.hpp"
#include "mdolap/serialize.hpp"

namespace mdolap {

using nlohmann::json;

struct Service::Server {
  httplib::Server http;
  std::thread thread;
};

namespace {

HttpResponse ok(const json& j) { return {200, j.dump()}; }

HttpResponse failure(int status, std::string_view code, const std::string& message,
                     std::optional<SourcePos> pos = std::nullopt) {
  json err = {{"code", code}, {"message", message}};
  if (pos && pos->valid()) {
    err["line"] = pos->line;
    err["column"] = pos->column;
  }
  return {status, json{{"error", std::move(err)}}.dump()};
}

int status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InconsistentStore: return 409;
    case ErrorCode::NoStore: return 503;
    case ErrorCode::Io: return 500;
    default: return 400;
  }
}

HttpResponse no_store() { return failure(503, to_string(ErrorCode::NoStore), "no snapshot is loaded"); }

HttpResponse schema(const Constellation& c) {
  json j = schema_to_json(c);
  auto results = check_all(c);
  for (std::size_t i = 0; i < results.size(); ++i) {
    j["constraints"][i]["holds"] = results[i].holds;
    j["constraints"][i]["violations"] = results[i].violations;
  }
  return ok(j);
}

HttpResponse query(const Constellation& c, std::string_view body) {
  json req;
  try {
    req = json::parse(body);
  } catch (const json::parse_error& e) {
    return failure(400, "BadRequest", std::string("request body is not JSON: ") + e.what());
  }
  if (!req.is_object()) return failure(400, "BadRequest", "request body must be a JSON object");
  bool has_text = req.contains("query");
  bool has_expr = req.contains("expr");
  if (has_text == has_expr) return failure(400, "BadRequest", "exactly one of 'query' and 'expr' is required");

  EvalMode mode = EvalMode::Strict;
  if (auto it = req.find("mode"); it != req.end() && !it->is_null()) {
    auto m = it->is_string() ? parse_eval_mode(it->get<std::string>()) : std::nullopt;
    if (!m) return failure(400, "BadRequest", "'mode' must be STRICT or LEGACY");
    mode = *m;
  }
  bool override_flag = false;
  if (auto it = req.find("override"); it != req.end() && !it->is_null()) {
    if (!it->is_boolean()) return failure(400, "BadRequest", "'override' must be a boolean");
    override_flag = it->get<bool>();
  }

  try {
    dsl::QueryPtr expr;
    if (has_text) {
      if (!req["query"].is_string()) return failure(400, "BadRequest", "'query' must be a string");
      auto parsed = dsl::parse_query(req["query"].get<std::string>());
      if (!parsed.ok()) {
        const auto& d = parsed.diagnostics.front();
        return failure(400, to_string(ErrorCode::ParseError), d.message, d.pos);
      }
      expr = *parsed.value;
    } else {
      expr = dsl::query_from_json(req["expr"]);
    }
    DimensionalTable t = evaluate_query(c, *expr, mode);
    CellGrid grid = compute_cells(c, t, ComputeOptions{override_flag});
    json out = table_to_json(t, grid);
    out["expression"] = dsl::format_query(*expr);
    out["text"] = render_text(t, grid);
    return ok(out);
  } catch (const Error& e) {
    return failure(status_of(e.code()), to_string(e.code()), e.what(), e.position());
  }
}

}  // namespace

Service::Service(std::shared_ptr<Store> store) : store_(std::move(store)) {}

Service::~Service() { stop(); }

HttpResponse Service::handle(std::string_view method, std::string_view path, std::string_view body) const {
  const bool get = method == "GET";
  const bool post = method == "POST";
  if (path != "/health" && path != "/schema" && path != "/validate" && path != "/query") {
    return failure(404, "NotFound", "no such endpoint: " + std::string(path));
  }
  const bool want_get = path == "/health" || path == "/schema";
  if ((want_get && !get) || (!want_get && !post)) {
    return failure(405, "MethodNotAllowed", std::string(method) + " is not allowed on " + std::string(path));
  }
  auto snap = store_ ? store_->current() : nullptr;
  if (path == "/health") {
    json j = {{"status", "ok"}, {"loaded", snap != nullptr}};
    if (snap) {
      j["name"] = snap->name;
      j["consistency"] = to_string(snap->consistency);
    }
    return ok(j);
  }
  if (!snap) return no_store();
  if (path == "/schema") return schema(*snap);
  if (path == "/validate") return ok(results_to_json(check_all(*snap)));
  return query(*snap, body);
}

namespace {

void install_routes(httplib::Server& http, const Service& svc) {
  auto forward = [&svc](const httplib::Request& req, httplib::Response& res) {
    HttpResponse r = svc.handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body, "application/json");
  };
  for (const char* path : {"/health", "/schema", "/validate", "/query"}) {
    http.Get(path, forward);
    http.Post(path, forward);
  }
  http.set_error_handler([&svc](const httplib::Request& req, httplib::Response& res) {
    if (!res.body.empty()) return;
    HttpResponse r = svc.handle(req.method, req.path, req.body);
    res.status = r.status;
    res.set_content(r.body, "application/json");
  });
}

}  // namespace

void Service::serve(const std::string& host, int port) {
  stop();
  auto srv = std::make_shared<Server>();
  install_routes(srv->http, *this);
  bool bound = port == 0 ? srv->http.bind_to_any_port(host) > 0 : srv->http.bind_to_port(host, port);
  if (!bound) throw Error(ErrorCode::Io, "cannot bind " + host + ":" + std::to_string(port));
  server_ = srv;
  srv->http.listen_after_bind();
}

int Service::start(const std::string& host, int port) {
  stop();
  server_ = std::make_shared<Server>();
  install_routes(server_->http, *this);
  int bound = port;
  if (port == 0) {
    bound = server_->http.bind_to_any_port(host);
    if (bound <= 0) throw Error(ErrorCode::Io, "cannot bind " + host);
  } else if (!server_->http.bind_to_port(host, port)) {
    throw Error(ErrorCode::Io, "cannot bind " + host + ":" + std::to_string(port));
  }
  server_->thread = std::thread([srv = server_.get()] { srv->http.listen_after_bind(); });
  server_->http.wait_until_ready();
  return bound;
}

void Service::stop() {
  if (!server_) return;
  server_->http.stop();
  if (server_->thread.joinable()) server_->thread.join();
  server_.reset();
}

}  // namespace mdolap
