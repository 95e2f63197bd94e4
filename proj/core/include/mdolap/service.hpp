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

#include <memory>
#include <string>
#include <string_view>

#include "mdolap/snapshot.hpp"

namespace mdolap {

struct HttpResponse {
  int status = 200;
  std::string body;  // JSON
};

/// Stateless JSON facade over a Store: GET /health, GET /schema,
/// POST /validate and POST /query. Error bodies have the shape
/// {"error": {"code", "message"[, "line", "column"]}}.
class Service {
 public:
  explicit Service(std::shared_ptr<Store> store);
  ~Service();

  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  /// Routes one request without any networking.
  HttpResponse handle(std::string_view method, std::string_view path, std::string_view body) const;

  /// Binds and serves until stop(); port 0 picks a free port. Blocks.
  /// Throws Error(Io) when the address cannot be bound.
  void serve(const std::string& host, int port);

  /// Binds, then serves on a background thread. Returns the bound port.
  int start(const std::string& host, int port = 0);
  void stop();

 private:
  struct Server;
  std::shared_ptr<Store> store_;
  std::shared_ptr<Server> server_;
};

}  // namespace mdolap
