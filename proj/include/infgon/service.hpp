// Copyright 2026 The infgon Authors
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

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "infgon/json_io.hpp"
#include "infgon/plucker.hpp"

namespace httplib {
class Server;
}

namespace infgon {

struct HttpResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

/// Session store and request router, independent of any HTTP library.
class Service {
 public:
  using Clock = std::chrono::steady_clock;

  struct Options {
    std::chrono::seconds ttl{3600};
    Vertex budget = kDefaultWindowBudget;
    std::size_t max_sessions = 10000;
    std::function<Clock::time_point()> now = [] { return Clock::now(); };
  };

  Service();
  explicit Service(Options options);
  ~Service();

  HttpResponse handle(const std::string& method, const std::string& path,
                      const std::map<std::string, std::string>& query,
                      const std::string& body, const std::string& accept = "");

  std::size_t session_count() const;
  /// Drops sessions idle for longer than the TTL; returns how many.
  std::size_t evict_expired();

  /// Initial descriptor plus the applied and undone flips.
  Json snapshot(const std::string& id) const;
  /// Rebuilds a session from a snapshot; returns the new id.
  std::string restore(const Json& snapshot);

  static const Json& openapi();

 private:
  struct Session;

  std::shared_ptr<Session> find(const std::string& id) const;
  std::string create(const TriangulationDesc& initial);

  Options options_;
  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
};

/// Routes every request of `server` to `service`, with CORS headers.
void install_routes(httplib::Server& server, Service& service);

}  // namespace infgon
