// Copyright 2026 The OMT Authors
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

#ifndef OMT_SERVICE_H_
#define OMT_SERVICE_H_

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "absl/status/status.h"
#include "json.hpp"
#include "omt/omt_tree.h"
#include "omt/session.h"

namespace httplib {
class Server;
}  // namespace httplib

namespace omt {

// {"code", "message"} plus "path" or "step" when known. Shared by the CLI
// --json output and every HTTP error response.
nlohmann::json ErrorEnvelope(std::string_view code, std::string_view message,
                             std::optional<std::string> path = std::nullopt,
                             std::optional<int> step = std::nullopt);

// Envelope code for a status: the leading "CODE:" of session errors, else a
// name derived from the status code.
std::string ErrorCode(const absl::Status& status);

// Live sessions keyed by an unguessable id. Each entry carries its own mutex;
// callers hold it while reading or mutating the session. Sessions idle for
// longer than the TTL are purged on access.
class SessionStore {
 public:
  using Clock = std::chrono::steady_clock;

  struct Entry {
    std::mutex mu;
    Session session;
    Clock::time_point last_used;

    explicit Entry(Session s) : session(std::move(s)) {}
  };

  SessionStore(const OmtTree& tree, std::chrono::seconds ttl,
               std::function<Clock::time_point()> now = Clock::now);

  std::shared_ptr<Entry> Create();
  // nullptr when unknown or expired. Refreshes the idle timer.
  std::shared_ptr<Entry> Get(const std::string& id);
  size_t size();

 private:
  void PurgeLocked(Clock::time_point now);

  const OmtTree& tree_;
  std::chrono::seconds ttl_;
  std::function<Clock::time_point()> now_;
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
};

// TTL from OMT_SESSION_TTL_SECONDS, default one day.
std::chrono::seconds SessionTtlFromEnv();

// Registers the /v1 endpoints on `server`. The tree and store must outlive
// the server. Each request is logged to stderr as one JSON line.
void RegisterRoutes(httplib::Server& server, const OmtTree& tree,
                    SessionStore& store);

}  // namespace omt

#endif  // OMT_SERVICE_H_
