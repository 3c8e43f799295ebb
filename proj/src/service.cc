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

#include "omt/service.h"

#include <cstdlib>
#include <iostream>
#include <random>
#include <utility>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "omt/classifier.h"
#include "omt/lp_format.h"
#include "omt/owl.h"
#include "httplib.h"

namespace omt {
namespace {

using nlohmann::json;

constexpr char kJson[] = "application/json";

std::string NewSessionId() {
  std::random_device rd;
  std::string id;
  for (int i = 0; i < 4; ++i) {
    absl::StrAppend(&id, absl::StrFormat("%08x", rd()));
  }
  return id;
}

int HttpStatusFor(const absl::Status& s) {
  switch (s.code()) {
    case absl::StatusCode::kNotFound:
      return 404;
    case absl::StatusCode::kFailedPrecondition:
    case absl::StatusCode::kAlreadyExists:
      return 409;
    case absl::StatusCode::kInvalidArgument:
      return 400;
    default:
      return 500;
  }
}

void SendJson(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(2) + "\n", kJson);
}

void SendError(httplib::Response& res, int status, std::string_view code,
               std::string_view message,
               std::optional<std::string> path = std::nullopt,
               std::optional<int> step = std::nullopt) {
  SendJson(res, status, ErrorEnvelope(code, message, std::move(path), step));
}

void SendStatus(httplib::Response& res, const absl::Status& s,
                std::optional<int> step = std::nullopt) {
  SendError(res, HttpStatusFor(s), ErrorCode(s), std::string(s.message()), std::nullopt,
            step);
}

json SessionView(const Session& s) {
  json j = s.ToJson();
  absl::StatusOr<Question> q = s.CurrentQuestion();
  j["question"] = q.ok() ? q->ToJson() : json();
  j["placeholders"] = s.skeleton().placeholder_count();
  j["variables"] = s.skeleton().variables.size();
  int constraints = 0;
  for (const SkeletonEntry& e : s.skeleton().entries) {
    if (e.block.has_value()) constraints += e.block->constraints.size();
  }
  j["constraints"] = constraints;
  return j;
}

thread_local SessionStore::Clock::time_point request_start;

}  // namespace

json ErrorEnvelope(std::string_view code, std::string_view message,
                   std::optional<std::string> path, std::optional<int> step) {
  json j = {{"code", std::string(code)}, {"message", std::string(message)}};
  if (path.has_value()) j["path"] = *path;
  if (step.has_value()) j["step"] = *step;
  return j;
}

std::string ErrorCode(const absl::Status& status) {
  const std::string_view message(status.message().data(),
                                 status.message().size());
  for (std::string_view code : {kSessionComplete, kBackAtRoot, kSchemaMismatch,
                                kUnfilledPlaceholder, kEmptyModel}) {
    if (message.substr(0, code.size()) == code) return std::string(code);
  }
  switch (status.code()) {
    case absl::StatusCode::kNotFound:
      return "NOT_FOUND";
    case absl::StatusCode::kInvalidArgument:
      return "INVALID_ARGUMENT";
    case absl::StatusCode::kFailedPrecondition:
      return "FAILED_PRECONDITION";
    case absl::StatusCode::kAlreadyExists:
      return "ALREADY_EXISTS";
    default:
      return "INTERNAL";
  }
}

SessionStore::SessionStore(const OmtTree& tree, std::chrono::seconds ttl,
                           std::function<Clock::time_point()> now)
    : tree_(tree), ttl_(ttl), now_(std::move(now)) {}

std::shared_ptr<SessionStore::Entry> SessionStore::Create() {
  std::lock_guard<std::mutex> lock(mu_);
  const Clock::time_point now = now_();
  PurgeLocked(now);
  std::string id;
  do {
    id = NewSessionId();
  } while (sessions_.contains(id));
  auto entry = std::make_shared<Entry>(Session(tree_, id));
  entry->last_used = now;
  sessions_[id] = entry;
  return entry;
}

std::shared_ptr<SessionStore::Entry> SessionStore::Get(const std::string& id) {
  std::lock_guard<std::mutex> lock(mu_);
  const Clock::time_point now = now_();
  PurgeLocked(now);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) return nullptr;
  it->second->last_used = now;
  return it->second;
}

size_t SessionStore::size() {
  std::lock_guard<std::mutex> lock(mu_);
  PurgeLocked(now_());
  return sessions_.size();
}

void SessionStore::PurgeLocked(Clock::time_point now) {
  std::erase_if(sessions_, [&](const auto& kv) {
    return now - kv.second->last_used > ttl_;
  });
}

std::chrono::seconds SessionTtlFromEnv() {
  int64_t seconds = 86400;
  if (const char* v = std::getenv("OMT_SESSION_TTL_SECONDS")) {
    int64_t parsed;
    if (absl::SimpleAtoi(v, &parsed) && parsed > 0) seconds = parsed;
  }
  return std::chrono::seconds(seconds);
}

void RegisterRoutes(httplib::Server& server, const OmtTree& tree,
                    SessionStore& store) {
  server.set_pre_routing_handler(
      [](const httplib::Request&, httplib::Response&) {
        request_start = SessionStore::Clock::now();
        return httplib::Server::HandlerResponse::Unhandled;
      });
  server.set_logger([](const httplib::Request& req,
                       const httplib::Response& res) {
    const double ms = std::chrono::duration<double, std::milli>(
                          SessionStore::Clock::now() - request_start)
                          .count();
    const json line = {{"method", req.method},
                       {"path", req.path},
                       {"status", res.status},
                       {"ms", ms}};
    std::cerr << line.dump() << std::endl;
  });

  server.Get("/v1/health", [&tree](const httplib::Request&,
                                   httplib::Response& res) {
    SendJson(res, 200, {{"status", "ok"}, {"tree_version", tree.version}});
  });

  server.Get("/v1/omt", [&tree](const httplib::Request&,
                                httplib::Response& res) {
    res.set_content(WriteTree(tree), kJson);
  });

  server.Get("/v1/ontology.owl",
             [](const httplib::Request&, httplib::Response& res) {
               absl::StatusOr<std::string> owl = WriteOwl(DefaultOntology());
               if (!owl.ok()) return SendStatus(res, owl.status());
               res.set_content(*owl, "application/owl+xml");
             });

  server.Post("/v1/classify", [](const httplib::Request& req,
                                 httplib::Response& res) {
    if (req.body.empty()) {
      return SendError(res, 400, "PARSE_ERROR", "request body is empty");
    }
    absl::StatusOr<Model> m = ParseLp(req.body);
    if (!m.ok()) {
      return SendError(res, 400, "PARSE_ERROR", std::string(m.status().message()));
    }
    if (ValidationReport r = Validate(*m); !r.ok()) {
      return SendError(res, 422, "VALIDATION_ERROR", r.ToString());
    }
    res.set_content(ClassificationToJson(ClassifyModel(*m)), kJson);
  });

  server.Post("/v1/sessions", [&store](const httplib::Request&,
                                       httplib::Response& res) {
    std::shared_ptr<SessionStore::Entry> e = store.Create();
    std::lock_guard<std::mutex> lock(e->mu);
    SendJson(res, 201, SessionView(e->session));
  });

  server.Get(R"(/v1/sessions/([0-9a-f]+))",
             [&store](const httplib::Request& req, httplib::Response& res) {
               std::shared_ptr<SessionStore::Entry> e =
                   store.Get(req.matches[1]);
               if (e == nullptr) {
                 return SendError(res, 404, "NOT_FOUND", "unknown session",
                                  req.path);
               }
               std::lock_guard<std::mutex> lock(e->mu);
               SendJson(res, 200, SessionView(e->session));
             });

  server.Post(
      R"(/v1/sessions/([0-9a-f]+)/answers)",
      [&store](const httplib::Request& req, httplib::Response& res) {
        std::shared_ptr<SessionStore::Entry> e = store.Get(req.matches[1]);
        if (e == nullptr) {
          return SendError(res, 404, "NOT_FOUND", "unknown session", req.path);
        }
        json body;
        try {
          body = json::parse(req.body);
        } catch (const json::parse_error& err) {
          return SendError(res, 400, "PARSE_ERROR", err.what());
        }
        absl::StatusOr<Answer> a = Answer::FromJson(body);
        std::lock_guard<std::mutex> lock(e->mu);
        const int step = e->session.transcript().size();
        if (!a.ok()) return SendStatus(res, a.status(), step);
        if (absl::Status s = e->session.Apply(*a); !s.ok()) {
          return SendStatus(res, s, step);
        }
        SendJson(res, 200, SessionView(e->session));
      });

  server.Post(
      R"(/v1/sessions/([0-9a-f]+)/back)",
      [&store](const httplib::Request& req, httplib::Response& res) {
        std::shared_ptr<SessionStore::Entry> e = store.Get(req.matches[1]);
        if (e == nullptr) {
          return SendError(res, 404, "NOT_FOUND", "unknown session", req.path);
        }
        std::lock_guard<std::mutex> lock(e->mu);
        if (absl::Status s = e->session.Apply(Answer::Nav(Navigation::kBack));
            !s.ok()) {
          return SendStatus(res, s);
        }
        SendJson(res, 200, SessionView(e->session));
      });

  server.Get(
      R"(/v1/sessions/([0-9a-f]+)/model\.lp)",
      [&store](const httplib::Request& req, httplib::Response& res) {
        std::shared_ptr<SessionStore::Entry> e = store.Get(req.matches[1]);
        if (e == nullptr) {
          return SendError(res, 404, "NOT_FOUND", "unknown session", req.path);
        }
        std::lock_guard<std::mutex> lock(e->mu);
        absl::StatusOr<Model> m = e->session.EmitModel();
        if (!m.ok()) return SendStatus(res, m.status());
        res.set_content(WriteLp(*m), "text/plain");
      });

  server.set_error_handler([](const httplib::Request& req,
                              httplib::Response& res) {
    if (!res.body.empty()) return;
    SendError(res, res.status,
              res.status == 404 ? "NOT_FOUND" : "HTTP_ERROR",
              absl::StrCat("no route for ", req.method, " ", req.path),
              req.path);
  });
}

}  // namespace omt
