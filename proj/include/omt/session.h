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

#ifndef OMT_SESSION_H_
#define OMT_SESSION_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "json.hpp"
#include "omt/constraint_library.h"
#include "omt/model.h"
#include "omt/omt_tree.h"

namespace omt {

// Status messages of session errors start with one of these codes.
inline constexpr std::string_view kSessionComplete = "SESSION_COMPLETE";
inline constexpr std::string_view kBackAtRoot = "BACK_AT_ROOT";
inline constexpr std::string_view kSchemaMismatch = "SCHEMA_MISMATCH";
inline constexpr std::string_view kUnfilledPlaceholder = "UNFILLED_PLACEHOLDER";
inline constexpr std::string_view kEmptyModel = "EMPTY_MODEL";

enum class Navigation { kBack, kRestartBranch, kFinishBranch };

// JSON forms: {"choice": 2}, {"params": {...}}, {"nav": "BACK"}.
struct Answer {
  enum class Kind { kChoice, kParams, kNavigation };

  Kind kind = Kind::kChoice;
  int choice = 0;
  nlohmann::json params = nlohmann::json::object();
  Navigation nav = Navigation::kBack;

  static Answer Choice(int index);
  static Answer Params(nlohmann::json params);
  static Answer Nav(Navigation nav);

  nlohmann::json ToJson() const;
  static absl::StatusOr<Answer> FromJson(const nlohmann::json& j);

  friend bool operator==(const Answer&, const Answer&) = default;
};

struct TranscriptEntry {
  int node_id;
  Answer answer;
  friend bool operator==(const TranscriptEntry&, const TranscriptEntry&) =
      default;
};

// A constraint leaf answered so far. `block` is empty while the parameters
// hold placeholders.
struct SkeletonEntry {
  int node_id;
  std::string builder;
  nlohmann::json params;
  std::optional<BuiltBlock> block;
};

struct Skeleton {
  std::vector<Variable> variables;
  std::optional<Objective> objective;
  bool objective_pending = false;
  std::vector<SkeletonEntry> entries;

  // Declared variables, objective and the constraints built so far.
  Model ToModel() const;
  int placeholder_count() const;
};

struct Question {
  int node_id;
  std::string label;
  std::string text;
  bool is_leaf;
  std::vector<std::string> choices;  // child labels
  std::vector<LeafParam> params;     // leaf schema

  nlohmann::json ToJson() const;
};

// Walks a tree one answer at a time. The state is a pure function of the
// transcript; BACK removes the last entry and replays the rest. The tree
// must outlive the session.
class Session {
 public:
  Session(const OmtTree& tree, std::string id);
  // A session with a fresh random id.
  static Session Start(const OmtTree& tree);

  const std::string& id() const { return id_; }
  const std::string& tree_version() const { return tree_->version; }
  int cursor() const { return state_.cursor; }
  bool complete() const { return state_.complete; }
  const std::vector<TranscriptEntry>& transcript() const { return transcript_; }
  const Skeleton& skeleton() const { return state_.skeleton; }

  absl::StatusOr<Question> CurrentQuestion() const;

  // Leaves the session unchanged on error.
  absl::Status Apply(const Answer& answer);

  absl::StatusOr<Model> EmitModel() const;

  // {"id", "tree_version", "cursor", "complete", "transcript"}.
  nlohmann::json ToJson() const;
  // Rebuilds a session by replaying the transcript of an export.
  static absl::StatusOr<Session> FromJson(const OmtTree& tree,
                                          const nlohmann::json& j);

 private:
  struct State {
    int cursor = 0;
    bool complete = false;
    std::vector<int> path;  // root .. cursor
    Skeleton skeleton;
    BuildContext ctx;
  };

  absl::Status Step(State& state, const Answer& answer) const;
  State Fresh() const;

  const OmtTree* tree_;
  std::string id_;
  std::vector<TranscriptEntry> transcript_;
  State state_;
};

struct ReplayResult {
  absl::StatusOr<Model> model;
  int failed_step = -1;  // index of the first rejected answer
};

// Folds `script` over a fresh session and emits the model. Errors raised by
// an answer carry "step <k>: " and set failed_step.
ReplayResult Replay(const OmtTree& tree, std::span<const Answer> script);

// A script document is either a JSON array of answers or {"answers": [...]}.
absl::StatusOr<std::vector<Answer>> ParseScript(std::string_view json_text);

}  // namespace omt

#endif  // OMT_SESSION_H_
