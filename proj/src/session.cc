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

#include "omt/session.h"

#include <random>
#include <set>
#include <utility>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "omt/builders.h"

namespace omt {
namespace {

using nlohmann::json;

absl::Status Coded(std::string_view code, std::string_view message) {
  return absl::FailedPreconditionError(
      absl::StrCat(std::string(code), ": ", std::string(message)));
}

absl::Status Mismatch(std::string_view message) {
  return absl::InvalidArgumentError(
      absl::StrCat(std::string(kSchemaMismatch), ": ", std::string(message)));
}

std::string_view NavName(Navigation nav) {
  switch (nav) {
    case Navigation::kBack:
      return "BACK";
    case Navigation::kRestartBranch:
      return "RESTART_BRANCH";
    case Navigation::kFinishBranch:
      return "FINISH_BRANCH";
  }
  return "";
}

std::string RandomId() {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  return absl::StrFormat("%016x%016x", rng(), rng());
}

}  // namespace

Answer Answer::Choice(int index) {
  Answer a;
  a.kind = Kind::kChoice;
  a.choice = index;
  return a;
}

Answer Answer::Params(json params) {
  Answer a;
  a.kind = Kind::kParams;
  a.params = std::move(params);
  return a;
}

Answer Answer::Nav(Navigation nav) {
  Answer a;
  a.kind = Kind::kNavigation;
  a.nav = nav;
  return a;
}

json Answer::ToJson() const {
  switch (kind) {
    case Kind::kChoice:
      return {{"choice", choice}};
    case Kind::kParams:
      return {{"params", params}};
    case Kind::kNavigation:
      return {{"nav", std::string(NavName(nav))}};
  }
  return json();
}

absl::StatusOr<Answer> Answer::FromJson(const json& j) {
  if (!j.is_object() || j.size() != 1) {
    return Mismatch("an answer is an object with one of choice, params, nav");
  }
  if (j.contains("choice")) {
    if (!j.at("choice").is_number_integer()) {
      return Mismatch("choice must be an integer");
    }
    return Choice(j.at("choice").get<int>());
  }
  if (j.contains("params")) {
    if (!j.at("params").is_object()) return Mismatch("params must be an object");
    return Params(j.at("params"));
  }
  if (j.contains("nav") && j.at("nav").is_string()) {
    const std::string name = j.at("nav").get<std::string>();
    for (Navigation n : {Navigation::kBack, Navigation::kRestartBranch,
                         Navigation::kFinishBranch}) {
      if (NavName(n) == name) return Nav(n);
    }
  }
  return Mismatch("unknown answer");
}

Model Skeleton::ToModel() const {
  Model m;
  m.variables = variables;
  if (objective.has_value()) m.objective = *objective;
  for (const SkeletonEntry& e : entries) {
    if (!e.block.has_value()) continue;
    for (const Variable& v : e.block->aux_variables) m.variables.push_back(v);
    for (const Constraint& c : e.block->constraints) m.constraints.push_back(c);
  }
  return m;
}

int Skeleton::placeholder_count() const {
  int n = objective_pending ? 1 : 0;
  for (const SkeletonEntry& e : entries) n += e.block.has_value() ? 0 : 1;
  return n;
}

json Question::ToJson() const {
  json j = {{"node_id", node_id},
            {"label", label},
            {"question", text},
            {"kind", is_leaf ? "params" : "choice"}};
  if (is_leaf) {
    json params = json::array();
    for (const LeafParam& p : this->params) {
      json pj = {{"name", p.spec.name},
                 {"type", std::string(ParamTypeName(p.spec.type))},
                 {"required", p.spec.required}};
      if (!p.spec.choices.empty()) pj["choices"] = p.spec.choices;
      if (p.default_value.has_value()) pj["default"] = *p.default_value;
      params.push_back(std::move(pj));
    }
    j["params"] = std::move(params);
  } else {
    j["choices"] = choices;
  }
  return j;
}

Session::Session(const OmtTree& tree, std::string id)
    : tree_(&tree), id_(std::move(id)), state_(Fresh()) {}

Session Session::Start(const OmtTree& tree) { return Session(tree, RandomId()); }

Session::State Session::Fresh() const {
  State s;
  s.cursor = tree_->root;
  s.path = {tree_->root};
  return s;
}

absl::StatusOr<Question> Session::CurrentQuestion() const {
  if (state_.complete) return Coded(kSessionComplete, "session is finished");
  const OmtNode& n = tree_->nodes.at(state_.cursor);
  Question q{n.id, n.label, n.question, n.is_leaf(), {}, {}};
  if (n.is_leaf()) {
    q.params = n.builder_ref->params;
  } else {
    for (int c : n.children) q.choices.push_back(tree_->nodes.at(c).label);
  }
  return q;
}

absl::Status Session::Step(State& s, const Answer& a) const {
  if (s.complete) return Coded(kSessionComplete, "session is finished");
  const OmtNode& node = tree_->nodes.at(s.cursor);
  switch (a.kind) {
    case Answer::Kind::kChoice: {
      if (node.is_leaf()) return Mismatch("this question expects parameters");
      if (a.choice < 0 || a.choice >= static_cast<int>(node.children.size())) {
        return Mismatch(absl::StrCat("choice ", a.choice, " out of range [0, ",
                                     node.children.size(), ")"));
      }
      s.cursor = node.children[a.choice];
      s.path.push_back(s.cursor);
      return absl::OkStatus();
    }
    case Answer::Kind::kParams: {
      if (!node.is_leaf()) return Mismatch("this question expects a choice");
      const BuilderRef& ref = *node.builder_ref;
      json params = a.params;
      for (const LeafParam& p : ref.params) {
        if (!params.contains(p.spec.name) && p.default_value.has_value()) {
          params[p.spec.name] = *p.default_value;
        }
      }
      if (absl::Status st = CheckParams(ref.Schema(), params); !st.ok()) {
        return Mismatch(std::string(st.message()));
      }
      if (ref.name == "declare_variables") {
        if (HasPlaceholder(params)) {
          return Mismatch("variable names cannot be placeholders");
        }
        absl::StatusOr<std::vector<Variable>> vars =
            DeclaredVariables(params, ref.preset);
        if (!vars.ok()) return vars.status();
        std::set<std::string> seen;
        for (const Variable& v : *vars) {
          if (s.ctx.FindVariable(v.Id()) != nullptr || !seen.insert(v.Id()).second) {
            return absl::AlreadyExistsError(
                absl::StrCat("variable '", v.Id(), "' already declared"));
          }
        }
        Model probe;
        probe.variables = *vars;
        if (ValidationReport r = Validate(probe); !r.ok()) {
          return absl::InvalidArgumentError(r.ToString());
        }
        for (const Variable& v : *vars) {
          s.ctx.AddVariable(v);
          s.skeleton.variables.push_back(v);
        }
      } else if (ref.name == "set_objective") {
        if (HasPlaceholder(params)) {
          s.skeleton.objective.reset();
          s.skeleton.objective_pending = true;
        } else {
          absl::StatusOr<Objective> obj = ObjectiveFromParams(params, ref.preset);
          if (!obj.ok()) return obj.status();
          for (const Term& t : obj->expr.terms()) {
            if (s.ctx.FindVariable(t.variable) == nullptr) {
              return absl::NotFoundError(
                  absl::StrCat("undeclared variable '", t.variable, "'"));
            }
          }
          s.skeleton.objective = *std::move(obj);
          s.skeleton.objective_pending = false;
        }
      } else {
        SkeletonEntry entry{node.id, ref.name, params, std::nullopt};
        if (!HasPlaceholder(params)) {
          absl::StatusOr<BuiltBlock> block =
              InvokeBuilder(s.ctx, ref.name, params, ref.preset);
          if (!block.ok()) return block.status();
          s.ctx.Commit(*block);
          entry.block = *std::move(block);
        }
        s.skeleton.entries.push_back(std::move(entry));
      }
      s.cursor = tree_->root;
      s.path = {tree_->root};
      return absl::OkStatus();
    }
    case Answer::Kind::kNavigation:
      switch (a.nav) {
        case Navigation::kBack:
          return absl::InternalError("BACK is not a forward step");
        case Navigation::kRestartBranch:
          if (s.path.size() < 2) return Mismatch("no branch to restart");
          s.path.resize(2);
          s.cursor = s.path.back();
          return absl::OkStatus();
        case Navigation::kFinishBranch:
          if (s.cursor == tree_->root) {
            s.complete = true;
          } else {
            s.cursor = tree_->root;
            s.path = {tree_->root};
          }
          return absl::OkStatus();
      }
  }
  return absl::OkStatus();
}

absl::Status Session::Apply(const Answer& answer) {
  if (answer.kind == Answer::Kind::kNavigation &&
      answer.nav == Navigation::kBack) {
    if (transcript_.empty()) {
      return Coded(kBackAtRoot, "nothing to undo");
    }
    State s = Fresh();
    for (size_t i = 0; i + 1 < transcript_.size(); ++i) {
      if (absl::Status st = Step(s, transcript_[i].answer); !st.ok()) {
        return absl::InternalError(
            absl::StrCat("replay diverged at step ", i, ": ", st.message()));
      }
    }
    transcript_.pop_back();
    state_ = std::move(s);
    return absl::OkStatus();
  }
  State s = state_;
  const int node = s.cursor;
  if (absl::Status st = Step(s, answer); !st.ok()) return st;
  state_ = std::move(s);
  transcript_.push_back({node, answer});
  return absl::OkStatus();
}

absl::StatusOr<Model> Session::EmitModel() const {
  const Skeleton& sk = state_.skeleton;
  if (sk.placeholder_count() > 0) {
    return Coded(kUnfilledPlaceholder,
                 absl::StrCat(sk.placeholder_count(),
                              " answer(s) still hold placeholders"));
  }
  if (sk.variables.empty()) {
    return Coded(kEmptyModel, "no decision variables declared");
  }
  Model m = sk.ToModel();
  if (ValidationReport r = Validate(m); !r.ok()) {
    return absl::InvalidArgumentError(r.ToString());
  }
  return m;
}

json Session::ToJson() const {
  json transcript = json::array();
  for (const TranscriptEntry& e : transcript_) {
    transcript.push_back({{"node", e.node_id}, {"answer", e.answer.ToJson()}});
  }
  return {{"id", id_},
          {"tree_version", tree_->version},
          {"cursor", state_.cursor},
          {"complete", state_.complete},
          {"transcript", std::move(transcript)}};
}

absl::StatusOr<Session> Session::FromJson(const OmtTree& tree, const json& j) {
  if (!j.is_object() || !j.contains("id") || !j.at("id").is_string() ||
      !j.contains("transcript") || !j.at("transcript").is_array()) {
    return Mismatch("session document needs id and transcript");
  }
  if (j.contains("tree_version") &&
      j.at("tree_version") != json(tree.version)) {
    return Mismatch("session was recorded against another tree version");
  }
  Session s(tree, j.at("id").get<std::string>());
  const json& t = j.at("transcript");
  for (size_t i = 0; i < t.size(); ++i) {
    if (!t[i].is_object() || !t[i].contains("node") || !t[i].contains("answer")) {
      return Mismatch(absl::StrCat("/transcript/", i, ": malformed entry"));
    }
    if (t[i].at("node") != json(s.cursor())) {
      return Mismatch(absl::StrCat("/transcript/", i, ": recorded at node ",
                                   t[i].at("node").dump(), ", replay is at ",
                                   s.cursor()));
    }
    absl::StatusOr<Answer> a = Answer::FromJson(t[i].at("answer"));
    if (!a.ok()) return a.status();
    if (absl::Status st = s.Apply(*a); !st.ok()) {
      return absl::Status(st.code(), absl::StrCat("/transcript/", i, ": ",
                                                  st.message()));
    }
  }
  return s;
}

ReplayResult Replay(const OmtTree& tree, std::span<const Answer> script) {
  Session s(tree, "replay");
  for (size_t i = 0; i < script.size(); ++i) {
    if (absl::Status st = s.Apply(script[i]); !st.ok()) {
      return {absl::Status(st.code(),
                           absl::StrCat("step ", i, ": ", st.message())),
              static_cast<int>(i)};
    }
  }
  return {s.EmitModel(), -1};
}

absl::StatusOr<std::vector<Answer>> ParseScript(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    return absl::InvalidArgumentError(absl::StrCat("parse error: ", e.what()));
  }
  if (doc.is_object() && doc.contains("answers")) doc = doc.at("answers");
  if (!doc.is_array()) {
    return absl::InvalidArgumentError("script must be an array of answers");
  }
  std::vector<Answer> out;
  for (size_t i = 0; i < doc.size(); ++i) {
    absl::StatusOr<Answer> a = Answer::FromJson(doc[i]);
    if (!a.ok()) {
      return absl::InvalidArgumentError(
          absl::StrCat("/", i, ": ", a.status().message()));
    }
    out.push_back(*std::move(a));
  }
  return out;
}

}  // namespace omt
