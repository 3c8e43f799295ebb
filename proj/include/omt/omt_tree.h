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

#ifndef OMT_OMT_TREE_H_
#define OMT_OMT_TREE_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "json.hpp"
#include "omt/builders.h"

namespace omt {

inline constexpr std::string_view kBranchRoot = "ROOT";
inline constexpr std::string_view kBranchVariables = "DECISION_VARIABLES";
inline constexpr std::string_view kBranchObjective = "OBJECTIVE";
inline constexpr std::string_view kBranchConstraints = "CONSTRAINTS";

struct LeafParam {
  ParamSpec spec;
  std::optional<nlohmann::json> default_value;

  friend bool operator==(const LeafParam&, const LeafParam&) = default;
};

struct BuilderRef {
  std::string name;
  std::vector<LeafParam> params;
  nlohmann::json preset = nlohmann::json::object();

  std::vector<ParamSpec> Schema() const;
  friend bool operator==(const BuilderRef&, const BuilderRef&) = default;
};

struct OmtNode {
  int id = 0;
  std::string label;
  std::string branch;
  std::string question;
  std::vector<int> children;
  std::optional<BuilderRef> builder_ref;
  std::optional<std::string> tag;  // typology tag name, constraint leaves
  std::vector<std::string> annotations;
  bool reconstructed = false;  // id and label not pinned by a citation

  bool is_leaf() const { return children.empty(); }
  friend bool operator==(const OmtNode&, const OmtNode&) = default;
};

struct OmtTree {
  std::string version;
  int root = 0;
  std::map<int, OmtNode> nodes;

  const OmtNode* Find(int id) const;
  std::vector<const OmtNode*> Leaves() const;
  friend bool operator==(const OmtTree&, const OmtTree&) = default;
};

// Node ids whose meaning is fixed by citation, with their labels.
const std::map<int, std::string_view>& CitedNodes();

// Parses and validates. Schema errors name the JSON path ("/nodes/4/question:
// missing"). Structural errors: cycle, dangling child, missing cited node,
// cited node meaning mismatch, leaf without builder_ref, builder schema
// mismatch, tag without exactly one leaf.
absl::StatusOr<OmtTree> ParseTree(std::string_view json_text);
absl::Status ValidateTree(const OmtTree& tree);

// Two-space indented JSON with sorted keys and a trailing newline.
std::string WriteTree(const OmtTree& tree);

// The fixture compiled into the library.
std::string_view EmbeddedTreeJson();
// Parsed embedded fixture; aborts if the fixture is invalid.
const OmtTree& DefaultTree();

}  // namespace omt

#endif  // OMT_OMT_TREE_H_
