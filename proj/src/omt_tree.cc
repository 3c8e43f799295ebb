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

#include "omt/omt_tree.h"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <set>
#include <utility>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "omt/typology.h"

namespace omt {
namespace {

using nlohmann::json;

absl::Status PathError(std::string_view path, std::string_view message) {
  return absl::InvalidArgumentError(
      absl::StrCat(std::string(path), ": ", std::string(message)));
}

// Field readers over one JSON object, reporting the path on failure.
class Fields {
 public:
  Fields(const json& object, std::string path)
      : object_(object), path_(std::move(path)) {}

  const std::string& path() const { return path_; }

  absl::Status Require(const char* key, json::value_t type,
                       std::string_view type_name) const {
    if (!object_.contains(key)) return PathError(Sub(key), "missing");
    return Typed(key, type, type_name);
  }
  absl::Status Typed(const char* key, json::value_t type,
                     std::string_view type_name) const {
    const json& v = object_.at(key);
    const bool ok =
        v.type() == type ||
        (type == json::value_t::number_integer &&
         v.type() == json::value_t::number_unsigned);
    if (!ok) {
      return PathError(Sub(key), absl::StrCat("expected ", std::string(type_name)));
    }
    return absl::OkStatus();
  }
  std::string Sub(std::string_view key) const {
    return absl::StrCat(path_, "/", std::string(key));
  }

 private:
  const json& object_;
  std::string path_;
};

#define OMT_RETURN_IF_ERROR(expr)             \
  do {                                        \
    if (absl::Status s_ = (expr); !s_.ok()) { \
      return s_;                              \
    }                                         \
  } while (false)

absl::StatusOr<LeafParam> ParseParam(const json& j, const std::string& path) {
  if (!j.is_object()) return PathError(path, "expected object");
  const Fields f(j, path);
  OMT_RETURN_IF_ERROR(f.Require("name", json::value_t::string, "string"));
  OMT_RETURN_IF_ERROR(f.Require("type", json::value_t::string, "string"));
  OMT_RETURN_IF_ERROR(f.Require("required", json::value_t::boolean, "boolean"));
  for (const auto& [key, value] : j.items()) {
    if (key != "name" && key != "type" && key != "required" &&
        key != "choices" && key != "default") {
      return PathError(f.Sub(key), "unknown field");
    }
  }
  LeafParam p;
  p.spec.name = j.at("name").get<std::string>();
  const std::optional<ParamType> type =
      ParamTypeByName(j.at("type").get<std::string>());
  if (!type.has_value()) return PathError(f.Sub("type"), "unknown type");
  p.spec.type = *type;
  p.spec.required = j.at("required").get<bool>();
  if (j.contains("choices")) {
    OMT_RETURN_IF_ERROR(f.Typed("choices", json::value_t::array, "array"));
    for (const json& c : j.at("choices")) {
      if (!c.is_string()) return PathError(f.Sub("choices"), "expected strings");
      p.spec.choices.push_back(c.get<std::string>());
    }
  }
  if (j.contains("default")) p.default_value = j.at("default");
  return p;
}

absl::StatusOr<OmtNode> ParseNode(const json& j, const std::string& path) {
  if (!j.is_object()) return PathError(path, "expected object");
  const Fields f(j, path);
  OMT_RETURN_IF_ERROR(f.Require("id", json::value_t::number_integer, "integer"));
  OMT_RETURN_IF_ERROR(f.Require("label", json::value_t::string, "string"));
  OMT_RETURN_IF_ERROR(f.Require("branch", json::value_t::string, "string"));
  OMT_RETURN_IF_ERROR(f.Require("question", json::value_t::string, "string"));
  OMT_RETURN_IF_ERROR(f.Require("children", json::value_t::array, "array"));
  static const std::set<std::string> kKnown = {
      "id",          "label", "branch",      "question",     "children",
      "builder_ref", "tag",   "annotations", "reconstructed"};
  for (const auto& [key, value] : j.items()) {
    if (!kKnown.contains(key)) return PathError(f.Sub(key), "unknown field");
  }
  OmtNode n;
  n.id = j.at("id").get<int>();
  n.label = j.at("label").get<std::string>();
  n.branch = j.at("branch").get<std::string>();
  n.question = j.at("question").get<std::string>();
  if (n.question.empty()) return PathError(f.Sub("question"), "empty");
  for (size_t i = 0; i < j.at("children").size(); ++i) {
    const json& c = j.at("children")[i];
    if (!c.is_number_integer()) {
      return PathError(absl::StrCat(f.Sub("children"), "/", i),
                       "expected integer");
    }
    n.children.push_back(c.get<int>());
  }
  if (j.contains("tag")) {
    OMT_RETURN_IF_ERROR(f.Typed("tag", json::value_t::string, "string"));
    n.tag = j.at("tag").get<std::string>();
  }
  if (j.contains("annotations")) {
    OMT_RETURN_IF_ERROR(f.Typed("annotations", json::value_t::array, "array"));
    for (const json& a : j.at("annotations")) {
      if (!a.is_string()) {
        return PathError(f.Sub("annotations"), "expected strings");
      }
      n.annotations.push_back(a.get<std::string>());
    }
  }
  if (j.contains("reconstructed")) {
    OMT_RETURN_IF_ERROR(
        f.Typed("reconstructed", json::value_t::boolean, "boolean"));
    n.reconstructed = j.at("reconstructed").get<bool>();
  }
  if (j.contains("builder_ref")) {
    const json& b = j.at("builder_ref");
    const std::string bpath = f.Sub("builder_ref");
    if (!b.is_object()) return PathError(bpath, "expected object");
    const Fields bf(b, bpath);
    OMT_RETURN_IF_ERROR(bf.Require("name", json::value_t::string, "string"));
    OMT_RETURN_IF_ERROR(bf.Require("params", json::value_t::array, "array"));
    BuilderRef ref;
    ref.name = b.at("name").get<std::string>();
    for (size_t i = 0; i < b.at("params").size(); ++i) {
      absl::StatusOr<LeafParam> p = ParseParam(
          b.at("params")[i], absl::StrCat(bf.Sub("params"), "/", i));
      if (!p.ok()) return p.status();
      ref.params.push_back(*std::move(p));
    }
    if (b.contains("preset")) {
      OMT_RETURN_IF_ERROR(bf.Typed("preset", json::value_t::object, "object"));
      ref.preset = b.at("preset");
    }
    n.builder_ref = std::move(ref);
  }
  return n;
}

absl::Status CheckBuilderRef(const OmtNode& n) {
  const BuilderRef& ref = *n.builder_ref;
  const std::string where = absl::StrCat("node ", n.id, ": ");
  const BuilderSpec* spec = FindBuilder(ref.name);
  if (spec == nullptr) {
    return absl::InvalidArgumentError(
        absl::StrCat(where, "unknown builder '", ref.name, "'"));
  }
  auto mismatch = [&](std::string_view what) {
    return absl::InvalidArgumentError(
        absl::StrCat(where, "builder schema mismatch: ", std::string(what)));
  };
  if (ref.params.size() != spec->params.size()) {
    return mismatch(absl::StrCat("expected ", spec->params.size(),
                                 " parameters for ", ref.name));
  }
  for (const ParamSpec& expected : spec->params) {
    auto it = std::find_if(ref.params.begin(), ref.params.end(),
                           [&](const LeafParam& p) {
                             return p.spec.name == expected.name;
                           });
    if (it == ref.params.end()) {
      return mismatch(absl::StrCat("parameter '", expected.name, "' absent"));
    }
    if (it->spec.type != expected.type ||
        it->spec.choices != expected.choices) {
      return mismatch(absl::StrCat("parameter '", expected.name, "' type"));
    }
    if (expected.required && !it->spec.required) {
      return mismatch(
          absl::StrCat("parameter '", expected.name, "' must be required"));
    }
  }
  for (const ParamSpec& expected : spec->presets) {
    if (!ref.preset.contains(expected.name) ||
        !ref.preset.at(expected.name).is_string() ||
        std::find(expected.choices.begin(), expected.choices.end(),
                  ref.preset.at(expected.name).get<std::string>()) ==
            expected.choices.end()) {
      return mismatch(absl::StrCat("preset '", expected.name, "'"));
    }
  }
  if (ref.preset.size() != spec->presets.size()) {
    return mismatch("unexpected preset key");
  }
  return absl::OkStatus();
}

json ParamToJson(const LeafParam& p) {
  json j = {{"name", p.spec.name},
            {"type", std::string(ParamTypeName(p.spec.type))},
            {"required", p.spec.required}};
  if (!p.spec.choices.empty()) j["choices"] = p.spec.choices;
  if (p.default_value.has_value()) j["default"] = *p.default_value;
  return j;
}

}  // namespace

std::vector<ParamSpec> BuilderRef::Schema() const {
  std::vector<ParamSpec> out;
  for (const LeafParam& p : params) out.push_back(p.spec);
  return out;
}

const OmtNode* OmtTree::Find(int id) const {
  auto it = nodes.find(id);
  return it == nodes.end() ? nullptr : &it->second;
}

std::vector<const OmtNode*> OmtTree::Leaves() const {
  std::vector<const OmtNode*> out;
  for (const auto& [id, n] : nodes) {
    if (n.is_leaf()) out.push_back(&n);
  }
  return out;
}

const std::map<int, std::string_view>& CitedNodes() {
  static const auto* const kCited = new std::map<int, std::string_view>{
      {2, "Variable upper bound"},    {3, "Conditional upper bound"},
      {7, "Fixed upper bound"},       {8, "Variable lower bound"},
      {9, "Conditional lower bound"}, {11, "Set packing"},
      {12, "Period link"},            {13, "Assign value"},
      {14, "Inventory balance"},      {17, "Set partitioning"},
      {19, "Fix to zero"},            {24, "If all then"},
  };
  return *kCited;
}

absl::StatusOr<OmtTree> ParseTree(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    return absl::InvalidArgumentError(absl::StrCat("parse error: ", e.what()));
  }
  if (!doc.is_object()) return PathError("", "expected object");
  const Fields f(doc, "");
  OMT_RETURN_IF_ERROR(f.Require("version", json::value_t::string, "string"));
  OMT_RETURN_IF_ERROR(f.Require("root", json::value_t::number_integer, "integer"));
  OMT_RETURN_IF_ERROR(f.Require("nodes", json::value_t::array, "array"));
  OmtTree tree;
  tree.version = doc.at("version").get<std::string>();
  tree.root = doc.at("root").get<int>();
  const json& nodes = doc.at("nodes");
  for (size_t i = 0; i < nodes.size(); ++i) {
    const std::string path = absl::StrCat("/nodes/", i);
    absl::StatusOr<OmtNode> n = ParseNode(nodes[i], path);
    if (!n.ok()) return n.status();
    const int id = n->id;
    if (!tree.nodes.emplace(id, *std::move(n)).second) {
      return PathError(absl::StrCat(path, "/id"),
                       absl::StrCat("duplicate node id ", id));
    }
  }
  OMT_RETURN_IF_ERROR(ValidateTree(tree));
  return tree;
}

absl::Status ValidateTree(const OmtTree& tree) {
  const OmtNode* root = tree.Find(tree.root);
  if (root == nullptr) {
    return absl::InvalidArgumentError(
        absl::StrCat("root node ", tree.root, " does not exist"));
  }
  for (const auto& [id, n] : tree.nodes) {
    for (int c : n.children) {
      if (tree.Find(c) == nullptr) {
        return absl::InvalidArgumentError(
            absl::StrCat("dangling child ", c, " of node ", id));
      }
    }
  }
  // Cycle check and reachability by iterative DFS with colors.
  std::map<int, int> color;  // 0 white, 1 on stack, 2 done
  std::vector<std::pair<int, size_t>> stack = {{tree.root, 0}};
  color[tree.root] = 1;
  while (!stack.empty()) {
    auto& [id, next] = stack.back();
    const OmtNode& n = tree.nodes.at(id);
    if (next == n.children.size()) {
      color[id] = 2;
      stack.pop_back();
      continue;
    }
    const int child = n.children[next++];
    if (color[child] == 1) {
      return absl::InvalidArgumentError(
          absl::StrCat("cycle through node ", child));
    }
    if (color[child] == 0) {
      color[child] = 1;
      stack.push_back({child, 0});
    }
  }
  for (const auto& [id, n] : tree.nodes) {
    if (color[id] != 2) {
      return absl::InvalidArgumentError(
          absl::StrCat("node ", id, " is unreachable from the root"));
    }
  }

  const std::vector<std::string_view> branches = {
      kBranchVariables, kBranchObjective, kBranchConstraints};
  if (root->children.size() != branches.size()) {
    return absl::InvalidArgumentError(
        "root must have the three top-level branches");
  }
  for (size_t i = 0; i < branches.size(); ++i) {
    const OmtNode& top = tree.nodes.at(root->children[i]);
    if (top.branch != branches[i]) {
      return absl::InvalidArgumentError(
          absl::StrCat("root child ", i, " must be branch ",
                       std::string(branches[i])));
    }
  }
  for (const auto& [id, n] : tree.nodes) {
    for (int c : n.children) {
      const OmtNode& child = tree.nodes.at(c);
      if (id != tree.root && child.branch != n.branch) {
        return absl::InvalidArgumentError(
            absl::StrCat("node ", c, " is outside its parent's branch"));
      }
    }
  }

  std::map<std::string, int> tag_leaves;
  for (const auto& [id, n] : tree.nodes) {
    if (!n.is_leaf()) {
      if (n.builder_ref.has_value() || n.tag.has_value()) {
        return absl::InvalidArgumentError(absl::StrCat(
            "internal node ", id, " carries a builder_ref or tag"));
      }
      continue;
    }
    if (!n.builder_ref.has_value()) {
      return absl::InvalidArgumentError(
          absl::StrCat("leaf without builder_ref: node ", id));
    }
    OMT_RETURN_IF_ERROR(CheckBuilderRef(n));
    if (n.branch == kBranchConstraints) {
      if (!n.tag.has_value()) {
        return absl::InvalidArgumentError(
            absl::StrCat("constraint leaf ", id, " has no tag"));
      }
      const std::optional<TypologyTag> tag = TagByName(*n.tag);
      if (!tag.has_value()) {
        return absl::InvalidArgumentError(
            absl::StrCat("node ", id, ": unknown tag '", *n.tag, "'"));
      }
      if (tag->omt_node_id != id) {
        return absl::InvalidArgumentError(absl::StrCat(
            "node ", id, ": tag ", *n.tag, " belongs to node ",
            tag->omt_node_id));
      }
      if (++tag_leaves[*n.tag] > 1) {
        return absl::InvalidArgumentError(
            absl::StrCat("tag ", *n.tag, " has more than one leaf"));
      }
    }
  }
  for (const auto& [id, label] : CitedNodes()) {
    const OmtNode* n = tree.Find(id);
    if (n == nullptr) {
      return absl::InvalidArgumentError(
          absl::StrCat("missing cited node ", id));
    }
    if (n->label != label || n->reconstructed) {
      return absl::InvalidArgumentError(absl::StrCat(
          "cited node meaning mismatch: node ", id, " is '", n->label,
          "', expected '", std::string(label), "'"));
    }
  }
  for (const TypologyTag& tag : AllTags()) {
    if (!tag_leaves.contains(std::string(tag.name))) {
      return absl::InvalidArgumentError(
          absl::StrCat("tag ", std::string(tag.name), " has no leaf"));
    }
  }
  return absl::OkStatus();
}

std::string WriteTree(const OmtTree& tree) {
  json nodes = json::array();
  for (const auto& [id, n] : tree.nodes) {
    json j = {{"id", n.id},
              {"label", n.label},
              {"branch", n.branch},
              {"question", n.question},
              {"children", n.children},
              {"annotations", n.annotations},
              {"reconstructed", n.reconstructed}};
    if (n.tag.has_value()) j["tag"] = *n.tag;
    if (n.builder_ref.has_value()) {
      json params = json::array();
      for (const LeafParam& p : n.builder_ref->params) {
        params.push_back(ParamToJson(p));
      }
      json b = {{"name", n.builder_ref->name}, {"params", params}};
      if (!n.builder_ref->preset.empty()) b["preset"] = n.builder_ref->preset;
      j["builder_ref"] = b;
    }
    nodes.push_back(std::move(j));
  }
  const json doc = {
      {"version", tree.version}, {"root", tree.root}, {"nodes", nodes}};
  return doc.dump(2) + "\n";
}

const OmtTree& DefaultTree() {
  static const OmtTree* const kTree = [] {
    absl::StatusOr<OmtTree> tree = ParseTree(EmbeddedTreeJson());
    if (!tree.ok()) {
      std::cerr << "embedded modelling tree is invalid: " << tree.status()
                << "\n";
      std::abort();
    }
    return new OmtTree(*std::move(tree));
  }();
  return *kTree;
}

}  // namespace omt
