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

#ifndef OMT_BUILDERS_H_
#define OMT_BUILDERS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "omt/constraint_library.h"
#include "omt/model.h"

namespace omt {

// Parameter types accepted by tree leaves. Values travel as JSON:
//   string, int, rational ("3/2" or a JSON number), expr (LP expression text),
//   variable (declared id), and the *_list forms as JSON arrays.
enum class ParamType {
  kString,
  kStringList,
  kInt,
  kIntList,
  kRational,
  kRationalList,
  kExpr,
  kVariable,
  kVariableList,
  kEnum,
};

std::string_view ParamTypeName(ParamType type);
std::optional<ParamType> ParamTypeByName(std::string_view name);

struct ParamSpec {
  std::string name;
  ParamType type;
  bool required = true;
  std::vector<std::string> choices;  // kEnum only

  friend bool operator==(const ParamSpec&, const ParamSpec&) = default;
};

struct BuilderSpec {
  std::string name;
  std::vector<ParamSpec> params;
  // Keys a leaf may fix in its "preset" object, with their allowed values.
  std::vector<ParamSpec> presets;
};

// Builders a tree leaf may reference: declare_variables, set_objective and
// one entry per constraint-library operation.
const std::vector<BuilderSpec>& BuilderRegistry();
const BuilderSpec* FindBuilder(std::string_view name);

// A parameter value equal to this string is an unfilled placeholder.
inline constexpr std::string_view kPlaceholder = "?";

bool HasPlaceholder(const nlohmann::json& params);

// Checks `params` against `schema`: unknown keys, missing required keys and
// ill-typed values are InvalidArgument naming the parameter. Placeholders
// pass the check.
absl::Status CheckParams(const std::vector<ParamSpec>& schema,
                         const nlohmann::json& params);

// Runs a constraint builder. `preset` carries leaf-fixed options such as
// {"kind": "upper"}. Variables are resolved through `ctx`.
absl::StatusOr<BuiltBlock> InvokeBuilder(BuildContext& ctx,
                                         std::string_view name,
                                         const nlohmann::json& params,
                                         const nlohmann::json& preset);

// declare_variables: new variables from {"names": [...], "upper": r} with
// the number type taken from preset {"type": ...}.
absl::StatusOr<std::vector<Variable>> DeclaredVariables(
    const nlohmann::json& params, const nlohmann::json& preset);

// set_objective: {"expr": text} with preset {"sense": "max" | "min"}.
absl::StatusOr<Objective> ObjectiveFromParams(const nlohmann::json& params,
                                              const nlohmann::json& preset);

}  // namespace omt

#endif  // OMT_BUILDERS_H_
