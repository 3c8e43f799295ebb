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

#ifndef OMT_TYPOLOGY_H_
#define OMT_TYPOLOGY_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace omt {

// Leaves of the constraint typology. Each kind owns exactly one leaf of the
// modelling tree; the leaf node id is fixed here and checked against the tree
// fixture when the tree is loaded.
enum class TagKind {
  kSetCovering,
  kSetPartitioning,
  kSetPacking,
  kWeightedSetCovering,
  kWeightedSetPartitioning,
  kGeneralizedSetCovering,
  kGeneralizedSetPartitioning,
  kKnapsack,
  kZeroOneKnapsack,
  kFixedUpperBound,
  kVariableUpperBound,
  kFixedLowerBound,
  kVariableLowerBound,
  kConditionalUpperBound,
  kConditionalLowerBound,
  kIOBalance,
  kPeriodLink,
  kAssignValue,
  kInventoryBalance,
  kFixToZero,
  kEitherOr,
  kIfThenBigM,
  kImpliesBinary,
  kIfAllThen,
  kOnlyIfAll,
  kIffAll,
  kFixValueIf,
  kGeneralLE,
  kGeneralEQ,
  kGeneralGE,
};

inline constexpr int kNumTagKinds = 30;

// Rank used to order tags on one constraint, most specific first. Multi-
// constraint patterns (EitherOr, OnlyIfAll, ...) rank above every
// single-constraint rule; the General* roots rank lowest.
inline constexpr int kPatternSpecificity = 110;
inline constexpr int kRootSpecificity = 0;

struct TypologyTag {
  int omt_node_id;
  std::string_view name;
  int specificity;
  TagKind kind;

  friend bool operator==(const TypologyTag& a, const TypologyTag& b) {
    return a.kind == b.kind;
  }
};

const TypologyTag& Tag(TagKind kind);
std::span<const TypologyTag> AllTags();
std::optional<TypologyTag> TagByName(std::string_view name);
std::optional<TypologyTag> TagByNode(int omt_node_id);

// True for tags that only arise from a group of constraints.
bool IsPatternTag(TagKind kind);

// Canonical one-paragraph description of a tag. Stable across runs.
std::string_view Explain(TagKind kind);

}  // namespace omt

#endif  // OMT_TYPOLOGY_H_
