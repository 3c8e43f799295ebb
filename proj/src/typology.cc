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

#include "omt/typology.h"

#include <array>

namespace omt {
namespace {

// Node ids 2, 3, 7, 8, 9, 11, 12, 13, 14, 17, 19 and 24 are the published
// leaf numbers; the remaining ids fill the gaps in typology order.
constexpr std::array<TypologyTag, kNumTagKinds> kTags = {{
    {18, "SetCovering", 100, TagKind::kSetCovering},
    {17, "SetPartitioning", 100, TagKind::kSetPartitioning},
    {11, "SetPacking", 100, TagKind::kSetPacking},
    {20, "WeightedSetCovering", 90, TagKind::kWeightedSetCovering},
    {21, "WeightedSetPartitioning", 90, TagKind::kWeightedSetPartitioning},
    {22, "GeneralizedSetCovering", 75, TagKind::kGeneralizedSetCovering},
    {23, "GeneralizedSetPartitioning", 75,
     TagKind::kGeneralizedSetPartitioning},
    {1, "Knapsack", 70, TagKind::kKnapsack},
    {4, "ZeroOneKnapsack", 70, TagKind::kZeroOneKnapsack},
    {7, "FixedUpperBound", 60, TagKind::kFixedUpperBound},
    {2, "VariableUpperBound", 80, TagKind::kVariableUpperBound},
    {10, "FixedLowerBound", 60, TagKind::kFixedLowerBound},
    {8, "VariableLowerBound", 80, TagKind::kVariableLowerBound},
    {3, "ConditionalUpperBound", 85, TagKind::kConditionalUpperBound},
    {9, "ConditionalLowerBound", 85, TagKind::kConditionalLowerBound},
    {15, "IOBalance", 66, TagKind::kIOBalance},
    {12, "PeriodLink", 66, TagKind::kPeriodLink},
    {13, "AssignValue", 67, TagKind::kAssignValue},
    {14, "InventoryBalance", 66, TagKind::kInventoryBalance},
    {19, "FixToZero", 68, TagKind::kFixToZero},
    {28, "EitherOr", kPatternSpecificity, TagKind::kEitherOr},
    {29, "IfThenBigM", 50, TagKind::kIfThenBigM},
    {27, "ImpliesBinary", 96, TagKind::kImpliesBinary},
    {24, "IfAllThen", 95, TagKind::kIfAllThen},
    {25, "OnlyIfAll", kPatternSpecificity, TagKind::kOnlyIfAll},
    {26, "IffAll", kPatternSpecificity, TagKind::kIffAll},
    {30, "FixValueIf", kPatternSpecificity, TagKind::kFixValueIf},
    {5, "GeneralLE", kRootSpecificity, TagKind::kGeneralLE},
    {16, "GeneralEQ", kRootSpecificity, TagKind::kGeneralEQ},
    {6, "GeneralGE", kRootSpecificity, TagKind::kGeneralGE},
}};

}  // namespace

const TypologyTag& Tag(TagKind kind) {
  return kTags[static_cast<size_t>(kind)];
}

std::span<const TypologyTag> AllTags() { return kTags; }

std::optional<TypologyTag> TagByName(std::string_view name) {
  for (const TypologyTag& t : kTags) {
    if (t.name == name) return t;
  }
  return std::nullopt;
}

std::optional<TypologyTag> TagByNode(int omt_node_id) {
  for (const TypologyTag& t : kTags) {
    if (t.omt_node_id == omt_node_id) return t;
  }
  return std::nullopt;
}

bool IsPatternTag(TagKind kind) {
  return Tag(kind).specificity == kPatternSpecificity;
}

std::string_view Explain(TagKind kind) {
  switch (kind) {
    case TagKind::kSetCovering:
      return "Set covering: a sum of binary variables with unit coefficients "
             "is at least 1. Models the choice of at least one out of many, "
             "e.g. every customer must be served by some open facility.";
    case TagKind::kSetPartitioning:
      return "Set partitioning: a sum of binary variables with unit "
             "coefficients equals 1. Models the choice of exactly one out of "
             "many, e.g. each course section is assigned to exactly one "
             "time slot. Assignment constraints of routing models (each "
             "city is left exactly once) take this form.";
    case TagKind::kSetPacking:
      return "Set packing: a sum of binary variables with unit coefficients "
             "is at most 1. Models the choice of at most one out of many, "
             "e.g. a unit starts at most one task at a time.";
    case TagKind::kWeightedSetCovering:
      return "Weighted set covering: unit-coefficient binary sum with an "
             "integer right-hand side n > 1; choose at least n out of many.";
    case TagKind::kWeightedSetPartitioning:
      return "Weighted set partitioning: unit-coefficient binary sum with an "
             "integer right-hand side n > 1; choose exactly n out of many.";
    case TagKind::kGeneralizedSetCovering:
      return "Generalized set covering: binary variables with coefficients "
             "in {-1, 1} and an integer right-hand side, sense >=.";
    case TagKind::kGeneralizedSetPartitioning:
      return "Generalized set partitioning: binary variables with "
             "coefficients in {-1, 1} and an integer right-hand side, "
             "sense =.";
    case TagKind::kKnapsack:
      return "Knapsack: positive weights on nonnegative variables, summed "
             "and limited by an integer capacity. A fixed resource limit "
             "(supply) on a weighted total.";
    case TagKind::kZeroOneKnapsack:
      return "0-1 knapsack: a knapsack constraint over binary variables; "
             "selected items must fit into a fixed capacity.";
    case TagKind::kFixedUpperBound:
      return "Fixed upper bound: a single quantity is limited by a constant, "
             "e.g. an upper bound on the storage limit of a material.";
    case TagKind::kVariableUpperBound:
      return "Variable upper bound: a quantity is limited by a multiple of "
             "another (non-binary) decision variable, so the bound itself is "
             "a variable, e.g. total route time below a makespan variable.";
    case TagKind::kFixedLowerBound:
      return "Fixed lower bound: a single quantity must reach a constant "
             "demand level.";
    case TagKind::kVariableLowerBound:
      return "Variable lower bound: a quantity must reach a multiple of "
             "another (non-binary) decision variable.";
    case TagKind::kConditionalUpperBound:
      return "Conditional upper bound: a quantity is limited by u * y for a "
             "binary indicator y; when y = 0 the quantity is forced to zero, "
             "when y = 1 the capacity u applies (big-M style capacity).";
    case TagKind::kConditionalLowerBound:
      return "Conditional lower bound: a quantity must reach l * y for a "
             "binary indicator y; the minimum level applies only when the "
             "indicator is switched on.";
    case TagKind::kIOBalance:
      return "Input/output balance: an equality that equates incoming and "
             "outgoing quantities. Flow balance in routing models is this "
             "type even though end-users rarely state it that way.";
    case TagKind::kPeriodLink:
      return "Period link: an equality that carries a quantity over between "
             "two consecutive time periods.";
    case TagKind::kAssignValue:
      return "Assign value: an equality that sets a quantity (or a sum of "
             "quantities) to a given value, including initial conditions.";
    case TagKind::kInventoryBalance:
      return "Inventory balance: the stock at a time slot equals the stock "
             "at the previous time slot plus the new production and minus "
             "the consumption.";
    case TagKind::kFixToZero:
      return "Fix to zero: variables that represent impossible decisions "
             "are set to 0.";
    case TagKind::kEitherOr:
      return "Either-or: at least one of f(x) <= 0 and g(x) <= 0 holds; "
             "encoded as f(x) <= M t and g(x) <= M (1 - t) with a binary t "
             "and a sufficiently large M.";
    case TagKind::kIfThenBigM:
      return "If-then (big-M): g(x) <= 0 must hold whenever f(x) > 0; "
             "encoded as g(x) <= M t and f(x) <= M (1 - t) with a binary t.";
    case TagKind::kImpliesBinary:
      return "Binary implication: if f(x) = 1 then g(x) = 1, for 0-1 valued "
             "f and g; encoded as f(x) <= g(x).";
    case TagKind::kIfAllThen:
      return "If all then: A occurs if all of B1..Bn occur, encoded as "
             "x_B1 + ... + x_Bn <= n - 1 + x_A. The aggregated form "
             "n x_A <= x_B1 + ... + x_Bn (if A then all B) also lands here; "
             "it is valid but weaker than one x_A <= x_Bj per j.";
    case TagKind::kOnlyIfAll:
      return "Only if all: A occurs only if every B1..Bn occurs, encoded as "
             "x_A <= x_Bj for each j.";
    case TagKind::kIffAll:
      return "If and only if all: A occurs exactly when all of B1..Bn "
             "occur; the union of the if-all and only-if-all encodings.";
    case TagKind::kFixValueIf:
      return "Fix value if: if the binary z_A is 1 then f(x) = C; encoded "
             "as f(x) - M (1 - z_A) <= C and f(x) + M (1 - z_A) >= C.";
    case TagKind::kGeneralLE:
      return "General <= constraint (Type I supply side): a resource limit "
             "a x <= b with no more specific structure.";
    case TagKind::kGeneralEQ:
      return "General = constraint (Type II balancing): a x = b with no more "
             "specific structure.";
    case TagKind::kGeneralGE:
      return "General >= constraint (Type I demand side): a requirement "
             "a x >= d with no more specific structure.";
  }
  return "";
}

}  // namespace omt
