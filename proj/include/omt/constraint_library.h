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

#ifndef OMT_CONSTRAINT_LIBRARY_H_
#define OMT_CONSTRAINT_LIBRARY_H_

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "omt/model.h"
#include "omt/rational.h"
#include "omt/typology.h"

namespace omt {

// Reserved prefix for auxiliary variables introduced by encodings.
inline constexpr std::string_view kAuxPrefix = "__aux_";

using VariableTable = std::map<std::string, Variable, std::less<>>;

// The constraints (all canonical) and fresh auxiliary variables produced by
// one builder call.
struct BuiltBlock {
  std::vector<Constraint> constraints;
  std::vector<Variable> aux_variables;
  TypologyTag tag;
};

// Owns the variable table used for type checks and big-M bounds, and the
// counters that make auxiliary and constraint names fresh. Not thread-safe.
class BuildContext {
 public:
  BuildContext() = default;
  explicit BuildContext(const Model& model);

  void AddVariable(const Variable& v);
  const Variable* FindVariable(std::string_view id) const;
  const VariableTable& variables() const { return variables_; }

  // Marks a constraint name as taken.
  void ReserveName(std::string_view name);
  // "<stem>_<k>" for the smallest k >= 1 not yet taken.
  std::string FreshConstraintName(std::string_view stem);
  // A new binary "__aux_<k>", registered in the table.
  Variable NewIndicator();

  // Registers the aux variables and constraint names of `block`, so later
  // builders see them.
  void Commit(const BuiltBlock& block);

 private:
  VariableTable variables_;
  std::set<std::string, std::less<>> names_;
  int aux_counter_ = 0;
};

// Set constraints over binary variables. `weight_rhs` >= 1; the weighted
// variant is rhs >= 2. `signs` (each +1 or -1) selects the generalized
// variant.
absl::StatusOr<BuiltBlock> SetCovering(
    BuildContext& ctx, std::span<const Variable> vars, int weight_rhs = 1,
    std::optional<std::vector<int>> signs = std::nullopt);
absl::StatusOr<BuiltBlock> SetPartitioning(
    BuildContext& ctx, std::span<const Variable> vars, int weight_rhs = 1,
    std::optional<std::vector<int>> signs = std::nullopt);
absl::StatusOr<BuiltBlock> SetPacking(BuildContext& ctx,
                                      std::span<const Variable> vars);

// sum_i weights[i] * vars[i] <= capacity. Variables must be all binary
// (0-1 knapsack) or all non-binary.
absl::StatusOr<BuiltBlock> Knapsack(BuildContext& ctx,
                                    std::span<const Rational> weights,
                                    const Rational& capacity,
                                    std::span<const Variable> vars);

enum class BoundKind { kSupplyUpper, kDemandLower };

// expr <= bound (upper) or expr >= bound (lower).
absl::StatusOr<BuiltBlock> FixedBound(BuildContext& ctx, const LinearExpr& expr,
                                      BoundKind kind, const Rational& bound);
// expr - multiplier * bound_var <= 0 (upper) or >= 0 (lower). A binary
// bound_var makes this a conditional bound and it is tagged as such.
absl::StatusOr<BuiltBlock> VariableBound(BuildContext& ctx,
                                         const LinearExpr& expr, BoundKind kind,
                                         const Variable& bound_var,
                                         const Rational& multiplier = 1);

enum class BalanceKind { kIOBalance, kPeriodLink, kAssignValue, kInventory };

// lhs_items - rhs_items = 0.
absl::StatusOr<BuiltBlock> Balance(BuildContext& ctx,
                                   const LinearExpr& lhs_items,
                                   const LinearExpr& rhs_items,
                                   BalanceKind kind);

// One x = 0 per variable.
absl::StatusOr<BuiltBlock> FixToZero(BuildContext& ctx,
                                     std::span<const Variable> vars);

// Either f <= 0 or g <= 0: f - M t <= 0, g + M t <= M. Without `big_m` the
// value of BigMDefault({f, g}) is used.
absl::StatusOr<BuiltBlock> EitherOr(BuildContext& ctx, const LinearExpr& f,
                                    const LinearExpr& g,
                                    std::optional<Rational> big_m = {});
// g <= 0 whenever f > 0: g - M t <= 0, f + M t <= M.
absl::StatusOr<BuiltBlock> IfThenBigM(BuildContext& ctx, const LinearExpr& f,
                                      const LinearExpr& g,
                                      std::optional<Rational> big_m = {});

// lower * y <= expr <= upper * y for a binary indicator y. At least one of
// lower/upper must be given. The block is tagged as the upper part when an
// upper bound is present.
absl::StatusOr<BuiltBlock> ConditionalBound(BuildContext& ctx,
                                            const LinearExpr& expr,
                                            const Variable& indicator,
                                            std::optional<Rational> lower,
                                            std::optional<Rational> upper);

// f <= g for 0-1 valued f and g.
absl::StatusOr<BuiltBlock> ImpliesBinary(BuildContext& ctx,
                                         const LinearExpr& f,
                                         const LinearExpr& g);

// A occurs if all of `bs` occur: sum(x_B) - x_A <= n - 1.
// With `at_least` = k < n the trigger is "at least k of bs":
// sum(x_B) - (n - k + 1) x_A <= k - 1. The k-of-n form is an extension.
absl::StatusOr<BuiltBlock> IfAllThen(BuildContext& ctx, const Variable& a,
                                     std::span<const Variable> bs,
                                     std::optional<int> at_least = {});

// How "A only if every B" is written: one x_A <= x_Bj per j
// (disaggregated, the stronger formulation) or the single n x_A <= sum x_B.
enum class Strength { kDisaggregated, kAggregated };

absl::StatusOr<BuiltBlock> OnlyIfAll(
    BuildContext& ctx, const Variable& a, std::span<const Variable> bs,
    Strength strength = Strength::kDisaggregated);

absl::StatusOr<BuiltBlock> IffAll(BuildContext& ctx, const Variable& a,
                                  std::span<const Variable> bs);

// z = 1 implies f = value: f + M z <= value + M, f - M z >= value - M.
absl::StatusOr<BuiltBlock> FixValueIf(BuildContext& ctx, const Variable& z,
                                      const LinearExpr& f,
                                      const Rational& value,
                                      std::optional<Rational> big_m = {});

// Any a x (sense) b, tagged with the General* root for its sense.
absl::StatusOr<BuiltBlock> GeneralConstraint(BuildContext& ctx,
                                             const LinearExpr& expr,
                                             Sense sense, const Rational& rhs);

// Smallest big-M that deactivates each expression over the variable bound
// box: max_e sup |e| + 1. Fails with FailedPrecondition (message starts with
// "UNBOUNDED_BIG_M") if a variable with nonzero coefficient is unbounded or
// unknown.
absl::StatusOr<Rational> BigMDefault(std::span<const LinearExpr> exprs,
                                     const VariableTable& bounds);

// Interval of `e` over the bound box, nullopt if unbounded.
struct Interval {
  Rational lower;
  Rational upper;
};
std::optional<Interval> ExprRange(const LinearExpr& e,
                                  const VariableTable& bounds);

}  // namespace omt

#endif  // OMT_CONSTRAINT_LIBRARY_H_
