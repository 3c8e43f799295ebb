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

#include "omt/constraint_library.h"

#include <algorithm>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"

namespace omt {
namespace {

absl::Status RequireNonEmpty(std::span<const Variable> vars,
                             std::string_view what) {
  if (vars.empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat(std::string(what), ": variable list is empty"));
  }
  return absl::OkStatus();
}

absl::Status RequireBinary(std::span<const Variable> vars,
                           std::string_view what) {
  for (const Variable& v : vars) {
    if (v.type != NumberType::kBinary) {
      return absl::InvalidArgumentError(absl::StrCat(
          std::string(what), ": variable '", v.Id(), "' is not binary"));
    }
  }
  return absl::OkStatus();
}

absl::Status RequireDistinct(std::span<const Variable> vars,
                             std::string_view what) {
  std::set<std::string> ids;
  for (const Variable& v : vars) {
    if (!ids.insert(v.Id()).second) {
      return absl::InvalidArgumentError(
          absl::StrCat(std::string(what), ": variable '", v.Id(), "' listed twice"));
    }
  }
  return absl::OkStatus();
}

void Register(BuildContext& ctx, std::span<const Variable> vars) {
  for (const Variable& v : vars) {
    if (ctx.FindVariable(v.Id()) == nullptr) ctx.AddVariable(v);
  }
}

// Builds a canonical constraint with a fresh name.
Constraint Make(BuildContext& ctx, std::string_view stem, LinearExpr lhs,
                Sense sense, Rational rhs) {
  Constraint c{ctx.FreshConstraintName(stem), std::move(lhs), sense,
               std::move(rhs)};
  c = Canonicalize(c);
  ctx.ReserveName(c.name);
  return c;
}

BuiltBlock Finish(BuildContext& ctx, BuiltBlock block) {
  ctx.Commit(block);
  return block;
}

absl::StatusOr<BuiltBlock> SetConstraint(BuildContext& ctx,
                                         std::span<const Variable> vars,
                                         int weight_rhs,
                                         const std::optional<std::vector<int>>&
                                             signs,
                                         Sense sense, TagKind plain,
                                         TagKind weighted,
                                         TagKind generalized) {
  const std::string_view what = Tag(plain).name;
  if (absl::Status s = RequireNonEmpty(vars, what); !s.ok()) return s;
  if (absl::Status s = RequireBinary(vars, what); !s.ok()) return s;
  if (absl::Status s = RequireDistinct(vars, what); !s.ok()) return s;
  if (weight_rhs < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat(std::string(what), ": right-hand side must be >= 1"));
  }
  if (signs.has_value()) {
    if (signs->size() != vars.size()) {
      return absl::InvalidArgumentError(
          absl::StrCat(std::string(what), ": expected ", vars.size(), " signs, got ",
                       signs->size()));
    }
    for (int s : *signs) {
      if (s != 1 && s != -1) {
        return absl::InvalidArgumentError(
            absl::StrCat(std::string(what), ": signs must be +1 or -1"));
      }
    }
  }
  Register(ctx, vars);
  LinearExpr lhs;
  for (size_t i = 0; i < vars.size(); ++i) {
    lhs.AddTerm(signs.has_value() ? (*signs)[i] : 1, vars[i].Id());
  }
  const TagKind kind = signs.has_value() ? generalized
                       : weight_rhs >= 2 ? weighted
                                         : plain;
  BuiltBlock block;
  block.tag = Tag(kind);
  block.constraints.push_back(
      Make(ctx, Tag(kind).name, std::move(lhs), sense, weight_rhs));
  return Finish(ctx, std::move(block));
}

absl::StatusOr<Rational> ResolveBigM(const BuildContext& ctx,
                                     std::optional<Rational> big_m,
                                     std::span<const LinearExpr> exprs) {
  if (big_m.has_value()) {
    if (*big_m <= 0) {
      return absl::InvalidArgumentError("big-M must be positive");
    }
    return *big_m;
  }
  return BigMDefault(exprs, ctx.variables());
}

absl::Status RegisterExpr(const BuildContext& ctx, const LinearExpr& e) {
  for (const Term& t : e.terms()) {
    if (ctx.FindVariable(t.variable) == nullptr) {
      return absl::NotFoundError(
          absl::StrCat("unknown variable '", t.variable, "'"));
    }
  }
  return absl::OkStatus();
}

// The two rows shared by either-or and if-then:
//   first - M t <= 0,  second + M t <= M.
absl::StatusOr<BuiltBlock> BigMPair(BuildContext& ctx, TagKind kind,
                                    const LinearExpr& first,
                                    const LinearExpr& second,
                                    std::optional<Rational> big_m) {
  if (absl::Status s = RegisterExpr(ctx, first); !s.ok()) return s;
  if (absl::Status s = RegisterExpr(ctx, second); !s.ok()) return s;
  const LinearExpr exprs[] = {first, second};
  absl::StatusOr<Rational> m = ResolveBigM(ctx, std::move(big_m), exprs);
  if (!m.ok()) return m.status();
  const Variable t = ctx.NewIndicator();
  BuiltBlock block;
  block.tag = Tag(kind);
  block.aux_variables.push_back(t);
  const std::string_view stem = Tag(kind).name;
  block.constraints.push_back(Make(
      ctx, stem, first - LinearExpr::Var(t.Id(), *m), Sense::kLe, 0));
  block.constraints.push_back(Make(
      ctx, stem, second + LinearExpr::Var(t.Id(), *m), Sense::kLe, *m));
  return Finish(ctx, std::move(block));
}

absl::Status CheckLogicOperands(const Variable& a,
                                std::span<const Variable> bs,
                                std::string_view what) {
  if (absl::Status s = RequireNonEmpty(bs, what); !s.ok()) return s;
  if (absl::Status s = RequireBinary({&a, 1}, what); !s.ok()) return s;
  if (absl::Status s = RequireBinary(bs, what); !s.ok()) return s;
  for (const Variable& b : bs) {
    if (b.Id() == a.Id()) {
      return absl::InvalidArgumentError(
          absl::StrCat(std::string(what), ": '", a.Id(), "' appears on both sides"));
    }
  }
  return RequireDistinct(bs, what);
}

}  // namespace

BuildContext::BuildContext(const Model& model) {
  for (const Variable& v : model.variables) AddVariable(v);
  for (const Constraint& c : model.constraints) ReserveName(c.name);
}

void BuildContext::AddVariable(const Variable& v) {
  variables_.insert_or_assign(v.Id(), v);
}

const Variable* BuildContext::FindVariable(std::string_view id) const {
  auto it = variables_.find(id);
  return it == variables_.end() ? nullptr : &it->second;
}

void BuildContext::ReserveName(std::string_view name) {
  names_.insert(std::string(name));
}

std::string BuildContext::FreshConstraintName(std::string_view stem) {
  for (int k = 1;; ++k) {
    std::string candidate = absl::StrCat(std::string(stem), "_", k);
    if (!names_.contains(candidate)) return candidate;
  }
}

Variable BuildContext::NewIndicator() {
  while (true) {
    std::string id = absl::StrCat(std::string(kAuxPrefix), ++aux_counter_);
    if (FindVariable(id) == nullptr) {
      Variable t = Variable::Binary(std::move(id));
      AddVariable(t);
      return t;
    }
  }
}

void BuildContext::Commit(const BuiltBlock& block) {
  for (const Variable& v : block.aux_variables) AddVariable(v);
  for (const Constraint& c : block.constraints) ReserveName(c.name);
}

absl::StatusOr<BuiltBlock> SetCovering(BuildContext& ctx,
                                       std::span<const Variable> vars,
                                       int weight_rhs,
                                       std::optional<std::vector<int>> signs) {
  return SetConstraint(ctx, vars, weight_rhs, signs, Sense::kGe,
                       TagKind::kSetCovering, TagKind::kWeightedSetCovering,
                       TagKind::kGeneralizedSetCovering);
}

absl::StatusOr<BuiltBlock> SetPartitioning(
    BuildContext& ctx, std::span<const Variable> vars, int weight_rhs,
    std::optional<std::vector<int>> signs) {
  return SetConstraint(ctx, vars, weight_rhs, signs, Sense::kEq,
                       TagKind::kSetPartitioning,
                       TagKind::kWeightedSetPartitioning,
                       TagKind::kGeneralizedSetPartitioning);
}

absl::StatusOr<BuiltBlock> SetPacking(BuildContext& ctx,
                                      std::span<const Variable> vars) {
  return SetConstraint(ctx, vars, 1, std::nullopt, Sense::kLe,
                       TagKind::kSetPacking, TagKind::kSetPacking,
                       TagKind::kSetPacking);
}

absl::StatusOr<BuiltBlock> Knapsack(BuildContext& ctx,
                                    std::span<const Rational> weights,
                                    const Rational& capacity,
                                    std::span<const Variable> vars) {
  if (absl::Status s = RequireNonEmpty(vars, "Knapsack"); !s.ok()) return s;
  if (absl::Status s = RequireDistinct(vars, "Knapsack"); !s.ok()) return s;
  if (weights.size() != vars.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("Knapsack: ", vars.size(), " variables but ",
                     weights.size(), " weights"));
  }
  if (capacity < 0 || !IsInteger(capacity)) {
    return absl::InvalidArgumentError(
        "Knapsack: capacity must be a nonnegative integer");
  }
  const bool binary = vars.front().type == NumberType::kBinary;
  for (size_t i = 0; i < vars.size(); ++i) {
    if ((vars[i].type == NumberType::kBinary) != binary) {
      return absl::InvalidArgumentError(
          "Knapsack: mixed binary and non-binary variables");
    }
    if (weights[i] <= 0) {
      return absl::InvalidArgumentError(absl::StrCat(
          "Knapsack: nonpositive weight for '", vars[i].Id(), "'"));
    }
  }
  Register(ctx, vars);
  LinearExpr lhs;
  for (size_t i = 0; i < vars.size(); ++i) {
    lhs.AddTerm(weights[i], vars[i].Id());
  }
  const TagKind kind = binary ? TagKind::kZeroOneKnapsack : TagKind::kKnapsack;
  BuiltBlock block;
  block.tag = Tag(kind);
  block.constraints.push_back(
      Make(ctx, Tag(kind).name, std::move(lhs), Sense::kLe, capacity));
  return Finish(ctx, std::move(block));
}

absl::StatusOr<BuiltBlock> FixedBound(BuildContext& ctx, const LinearExpr& expr,
                                      BoundKind kind, const Rational& bound) {
  if (expr.Normalized().terms().empty()) {
    return absl::InvalidArgumentError("FixedBound: expression is empty");
  }
  if (absl::Status s = RegisterExpr(ctx, expr); !s.ok()) return s;
  const TagKind tag = kind == BoundKind::kSupplyUpper
                          ? TagKind::kFixedUpperBound
                          : TagKind::kFixedLowerBound;
  BuiltBlock block;
  block.tag = Tag(tag);
  block.constraints.push_back(
      Make(ctx, Tag(tag).name, expr,
           kind == BoundKind::kSupplyUpper ? Sense::kLe : Sense::kGe, bound));
  return Finish(ctx, std::move(block));
}

absl::StatusOr<BuiltBlock> VariableBound(BuildContext& ctx,
                                         const LinearExpr& expr, BoundKind kind,
                                         const Variable& bound_var,
                                         const Rational& multiplier) {
  if (expr.Normalized().terms().empty()) {
    return absl::InvalidArgumentError("VariableBound: expression is empty");
  }
  if (multiplier <= 0) {
    return absl::InvalidArgumentError(
        "VariableBound: multiplier must be positive");
  }
  Register(ctx, {&bound_var, 1});
  if (absl::Status s = RegisterExpr(ctx, expr); !s.ok()) return s;
  const bool upper = kind == BoundKind::kSupplyUpper;
  const bool binary = bound_var.type == NumberType::kBinary;
  const TagKind tag = upper ? (binary ? TagKind::kConditionalUpperBound
                                      : TagKind::kVariableUpperBound)
                            : (binary ? TagKind::kConditionalLowerBound
                                      : TagKind::kVariableLowerBound);
  BuiltBlock block;
  block.tag = Tag(tag);
  block.constraints.push_back(
      Make(ctx, Tag(tag).name,
           expr - LinearExpr::Var(bound_var.Id(), multiplier),
           upper ? Sense::kLe : Sense::kGe, 0));
  return Finish(ctx, std::move(block));
}

absl::StatusOr<BuiltBlock> Balance(BuildContext& ctx,
                                   const LinearExpr& lhs_items,
                                   const LinearExpr& rhs_items,
                                   BalanceKind kind) {
  if (lhs_items.Normalized().terms().empty()) {
    return absl::InvalidArgumentError("Balance: left-hand side is empty");
  }
  if (kind != BalanceKind::kAssignValue &&
      rhs_items.Normalized().terms().empty()) {
    return absl::InvalidArgumentError("Balance: right-hand side is empty");
  }
  if (absl::Status s = RegisterExpr(ctx, lhs_items); !s.ok()) return s;
  if (absl::Status s = RegisterExpr(ctx, rhs_items); !s.ok()) return s;
  TagKind tag = TagKind::kIOBalance;
  switch (kind) {
    case BalanceKind::kIOBalance:
      tag = TagKind::kIOBalance;
      break;
    case BalanceKind::kPeriodLink:
      tag = TagKind::kPeriodLink;
      break;
    case BalanceKind::kAssignValue:
      tag = TagKind::kAssignValue;
      break;
    case BalanceKind::kInventory:
      tag = TagKind::kInventoryBalance;
      break;
  }
  BuiltBlock block;
  block.tag = Tag(tag);
  block.constraints.push_back(
      Make(ctx, Tag(tag).name, lhs_items - rhs_items, Sense::kEq, 0));
  return Finish(ctx, std::move(block));
}

absl::StatusOr<BuiltBlock> FixToZero(BuildContext& ctx,
                                     std::span<const Variable> vars) {
  if (absl::Status s = RequireNonEmpty(vars, "FixToZero"); !s.ok()) return s;
  if (absl::Status s = RequireDistinct(vars, "FixToZero"); !s.ok()) return s;
  for (const Variable& v : vars) {
    if (!v.lower.has_value() || *v.lower < 0) {
      return absl::InvalidArgumentError(absl::StrCat(
          "FixToZero: variable '", v.Id(), "' is not nonnegative"));
    }
  }
  Register(ctx, vars);
  BuiltBlock block;
  block.tag = Tag(TagKind::kFixToZero);
  for (const Variable& v : vars) {
    block.constraints.push_back(Make(ctx, block.tag.name,
                                     LinearExpr::Var(v.Id()), Sense::kEq, 0));
  }
  return Finish(ctx, std::move(block));
}

absl::StatusOr<BuiltBlock> EitherOr(BuildContext& ctx, const LinearExpr& f,
                                    const LinearExpr& g,
                                    std::optional<Rational> big_m) {
  return BigMPair(ctx, TagKind::kEitherOr, f, g, std::move(big_m));
}

absl::StatusOr<BuiltBlock> IfThenBigM(BuildContext& ctx, const LinearExpr& f,
                                      const LinearExpr& g,
                                      std::optional<Rational> big_m) {
  return BigMPair(ctx, TagKind::kIfThenBigM, g, f, std::move(big_m));
}

absl::StatusOr<BuiltBlock> ConditionalBound(BuildContext& ctx,
                                            const LinearExpr& expr,
                                            const Variable& indicator,
                                            std::optional<Rational> lower,
                                            std::optional<Rational> upper) {
  if (!lower.has_value() && !upper.has_value()) {
    return absl::InvalidArgumentError(
        "ConditionalBound: need a lower or an upper bound");
  }
  if (indicator.type != NumberType::kBinary) {
    return absl::InvalidArgumentError(absl::StrCat(
        "ConditionalBound: indicator '", indicator.Id(), "' is not binary"));
  }
  if (expr.Normalized().terms().empty()) {
    return absl::InvalidArgumentError("ConditionalBound: expression is empty");
  }
  if ((lower.has_value() && *lower < 0) || (upper.has_value() && *upper < 0) ||
      (lower.has_value() && upper.has_value() && *lower > *upper)) {
    return absl::InvalidArgumentError(
        "ConditionalBound: need 0 <= lower <= upper");
  }
  Register(ctx, {&indicator, 1});
  if (absl::Status s = RegisterExpr(ctx, expr); !s.ok()) return s;
  BuiltBlock block;
  block.tag = Tag(upper.has_value() ? TagKind::kConditionalUpperBound
                                    : TagKind::kConditionalLowerBound);
  if (upper.has_value()) {
    block.constraints.push_back(
        Make(ctx, Tag(TagKind::kConditionalUpperBound).name,
             expr - LinearExpr::Var(indicator.Id(), *upper), Sense::kLe, 0));
  }
  if (lower.has_value()) {
    block.constraints.push_back(
        Make(ctx, Tag(TagKind::kConditionalLowerBound).name,
             expr - LinearExpr::Var(indicator.Id(), *lower), Sense::kGe, 0));
  }
  return Finish(ctx, std::move(block));
}

absl::StatusOr<BuiltBlock> ImpliesBinary(BuildContext& ctx,
                                         const LinearExpr& f,
                                         const LinearExpr& g) {
  if (absl::Status s = RegisterExpr(ctx, f); !s.ok()) return s;
  if (absl::Status s = RegisterExpr(ctx, g); !s.ok()) return s;
  BuiltBlock block;
  block.tag = Tag(TagKind::kImpliesBinary);
  block.constraints.push_back(
      Make(ctx, block.tag.name, f - g, Sense::kLe, 0));
  return Finish(ctx, std::move(block));
}

absl::StatusOr<BuiltBlock> IfAllThen(BuildContext& ctx, const Variable& a,
                                     std::span<const Variable> bs,
                                     std::optional<int> at_least) {
  if (absl::Status s = CheckLogicOperands(a, bs, "IfAllThen"); !s.ok()) {
    return s;
  }
  const int n = static_cast<int>(bs.size());
  const int k = at_least.value_or(n);
  if (k < 1 || k > n) {
    return absl::InvalidArgumentError(
        absl::StrCat("IfAllThen: at_least must be in [1, ", n, "]"));
  }
  Register(ctx, {&a, 1});
  Register(ctx, bs);
  LinearExpr lhs;
  for (const Variable& b : bs) lhs.AddTerm(1, b.Id());
  lhs.AddTerm(-(n - k + 1), a.Id());
  BuiltBlock block;
  block.tag = Tag(TagKind::kIfAllThen);
  block.constraints.push_back(
      Make(ctx, block.tag.name, std::move(lhs), Sense::kLe, k - 1));
  return Finish(ctx, std::move(block));
}

absl::StatusOr<BuiltBlock> OnlyIfAll(BuildContext& ctx, const Variable& a,
                                     std::span<const Variable> bs,
                                     Strength strength) {
  if (absl::Status s = CheckLogicOperands(a, bs, "OnlyIfAll"); !s.ok()) {
    return s;
  }
  Register(ctx, {&a, 1});
  Register(ctx, bs);
  BuiltBlock block;
  if (strength == Strength::kAggregated) {
    block.tag = Tag(TagKind::kIfAllThen);
    LinearExpr lhs = LinearExpr::Var(a.Id(), static_cast<long>(bs.size()));
    for (const Variable& b : bs) lhs.AddTerm(-1, b.Id());
    block.constraints.push_back(
        Make(ctx, block.tag.name, std::move(lhs), Sense::kLe, 0));
    return Finish(ctx, std::move(block));
  }
  block.tag = Tag(TagKind::kOnlyIfAll);
  for (const Variable& b : bs) {
    block.constraints.push_back(
        Make(ctx, block.tag.name,
             LinearExpr::Var(a.Id()) - LinearExpr::Var(b.Id()), Sense::kLe,
             0));
  }
  return Finish(ctx, std::move(block));
}

absl::StatusOr<BuiltBlock> IffAll(BuildContext& ctx, const Variable& a,
                                  std::span<const Variable> bs) {
  if (absl::Status s = CheckLogicOperands(a, bs, "IffAll"); !s.ok()) return s;
  absl::StatusOr<BuiltBlock> if_part = IfAllThen(ctx, a, bs);
  if (!if_part.ok()) return if_part.status();
  absl::StatusOr<BuiltBlock> only_part = OnlyIfAll(ctx, a, bs);
  if (!only_part.ok()) return only_part.status();
  BuiltBlock block;
  block.tag = Tag(TagKind::kIffAll);
  block.constraints = std::move(if_part->constraints);
  for (Constraint& c : only_part->constraints) {
    block.constraints.push_back(std::move(c));
  }
  return block;
}

absl::StatusOr<BuiltBlock> FixValueIf(BuildContext& ctx, const Variable& z,
                                      const LinearExpr& f,
                                      const Rational& value,
                                      std::optional<Rational> big_m) {
  if (z.type != NumberType::kBinary) {
    return absl::InvalidArgumentError(
        absl::StrCat("FixValueIf: '", z.Id(), "' is not binary"));
  }
  Register(ctx, {&z, 1});
  if (absl::Status s = RegisterExpr(ctx, f); !s.ok()) return s;
  const LinearExpr deviation[] = {f - LinearExpr(value)};
  absl::StatusOr<Rational> m = ResolveBigM(ctx, std::move(big_m), deviation);
  if (!m.ok()) return m.status();
  BuiltBlock block;
  block.tag = Tag(TagKind::kFixValueIf);
  // -M (1 - z) + f <= C  and  M (1 - z) + f >= C.
  block.constraints.push_back(Make(ctx, block.tag.name,
                                   f + LinearExpr::Var(z.Id(), *m), Sense::kLe,
                                   value + *m));
  block.constraints.push_back(Make(ctx, block.tag.name,
                                   f - LinearExpr::Var(z.Id(), *m), Sense::kGe,
                                   value - *m));
  return Finish(ctx, std::move(block));
}

absl::StatusOr<BuiltBlock> GeneralConstraint(BuildContext& ctx,
                                             const LinearExpr& expr,
                                             Sense sense, const Rational& rhs) {
  if (absl::Status s = RegisterExpr(ctx, expr); !s.ok()) return s;
  const TagKind tag = sense == Sense::kLe   ? TagKind::kGeneralLE
                      : sense == Sense::kEq ? TagKind::kGeneralEQ
                                            : TagKind::kGeneralGE;
  BuiltBlock block;
  block.tag = Tag(tag);
  block.constraints.push_back(Make(ctx, Tag(tag).name, expr, sense, rhs));
  return Finish(ctx, std::move(block));
}

std::optional<Interval> ExprRange(const LinearExpr& e,
                                  const VariableTable& bounds) {
  Interval range{e.constant(), e.constant()};
  const LinearExpr normalized = e.Normalized();
  for (const Term& t : normalized.terms()) {
    auto it = bounds.find(t.variable);
    if (it == bounds.end()) return std::nullopt;
    const Variable& v = it->second;
    if (!v.lower.has_value() || !v.upper.has_value()) return std::nullopt;
    const Rational a = t.coefficient * *v.lower;
    const Rational b = t.coefficient * *v.upper;
    range.lower += a < b ? a : b;
    range.upper += a < b ? b : a;
  }
  return range;
}

absl::StatusOr<Rational> BigMDefault(std::span<const LinearExpr> exprs,
                                     const VariableTable& bounds) {
  Rational sup = 0;
  for (const LinearExpr& e : exprs) {
    std::optional<Interval> range = ExprRange(e, bounds);
    if (!range.has_value()) {
      return absl::FailedPreconditionError(absl::StrCat(
          "UNBOUNDED_BIG_M: '", ToString(e),
          "' has an unbounded variable; supply M explicitly"));
    }
    sup = std::max(sup, std::max(Abs(range->lower), Abs(range->upper)));
  }
  return sup + 1;
}

}  // namespace omt
