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

#include "omt/builders.h"

#include <algorithm>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "omt/lp_format.h"
#include "omt/rational.h"

namespace omt {
namespace {

using nlohmann::json;

ParamSpec Req(std::string name, ParamType type) {
  return ParamSpec{std::move(name), type, true, {}};
}
ParamSpec Opt(std::string name, ParamType type) {
  return ParamSpec{std::move(name), type, false, {}};
}
ParamSpec Choice(std::string name, std::vector<std::string> choices,
                 bool required = true) {
  return ParamSpec{std::move(name), ParamType::kEnum, required,
                   std::move(choices)};
}

std::vector<BuilderSpec> MakeRegistry() {
  using T = ParamType;
  const ParamSpec kind = Choice("kind", {"upper", "lower"});
  std::vector<BuilderSpec> r = {
      {"declare_variables",
       {Req("names", T::kStringList), Opt("upper", T::kRational)},
       {Choice("type", {"BINARY", "NONNEG_INTEGER", "NONNEG_REAL"})}},
      {"set_objective", {Req("expr", T::kExpr)}, {Choice("sense", {"max", "min"})}},
      {"set_covering",
       {Req("variables", T::kVariableList), Opt("rhs", T::kInt),
        Opt("signs", T::kIntList)},
       {}},
      {"set_partitioning",
       {Req("variables", T::kVariableList), Opt("rhs", T::kInt),
        Opt("signs", T::kIntList)},
       {}},
      {"set_packing", {Req("variables", T::kVariableList)}, {}},
      {"knapsack",
       {Req("weights", T::kRationalList), Req("capacity", T::kRational),
        Req("variables", T::kVariableList)},
       {}},
      {"fixed_bound", {Req("expr", T::kExpr), Req("bound", T::kRational)}, {kind}},
      {"variable_bound",
       {Req("expr", T::kExpr), Req("bound_var", T::kVariable),
        Opt("multiplier", T::kRational)},
       {kind}},
      {"conditional_bound",
       {Req("expr", T::kExpr), Req("indicator", T::kVariable),
        Opt("lower", T::kRational), Opt("upper", T::kRational)},
       {}},
      {"balance",
       {Req("lhs", T::kExpr), Req("rhs", T::kExpr)},
       {Choice("kind",
               {"io_balance", "period_link", "assign_value", "inventory"})}},
      {"fix_to_zero", {Req("variables", T::kVariableList)}, {}},
      {"either_or",
       {Req("f", T::kExpr), Req("g", T::kExpr), Opt("big_m", T::kRational)},
       {}},
      {"if_then_big_m",
       {Req("f", T::kExpr), Req("g", T::kExpr), Opt("big_m", T::kRational)},
       {}},
      {"implies_binary", {Req("f", T::kExpr), Req("g", T::kExpr)}, {}},
      {"if_all_then",
       {Req("a", T::kVariable), Req("bs", T::kVariableList),
        Opt("at_least", T::kInt)},
       {}},
      {"only_if_all",
       {Req("a", T::kVariable), Req("bs", T::kVariableList),
        Choice("strength", {"DISAGGREGATED", "AGGREGATED"}, false)},
       {}},
      {"iff_all", {Req("a", T::kVariable), Req("bs", T::kVariableList)}, {}},
      {"fix_value_if",
       {Req("z", T::kVariable), Req("f", T::kExpr), Req("value", T::kRational),
        Opt("big_m", T::kRational)},
       {}},
      {"general_constraint",
       {Req("expr", T::kExpr), Req("rhs", T::kRational)},
       {Choice("sense", {"<=", "=", ">="})}},
  };
  return r;
}

bool IsPlaceholder(const json& v) {
  return v.is_string() && v.get<std::string>() == kPlaceholder;
}

absl::Status TypeError(const ParamSpec& p, std::string_view expected) {
  return absl::InvalidArgumentError(absl::StrCat(
      "parameter '", p.name, "': expected ", std::string(expected)));
}

bool IsRationalValue(const json& v) {
  if (v.is_number_integer()) return true;
  return v.is_string() && ParseRational(v.get<std::string>()).ok();
}

absl::Status CheckValue(const ParamSpec& p, const json& v) {
  switch (p.type) {
    case ParamType::kString:
    case ParamType::kExpr:
    case ParamType::kVariable:
      if (!v.is_string()) return TypeError(p, "a string");
      return absl::OkStatus();
    case ParamType::kEnum:
      if (!v.is_string() ||
          std::find(p.choices.begin(), p.choices.end(),
                    v.get<std::string>()) == p.choices.end()) {
        return TypeError(p, "one of the listed choices");
      }
      return absl::OkStatus();
    case ParamType::kInt:
      if (!v.is_number_integer()) return TypeError(p, "an integer");
      return absl::OkStatus();
    case ParamType::kRational:
      if (!IsRationalValue(v)) return TypeError(p, "a rational");
      return absl::OkStatus();
    case ParamType::kStringList:
    case ParamType::kVariableList:
      if (!v.is_array()) return TypeError(p, "a list of strings");
      for (const json& e : v) {
        if (!e.is_string()) return TypeError(p, "a list of strings");
      }
      return absl::OkStatus();
    case ParamType::kIntList:
      if (!v.is_array()) return TypeError(p, "a list of integers");
      for (const json& e : v) {
        if (!e.is_number_integer()) return TypeError(p, "a list of integers");
      }
      return absl::OkStatus();
    case ParamType::kRationalList:
      if (!v.is_array()) return TypeError(p, "a list of rationals");
      for (const json& e : v) {
        if (!IsRationalValue(e)) return TypeError(p, "a list of rationals");
      }
      return absl::OkStatus();
  }
  return absl::OkStatus();
}

Rational ToRational(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  return *ParseRational(v.get<std::string>());
}

// Typed accessors over a checked bundle.
class Args {
 public:
  Args(BuildContext& ctx, const json& params) : ctx_(ctx), params_(params) {}

  bool Has(const char* key) const { return params_.contains(key); }

  absl::StatusOr<LinearExpr> Expr(const char* key) const {
    absl::StatusOr<LinearExpr> e =
        ParseLpExpression(params_.at(key).get<std::string>());
    if (!e.ok()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "parameter '", key, "': ", std::string(e.status().message())));
    }
    for (const Term& t : e->terms()) {
      if (ctx_.FindVariable(t.variable) == nullptr) {
        return absl::NotFoundError(absl::StrCat(
            "parameter '", key, "': undeclared variable '", t.variable, "'"));
      }
    }
    return e;
  }

  absl::StatusOr<Variable> Var(const char* key) const {
    return Lookup(key, params_.at(key).get<std::string>());
  }

  absl::StatusOr<std::vector<Variable>> Vars(const char* key) const {
    std::vector<Variable> out;
    for (const json& e : params_.at(key)) {
      absl::StatusOr<Variable> v = Lookup(key, e.get<std::string>());
      if (!v.ok()) return v.status();
      out.push_back(*std::move(v));
    }
    return out;
  }

  Rational Rat(const char* key) const { return ToRational(params_.at(key)); }
  std::optional<Rational> OptRat(const char* key) const {
    if (!Has(key)) return std::nullopt;
    return Rat(key);
  }
  std::vector<Rational> Rats(const char* key) const {
    std::vector<Rational> out;
    for (const json& e : params_.at(key)) out.push_back(ToRational(e));
    return out;
  }
  int Int(const char* key, int fallback) const {
    return Has(key) ? params_.at(key).get<int>() : fallback;
  }
  std::optional<std::vector<int>> OptInts(const char* key) const {
    if (!Has(key)) return std::nullopt;
    return params_.at(key).get<std::vector<int>>();
  }
  std::string Str(const char* key, std::string fallback) const {
    return Has(key) ? params_.at(key).get<std::string>() : fallback;
  }

 private:
  absl::StatusOr<Variable> Lookup(const char* key,
                                  const std::string& id) const {
    const Variable* v = ctx_.FindVariable(id);
    if (v == nullptr) {
      return absl::NotFoundError(absl::StrCat(
          "parameter '", key, "': undeclared variable '", id, "'"));
    }
    return *v;
  }

  BuildContext& ctx_;
  const json& params_;
};

#define OMT_ASSIGN_OR_RETURN(lhs, expr) \
  auto lhs##_or = (expr);               \
  if (!lhs##_or.ok()) return lhs##_or.status(); \
  auto lhs = *std::move(lhs##_or)

std::string PresetString(const json& preset, const char* key) {
  if (!preset.is_object() || !preset.contains(key) ||
      !preset.at(key).is_string()) {
    return "";
  }
  return preset.at(key).get<std::string>();
}

absl::StatusOr<BoundKind> BoundKindFrom(const json& preset) {
  const std::string kind = PresetString(preset, "kind");
  if (kind == "upper") return BoundKind::kSupplyUpper;
  if (kind == "lower") return BoundKind::kDemandLower;
  return absl::InvalidArgumentError("preset 'kind' must be upper or lower");
}

}  // namespace

std::string_view ParamTypeName(ParamType type) {
  switch (type) {
    case ParamType::kString:
      return "string";
    case ParamType::kStringList:
      return "string_list";
    case ParamType::kInt:
      return "int";
    case ParamType::kIntList:
      return "int_list";
    case ParamType::kRational:
      return "rational";
    case ParamType::kRationalList:
      return "rational_list";
    case ParamType::kExpr:
      return "expr";
    case ParamType::kVariable:
      return "variable";
    case ParamType::kVariableList:
      return "variable_list";
    case ParamType::kEnum:
      return "enum";
  }
  return "";
}

std::optional<ParamType> ParamTypeByName(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(ParamType::kEnum); ++i) {
    const auto t = static_cast<ParamType>(i);
    if (ParamTypeName(t) == name) return t;
  }
  return std::nullopt;
}

const std::vector<BuilderSpec>& BuilderRegistry() {
  static const std::vector<BuilderSpec>* const kRegistry =
      new std::vector<BuilderSpec>(MakeRegistry());
  return *kRegistry;
}

const BuilderSpec* FindBuilder(std::string_view name) {
  for (const BuilderSpec& b : BuilderRegistry()) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

bool HasPlaceholder(const json& params) {
  if (IsPlaceholder(params)) return true;
  if (params.is_object() || params.is_array()) {
    for (const json& v : params) {
      if (HasPlaceholder(v)) return true;
    }
  }
  return false;
}

absl::Status CheckParams(const std::vector<ParamSpec>& schema,
                         const json& params) {
  if (!params.is_object()) {
    return absl::InvalidArgumentError("parameters must be a JSON object");
  }
  for (const auto& [key, value] : params.items()) {
    auto it = std::find_if(schema.begin(), schema.end(),
                           [&](const ParamSpec& p) { return p.name == key; });
    if (it == schema.end()) {
      return absl::InvalidArgumentError(
          absl::StrCat("unknown parameter '", key, "'"));
    }
    if (IsPlaceholder(value)) continue;
    if (absl::Status s = CheckValue(*it, value); !s.ok()) return s;
  }
  for (const ParamSpec& p : schema) {
    if (p.required && !params.contains(p.name)) {
      return absl::InvalidArgumentError(
          absl::StrCat("missing parameter '", p.name, "'"));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<std::vector<Variable>> DeclaredVariables(const json& params,
                                                        const json& preset) {
  const std::string type = PresetString(preset, "type");
  std::optional<Rational> upper;
  if (params.contains("upper")) upper = ToRational(params.at("upper"));
  std::vector<Variable> out;
  for (const json& n : params.at("names")) {
    const std::string name = n.get<std::string>();
    Variable v;
    if (type == "BINARY") {
      v = Variable::Binary(name);
    } else if (type == "NONNEG_INTEGER") {
      v = Variable::Integer(name);
    } else if (type == "NONNEG_REAL") {
      v = Variable::Continuous(name);
    } else {
      return absl::InvalidArgumentError("preset 'type' is not a number type");
    }
    if (upper.has_value() && type != "BINARY") v.upper = upper;
    out.push_back(std::move(v));
  }
  return out;
}

absl::StatusOr<Objective> ObjectiveFromParams(const json& params,
                                              const json& preset) {
  const std::string sense = PresetString(preset, "sense");
  if (sense != "max" && sense != "min") {
    return absl::InvalidArgumentError("preset 'sense' must be max or min");
  }
  absl::StatusOr<LinearExpr> e =
      ParseLpExpression(params.at("expr").get<std::string>());
  if (!e.ok()) return e.status();
  return Objective{sense == "max" ? ProblemSense::kMax : ProblemSense::kMin,
                   *std::move(e)};
}

absl::StatusOr<BuiltBlock> InvokeBuilder(BuildContext& ctx,
                                         std::string_view name,
                                         const json& params,
                                         const json& preset) {
  const BuilderSpec* spec = FindBuilder(name);
  if (spec == nullptr) {
    return absl::NotFoundError(
        absl::StrCat("unknown builder '", std::string(name), "'"));
  }
  if (absl::Status s = CheckParams(spec->params, params); !s.ok()) return s;
  if (HasPlaceholder(params)) {
    return absl::FailedPreconditionError("parameters contain placeholders");
  }
  const Args args(ctx, params);

  if (name == "set_covering" || name == "set_partitioning") {
    OMT_ASSIGN_OR_RETURN(vars, args.Vars("variables"));
    const int rhs = args.Int("rhs", 1);
    return name == "set_covering"
               ? SetCovering(ctx, vars, rhs, args.OptInts("signs"))
               : SetPartitioning(ctx, vars, rhs, args.OptInts("signs"));
  }
  if (name == "set_packing") {
    OMT_ASSIGN_OR_RETURN(vars, args.Vars("variables"));
    return SetPacking(ctx, vars);
  }
  if (name == "knapsack") {
    OMT_ASSIGN_OR_RETURN(vars, args.Vars("variables"));
    const std::vector<Rational> weights = args.Rats("weights");
    return Knapsack(ctx, weights, args.Rat("capacity"), vars);
  }
  if (name == "fixed_bound") {
    OMT_ASSIGN_OR_RETURN(kind, BoundKindFrom(preset));
    OMT_ASSIGN_OR_RETURN(expr, args.Expr("expr"));
    return FixedBound(ctx, expr, kind, args.Rat("bound"));
  }
  if (name == "variable_bound") {
    OMT_ASSIGN_OR_RETURN(kind, BoundKindFrom(preset));
    OMT_ASSIGN_OR_RETURN(expr, args.Expr("expr"));
    OMT_ASSIGN_OR_RETURN(bound_var, args.Var("bound_var"));
    return VariableBound(ctx, expr, kind, bound_var,
                         args.OptRat("multiplier").value_or(Rational(1)));
  }
  if (name == "conditional_bound") {
    OMT_ASSIGN_OR_RETURN(expr, args.Expr("expr"));
    OMT_ASSIGN_OR_RETURN(indicator, args.Var("indicator"));
    return ConditionalBound(ctx, expr, indicator, args.OptRat("lower"),
                            args.OptRat("upper"));
  }
  if (name == "balance") {
    const std::string kind = PresetString(preset, "kind");
    BalanceKind k;
    if (kind == "io_balance") {
      k = BalanceKind::kIOBalance;
    } else if (kind == "period_link") {
      k = BalanceKind::kPeriodLink;
    } else if (kind == "assign_value") {
      k = BalanceKind::kAssignValue;
    } else if (kind == "inventory") {
      k = BalanceKind::kInventory;
    } else {
      return absl::InvalidArgumentError("preset 'kind' is not a balance kind");
    }
    OMT_ASSIGN_OR_RETURN(lhs, args.Expr("lhs"));
    OMT_ASSIGN_OR_RETURN(rhs, args.Expr("rhs"));
    return Balance(ctx, lhs, rhs, k);
  }
  if (name == "fix_to_zero") {
    OMT_ASSIGN_OR_RETURN(vars, args.Vars("variables"));
    return FixToZero(ctx, vars);
  }
  if (name == "either_or" || name == "if_then_big_m" ||
      name == "implies_binary") {
    OMT_ASSIGN_OR_RETURN(f, args.Expr("f"));
    OMT_ASSIGN_OR_RETURN(g, args.Expr("g"));
    if (name == "implies_binary") return ImpliesBinary(ctx, f, g);
    return name == "either_or" ? EitherOr(ctx, f, g, args.OptRat("big_m"))
                               : IfThenBigM(ctx, f, g, args.OptRat("big_m"));
  }
  if (name == "if_all_then" || name == "only_if_all" || name == "iff_all") {
    OMT_ASSIGN_OR_RETURN(a, args.Var("a"));
    OMT_ASSIGN_OR_RETURN(bs, args.Vars("bs"));
    if (name == "iff_all") return IffAll(ctx, a, bs);
    if (name == "only_if_all") {
      return OnlyIfAll(ctx, a, bs,
                       args.Str("strength", "DISAGGREGATED") == "AGGREGATED"
                           ? Strength::kAggregated
                           : Strength::kDisaggregated);
    }
    std::optional<int> at_least;
    if (args.Has("at_least")) at_least = args.Int("at_least", 0);
    return IfAllThen(ctx, a, bs, at_least);
  }
  if (name == "fix_value_if") {
    OMT_ASSIGN_OR_RETURN(z, args.Var("z"));
    OMT_ASSIGN_OR_RETURN(f, args.Expr("f"));
    return FixValueIf(ctx, z, f, args.Rat("value"), args.OptRat("big_m"));
  }
  if (name == "general_constraint") {
    const std::string sense = PresetString(preset, "sense");
    Sense s;
    if (sense == "<=") {
      s = Sense::kLe;
    } else if (sense == "=") {
      s = Sense::kEq;
    } else if (sense == ">=") {
      s = Sense::kGe;
    } else {
      return absl::InvalidArgumentError("preset 'sense' is not a relation");
    }
    OMT_ASSIGN_OR_RETURN(expr, args.Expr("expr"));
    return GeneralConstraint(ctx, expr, s, args.Rat("rhs"));
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "builder '", std::string(name), "' does not produce constraints"));
}

}  // namespace omt
