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

#include "omt/model.h"

#include <algorithm>
#include <set>
#include <utility>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace omt {

std::string_view ProblemSenseName(ProblemSense sense) {
  return sense == ProblemSense::kMax ? "max" : "min";
}

std::string_view NumberTypeName(NumberType type) {
  switch (type) {
    case NumberType::kNonNegReal:
      return "NONNEG_REAL";
    case NumberType::kNonNegInteger:
      return "NONNEG_INTEGER";
    case NumberType::kBinary:
      return "BINARY";
  }
  return "?";
}

std::string_view SenseSymbol(Sense sense) {
  switch (sense) {
    case Sense::kLe:
      return "<=";
    case Sense::kEq:
      return "=";
    case Sense::kGe:
      return ">=";
  }
  return "?";
}

Sense FlipSense(Sense sense) {
  if (sense == Sense::kLe) return Sense::kGe;
  if (sense == Sense::kGe) return Sense::kLe;
  return Sense::kEq;
}

std::string Variable::Id() const {
  if (indices.empty()) return name;
  return absl::StrCat(name, "_", absl::StrJoin(indices, "_"));
}

Variable Variable::Binary(std::string name, std::vector<std::string> indices) {
  return Variable{std::move(name), std::move(indices), NumberType::kBinary,
                  Rational(0), Rational(1)};
}

Variable Variable::Integer(std::string name, std::vector<std::string> indices,
                           std::optional<Rational> upper) {
  return Variable{std::move(name), std::move(indices),
                  NumberType::kNonNegInteger, Rational(0), std::move(upper)};
}

Variable Variable::Continuous(std::string name,
                              std::vector<std::string> indices,
                              std::optional<Rational> upper) {
  return Variable{std::move(name), std::move(indices), NumberType::kNonNegReal,
                  Rational(0), std::move(upper)};
}

LinearExpr LinearExpr::Var(std::string_view id, Rational coefficient) {
  coefficient.canonicalize();
  return LinearExpr({Term{std::move(coefficient), std::string(id)}});
}

LinearExpr LinearExpr::Sum(const std::vector<std::string>& ids) {
  LinearExpr e;
  for (const std::string& id : ids) e.AddTerm(1, id);
  return e;
}

LinearExpr& LinearExpr::AddTerm(Rational coefficient, std::string_view id) {
  coefficient.canonicalize();
  terms_.push_back(Term{std::move(coefficient), std::string(id)});
  return *this;
}

LinearExpr& LinearExpr::AddConstant(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  constant_ += v;
  return *this;
}

LinearExpr LinearExpr::Normalized() const {
  std::map<std::string, Rational> merged;
  for (const Term& t : terms_) merged[t.variable] += t.coefficient;
  LinearExpr out;
  out.constant_ = constant_;
  for (auto& [id, coef] : merged) {
    if (coef != 0) out.terms_.push_back(Term{coef, id});
  }
  return out;
}

bool LinearExpr::IsNormalized() const {
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coefficient == 0) return false;
    if (i > 0 && !(terms_[i - 1].variable < terms_[i].variable)) return false;
  }
  return true;
}

Rational LinearExpr::CoefficientOf(std::string_view id) const {
  Rational sum = 0;
  for (const Term& t : terms_) {
    if (t.variable == id) sum += t.coefficient;
  }
  return sum;
}

LinearExpr LinearExpr::operator-() const { return Rational(-1) * *this; }

LinearExpr operator+(const LinearExpr& a, const LinearExpr& b) {
  LinearExpr out = a;
  for (const Term& t : b.terms_) out.terms_.push_back(t);
  out.constant_ += b.constant_;
  return out.Normalized();
}

LinearExpr operator-(const LinearExpr& a, const LinearExpr& b) {
  return a + (-b);
}

LinearExpr operator*(const Rational& k, const LinearExpr& e) {
  LinearExpr out;
  for (const Term& t : e.terms_) {
    out.terms_.push_back(Term{k * t.coefficient, t.variable});
  }
  out.constant_ = k * e.constant_;
  return out.Normalized();
}

const Variable* Model::FindVariable(std::string_view id) const {
  for (const Variable& v : variables) {
    if (v.Id() == id) return &v;
  }
  return nullptr;
}

const Constraint* Model::FindConstraint(std::string_view name) const {
  for (const Constraint& c : constraints) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

void Assignment::Set(std::string_view id, Rational value) {
  value.canonicalize();
  values_.insert_or_assign(std::string(id), std::move(value));
}

const Rational* Assignment::Find(std::string_view id) const {
  auto it = values_.find(id);
  return it == values_.end() ? nullptr : &it->second;
}

Assignment Assignment::Project(const std::vector<std::string>& ids) const {
  Assignment out;
  for (const std::string& id : ids) {
    if (const Rational* v = Find(id)) out.Set(id, *v);
  }
  return out;
}

std::string Assignment::DebugString() const {
  std::vector<std::string> parts;
  for (const auto& [id, value] : values_) {
    parts.push_back(absl::StrCat(id, "=", FormatRational(value)));
  }
  return absl::StrCat("{", absl::StrJoin(parts, ", "), "}");
}

std::weak_ordering Assignment::Compare(const Assignment& other) const {
  auto a = values_.begin();
  auto b = other.values_.begin();
  for (; a != values_.end() && b != other.values_.end(); ++a, ++b) {
    if (a->first != b->first) return a->first <=> b->first;
    if (a->second != b->second) {
      return a->second < b->second ? std::weak_ordering::less
                                   : std::weak_ordering::greater;
    }
  }
  return values_.size() <=> other.values_.size();
}

Constraint Canonicalize(const Constraint& c) {
  Constraint out;
  out.name = c.name;
  LinearExpr lhs = c.lhs.Normalized();
  Rational rhs = c.rhs - lhs.constant();
  lhs = LinearExpr(lhs.terms(), 0);
  Sense sense = c.sense;
  if (rhs < 0) {
    lhs = -lhs;
    rhs = -rhs;
    sense = FlipSense(sense);
  }
  out.lhs = std::move(lhs);
  out.sense = sense;
  out.rhs = std::move(rhs);
  return out;
}

absl::StatusOr<Constraint> Canonicalize(const Constraint& c, const Model& m) {
  for (const Term& t : c.lhs.terms()) {
    if (m.FindVariable(t.variable) == nullptr) {
      return absl::NotFoundError(absl::StrCat("constraint '", c.name,
                                              "': unresolved variable '",
                                              t.variable, "'"));
    }
  }
  return Canonicalize(c);
}

bool IsCanonical(const Constraint& c) {
  return c.lhs.constant() == 0 && c.lhs.IsNormalized() && c.rhs >= 0;
}

absl::StatusOr<Rational> Evaluate(const LinearExpr& e, const Assignment& a) {
  Rational sum = e.constant();
  for (const Term& t : e.terms()) {
    const Rational* value = a.Find(t.variable);
    if (value == nullptr) {
      return absl::InvalidArgumentError(
          absl::StrCat("missing value for variable '", t.variable, "'"));
    }
    sum += t.coefficient * *value;
  }
  return sum;
}

absl::StatusOr<bool> Satisfied(const Constraint& c, const Assignment& a) {
  absl::StatusOr<Rational> lhs = Evaluate(c.lhs, a);
  if (!lhs.ok()) return lhs.status();
  switch (c.sense) {
    case Sense::kLe:
      return *lhs <= c.rhs;
    case Sense::kEq:
      return *lhs == c.rhs;
    case Sense::kGe:
      return *lhs >= c.rhs;
  }
  return false;
}

absl::StatusOr<Rational> ObjectiveValue(const Model& m, const Assignment& a) {
  return Evaluate(m.objective.expr, a);
}

std::string ValidationReport::ToString() const {
  std::vector<std::string> lines;
  for (const Violation& v : violations) {
    lines.push_back(absl::StrCat(v.kind, ": ", v.message));
  }
  return absl::StrJoin(lines, "\n");
}

ValidationReport Validate(const Model& m) {
  ValidationReport report;
  auto add = [&report](std::string kind, std::string message) {
    report.violations.push_back({std::move(kind), std::move(message)});
  };

  std::set<std::string> index_set_names;
  for (const IndexSet& s : m.index_sets) {
    if (!index_set_names.insert(s.name).second) {
      add("duplicate index set", s.name);
    }
    if (s.members.empty()) add("empty index set", s.name);
    std::set<std::string> seen(s.members.begin(), s.members.end());
    if (seen.size() != s.members.size()) {
      add("duplicate index member", s.name);
    }
  }

  std::set<std::string> ids;
  for (const Variable& v : m.variables) {
    const std::string id = v.Id();
    if (v.name.empty()) add("invalid name", "variable with empty name");
    if (!ids.insert(id).second) add("duplicate variable", id);
    if (v.type == NumberType::kBinary &&
        (v.lower != Rational(0) || v.upper != Rational(1))) {
      add("binary bounds", absl::StrCat(id, " must have bounds [0, 1]"));
    }
    if (!v.lower.has_value() || *v.lower < 0) {
      add("negative lower bound",
          absl::StrCat(id, " is nonnegative by type but has lower bound < 0"));
    }
    if (v.lower.has_value() && v.upper.has_value() && *v.lower > *v.upper) {
      add("bound contradiction", absl::StrCat(id, " has lower > upper"));
    }
  }

  auto check_expr = [&](const LinearExpr& e, std::string_view owner) {
    for (const Term& t : e.terms()) {
      if (!ids.contains(t.variable)) {
        add("unresolved variable",
            absl::StrCat(std::string(owner), " references '", t.variable, "'"));
      }
    }
  };
  check_expr(m.objective.expr, "objective");

  std::set<std::string> constraint_names;
  for (const Constraint& c : m.constraints) {
    if (c.name.empty()) add("invalid name", "constraint with empty name");
    if (!constraint_names.insert(c.name).second) {
      add("duplicate constraint", c.name);
    }
    check_expr(c.lhs, absl::StrCat("constraint '", c.name, "'"));
  }
  return report;
}

bool StructurallyEqual(const Model& a, const Model& b) {
  auto sorted_vars = [](const Model& m) {
    std::map<std::string, Variable> out;
    for (const Variable& v : m.variables) {
      Variable flat = v;
      flat.name = v.Id();
      flat.indices.clear();
      out.emplace(flat.name, flat);
    }
    return out;
  };
  auto sorted_cons = [](const Model& m) {
    std::map<std::string, Constraint> out;
    for (const Constraint& c : m.constraints) out.emplace(c.name, Canonicalize(c));
    return out;
  };
  return sorted_vars(a) == sorted_vars(b) &&
         a.objective.sense == b.objective.sense &&
         a.objective.expr.Normalized() == b.objective.expr.Normalized() &&
         a.constraints.size() == b.constraints.size() &&
         sorted_cons(a) == sorted_cons(b);
}

std::string ToString(const LinearExpr& e) {
  std::string out;
  for (const Term& t : e.terms()) {
    const bool negative = t.coefficient < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = Abs(t.coefficient);
    if (magnitude != 1) absl::StrAppend(&out, FormatRational(magnitude), " ");
    out += t.variable;
  }
  if (e.constant() != 0 || out.empty()) {
    if (out.empty()) {
      out = FormatRational(e.constant());
    } else {
      absl::StrAppend(&out, e.constant() < 0 ? " - " : " + ",
                      FormatRational(Abs(e.constant())));
    }
  }
  return out;
}

std::string ToString(const Constraint& c) {
  return absl::StrCat(ToString(c.lhs), " ", std::string(SenseSymbol(c.sense)), " ",
                      FormatRational(c.rhs));
}

}  // namespace omt
