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

#ifndef OMT_MODEL_H_
#define OMT_MODEL_H_

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "omt/rational.h"

namespace omt {

enum class ProblemSense { kMin, kMax };
enum class NumberType { kNonNegReal, kNonNegInteger, kBinary };
enum class Sense { kLe, kEq, kGe };

std::string_view ProblemSenseName(ProblemSense sense);
std::string_view NumberTypeName(NumberType type);
// "<=", "=", ">=".
std::string_view SenseSymbol(Sense sense);
Sense FlipSense(Sense sense);

// A named, ordered set of distinct labels (strings or integers rendered as
// strings).
struct IndexSet {
  std::string name;
  std::vector<std::string> members;
};

// A scalar decision variable. Indexed families are expanded at build time:
// x_{1,2} is Variable{"x", {"1", "2"}} and is referred to by its flattened
// id "x_1_2". A missing bound means -inf / +inf.
struct Variable {
  std::string name;
  std::vector<std::string> indices;
  NumberType type = NumberType::kNonNegReal;
  std::optional<Rational> lower = Rational(0);
  std::optional<Rational> upper;

  std::string Id() const;

  static Variable Binary(std::string name, std::vector<std::string> indices = {});
  static Variable Integer(std::string name, std::vector<std::string> indices = {},
                          std::optional<Rational> upper = std::nullopt);
  static Variable Continuous(std::string name,
                             std::vector<std::string> indices = {},
                             std::optional<Rational> upper = std::nullopt);

  friend bool operator==(const Variable&, const Variable&) = default;
};

struct Term {
  Rational coefficient;
  std::string variable;  // Variable::Id()

  friend bool operator==(const Term&, const Term&) = default;
};

class LinearExpr {
 public:
  LinearExpr() = default;
  explicit LinearExpr(Rational constant) : constant_(std::move(constant)) {
    constant_.canonicalize();
  }
  LinearExpr(std::vector<Term> terms, Rational constant = 0)
      : terms_(std::move(terms)), constant_(std::move(constant)) {
    constant_.canonicalize();
    for (Term& t : terms_) t.coefficient.canonicalize();
  }

  static LinearExpr Var(std::string_view id, Rational coefficient = 1);
  static LinearExpr Sum(const std::vector<std::string>& ids);

  const std::vector<Term>& terms() const { return terms_; }
  const Rational& constant() const { return constant_; }

  LinearExpr& AddTerm(Rational coefficient, std::string_view id);
  LinearExpr& AddConstant(const Rational& value);

  // Merges duplicate variables, drops zero coefficients and sorts terms by
  // variable id.
  LinearExpr Normalized() const;
  bool IsNormalized() const;

  // Coefficient of `id` in the normalized expression (0 if absent).
  Rational CoefficientOf(std::string_view id) const;

  LinearExpr operator-() const;
  friend LinearExpr operator+(const LinearExpr& a, const LinearExpr& b);
  friend LinearExpr operator-(const LinearExpr& a, const LinearExpr& b);
  friend LinearExpr operator*(const Rational& k, const LinearExpr& e);

  friend bool operator==(const LinearExpr&, const LinearExpr&) = default;

 private:
  std::vector<Term> terms_;
  Rational constant_ = 0;
};

struct Constraint {
  std::string name;
  LinearExpr lhs;
  Sense sense = Sense::kLe;
  Rational rhs = 0;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct Objective {
  ProblemSense sense = ProblemSense::kMin;
  LinearExpr expr;

  friend bool operator==(const Objective&, const Objective&) = default;
};

struct Model {
  std::string name;
  std::vector<IndexSet> index_sets;
  std::vector<Variable> variables;
  Objective objective;
  std::vector<Constraint> constraints;

  const Variable* FindVariable(std::string_view id) const;
  const Constraint* FindConstraint(std::string_view name) const;
};

// A mapping from variable ids to exact values.
class Assignment {
 public:
  Assignment() = default;
  Assignment(std::initializer_list<std::pair<const std::string, Rational>> v)
      : values_(v) {
    for (auto& [id, value] : values_) value.canonicalize();
  }

  void Set(std::string_view id, Rational value);
  const Rational* Find(std::string_view id) const;
  bool Contains(std::string_view id) const { return Find(id) != nullptr; }
  const std::map<std::string, Rational, std::less<>>& values() const {
    return values_;
  }
  // Keeps only the given ids.
  Assignment Project(const std::vector<std::string>& ids) const;
  std::string DebugString() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend auto operator<=>(const Assignment& a, const Assignment& b) {
    return a.Compare(b);
  }

 private:
  std::weak_ordering Compare(const Assignment& other) const;
  std::map<std::string, Rational, std::less<>> values_;
};

// Folds the lhs constant into the rhs, merges and sorts terms, and negates
// both sides (flipping the sense) when the rhs is negative. The result has
// the same solution set and rhs >= 0.
Constraint Canonicalize(const Constraint& c);
// As above; additionally fails if `c` references a variable absent from `m`.
absl::StatusOr<Constraint> Canonicalize(const Constraint& c, const Model& m);
bool IsCanonical(const Constraint& c);

absl::StatusOr<Rational> Evaluate(const LinearExpr& e, const Assignment& a);
absl::StatusOr<bool> Satisfied(const Constraint& c, const Assignment& a);
absl::StatusOr<Rational> ObjectiveValue(const Model& m, const Assignment& a);

struct Violation {
  std::string kind;  // e.g. "unresolved variable", "binary bounds"
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string ToString() const;
};

ValidationReport Validate(const Model& m);

// Structural equality modulo canonicalization: same variables (compared by
// id, in id order), same objective, same constraints (by name, canonical
// form). The model name and index sets are metadata and are ignored.
bool StructurallyEqual(const Model& a, const Model& b);

std::string ToString(const LinearExpr& e);
std::string ToString(const Constraint& c);

}  // namespace omt

#endif  // OMT_MODEL_H_
