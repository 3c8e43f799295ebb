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

#ifndef OMT_LP_FORMAT_H_
#define OMT_LP_FORMAT_H_

#include <map>
#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "omt/model.h"

namespace omt {

// A small lp_solve-style LP dialect. Statements end with ';', comments are
// "//" to end of line or "/* ... */":
//
//   max: 3 x + 2 y;            objective ("min:" / "max:", may be empty)
//   c1: x + y <= 4;            named constraint (<=, =, >=; also <, >, =<, =>)
//   x + 2 y >= 1;              unnamed constraint, named R<k> (k = row number)
//   x <= 10;  x >= 2;          unnamed single-variable relation: a bound
//   1 <= z <= 8;  a, b >= 0;   double bound, bound on a list
//   x >= -inf;                 infinite bounds
//   int x, y;  bin z;          integrality
//
// Coefficients are exact: decimals ("0.1") and fractions ("1/3") are read as
// rationals. Indexed variables are flattened with '_' (x_1_2). Variables are
// nonnegative continuous unless declared otherwise.
//
// EBNF:
//   file       = { statement } ;
//   statement  = objective | constraint | bound | declaration ;
//   objective  = ("max" | "min" | "maximize" | "minimize") ":" [ expr ] ";" ;
//   constraint = [ ident ":" ] expr rel expr ";" ;
//   bound      = ident rel number ";" | number rel ident rel number ";"
//              | ident { "," ident } rel number ";" ;
//   declaration= ("int" | "bin") ident { [","] ident } ";" ;
//   expr       = term { ("+" | "-") term } ;
//   term       = [ "+" | "-" ] ( number [ ["*"] ident ] | ident ) ;
//   number     = digits [ "." digits ] [ ("e"|"E") ["+"|"-"] digits ]
//              | digits "/" digits | "inf" | "infinity" ;

struct SourceSpan {
  int first_line = 0;
  int last_line = 0;
};

struct LpDocument {
  std::string text;
  Model model;
  std::map<std::string, SourceSpan> locations;  // constraint name -> lines
};

// Errors are InvalidArgument with a "line L, column C: " prefix.
absl::StatusOr<LpDocument> ParseLpDocument(std::string_view text);
absl::StatusOr<Model> ParseLp(std::string_view text);

// Deterministic output: objective, constraints sorted by name (canonical
// form), bounds, integrality. Rationals without a finite decimal expansion
// are written as p/q.
std::string WriteLp(const Model& m);

// A bare expression in the same syntax, e.g. "2 x_1 - y + 3".
absl::StatusOr<LinearExpr> ParseLpExpression(std::string_view text);

}  // namespace omt

#endif  // OMT_LP_FORMAT_H_
