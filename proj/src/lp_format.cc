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

#include "omt/lp_format.h"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace omt {
namespace {

enum class Tok {
  kIdent,
  kNumber,
  kRel,
  kColon,
  kSemicolon,
  kComma,
  kPlus,
  kMinus,
  kStar,
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

absl::Status ErrorAt(int line, int column, std::string_view message) {
  return absl::InvalidArgumentError(
      absl::StrCat("line ", line, ", column ", column, ": ",
                   std::string(message)));
}

absl::Status ErrorAt(const Token& t, std::string_view message) {
  return ErrorAt(t.line, t.column, message);
}

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '[' ||
         c == ']' || c == '.';
}

bool IsDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

absl::StatusOr<std::vector<Token>> Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  int line = 1;
  int column = 1;
  size_t i = 0;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (text.substr(i, 2) == "//") {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (text.substr(i, 2) == "/*") {
      const int l = line, col = column;
      const size_t end = text.find("*/", i + 2);
      if (end == std::string_view::npos) {
        return ErrorAt(l, col, "unterminated comment");
      }
      advance(end + 2 - i);
      continue;
    }
    Token t{Tok::kEnd, "", line, column};
    if (IsIdentStart(c)) {
      size_t j = i;
      while (j < text.size() && IsIdentChar(text[j])) ++j;
      t.kind = Tok::kIdent;
      t.text = std::string(text.substr(i, j - i));
      advance(j - i);
    } else if (IsDigit(c) || (c == '.' && i + 1 < text.size() &&
                              IsDigit(text[i + 1]))) {
      size_t j = i;
      while (j < text.size() && IsDigit(text[j])) ++j;
      if (j < text.size() && text[j] == '/' && j + 1 < text.size() &&
          IsDigit(text[j + 1])) {
        ++j;
        while (j < text.size() && IsDigit(text[j])) ++j;
      } else {
        if (j < text.size() && text[j] == '.') {
          ++j;
          while (j < text.size() && IsDigit(text[j])) ++j;
        }
        if (j < text.size() && (text[j] == 'e' || text[j] == 'E')) {
          size_t k = j + 1;
          if (k < text.size() && (text[k] == '+' || text[k] == '-')) ++k;
          if (k < text.size() && IsDigit(text[k])) {
            j = k;
            while (j < text.size() && IsDigit(text[j])) ++j;
          }
        }
      }
      t.kind = Tok::kNumber;
      t.text = std::string(text.substr(i, j - i));
      advance(j - i);
    } else if (c == '<' || c == '>' || c == '=') {
      size_t n = 1;
      if (i + 1 < text.size() &&
          ((c != '=' && text[i + 1] == '=') ||
           (c == '=' && (text[i + 1] == '<' || text[i + 1] == '>')))) {
        n = 2;
      }
      const std::string op(text.substr(i, n));
      t.kind = Tok::kRel;
      if (op == "<" || op == "<=" || op == "=<") {
        t.text = "<=";
      } else if (op == ">" || op == ">=" || op == "=>") {
        t.text = ">=";
      } else {
        t.text = "=";
      }
      advance(n);
    } else {
      switch (c) {
        case ':':
          t.kind = Tok::kColon;
          break;
        case ';':
          t.kind = Tok::kSemicolon;
          break;
        case ',':
          t.kind = Tok::kComma;
          break;
        case '+':
          t.kind = Tok::kPlus;
          break;
        case '-':
          t.kind = Tok::kMinus;
          break;
        case '*':
          t.kind = Tok::kStar;
          break;
        default:
          return ErrorAt(line, column,
                         absl::StrCat("unexpected character '",
                                      std::string(1, c), "'"));
      }
      t.text = std::string(1, c);
      advance(1);
    }
    tokens.push_back(std::move(t));
  }
  tokens.push_back(Token{Tok::kEnd, "", line, column});
  return tokens;
}

bool IsInfinityWord(std::string_view s) {
  const std::string lower = absl::AsciiStrToLower(std::string(s));
  return lower == "inf" || lower == "infinity";
}

// A parsed side of a relation: linear part plus constant. An infinite
// constant is only legal in bound statements.
struct Side {
  LinearExpr expr;
  bool infinite = false;
  bool infinite_negative = false;
  bool has_terms() const { return !expr.Normalized().terms().empty(); }
};

const Rational& LpInfinity() {
  static const Rational kInf("1000000000000000000000000000000");  // 1e30
  return kInf;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  absl::StatusOr<LpDocument> Run(std::string_view text) {
    doc_.text = std::string(text);
    doc_.model.objective.sense = ProblemSense::kMin;
    while (Peek().kind != Tok::kEnd) {
      if (absl::Status s = Statement(); !s.ok()) return s;
    }
    for (auto& [id, v] : variables_) doc_.model.variables.push_back(v);
    return std::move(doc_);
  }

  absl::StatusOr<LinearExpr> StandaloneExpression() {
    if (Peek().kind == Tok::kEnd) return ErrorAt(Peek(), "empty expression");
    absl::StatusOr<Side> side = Expression();
    if (!side.ok()) return side.status();
    if (Peek().kind != Tok::kEnd) {
      return ErrorAt(Peek(), "unexpected token after expression");
    }
    if (side->infinite) return ErrorAt(Peek(), "infinite constant");
    return side->expr.Normalized();
  }

 private:
  const Token& Peek(size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& Next() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }

  absl::Status Expect(Tok kind, std::string_view what) {
    if (Peek().kind != kind) {
      return ErrorAt(Peek(), absl::StrCat("expected ", std::string(what)));
    }
    Next();
    return absl::OkStatus();
  }

  Variable& Declare(const std::string& id) {
    auto [it, inserted] = variables_.try_emplace(id);
    if (inserted) it->second = Variable::Continuous(id);
    return it->second;
  }

  absl::Status Statement() {
    const Token& first = Peek();
    const std::string head = absl::AsciiStrToLower(first.text);
    if (first.kind == Tok::kIdent && Peek(1).kind == Tok::kColon &&
        (head == "max" || head == "min" || head == "maximize" ||
         head == "minimize" || head == "maximise" || head == "minimise")) {
      return Objective(head.substr(0, 3) == "max");
    }
    if (first.kind == Tok::kIdent && Peek(1).kind != Tok::kColon &&
        Peek(1).kind != Tok::kRel) {
      if (head == "int" || head == "bin") return Declaration(head == "bin");
      if (head == "sec" || head == "sin" || head == "free" ||
          head == "sos" || head == "sos1" || head == "sos2") {
        return ErrorAt(first,
                       absl::StrCat("unsupported section '", first.text, "'"));
      }
    }
    return Relation();
  }

  absl::Status Objective(bool maximize) {
    const int line = Peek().line;
    if (seen_objective_) {
      return ErrorAt(Peek(), "objective defined twice");
    }
    seen_objective_ = true;
    Next();  // keyword
    Next();  // ':'
    Side side;
    if (Peek().kind != Tok::kSemicolon) {
      absl::StatusOr<Side> parsed = Expression();
      if (!parsed.ok()) return parsed.status();
      side = *std::move(parsed);
    }
    if (side.infinite) return ErrorAt(line, 1, "infinite objective constant");
    doc_.model.objective.sense =
        maximize ? ProblemSense::kMax : ProblemSense::kMin;
    doc_.model.objective.expr = side.expr.Normalized();
    return Expect(Tok::kSemicolon, "';' after objective");
  }

  absl::Status Declaration(bool binary) {
    Next();
    bool any = false;
    while (Peek().kind != Tok::kSemicolon) {
      if (Peek().kind == Tok::kComma) {
        Next();
        continue;
      }
      if (Peek().kind != Tok::kIdent) {
        return ErrorAt(Peek(), "expected variable name in declaration");
      }
      Variable& v = Declare(Next().text);
      if (binary) {
        v.type = NumberType::kBinary;
        v.lower = Rational(0);
        v.upper = Rational(1);
      } else if (v.type != NumberType::kBinary) {
        v.type = NumberType::kNonNegInteger;
      }
      any = true;
    }
    if (!any) return ErrorAt(Peek(), "empty declaration");
    return Expect(Tok::kSemicolon, "';'");
  }

  absl::StatusOr<Side> Expression() {
    Side side;
    bool first = true;
    while (true) {
      Rational sign = 1;
      bool saw_sign = false;
      while (Peek().kind == Tok::kPlus || Peek().kind == Tok::kMinus) {
        if (Next().kind == Tok::kMinus) sign = -sign;
        saw_sign = true;
      }
      if (!first && !saw_sign) break;
      const Token& t = Peek();
      if (t.kind == Tok::kNumber ||
          (t.kind == Tok::kIdent && IsInfinityWord(t.text))) {
        Next();
        Rational value;
        bool infinite = false;
        if (t.kind == Tok::kIdent) {
          infinite = true;
        } else {
          absl::StatusOr<Rational> parsed = ParseRational(t.text);
          if (!parsed.ok()) return ErrorAt(t, std::string(parsed.status().message()));
          value = *parsed;
          infinite = Abs(value) >= LpInfinity();
        }
        if (Peek().kind == Tok::kStar) Next();
        if (Peek().kind == Tok::kIdent && !IsInfinityWord(Peek().text)) {
          if (infinite) return ErrorAt(t, "infinite coefficient");
          side.expr.AddTerm(sign * value, Declare(Next().text).Id());
        } else if (infinite) {
          side.infinite = true;
          side.infinite_negative = sign < 0;
        } else {
          side.expr.AddConstant(sign * value);
        }
      } else if (t.kind == Tok::kIdent) {
        side.expr.AddTerm(sign, Declare(Next().text).Id());
      } else {
        return ErrorAt(t, "expected a number or a variable");
      }
      first = false;
    }
    return side;
  }

  absl::Status SetBound(const Token& at, const std::string& id,
                        const Rational& coef, const std::string& rel,
                        const Side& constant_side, bool var_on_left) {
    if (coef == 0) return ErrorAt(at, "zero coefficient in bound");
    std::string r = rel;
    if (!var_on_left) r = r == "<=" ? ">=" : r == ">=" ? "<=" : r;
    if (coef < 0) r = r == "<=" ? ">=" : r == ">=" ? "<=" : r;
    Variable& v = Declare(id);
    if (constant_side.infinite) {
      const bool negative = constant_side.infinite_negative != (coef < 0);
      if (r == ">=" && negative) {
        v.lower.reset();
      } else if (r == "<=" && !negative) {
        v.upper.reset();
      } else {
        return ErrorAt(at, "infeasible infinite bound");
      }
      return absl::OkStatus();
    }
    const Rational value = constant_side.expr.constant() / coef;
    if (r == ">=" || r == "=") v.lower = value;
    if (r == "<=" || r == "=") v.upper = value;
    return absl::OkStatus();
  }

  absl::Status Relation() {
    const Token start = Peek();
    std::string name;
    if (start.kind == Tok::kIdent && Peek(1).kind == Tok::kColon) {
      name = start.text;
      Next();
      Next();
    }
    // Bound on a list of variables: a, b, c >= 0;
    if (name.empty() && start.kind == Tok::kIdent &&
        Peek(1).kind == Tok::kComma) {
      std::vector<std::string> ids;
      while (Peek().kind == Tok::kIdent) {
        ids.push_back(Next().text);
        if (Peek().kind != Tok::kComma) break;
        Next();
      }
      if (Peek().kind != Tok::kRel) {
        return ErrorAt(Peek(), "expected relation after variable list");
      }
      const std::string rel = Next().text;
      absl::StatusOr<Side> rhs = Expression();
      if (!rhs.ok()) return rhs.status();
      if (rhs->has_terms()) return ErrorAt(start, "list bound needs a constant");
      for (const std::string& id : ids) {
        if (absl::Status s = SetBound(start, id, 1, rel, *rhs, true); !s.ok()) {
          return s;
        }
      }
      return Expect(Tok::kSemicolon, "';'");
    }

    std::vector<Side> sides;
    std::vector<std::string> rels;
    absl::StatusOr<Side> first = Expression();
    if (!first.ok()) return first.status();
    sides.push_back(*std::move(first));
    while (Peek().kind == Tok::kRel) {
      rels.push_back(Next().text);
      absl::StatusOr<Side> next = Expression();
      if (!next.ok()) return next.status();
      sides.push_back(*std::move(next));
    }
    const int last_line = Peek().line;
    if (absl::Status s = Expect(Tok::kSemicolon, "';' or relation");
        !s.ok()) {
      return s;
    }
    if (rels.empty()) return ErrorAt(start, "statement has no relation");
    if (rels.size() > 2) return ErrorAt(start, "too many relations");

    if (rels.size() == 2) {
      // lo <= x <= hi
      if (!name.empty() || sides[0].has_terms() || sides[2].has_terms() ||
          sides[1].expr.Normalized().terms().size() != 1 ||
          sides[1].expr.constant() != 0 || sides[1].infinite) {
        return ErrorAt(start, "range constraints are not supported");
      }
      const Term term = sides[1].expr.Normalized().terms().front();
      if (absl::Status s = SetBound(start, term.variable, term.coefficient,
                                    rels[0], sides[0], false);
          !s.ok()) {
        return s;
      }
      return SetBound(start, term.variable, term.coefficient, rels[1],
                      sides[2], true);
    }

    const Side& lhs = sides[0];
    const Side& rhs = sides[1];
    const bool left_vars = lhs.has_terms();
    const bool right_vars = rhs.has_terms();
    if (name.empty() && left_vars != right_vars) {
      const Side& var_side = left_vars ? lhs : rhs;
      const Side& const_side = left_vars ? rhs : lhs;
      const LinearExpr e = var_side.expr.Normalized();
      if (e.terms().size() == 1 && e.constant() == 0 && !var_side.infinite) {
        return SetBound(start, e.terms().front().variable,
                        e.terms().front().coefficient, rels[0], const_side,
                        left_vars);
      }
    }
    if (lhs.infinite || rhs.infinite) {
      return ErrorAt(start, "infinite constant in a constraint");
    }
    ++row_count_;
    if (name.empty()) name = absl::StrCat("R", row_count_);
    if (!names_.insert(name).second) {
      return ErrorAt(start, absl::StrCat("duplicate constraint name '", name,
                                         "'"));
    }
    Constraint c;
    c.name = name;
    c.lhs = (lhs.expr - rhs.expr);
    c.sense = rels[0] == "<=" ? Sense::kLe
              : rels[0] == ">=" ? Sense::kGe
                                : Sense::kEq;
    c.rhs = 0;
    doc_.model.constraints.push_back(Canonicalize(c));
    doc_.locations[name] = SourceSpan{start.line, last_line};
    return absl::OkStatus();
  }

  std::vector<Token> tokens_;
  size_t pos_ = 0;
  LpDocument doc_;
  std::map<std::string, Variable> variables_;
  std::set<std::string> names_;
  int row_count_ = 0;
  bool seen_objective_ = false;
};

std::string FormatTerms(const LinearExpr& e) {
  std::vector<std::string> parts;
  for (const Term& t : e.terms()) {
    const Rational magnitude = Abs(t.coefficient);
    parts.push_back(absl::StrCat(
        t.coefficient < 0 ? "-" : "+",
        magnitude == 1 ? "" : absl::StrCat(FormatRational(magnitude), " "),
        t.variable));
  }
  if (e.constant() != 0) {
    parts.push_back(absl::StrCat(e.constant() < 0 ? "-" : "+",
                                 FormatRational(Abs(e.constant()))));
  }
  return absl::StrJoin(parts, " ");
}

}  // namespace

absl::StatusOr<LpDocument> ParseLpDocument(std::string_view text) {
  absl::StatusOr<std::vector<Token>> tokens = Tokenize(text);
  if (!tokens.ok()) return tokens.status();
  return Parser(*std::move(tokens)).Run(text);
}

absl::StatusOr<Model> ParseLp(std::string_view text) {
  absl::StatusOr<LpDocument> doc = ParseLpDocument(text);
  if (!doc.ok()) return doc.status();
  return std::move(doc->model);
}

absl::StatusOr<LinearExpr> ParseLpExpression(std::string_view text) {
  absl::StatusOr<std::vector<Token>> tokens = Tokenize(text);
  if (!tokens.ok()) return tokens.status();
  return Parser(*std::move(tokens)).StandaloneExpression();
}

std::string WriteLp(const Model& m) {
  std::string out = "// omt lp\n";
  absl::StrAppend(&out, "\n// objective\n",
                  std::string(ProblemSenseName(m.objective.sense)), ":");
  const std::string objective = FormatTerms(m.objective.expr.Normalized());
  if (!objective.empty()) absl::StrAppend(&out, " ", objective);
  out += ";\n";

  std::vector<Constraint> constraints;
  for (const Constraint& c : m.constraints) {
    constraints.push_back(Canonicalize(c));
  }
  std::sort(constraints.begin(), constraints.end(),
            [](const Constraint& a, const Constraint& b) {
              return a.name < b.name;
            });
  std::set<std::string> used;
  for (const Term& t : m.objective.expr.terms()) used.insert(t.variable);
  out += "\n// constraints\n";
  for (const Constraint& c : constraints) {
    std::string lhs = FormatTerms(c.lhs);
    if (lhs.empty()) lhs = "0";
    absl::StrAppend(&out, c.name, ": ", lhs, " ",
                    std::string(SenseSymbol(c.sense)), " ",
                    FormatRational(c.rhs), ";\n");
    for (const Term& t : c.lhs.terms()) used.insert(t.variable);
  }

  std::vector<Variable> vars = m.variables;
  std::sort(vars.begin(), vars.end(), [](const Variable& a, const Variable& b) {
    return a.Id() < b.Id();
  });
  out += "\n// bounds\n";
  std::vector<std::string> ints, bins;
  for (const Variable& v : vars) {
    const std::string id = v.Id();
    if (v.type == NumberType::kBinary) {
      bins.push_back(id);
      continue;
    }
    if (v.type == NumberType::kNonNegInteger) ints.push_back(id);
    bool declared = used.contains(id) || v.type == NumberType::kNonNegInteger;
    if (!v.lower.has_value()) {
      absl::StrAppend(&out, id, " >= -inf;\n");
      declared = true;
    } else if (*v.lower != 0) {
      absl::StrAppend(&out, id, " >= ", FormatRational(*v.lower), ";\n");
      declared = true;
    }
    if (v.upper.has_value()) {
      absl::StrAppend(&out, id, " <= ", FormatRational(*v.upper), ";\n");
      declared = true;
    }
    if (!declared) absl::StrAppend(&out, id, " >= 0;\n");
  }
  out += "\n// integrality\n";
  if (!ints.empty()) absl::StrAppend(&out, "int ", absl::StrJoin(ints, ","), ";\n");
  if (!bins.empty()) absl::StrAppend(&out, "bin ", absl::StrJoin(bins, ","), ";\n");
  return out;
}

}  // namespace omt
