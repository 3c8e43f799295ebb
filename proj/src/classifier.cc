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

#include "omt/classifier.h"

#include <algorithm>
#include <map>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "json.hpp"

namespace omt {
namespace {

const Rational kBigMFactor = 10000;

// Facts about a canonical constraint that the rules read.
struct Shape {
  const Constraint* c;
  size_t n = 0;
  size_t positives = 0;
  size_t negatives = 0;
  bool all_binary = false;
  bool all_nonneg = true;
  bool unit = true;         // every coefficient is 1
  bool plus_minus_one = true;
  bool integer_rhs = false;
  const Term* single_negative = nullptr;
  const Term* single_positive = nullptr;
};

bool IsBinary(const VariableTable& vars, std::string_view id) {
  auto it = vars.find(id);
  return it != vars.end() && it->second.type == NumberType::kBinary;
}

bool IsNonNeg(const VariableTable& vars, std::string_view id) {
  auto it = vars.find(id);
  return it != vars.end() && it->second.lower.has_value() &&
         *it->second.lower >= 0;
}

Shape Analyze(const Constraint& c, const VariableTable& vars) {
  Shape s;
  s.c = &c;
  s.n = c.lhs.terms().size();
  s.all_binary = s.n > 0;
  s.integer_rhs = IsInteger(c.rhs);
  for (const Term& t : c.lhs.terms()) {
    if (t.coefficient > 0) {
      ++s.positives;
      s.single_positive = &t;
    } else {
      ++s.negatives;
      s.single_negative = &t;
    }
    if (!IsBinary(vars, t.variable)) s.all_binary = false;
    if (!IsNonNeg(vars, t.variable)) s.all_nonneg = false;
    if (t.coefficient != 1) s.unit = false;
    if (Abs(t.coefficient) != 1) s.plus_minus_one = false;
  }
  if (s.positives != 1) s.single_positive = nullptr;
  if (s.negatives != 1) s.single_negative = nullptr;
  if (s.n == 0) s.unit = s.plus_minus_one = false;
  return s;
}

// Splits "s_m1_3" into ("s_m1", 3); false when the id has no numeric
// trailing index.
bool SplitTrailingIndex(std::string_view id, std::string_view* stem,
                        long* index) {
  const size_t cut = id.rfind('_');
  if (cut == std::string_view::npos || cut == 0) return false;
  if (!absl::SimpleAtoi(std::string(id.substr(cut + 1)), index)) return false;
  *stem = id.substr(0, cut);
  return true;
}

// True if a positive and a negative term belong to the same family at
// consecutive indices (x_t and x_{t-1}).
bool HasLagPair(const Constraint& c) {
  for (const Term& a : c.lhs.terms()) {
    if (a.coefficient <= 0) continue;
    std::string_view stem_a;
    long ia = 0;
    if (!SplitTrailingIndex(a.variable, &stem_a, &ia)) continue;
    for (const Term& b : c.lhs.terms()) {
      if (b.coefficient >= 0) continue;
      std::string_view stem_b;
      long ib = 0;
      if (!SplitTrailingIndex(b.variable, &stem_b, &ib)) continue;
      if (stem_a == stem_b && (ia - ib == 1 || ib - ia == 1)) return true;
    }
  }
  return false;
}

bool IsImpliesShape(const Shape& s) {
  return s.all_binary && s.n == 2 && s.c->sense == Sense::kLe &&
         s.c->rhs == 0 && s.positives == 1 && s.negatives == 1 &&
         s.plus_minus_one;
}

// sum(x_B) - c x_A <= n - c with 1 <= c <= n, n >= 2 (A if at least
// n - c + 1 of the Bs).
bool IsIfAllForm(const Shape& s) {
  if (!s.all_binary || s.c->sense != Sense::kLe || s.single_negative == nullptr ||
      s.positives < 2) {
    return false;
  }
  for (const Term& t : s.c->lhs.terms()) {
    if (t.coefficient > 0 && t.coefficient != 1) return false;
  }
  const Rational c = -s.single_negative->coefficient;
  return IsInteger(c) && c <= static_cast<long>(s.positives) &&
         s.c->rhs == Rational(static_cast<long>(s.positives)) - c;
}

// k x_A - sum(x_B) <= 0 with 1 <= k <= n, n >= 2 (aggregated if-then).
bool IsAggregatedForm(const Shape& s) {
  if (!s.all_binary || s.c->sense != Sense::kLe || s.single_positive == nullptr ||
      s.negatives < 2 || s.c->rhs != 0) {
    return false;
  }
  for (const Term& t : s.c->lhs.terms()) {
    if (t.coefficient < 0 && t.coefficient != -1) return false;
  }
  const Rational& k = s.single_positive->coefficient;
  return IsInteger(k) && k <= static_cast<long>(s.negatives);
}

bool IsBigMCandidate(const Shape& s, const VariableTable& vars,
                     const ClassifyOptions& options) {
  for (const Term& t : s.c->lhs.terms()) {
    if (!IsBinary(vars, t.variable)) continue;
    Rational threshold;
    if (options.big_m_threshold.has_value()) {
      threshold = *options.big_m_threshold;
    } else {
      Rational largest = 0;
      for (const Term& o : s.c->lhs.terms()) {
        if (&o != &t) largest = std::max(largest, Abs(o.coefficient));
      }
      if (largest == 0) continue;
      threshold = kBigMFactor * largest;
    }
    if (Abs(t.coefficient) >= threshold) return true;
  }
  return false;
}

std::vector<TypologyTag> ClassifyCanonical(const Constraint& c,
                                           const VariableTable& vars,
                                           const ClassifyOptions& options) {
  const Shape s = Analyze(c, vars);
  const Sense sense = c.sense;
  std::vector<TypologyTag> tags;
  auto add = [&tags](TagKind k) { tags.push_back(Tag(k)); };

  // Set family.
  if (s.all_binary && s.unit && c.rhs == 1) {
    add(sense == Sense::kGe   ? TagKind::kSetCovering
        : sense == Sense::kEq ? TagKind::kSetPartitioning
                              : TagKind::kSetPacking);
  }
  // Binary logic.
  if (IsImpliesShape(s)) add(TagKind::kImpliesBinary);
  if (IsIfAllForm(s) || IsAggregatedForm(s)) add(TagKind::kIfAllThen);
  if (s.all_binary && s.unit && s.integer_rhs && c.rhs >= 2 &&
      sense != Sense::kLe) {
    add(sense == Sense::kGe ? TagKind::kWeightedSetCovering
                            : TagKind::kWeightedSetPartitioning);
  }
  // Variable and conditional bounds: expr - u y (<= | >=) 0.
  if (c.rhs == 0 && sense != Sense::kEq && s.single_negative != nullptr &&
      s.positives >= 1) {
    const bool upper = sense == Sense::kLe;
    if (IsBinary(vars, s.single_negative->variable)) {
      add(upper ? TagKind::kConditionalUpperBound
                : TagKind::kConditionalLowerBound);
    } else {
      add(upper ? TagKind::kVariableUpperBound
                : TagKind::kVariableLowerBound);
    }
  }
  if (s.all_binary && s.plus_minus_one && s.integer_rhs && c.rhs >= 1 &&
      sense != Sense::kLe) {
    add(sense == Sense::kGe ? TagKind::kGeneralizedSetCovering
                            : TagKind::kGeneralizedSetPartitioning);
  }
  if (sense == Sense::kLe && s.n >= 2 && s.negatives == 0 && s.integer_rhs) {
    if (s.all_binary) {
      add(TagKind::kZeroOneKnapsack);
    } else if (s.all_nonneg) {
      add(TagKind::kKnapsack);
    }
  }
  // Equalities.
  if (sense == Sense::kEq && s.n >= 1) {
    if (s.negatives == 0 && c.rhs == 0 && s.all_nonneg) {
      add(TagKind::kFixToZero);
    } else if (s.negatives == 0 && c.rhs > 0) {
      add(TagKind::kAssignValue);
    } else if (s.negatives > 0 && s.positives > 0) {
      if (HasLagPair(c)) {
        add(s.n == 2 ? TagKind::kPeriodLink : TagKind::kInventoryBalance);
      } else {
        add(TagKind::kIOBalance);
      }
    }
  }
  // Single-variable bounds, direction read through the coefficient sign.
  if (s.n == 1 && sense != Sense::kEq) {
    const bool upper = (sense == Sense::kLe) ==
                       (c.lhs.terms().front().coefficient > 0);
    add(upper ? TagKind::kFixedUpperBound : TagKind::kFixedLowerBound);
  }
  if (IsBigMCandidate(s, vars, options)) add(TagKind::kIfThenBigM);

  std::stable_sort(tags.begin(), tags.end(),
                   [](const TypologyTag& a, const TypologyTag& b) {
                     return a.specificity > b.specificity;
                   });
  add(sense == Sense::kLe   ? TagKind::kGeneralLE
      : sense == Sense::kEq ? TagKind::kGeneralEQ
                            : TagKind::kGeneralGE);
  return tags;
}

// lhs <= rhs view of an inequality (GE rows negated).
struct LeRow {
  size_t index;
  LinearExpr lhs;
  Rational rhs;
};

LinearExpr WithoutVariable(const LinearExpr& e, std::string_view id) {
  LinearExpr out;
  for (const Term& t : e.terms()) {
    if (t.variable != id) out.AddTerm(t.coefficient, t.variable);
  }
  return out;
}

class PatternDetector {
 public:
  PatternDetector(const std::vector<Constraint>& canonical,
                  const std::vector<ConstraintTags>& tags,
                  const VariableTable& vars)
      : canonical_(canonical), tags_(tags), vars_(vars),
        used_(canonical.size(), false) {
    for (size_t i = 0; i < canonical.size(); ++i) {
      const Constraint& c = canonical[i];
      if (c.sense == Sense::kEq) continue;
      if (c.sense == Sense::kLe) {
        rows_.push_back({i, c.lhs, c.rhs});
      } else {
        rows_.push_back({i, -c.lhs, -c.rhs});
      }
    }
  }

  std::vector<PatternGroup> Run() {
    ConditionalBounds();
    FixValueIfPairs();
    IffAll();
    OnlyIfAll();
    BigMPairs();
    return std::move(groups_);
  }

 private:
  TagKind FirstTag(size_t i) const { return tags_[i].tags.front().kind; }

  void Emit(std::string kind, std::vector<TagKind> kinds,
            std::vector<size_t> members, std::string indicator) {
    PatternGroup g;
    g.kind = std::move(kind);
    for (TagKind k : kinds) g.tags.push_back(Tag(k));
    for (size_t i : members) {
      used_[i] = true;
      g.constraints.push_back(canonical_[i].name);
    }
    g.indicator = std::move(indicator);
    groups_.push_back(std::move(g));
  }

  void ConditionalBounds() {
    for (size_t i = 0; i < canonical_.size(); ++i) {
      if (used_[i] || FirstTag(i) != TagKind::kConditionalUpperBound) continue;
      const Constraint& up = canonical_[i];
      const Term* y = nullptr;
      for (const Term& t : up.lhs.terms()) {
        if (t.coefficient < 0) y = &t;
      }
      const LinearExpr rest = WithoutVariable(up.lhs, y->variable);
      for (size_t j = 0; j < canonical_.size(); ++j) {
        if (used_[j] || FirstTag(j) != TagKind::kConditionalLowerBound) continue;
        const Constraint& lo = canonical_[j];
        if (lo.lhs.CoefficientOf(y->variable) >= 0) continue;
        if (WithoutVariable(lo.lhs, y->variable) != rest) continue;
        Emit("ConditionalBound",
             {TagKind::kConditionalUpperBound, TagKind::kConditionalLowerBound},
             {i, j}, y->variable);
        break;
      }
    }
  }

  // f + M z <= C + M together with -f + M z <= M - C.
  void FixValueIfPairs() {
    for (size_t a = 0; a < rows_.size(); ++a) {
      for (size_t b = a + 1; b < rows_.size(); ++b) {
        const LeRow& ra = rows_[a];
        const LeRow& rb = rows_[b];
        if (used_[ra.index] || used_[rb.index]) continue;
        for (const Term& t : ra.lhs.terms()) {
          if (t.coefficient <= 0 || !IsBinary(vars_, t.variable)) continue;
          const Rational& m = t.coefficient;
          if (rb.lhs.CoefficientOf(t.variable) != m) continue;
          const LinearExpr fa = WithoutVariable(ra.lhs, t.variable);
          const LinearExpr fb = WithoutVariable(rb.lhs, t.variable);
          if (fa.terms().empty() || fa != -fb) continue;
          // C = ra.rhs - M must equal M - rb.rhs.
          if (ra.rhs - m != m - rb.rhs) continue;
          Emit("FixValueIf", {TagKind::kFixValueIf}, {ra.index, rb.index},
               t.variable);
          break;
        }
      }
    }
  }

  // f - M t <= 0 together with g + M t <= M on a shared binary t.
  void BigMPairs() {
    for (size_t a = 0; a < rows_.size(); ++a) {
      for (size_t b = 0; b < rows_.size(); ++b) {
        if (a == b) continue;
        const LeRow& neg = rows_[a];
        const LeRow& pos = rows_[b];
        if (used_[neg.index] || used_[pos.index]) continue;
        for (const Term& t : neg.lhs.terms()) {
          if (t.coefficient >= 0 || !IsBinary(vars_, t.variable)) continue;
          const Rational m = -t.coefficient;
          if (pos.lhs.CoefficientOf(t.variable) != m) continue;
          const LinearExpr neg_rest = WithoutVariable(neg.lhs, t.variable);
          const LinearExpr pos_rest = WithoutVariable(pos.lhs, t.variable);
          if (neg_rest.terms().empty() || pos_rest.terms().empty()) continue;
          if (!Deactivates(neg_rest, neg.rhs + m, m) ||
              !Deactivates(pos_rest, pos.rhs, m)) {
            continue;
          }
          Emit("EitherOr", {TagKind::kEitherOr, TagKind::kIfThenBigM},
               {neg.index, pos.index}, t.variable);
          break;
        }
      }
    }
  }

  // rest <= limit holds on the whole bound box, so the row is slack when
  // its indicator switches it off. Without finite bounds, fall back to the
  // magnitude of M.
  bool Deactivates(const LinearExpr& rest, const Rational& limit,
                   const Rational& m) const {
    if (std::optional<Interval> r = ExprRange(rest, vars_); r.has_value()) {
      return r->upper <= limit;
    }
    Rational largest = 0;
    for (const Term& t : rest.terms()) {
      largest = std::max(largest, Abs(t.coefficient));
    }
    return m >= kBigMFactor * largest;
  }

  bool IsFreeImplication(size_t i) const {
    return !used_[i] && FirstTag(i) == TagKind::kImpliesBinary;
  }

  static std::pair<std::string, std::string> Implication(const Constraint& c) {
    // x_from - x_to <= 0.
    const Term& p = c.lhs.terms()[0].coefficient > 0 ? c.lhs.terms()[0]
                                                     : c.lhs.terms()[1];
    const Term& q = c.lhs.terms()[0].coefficient > 0 ? c.lhs.terms()[1]
                                                     : c.lhs.terms()[0];
    return {p.variable, q.variable};
  }

  void IffAll() {
    // n >= 2: sum(x_B) - x_A <= n - 1 plus x_A <= x_Bj for every j.
    for (size_t i = 0; i < canonical_.size(); ++i) {
      if (used_[i] || FirstTag(i) != TagKind::kIfAllThen) continue;
      const Constraint& c = canonical_[i];
      const Shape s = Analyze(c, vars_);
      if (!IsIfAllForm(s) || s.single_negative->coefficient != -1) continue;
      const std::string a = s.single_negative->variable;
      std::vector<size_t> members = {i};
      bool complete = true;
      for (const Term& b : c.lhs.terms()) {
        if (b.coefficient < 0) continue;
        bool found = false;
        for (size_t j = 0; j < canonical_.size() && !found; ++j) {
          if (IsFreeImplication(j) &&
              Implication(canonical_[j]) == std::make_pair(a, b.variable) &&
              std::find(members.begin(), members.end(), j) == members.end()) {
            members.push_back(j);
            found = true;
          }
        }
        complete = complete && found;
      }
      if (complete) Emit("IffAll", {TagKind::kIffAll}, members, "");
    }
    // n = 1: x_A <= x_B and x_B <= x_A.
    for (size_t i = 0; i < canonical_.size(); ++i) {
      if (!IsFreeImplication(i)) continue;
      const auto [from, to] = Implication(canonical_[i]);
      for (size_t j = i + 1; j < canonical_.size(); ++j) {
        if (IsFreeImplication(j) &&
            Implication(canonical_[j]) == std::make_pair(to, from)) {
          Emit("IffAll", {TagKind::kIffAll}, {i, j}, "");
          break;
        }
      }
    }
  }

  void OnlyIfAll() {
    std::map<std::string, std::vector<size_t>> by_antecedent;
    for (size_t i = 0; i < canonical_.size(); ++i) {
      if (IsFreeImplication(i)) {
        by_antecedent[Implication(canonical_[i]).first].push_back(i);
      }
    }
    for (auto& [a, members] : by_antecedent) {
      if (members.size() >= 2) {
        Emit("OnlyIfAll", {TagKind::kOnlyIfAll}, members, "");
      }
    }
  }

  const std::vector<Constraint>& canonical_;
  const std::vector<ConstraintTags>& tags_;
  const VariableTable& vars_;
  std::vector<bool> used_;
  std::vector<LeRow> rows_;
  std::vector<PatternGroup> groups_;
};

}  // namespace

absl::StatusOr<std::vector<TypologyTag>> Classify(
    const Constraint& c, const VariableTable& vars,
    const ClassifyOptions& options) {
  if (!IsCanonical(c)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "constraint '", c.name, "' is not in canonical form"));
  }
  return ClassifyCanonical(c, vars, options);
}

std::set<int> ClassificationResult::NodeIds() const {
  std::set<int> ids;
  std::set<std::string> grouped;
  for (const PatternGroup& g : pattern_groups) {
    for (const TypologyTag& t : g.tags) {
      // EitherOr/IfThenBigM are alternatives; the group reports the first.
      if (&t != &g.tags.front() && g.kind == "EitherOr") continue;
      ids.insert(t.omt_node_id);
    }
    grouped.insert(g.constraints.begin(), g.constraints.end());
  }
  for (const ConstraintTags& c : constraints) {
    if (!grouped.contains(c.name)) ids.insert(c.tags.front().omt_node_id);
  }
  return ids;
}

ClassificationResult ClassifyModel(const Model& m,
                                   const ClassifyOptions& options) {
  VariableTable vars;
  for (const Variable& v : m.variables) vars.emplace(v.Id(), v);
  std::vector<Constraint> canonical;
  ClassificationResult result;
  for (const Constraint& c : m.constraints) {
    canonical.push_back(Canonicalize(c));
    result.constraints.push_back(
        {c.name, ClassifyCanonical(canonical.back(), vars, options)});
  }
  result.pattern_groups =
      PatternDetector(canonical, result.constraints, vars).Run();
  return result;
}

absl::StatusOr<std::string> ExplainTag(std::string_view tag_name) {
  std::optional<TypologyTag> tag = TagByName(tag_name);
  if (!tag.has_value()) {
    return absl::NotFoundError(absl::StrCat("unknown tag '", std::string(tag_name), "'"));
  }
  return std::string(Explain(tag->kind));
}

namespace {

nlohmann::json TagJson(const TypologyTag& t) {
  return {{"node", t.omt_node_id},
          {"name", std::string(t.name)},
          {"specificity", t.specificity}};
}

}  // namespace

std::string ClassificationToJson(const ClassificationResult& result) {
  nlohmann::json out;
  out["constraints"] = nlohmann::json::array();
  for (const ConstraintTags& c : result.constraints) {
    nlohmann::json tags = nlohmann::json::array();
    for (const TypologyTag& t : c.tags) tags.push_back(TagJson(t));
    out["constraints"].push_back({{"name", c.name}, {"tags", tags}});
  }
  out["pattern_groups"] = nlohmann::json::array();
  for (const PatternGroup& g : result.pattern_groups) {
    nlohmann::json tags = nlohmann::json::array();
    for (const TypologyTag& t : g.tags) tags.push_back(TagJson(t));
    out["pattern_groups"].push_back({{"kind", g.kind},
                                     {"tags", tags},
                                     {"constraints", g.constraints},
                                     {"indicator", g.indicator}});
  }
  out["node_ids"] = result.NodeIds();
  return out.dump(2) + "\n";
}

std::string ClassificationToTable(const ClassificationResult& result) {
  std::string out = absl::StrFormat("%-28s %-5s %s\n", "CONSTRAINT", "NODE",
                                    "TAGS");
  for (const ConstraintTags& c : result.constraints) {
    std::vector<std::string> names;
    for (const TypologyTag& t : c.tags) names.emplace_back(t.name);
    absl::StrAppendFormat(&out, "%-28s %-5d %s\n", c.name,
                          c.tags.front().omt_node_id,
                          absl::StrJoin(names, ", "));
  }
  if (!result.pattern_groups.empty()) out += "\nPATTERNS\n";
  for (const PatternGroup& g : result.pattern_groups) {
    std::vector<std::string> nodes;
    for (const TypologyTag& t : g.tags) {
      nodes.push_back(absl::StrCat(t.omt_node_id));
    }
    absl::StrAppendFormat(&out, "%-16s nodes %-7s [%s]%s\n", g.kind,
                          absl::StrJoin(nodes, "+"),
                          absl::StrJoin(g.constraints, ", "),
                          g.indicator.empty()
                              ? ""
                              : absl::StrCat(" indicator ", g.indicator));
  }
  std::vector<std::string> ids;
  for (int id : result.NodeIds()) ids.push_back(absl::StrCat(id));
  absl::StrAppend(&out, "\nnodes:", ids.empty() ? "" : " ",
                  absl::StrJoin(ids, ", "), "\n");
  return out;
}

}  // namespace omt
