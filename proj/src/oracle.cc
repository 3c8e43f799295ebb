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

#include "omt/oracle.h"

#include <algorithm>
#include <limits>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace omt {
namespace {

constexpr size_t kMaxCounterexamples = 10;

// Odometer over the cartesian product of value lists.
class PointIterator {
 public:
  PointIterator(std::vector<std::string> ids,
                std::vector<const std::vector<Rational>*> lists)
      : ids_(std::move(ids)), lists_(std::move(lists)), pos_(ids_.size(), 0) {
    done_ = std::any_of(lists_.begin(), lists_.end(),
                        [](const auto* l) { return l->empty(); });
  }

  bool done() const { return done_; }

  void Fill(Assignment& a) const {
    for (size_t i = 0; i < ids_.size(); ++i) a.Set(ids_[i], (*lists_[i])[pos_[i]]);
  }

  void Next() {
    for (size_t i = ids_.size(); i-- > 0;) {
      if (++pos_[i] < lists_[i]->size()) return;
      pos_[i] = 0;
    }
    done_ = true;
  }

 private:
  std::vector<std::string> ids_;
  std::vector<const std::vector<Rational>*> lists_;
  std::vector<size_t> pos_;
  bool done_ = false;
};

uint64_t SaturatingProduct(uint64_t a, uint64_t b) {
  if (a != 0 && b > std::numeric_limits<uint64_t>::max() / a) {
    return std::numeric_limits<uint64_t>::max();
  }
  return a * b;
}

absl::Status CheckCap(uint64_t size, const OracleOptions& options) {
  if (size > options.max_points) {
    return absl::ResourceExhaustedError(
        absl::StrCat("enumeration domain has ", size,
                     " points, cap is ", options.max_points));
  }
  return absl::OkStatus();
}

bool WithinType(const Variable& v, const Rational& value) {
  if (v.lower.has_value() && value < *v.lower) return false;
  if (v.upper.has_value() && value > *v.upper) return false;
  if (v.type != NumberType::kNonNegReal && !IsInteger(value)) return false;
  return true;
}

bool SatisfiesAll(std::span<const Constraint> constraints, const Assignment& a) {
  for (const Constraint& c : constraints) {
    absl::StatusOr<bool> ok = Satisfied(c, a);
    if (!ok.ok() || !*ok) return false;
  }
  return true;
}

}  // namespace

absl::StatusOr<EnumerationDomain> EnumerationDomain::ForVariables(
    std::span<const Variable> vars,
    const std::map<std::string, std::vector<Rational>, std::less<>>& grids) {
  EnumerationDomain d;
  for (const Variable& v : vars) {
    const std::string id = v.Id();
    if (auto it = grids.find(id); it != grids.end()) {
      d.values[id] = it->second;
      d.grid_variables.insert(id);
      continue;
    }
    switch (v.type) {
      case NumberType::kBinary:
        d.values[id] = {0, 1};
        break;
      case NumberType::kNonNegInteger: {
        if (!v.lower.has_value() || !v.upper.has_value()) {
          return absl::InvalidArgumentError(absl::StrCat(
              "integer variable '", id, "' needs finite bounds to enumerate"));
        }
        std::vector<Rational> range;
        mpz_class lo = v.lower->get_num() / v.lower->get_den();
        if (Rational(lo) < *v.lower) ++lo;
        for (mpz_class k = lo; Rational(k) <= *v.upper; ++k) {
          range.emplace_back(k);
          if (range.size() > kDefaultMaxPoints) {
            return absl::ResourceExhaustedError(
                absl::StrCat("range of '", id, "' is too large"));
          }
        }
        d.values[id] = std::move(range);
        break;
      }
      case NumberType::kNonNegReal:
        return absl::InvalidArgumentError(absl::StrCat(
            "continuous variable '", id,
            "' has no grid; the oracle does not discretize implicitly"));
    }
  }
  return d;
}

uint64_t EnumerationDomain::Size() const {
  uint64_t size = 1;
  for (const auto& [id, list] : values) size = SaturatingProduct(size, list.size());
  return size;
}

absl::StatusOr<std::vector<Assignment>> EnumerateFeasible(
    const Model& m, const EnumerationDomain& domain,
    const OracleOptions& options) {
  if (absl::Status s = CheckCap(domain.Size(), options); !s.ok()) return s;
  std::vector<std::string> ids;
  std::vector<const std::vector<Rational>*> lists;
  std::vector<const Variable*> vars;
  for (const Variable& v : m.variables) {
    auto it = domain.values.find(v.Id());
    if (it == domain.values.end()) {
      return absl::InvalidArgumentError(
          absl::StrCat("variable '", v.Id(), "' is missing from the domain"));
    }
    ids.push_back(it->first);
    lists.push_back(&it->second);
    vars.push_back(&v);
  }
  // Drop values that violate bounds or integrality up front.
  std::vector<std::vector<Rational>> filtered(lists.size());
  for (size_t i = 0; i < lists.size(); ++i) {
    for (const Rational& value : *lists[i]) {
      if (WithinType(*vars[i], value)) filtered[i].push_back(value);
    }
    lists[i] = &filtered[i];
  }
  std::vector<Assignment> feasible;
  Assignment point;
  for (PointIterator it(ids, lists); !it.done(); it.Next()) {
    it.Fill(point);
    if (SatisfiesAll(m.constraints, point)) feasible.push_back(point);
  }
  std::sort(feasible.begin(), feasible.end());
  return feasible;
}

absl::StatusOr<OptimumResult> BruteForceOptimum(
    const Model& m, const EnumerationDomain& domain,
    const OracleOptions& options) {
  absl::StatusOr<std::vector<Assignment>> feasible =
      EnumerateFeasible(m, domain, options);
  if (!feasible.ok()) return feasible.status();
  OptimumResult result;
  if (feasible->empty()) return result;
  result.status = OptimumResult::Status::kOptimal;
  const bool maximize = m.objective.sense == ProblemSense::kMax;
  bool first = true;
  for (const Assignment& a : *feasible) {
    absl::StatusOr<Rational> value = ObjectiveValue(m, a);
    if (!value.ok()) return value.status();
    const bool better = maximize ? *value > result.value : *value < result.value;
    if (first || better) {
      result.value = *value;
      result.optimal.clear();
      first = false;
    }
    if (*value == result.value) result.optimal.push_back(a);
  }
  return result;
}

std::string EquivalenceReport::ToString() const {
  std::string out = absl::StrCat(equal ? "equal" : "NOT equal",
                                 " (encoded=", encoded_size,
                                 ", predicate=", predicate_size, ")");
  for (const Counterexample& c : counterexamples) {
    absl::StrAppend(&out, "\n  ", c.point.DebugString(),
                    c.in_encoding ? " admitted by encoding only"
                                  : " required by predicate only");
  }
  return out;
}

absl::StatusOr<EquivalenceReport> EncodingEquivalent(
    const BuiltBlock& block, const Predicate& predicate,
    const EnumerationDomain& domain, const OracleOptions& options) {
  std::set<std::string, std::less<>> aux;
  for (const Variable& v : block.aux_variables) aux.insert(v.Id());
  for (const Constraint& c : block.constraints) {
    for (const Term& t : c.lhs.terms()) {
      if (!aux.contains(t.variable) && !domain.values.contains(t.variable)) {
        return absl::InvalidArgumentError(absl::StrCat(
            "variable '", t.variable, "' is neither auxiliary nor in the "
            "domain"));
      }
    }
  }
  uint64_t aux_points = 1;
  for (size_t i = 0; i < aux.size(); ++i) aux_points = SaturatingProduct(aux_points, 2);
  if (absl::Status s =
          CheckCap(SaturatingProduct(domain.Size(), aux_points), options);
      !s.ok()) {
    return s;
  }

  std::vector<std::string> ids;
  std::vector<const std::vector<Rational>*> lists;
  for (const auto& [id, list] : domain.values) {
    ids.push_back(id);
    lists.push_back(&list);
  }
  static const std::vector<Rational> kBinaryValues = {0, 1};
  std::vector<std::string> aux_ids(aux.begin(), aux.end());
  std::vector<const std::vector<Rational>*> aux_lists(aux_ids.size(),
                                                      &kBinaryValues);

  EquivalenceReport report;
  Assignment point;
  for (PointIterator it(ids, lists); !it.done(); it.Next()) {
    it.Fill(point);
    const bool wanted = predicate(point);
    bool encoded = false;
    Assignment full = point;
    for (PointIterator ax(aux_ids, aux_lists); !ax.done() && !encoded;
         ax.Next()) {
      ax.Fill(full);
      encoded = SatisfiesAll(block.constraints, full);
    }
    report.encoded_size += encoded;
    report.predicate_size += wanted;
    if (encoded != wanted) {
      report.equal = false;
      if (report.counterexamples.size() < kMaxCounterexamples) {
        report.counterexamples.push_back({point, encoded});
      }
    }
  }
  return report;
}

}  // namespace omt
