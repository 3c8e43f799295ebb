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

#ifndef OMT_CLASSIFIER_H_
#define OMT_CLASSIFIER_H_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "omt/constraint_library.h"
#include "omt/model.h"
#include "omt/typology.h"

namespace omt {

struct ClassifyOptions {
  // Absolute coefficient magnitude from which a binary's coefficient counts
  // as a big-M. Unset: 10^4 times the largest other coefficient magnitude in
  // the same constraint.
  std::optional<Rational> big_m_threshold;
};

// Tags for one canonical constraint, most specific first. The General* root
// for the constraint's sense is always last. Fails on non-canonical input.
absl::StatusOr<std::vector<TypologyTag>> Classify(
    const Constraint& c, const VariableTable& vars,
    const ClassifyOptions& options = {});

// A group of constraints that together encode one typology construct.
struct PatternGroup {
  // "EitherOr", "ConditionalBound", "FixValueIf", "IffAll" or "OnlyIfAll".
  std::string kind;
  // Typology leaves the group realizes. For a +M/-M pair the first entry is
  // EitherOr and the second IfThenBigM: the two encodings are the same
  // polyhedron with the roles of f and g renamed.
  std::vector<TypologyTag> tags;
  std::vector<std::string> constraints;
  std::string indicator;  // shared binary, empty for IffAll/OnlyIfAll
};

struct ConstraintTags {
  std::string name;
  std::vector<TypologyTag> tags;
};

struct ClassificationResult {
  std::vector<ConstraintTags> constraints;
  std::vector<PatternGroup> pattern_groups;

  // Node ids of the model: every pattern group's tags, plus the first tag of
  // each constraint that is not part of a group.
  std::set<int> NodeIds() const;
};

// Canonicalizes (on a copy) and classifies every constraint of `m`, then
// detects multi-constraint patterns.
ClassificationResult ClassifyModel(const Model& m,
                                   const ClassifyOptions& options = {});

// Explanation text for a tag given by name; NotFound for unknown names.
absl::StatusOr<std::string> ExplainTag(std::string_view tag_name);

// Stable JSON payload (shared by the CLI and the HTTP service).
std::string ClassificationToJson(const ClassificationResult& result);
// Plain-text table for terminals.
std::string ClassificationToTable(const ClassificationResult& result);

}  // namespace omt

#endif  // OMT_CLASSIFIER_H_
