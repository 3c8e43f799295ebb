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

#ifndef OMT_VERIFICATION_H_
#define OMT_VERIFICATION_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "omt/rational.h"

namespace omt {

// Randomized equivalence checks of the logic encodings against their truth
// tables, over 1..max_n binary variables.
struct VerifyOptions {
  int max_n = 10;
  int instances_per_n = 10;
  uint64_t seed = 20260101;
  // Test hook: replaces every automatically chosen big-M.
  std::optional<Rational> forced_big_m;
};

struct BuilderSummary {
  std::string builder;
  int instances = 0;
  int failures = 0;
  std::string first_failure;  // instance and counterexamples
};

struct VerifyReport {
  std::vector<BuilderSummary> builders;
  double seconds = 0;

  bool ok() const;
  int total_instances() const;
  // One "PASS"/"FAIL" line per builder and a summary line.
  std::string ToString() const;
};

// Builders covered: either_or, if_then_big_m, implies_binary, if_all_then,
// only_if_all, iff_all, fix_value_if.
absl::StatusOr<VerifyReport> VerifyEncodings(const VerifyOptions& options = {});

}  // namespace omt

#endif  // OMT_VERIFICATION_H_
