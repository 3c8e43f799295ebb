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

#ifndef OMT_ORACLE_H_
#define OMT_ORACLE_H_

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "omt/constraint_library.h"
#include "omt/model.h"

namespace omt {

// Desk-scale ground truth by exhaustive enumeration. Nothing here solves a
// relaxation; every answer comes from checking every point of a finite
// domain.

inline constexpr uint64_t kDefaultMaxPoints = uint64_t{1} << 20;

// Finite candidate values per variable. Continuous variables only enter
// through caller-supplied grids, which are flagged: results over a grid are
// statements about the grid, not the continuum.
struct EnumerationDomain {
  std::map<std::string, std::vector<Rational>, std::less<>> values;
  std::set<std::string, std::less<>> grid_variables;

  // Binary -> {0, 1}; integer -> lower..upper (both must be finite);
  // continuous -> requires an entry in `grids`.
  static absl::StatusOr<EnumerationDomain> ForVariables(
      std::span<const Variable> vars,
      const std::map<std::string, std::vector<Rational>, std::less<>>& grids =
          {});

  // Number of points; saturates at UINT64_MAX.
  uint64_t Size() const;
  bool HasGrid() const { return !grid_variables.empty(); }
};

struct OracleOptions {
  uint64_t max_points = kDefaultMaxPoints;
};

// All points of `domain` satisfying every constraint of `m` and each
// variable's bounds and integrality. Sorted.
absl::StatusOr<std::vector<Assignment>> EnumerateFeasible(
    const Model& m, const EnumerationDomain& domain,
    const OracleOptions& options = {});

struct OptimumResult {
  enum class Status { kOptimal, kInfeasible };
  Status status = Status::kInfeasible;
  Rational value;
  std::vector<Assignment> optimal;  // every optimal point, sorted
};

absl::StatusOr<OptimumResult> BruteForceOptimum(
    const Model& m, const EnumerationDomain& domain,
    const OracleOptions& options = {});

using Predicate = std::function<bool(const Assignment&)>;

struct Counterexample {
  Assignment point;
  bool in_encoding;  // true: encoding admits it, predicate rejects it
};

struct EquivalenceReport {
  bool equal = true;
  std::vector<Counterexample> counterexamples;  // at most 10
  uint64_t encoded_size = 0;    // |projection of encoded feasible set|
  uint64_t predicate_size = 0;  // |points where the predicate holds|
  std::string ToString() const;
};

// Compares the projection of the block's feasible set onto the domain's
// variables (auxiliary variables projected out existentially) with the truth
// set of `predicate` over the same domain. Auxiliary binaries of the block
// are enumerated over {0, 1}; every other variable the block uses must be in
// `domain`.
absl::StatusOr<EquivalenceReport> EncodingEquivalent(
    const BuiltBlock& block, const Predicate& predicate,
    const EnumerationDomain& domain, const OracleOptions& options = {});

}  // namespace omt

#endif  // OMT_ORACLE_H_
