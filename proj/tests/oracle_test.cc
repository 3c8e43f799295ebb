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

#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "test_util.h"

namespace omt {
namespace {

LinearExpr X(std::string_view id, Rational c = 1) {
  return LinearExpr::Var(id, std::move(c));
}

Rational Val(const Assignment& a, std::string_view id) { return *a.Find(id); }

Model KnapsackModel() {
  Model m;
  m.variables = testing::Binaries(3);
  m.objective = {ProblemSense::kMax, X("x1", 3) + X("x2", 4) + X("x3", 5)};
  m.constraints = {Canonicalize(
      {"cap", X("x1", 2) + X("x2", 3) + X("x3", 4), Sense::kLe, 5})};
  return m;
}

TEST(DomainTest, ForVariables) {
  std::vector<Variable> vars = {Variable::Binary("b"),
                                Variable::Integer("n", {}, 3)};
  vars[1].lower = Rational(3, 2);
  absl::StatusOr<EnumerationDomain> d = EnumerationDomain::ForVariables(vars);
  ASSERT_TRUE(d.ok()) << d.status();
  EXPECT_EQ(d->values["b"], (std::vector<Rational>{0, 1}));
  EXPECT_EQ(d->values["n"], (std::vector<Rational>{2, 3}));
  EXPECT_EQ(d->Size(), 4u);
  EXPECT_FALSE(d->HasGrid());
}

TEST(DomainTest, NeedsFiniteBoundsOrGrid) {
  const std::vector<Variable> unbounded = {Variable::Integer("n")};
  EXPECT_FALSE(EnumerationDomain::ForVariables(unbounded).ok());
  const std::vector<Variable> real = {Variable::Continuous("r")};
  EXPECT_FALSE(EnumerationDomain::ForVariables(real).ok());
  absl::StatusOr<EnumerationDomain> grid = EnumerationDomain::ForVariables(
      real, {{"r", {0, Rational(1, 2), 1}}});
  ASSERT_TRUE(grid.ok());
  EXPECT_TRUE(grid->HasGrid());
  EXPECT_EQ(grid->Size(), 3u);
}

TEST(BruteForceOptimumTest, Knapsack) {
  const Model m = KnapsackModel();
  absl::StatusOr<OptimumResult> r = BruteForceOptimum(
      m, *EnumerationDomain::ForVariables(m.variables));
  ASSERT_TRUE(r.ok()) << r.status();
  EXPECT_EQ(r->status, OptimumResult::Status::kOptimal);
  EXPECT_EQ(r->value, 7);
  ASSERT_EQ(r->optimal.size(), 1u);
  EXPECT_EQ(Val(r->optimal[0], "x1"), 1);
  EXPECT_EQ(Val(r->optimal[0], "x2"), 1);
  EXPECT_EQ(Val(r->optimal[0], "x3"), 0);
}

// The oracle agrees with a hand-written loop over all 0-1 points.
TEST(BruteForceOptimumTest, MatchesIndependentLoop) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    Model m;
    m.variables = testing::Binaries(n);
    std::vector<int> value(n), weight(n);
    LinearExpr obj, row;
    for (int i = 0; i < n; ++i) {
      value[i] = static_cast<int>(rng() % 11) - 2;
      weight[i] = 1 + static_cast<int>(rng() % 7);
      const std::string id = "x" + std::to_string(i + 1);
      obj.AddTerm(value[i], id);
      row.AddTerm(weight[i], id);
    }
    const int cap = static_cast<int>(rng() % (3 * n + 1));
    m.objective = {ProblemSense::kMax, obj};
    m.constraints = {Canonicalize({"cap", row, Sense::kLe, cap})};

    int best = std::numeric_limits<int>::min();
    int ties = 0;
    for (int mask = 0; mask < (1 << n); ++mask) {
      int v = 0, w = 0;
      for (int i = 0; i < n; ++i) {
        if (mask >> i & 1) v += value[i], w += weight[i];
      }
      if (w > cap) continue;
      if (v > best) best = v, ties = 0;
      if (v == best) ++ties;
    }
    absl::StatusOr<OptimumResult> r = BruteForceOptimum(
        m, *EnumerationDomain::ForVariables(m.variables));
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(r->value, best);
    EXPECT_EQ(r->optimal.size(), static_cast<size_t>(ties));
  }
}

TEST(BruteForceOptimumTest, Infeasible) {
  Model m;
  m.variables = testing::Binaries(2);
  m.constraints = {Canonicalize({"c", X("x1") + X("x2"), Sense::kGe, 3})};
  absl::StatusOr<OptimumResult> r = BruteForceOptimum(
      m, *EnumerationDomain::ForVariables(m.variables));
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->status, OptimumResult::Status::kInfeasible);
  EXPECT_TRUE(r->optimal.empty());
}

TEST(EnumerateFeasibleTest, RespectsBoundsAndIntegrality) {
  Model m;
  Variable n = Variable::Integer("n", {}, 4);
  m.variables = {n, Variable::Continuous("r", {}, 1)};
  m.constraints = {Canonicalize({"c", X("n") + X("r"), Sense::kLe, 2})};
  absl::StatusOr<EnumerationDomain> d = EnumerationDomain::ForVariables(
      m.variables, {{"r", {0, Rational(1, 2), 1, 2}}});
  ASSERT_TRUE(d.ok());
  absl::StatusOr<std::vector<Assignment>> points = EnumerateFeasible(m, *d);
  ASSERT_TRUE(points.ok());
  // n in 0..2, r in {0, 1/2, 1} (2 exceeds the upper bound), n + r <= 2.
  EXPECT_EQ(points->size(), 7u);
  EXPECT_TRUE(std::is_sorted(points->begin(), points->end()));
}

TEST(EnumerateFeasibleTest, Cap) {
  Model m;
  m.variables = testing::Binaries(12);
  OracleOptions small;
  small.max_points = 100;
  absl::StatusOr<std::vector<Assignment>> r = EnumerateFeasible(
      m, *EnumerationDomain::ForVariables(m.variables), small);
  EXPECT_EQ(r.status().code(), absl::StatusCode::kResourceExhausted);
}

TEST(EncodingEquivalentTest, DetectsCorrectAndWrongEncodings) {
  BuildContext ctx;
  const std::vector<Variable> vars = testing::Binaries(2);
  for (const Variable& v : vars) ctx.AddVariable(v);
  absl::StatusOr<BuiltBlock> block = EitherOr(ctx, X("x1"), X("x2"));
  ASSERT_TRUE(block.ok());
  const EnumerationDomain d = *EnumerationDomain::ForVariables(vars);
  auto either = [](const Assignment& a) {
    return *a.Find("x1") == 0 || *a.Find("x2") == 0;
  };
  absl::StatusOr<EquivalenceReport> good = EncodingEquivalent(*block, either, d);
  ASSERT_TRUE(good.ok()) << good.status();
  EXPECT_TRUE(good->equal) << good->ToString();
  EXPECT_EQ(good->encoded_size, 3u);
  EXPECT_EQ(good->predicate_size, 3u);

  auto both = [](const Assignment& a) {
    return *a.Find("x1") == 0 && *a.Find("x2") == 0;
  };
  absl::StatusOr<EquivalenceReport> bad = EncodingEquivalent(*block, both, d);
  ASSERT_TRUE(bad.ok());
  EXPECT_FALSE(bad->equal);
  ASSERT_EQ(bad->counterexamples.size(), 2u);
  for (const Counterexample& c : bad->counterexamples) {
    EXPECT_TRUE(c.in_encoding);
  }
}

TEST(EncodingEquivalentTest, UnknownVariable) {
  BuiltBlock block;
  block.constraints = {Canonicalize({"c", X("ghost"), Sense::kLe, 1})};
  const EnumerationDomain d;
  EXPECT_FALSE(
      EncodingEquivalent(block, [](const Assignment&) { return true; }, d)
          .ok());
}

}  // namespace
}  // namespace omt
