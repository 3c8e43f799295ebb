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

#include "omt/constraint_library.h"

#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "test_util.h"

namespace omt {
namespace {

using ::omt::testing::Binaries;
using ::omt::testing::CountBinaryPoints;

LinearExpr X(std::string_view id, Rational c = 1) {
  return LinearExpr::Var(id, std::move(c));
}
LinearExpr K(Rational c) { return LinearExpr().AddConstant(c); }

// Compares the row against `lhs sense rhs` after canonicalization.
void ExpectRow(const Constraint& actual, const LinearExpr& lhs, Sense sense,
               const Rational& rhs) {
  const Constraint want = Canonicalize(Constraint{"", lhs, sense, rhs});
  EXPECT_EQ(actual.lhs, want.lhs) << ToString(actual);
  EXPECT_EQ(actual.sense, want.sense) << ToString(actual);
  EXPECT_EQ(actual.rhs, want.rhs) << ToString(actual);
}

std::vector<std::string> Ids(const std::vector<Variable>& vars) {
  std::vector<std::string> ids;
  for (const Variable& v : vars) ids.push_back(v.Id());
  return ids;
}

BuildContext ContextWith(const std::vector<Variable>& vars) {
  BuildContext ctx;
  for (const Variable& v : vars) ctx.AddVariable(v);
  return ctx;
}

TEST(SetCoveringTest, Forms) {
  BuildContext ctx;
  const std::vector<Variable> x = Binaries(3);
  absl::StatusOr<BuiltBlock> b = SetCovering(ctx, x);
  ASSERT_TRUE(b.ok()) << b.status();
  ASSERT_EQ(b->constraints.size(), 1u);
  ExpectRow(b->constraints[0], X("x1") + X("x2") + X("x3"), Sense::kGe, 1);
  EXPECT_EQ(b->tag.kind, TagKind::kSetCovering);
  EXPECT_TRUE(b->aux_variables.empty());

  absl::StatusOr<BuiltBlock> one = SetCovering(ctx, Binaries(1));
  ExpectRow(one->constraints[0], X("x1"), Sense::kGe, 1);

  absl::StatusOr<BuiltBlock> two = SetCovering(ctx, x, 2);
  EXPECT_EQ(two->tag.kind, TagKind::kWeightedSetCovering);
  EXPECT_EQ(CountBinaryPoints(two->constraints, Ids(x)), 4u);

  absl::StatusOr<BuiltBlock> signed_block =
      SetCovering(ctx, x, 1, std::vector<int>{1, -1, 1});
  ASSERT_TRUE(signed_block.ok());
  EXPECT_EQ(signed_block->tag.kind, TagKind::kGeneralizedSetCovering);
  ExpectRow(signed_block->constraints[0], X("x1") - X("x2") + X("x3"),
            Sense::kGe, 1);
}

TEST(SetCoveringTest, Errors) {
  BuildContext ctx;
  EXPECT_FALSE(SetCovering(ctx, std::vector<Variable>{}).ok());
  const std::vector<Variable> mixed = {Variable::Binary("a"),
                                       Variable::Integer("n")};
  EXPECT_FALSE(SetCovering(ctx, mixed).ok());
  EXPECT_FALSE(SetCovering(ctx, Binaries(2), 0).ok());
  EXPECT_FALSE(SetCovering(ctx, Binaries(2), 1, std::vector<int>{1}).ok());
  EXPECT_FALSE(SetCovering(ctx, Binaries(2), 1, std::vector<int>{1, 2}).ok());
}

TEST(SetPartitioningTest, Forms) {
  BuildContext ctx;
  absl::StatusOr<BuiltBlock> b = SetPartitioning(ctx, Binaries(2));
  ExpectRow(b->constraints[0], X("x1") + X("x2"), Sense::kEq, 1);
  EXPECT_EQ(CountBinaryPoints(b->constraints, {"x1", "x2"}), 2u);
  ExpectRow(SetPartitioning(ctx, Binaries(1))->constraints[0], X("x1"),
            Sense::kEq, 1);
  absl::StatusOr<BuiltBlock> two = SetPartitioning(ctx, Binaries(3), 2);
  EXPECT_EQ(two->tag.kind, TagKind::kWeightedSetPartitioning);
  EXPECT_EQ(CountBinaryPoints(two->constraints, {"x1", "x2", "x3"}), 3u);
}

TEST(SetPackingTest, Forms) {
  BuildContext ctx;
  absl::StatusOr<BuiltBlock> b = SetPacking(ctx, Binaries(3));
  ExpectRow(b->constraints[0], X("x1") + X("x2") + X("x3"), Sense::kLe, 1);
  EXPECT_EQ(b->tag.kind, TagKind::kSetPacking);
  EXPECT_EQ(CountBinaryPoints(b->constraints, {"x1", "x2", "x3"}), 4u);
  absl::StatusOr<BuiltBlock> pair = SetPacking(ctx, Binaries(2));
  EXPECT_FALSE(*Satisfied(pair->constraints[0], {{"x1", 1}, {"x2", 1}}));
}

TEST(SetFamilyTest, ClosedFormCounts) {
  for (int n = 1; n <= 10; ++n) {
    BuildContext ctx;
    const std::vector<Variable> x = Binaries(n);
    const std::vector<std::string> ids = Ids(x);
    EXPECT_EQ(CountBinaryPoints(SetCovering(ctx, x)->constraints, ids),
              (uint64_t{1} << n) - 1);
    EXPECT_EQ(CountBinaryPoints(SetPartitioning(ctx, x)->constraints, ids),
              static_cast<uint64_t>(n));
    EXPECT_EQ(CountBinaryPoints(SetPacking(ctx, x)->constraints, ids),
              static_cast<uint64_t>(n + 1));
  }
}

// A packing instance plus one slack binary is a partitioning instance: the
// solution counts agree.
TEST(SetFamilyTest, PackingWithSlackIsPartitioning) {
  for (int n = 1; n <= 8; ++n) {
    BuildContext ctx;
    std::vector<Variable> x = Binaries(n);
    const uint64_t packing =
        CountBinaryPoints(SetPacking(ctx, x)->constraints, Ids(x));
    x.push_back(Variable::Binary("slack"));
    const uint64_t partitioning =
        CountBinaryPoints(SetPartitioning(ctx, x)->constraints, Ids(x));
    EXPECT_EQ(packing, partitioning);
  }
}

TEST(KnapsackTest, Forms) {
  BuildContext ctx;
  const std::vector<Rational> w = {2, 3, 1};
  absl::StatusOr<BuiltBlock> b = Knapsack(ctx, w, 7, Binaries(3));
  ASSERT_TRUE(b.ok()) << b.status();
  ExpectRow(b->constraints[0], X("x1", 2) + X("x2", 3) + X("x3"), Sense::kLe,
            7);
  EXPECT_EQ(b->tag.kind, TagKind::kZeroOneKnapsack);

  const std::vector<Rational> w1 = {1};
  absl::StatusOr<BuiltBlock> zero = Knapsack(ctx, w1, 0, Binaries(1));
  EXPECT_EQ(CountBinaryPoints(zero->constraints, {"x1"}), 1u);

  const std::vector<Rational> w3 = {2, 3, 4};
  EXPECT_EQ(CountBinaryPoints(Knapsack(ctx, w3, 5, Binaries(3))->constraints,
                              {"x1", "x2", "x3"}),
            5u);

  const std::vector<Variable> reals = {Variable::Continuous("a"),
                                       Variable::Continuous("b")};
  const std::vector<Rational> w2 = {Rational(1, 2), 4};
  EXPECT_EQ(Knapsack(ctx, w2, 9, reals)->tag.kind, TagKind::kKnapsack);
}

TEST(KnapsackTest, Errors) {
  BuildContext ctx;
  const std::vector<Rational> w = {1, 0};
  EXPECT_FALSE(Knapsack(ctx, w, 3, Binaries(2)).ok());
  const std::vector<Rational> ok = {1, 1};
  const std::vector<Variable> mixed = {Variable::Binary("a"),
                                       Variable::Continuous("b")};
  EXPECT_FALSE(Knapsack(ctx, ok, 3, mixed).ok());
  EXPECT_FALSE(Knapsack(ctx, ok, -1, Binaries(2)).ok());
  EXPECT_FALSE(Knapsack(ctx, ok, 3, Binaries(3)).ok());
}

TEST(BoundTest, FixedAndVariable) {
  BuildContext ctx = ContextWith({Variable::Continuous("s"),
                                  Variable::Continuous("t1"),
                                  Variable::Continuous("t2"),
                                  Variable::Continuous("T")});
  absl::StatusOr<BuiltBlock> fixed =
      FixedBound(ctx, X("s"), BoundKind::kSupplyUpper, 50);
  ExpectRow(fixed->constraints[0], X("s"), Sense::kLe, 50);
  EXPECT_EQ(fixed->tag.omt_node_id, 7);

  absl::StatusOr<BuiltBlock> var = VariableBound(
      ctx, X("t1") + X("t2"), BoundKind::kSupplyUpper,
      *ctx.FindVariable("T"));
  ExpectRow(var->constraints[0], X("t1") + X("t2") - X("T"), Sense::kLe, 0);
  EXPECT_EQ(var->tag.omt_node_id, 2);

  absl::StatusOr<BuiltBlock> lower =
      VariableBound(ctx, X("t1"), BoundKind::kDemandLower,
                    *ctx.FindVariable("T"), 3);
  ExpectRow(lower->constraints[0], X("t1") - X("T", 3), Sense::kGe, 0);
  EXPECT_EQ(lower->tag.omt_node_id, 8);

  absl::StatusOr<BuiltBlock> vacuous =
      FixedBound(ctx, X("s"), BoundKind::kDemandLower, 0);
  ExpectRow(vacuous->constraints[0], X("s"), Sense::kGe, 0);
  EXPECT_EQ(vacuous->tag.omt_node_id, 10);

  EXPECT_FALSE(VariableBound(ctx, X("t1"), BoundKind::kSupplyUpper,
                             *ctx.FindVariable("T"), 0)
                   .ok());
  EXPECT_FALSE(FixedBound(ctx, LinearExpr(), BoundKind::kSupplyUpper, 1).ok());
}

TEST(BalanceTest, Kinds) {
  BuildContext ctx = ContextWith(
      {Variable::Continuous("s_2"), Variable::Continuous("s_1"),
       Variable::Continuous("p_2"), Variable::Continuous("c_2"),
       Variable::Continuous("x_2"), Variable::Continuous("x_1"),
       Variable::Continuous("x")});
  absl::StatusOr<BuiltBlock> inv =
      Balance(ctx, X("s_2"), X("s_1") + X("p_2") - X("c_2"),
              BalanceKind::kInventory);
  ExpectRow(inv->constraints[0], X("s_2") - X("s_1") - X("p_2") + X("c_2"),
            Sense::kEq, 0);
  EXPECT_EQ(inv->tag.omt_node_id, 14);

  absl::StatusOr<BuiltBlock> link =
      Balance(ctx, X("x_2"), X("x_1"), BalanceKind::kPeriodLink);
  ExpectRow(link->constraints[0], X("x_2") - X("x_1"), Sense::kEq, 0);
  EXPECT_EQ(link->tag.omt_node_id, 12);

  absl::StatusOr<BuiltBlock> assign =
      Balance(ctx, X("x"), K(5), BalanceKind::kAssignValue);
  ExpectRow(assign->constraints[0], X("x"), Sense::kEq, 5);
  EXPECT_EQ(assign->tag.omt_node_id, 13);
}

TEST(FixToZeroTest, Forms) {
  BuildContext ctx;
  absl::StatusOr<BuiltBlock> one = FixToZero(ctx, std::vector<Variable>{Variable::Binary("x12")});
  ExpectRow(one->constraints[0], X("x12"), Sense::kEq, 0);
  absl::StatusOr<BuiltBlock> two = FixToZero(ctx, Binaries(2));
  EXPECT_EQ(two->constraints.size(), 2u);
  EXPECT_EQ(CountBinaryPoints(two->constraints, {"x1", "x2"}), 1u);
  EXPECT_FALSE(FixToZero(ctx, std::vector<Variable>{}).ok());
}

TEST(EitherOrTest, Forms) {
  BuildContext ctx = ContextWith({Variable::Integer("x", {}, 10),
                                  Variable::Integer("y", {}, 10)});
  absl::StatusOr<BuiltBlock> b =
      EitherOr(ctx, X("x") - K(3), X("y") - K(4), Rational(100));
  ASSERT_TRUE(b.ok()) << b.status();
  ASSERT_EQ(b->aux_variables.size(), 1u);
  const std::string t = b->aux_variables[0].Id();
  EXPECT_EQ(t.rfind(kAuxPrefix, 0), 0u);
  EXPECT_EQ(b->aux_variables[0].type, NumberType::kBinary);
  ExpectRow(b->constraints[0], X("x") - K(3) - X(t, 100), Sense::kLe, 0);
  ExpectRow(b->constraints[1], X("y") - K(4) + X(t, 100), Sense::kLe, 100);
  EXPECT_EQ(b->tag.kind, TagKind::kEitherOr);

  // t = 0 enforces f <= 0.
  for (int x = 0; x <= 10; ++x) {
    const Assignment a = {{"x", x}, {"y", 0}, {t, 0}};
    EXPECT_EQ(*Satisfied(b->constraints[0], a), x <= 3);
  }
  EXPECT_FALSE(EitherOr(ctx, X("x"), X("y"), Rational(0)).ok());
  EXPECT_FALSE(EitherOr(ctx, X("x"), X("y"), Rational(-5)).ok());
}

TEST(EitherOrTest, BinaryToyProjection) {
  BuildContext ctx = ContextWith(Binaries(2));
  absl::StatusOr<BuiltBlock> b = EitherOr(ctx, X("x1"), X("x2"), Rational(1));
  const std::string t = b->aux_variables[0].Id();
  // Points (x1, x2) with some t making both rows hold.
  for (int x1 = 0; x1 <= 1; ++x1) {
    for (int x2 = 0; x2 <= 1; ++x2) {
      bool some = false;
      for (int tv = 0; tv <= 1; ++tv) {
        const Assignment a = {{"x1", x1}, {"x2", x2}, {t, tv}};
        some = some || (*Satisfied(b->constraints[0], a) &&
                        *Satisfied(b->constraints[1], a));
      }
      EXPECT_EQ(some, x1 == 0 || x2 == 0) << x1 << x2;
    }
  }
}

TEST(EitherOrTest, AuxNamesAreFresh) {
  Model m;
  m.variables = {Variable::Binary("__aux_1"), Variable::Binary("x1"),
                 Variable::Binary("x2")};
  BuildContext ctx(m);
  absl::StatusOr<BuiltBlock> a = EitherOr(ctx, X("x1"), X("x2"));
  absl::StatusOr<BuiltBlock> b = EitherOr(ctx, X("x1"), X("x2"));
  ASSERT_TRUE(a.ok() && b.ok());
  EXPECT_NE(a->aux_variables[0].Id(), "__aux_1");
  EXPECT_NE(a->aux_variables[0].Id(), b->aux_variables[0].Id());
  EXPECT_NE(a->constraints[0].name, b->constraints[0].name);
}

TEST(EitherOrTest, UnboundedNeedsExplicitM) {
  BuildContext ctx = ContextWith({Variable::Continuous("x"),
                                  Variable::Binary("b")});
  absl::StatusOr<BuiltBlock> b = EitherOr(ctx, X("x"), X("b"));
  ASSERT_FALSE(b.ok());
  EXPECT_EQ(b.status().message().substr(0, 15), "UNBOUNDED_BIG_M");
  EXPECT_TRUE(EitherOr(ctx, X("x"), X("b"), Rational(1000)).ok());
}

TEST(IfThenBigMTest, Forms) {
  BuildContext ctx = ContextWith({Variable::Continuous("x", {}, 50),
                                  Variable::Continuous("y", {}, 50)});
  absl::StatusOr<BuiltBlock> b =
      IfThenBigM(ctx, X("x") - K(2), X("y") - K(7), Rational(1000));
  ASSERT_TRUE(b.ok());
  const std::string t = b->aux_variables[0].Id();
  ExpectRow(b->constraints[0], X("y") - K(7) - X(t, 1000), Sense::kLe, 0);
  ExpectRow(b->constraints[1], X("x") - K(2) + X(t, 1000), Sense::kLe, 1000);
  EXPECT_EQ(b->tag.kind, TagKind::kIfThenBigM);
}

TEST(ConditionalBoundTest, BatchCapacity) {
  BuildContext ctx = ContextWith({Variable::Continuous("batch"),
                                  Variable::Binary("y")});
  absl::StatusOr<BuiltBlock> b = ConditionalBound(
      ctx, X("batch"), *ctx.FindVariable("y"), Rational(10), Rational(50));
  ASSERT_TRUE(b.ok()) << b.status();
  ASSERT_EQ(b->constraints.size(), 2u);
  ExpectRow(b->constraints[0], X("batch") - X("y", 50), Sense::kLe, 0);
  ExpectRow(b->constraints[1], X("batch") - X("y", 10), Sense::kGe, 0);
  EXPECT_EQ(b->tag.kind, TagKind::kConditionalUpperBound);
  // y = 0 forces batch = 0.
  for (int batch = 0; batch <= 60; batch += 5) {
    const Assignment a = {{"batch", batch}, {"y", 0}};
    const bool ok = *Satisfied(b->constraints[0], a) &&
                    *Satisfied(b->constraints[1], a);
    EXPECT_EQ(ok, batch == 0);
  }
  EXPECT_FALSE(ConditionalBound(ctx, X("batch"), *ctx.FindVariable("y"),
                                std::nullopt, std::nullopt)
                   .ok());
  EXPECT_FALSE(ConditionalBound(ctx, X("batch"),
                                Variable::Continuous("batch"), Rational(1),
                                std::nullopt)
                   .ok());
}

TEST(ImpliesBinaryTest, Forms) {
  BuildContext ctx = ContextWith({Variable::Binary("xA"), Variable::Binary("xB"),
                                  Variable::Binary("x"), Variable::Binary("y")});
  absl::StatusOr<BuiltBlock> b = ImpliesBinary(ctx, X("xA"), X("xB"));
  ExpectRow(b->constraints[0], X("xA") - X("xB"), Sense::kLe, 0);
  EXPECT_EQ(CountBinaryPoints(b->constraints, {"xA", "xB"}), 3u);
  EXPECT_FALSE(*Satisfied(b->constraints[0], {{"xA", 1}, {"xB", 0}}));

  absl::StatusOr<BuiltBlock> same = ImpliesBinary(ctx, X("xA"), X("xA"));
  ASSERT_TRUE(same.ok());
  EXPECT_TRUE(same->constraints[0].lhs.terms().empty());
  EXPECT_EQ(same->constraints[0].rhs, 0);

  absl::StatusOr<BuiltBlock> packing =
      ImpliesBinary(ctx, X("x"), K(1) - X("y"));
  ExpectRow(packing->constraints[0], X("x") + X("y"), Sense::kLe, 1);
}

TEST(IfAllThenTest, Forms) {
  BuildContext ctx;
  const Variable a = Variable::Binary("A");
  const std::vector<Variable> bs = {Variable::Binary("B1"),
                                    Variable::Binary("B2")};
  absl::StatusOr<BuiltBlock> b = IfAllThen(ctx, a, bs);
  ASSERT_TRUE(b.ok()) << b.status();
  ExpectRow(b->constraints[0], X("B1") + X("B2") - X("A"), Sense::kLe, 1);
  EXPECT_EQ(b->tag.omt_node_id, 24);
  const std::vector<std::string> ids = {"A", "B1", "B2"};
  EXPECT_EQ(CountBinaryPoints(b->constraints, ids), 7u);
  EXPECT_FALSE(*Satisfied(b->constraints[0], {{"A", 0}, {"B1", 1}, {"B2", 1}}));

  absl::StatusOr<BuiltBlock> single =
      IfAllThen(ctx, a, std::vector<Variable>{Variable::Binary("B1")});
  ExpectRow(single->constraints[0], X("B1") - X("A"), Sense::kLe, 0);
  EXPECT_FALSE(IfAllThen(ctx, a, std::vector<Variable>{}).ok());
  EXPECT_FALSE(IfAllThen(ctx, a, bs, 3).ok());
  EXPECT_FALSE(IfAllThen(ctx, a, bs, 0).ok());
}

TEST(IfAllThenTest, AtLeastKOfN) {
  BuildContext ctx;
  const Variable a = Variable::Binary("A");
  const std::vector<Variable> bs = Binaries(4, "B");
  absl::StatusOr<BuiltBlock> b = IfAllThen(ctx, a, bs, 2);
  ASSERT_TRUE(b.ok());
  std::vector<std::string> ids = {"A", "B1", "B2", "B3", "B4"};
  for (uint64_t mask = 0; mask < 32; ++mask) {
    const bool av = mask & 1;
    const int count = __builtin_popcountll(mask >> 1);
    EXPECT_EQ(testing::RowHolds(b->constraints[0], ids, mask),
              count < 2 || av);
  }
}

TEST(OnlyIfAllTest, Forms) {
  BuildContext ctx;
  const Variable a = Variable::Binary("A");
  const std::vector<Variable> bs = {Variable::Binary("B1"),
                                    Variable::Binary("B2")};
  absl::StatusOr<BuiltBlock> b = OnlyIfAll(ctx, a, bs);
  ASSERT_EQ(b->constraints.size(), 2u);
  ExpectRow(b->constraints[0], X("A") - X("B1"), Sense::kLe, 0);
  ExpectRow(b->constraints[1], X("A") - X("B2"), Sense::kLe, 0);
  EXPECT_EQ(b->tag.kind, TagKind::kOnlyIfAll);
  // Excluded: A = 1 with some Bj = 0 (3 of 8 points).
  EXPECT_EQ(CountBinaryPoints(b->constraints, {"A", "B1", "B2"}), 5u);

  absl::StatusOr<BuiltBlock> agg = OnlyIfAll(ctx, a, bs, Strength::kAggregated);
  ASSERT_EQ(agg->constraints.size(), 1u);
  ExpectRow(agg->constraints[0], X("A", 2) - X("B1") - X("B2"), Sense::kLe, 0);
  EXPECT_EQ(CountBinaryPoints(agg->constraints, {"A", "B1", "B2"}), 5u);

  absl::StatusOr<BuiltBlock> one =
      OnlyIfAll(ctx, a, std::vector<Variable>{Variable::Binary("B1")});
  ExpectRow(one->constraints[0], X("A") - X("B1"), Sense::kLe, 0);
}

TEST(IffAllTest, Forms) {
  BuildContext ctx;
  const Variable a = Variable::Binary("A");
  const std::vector<Variable> bs = {Variable::Binary("B1"),
                                    Variable::Binary("B2")};
  absl::StatusOr<BuiltBlock> b = IffAll(ctx, a, bs);
  ASSERT_EQ(b->constraints.size(), 3u);
  const std::vector<std::string> ids = {"A", "B1", "B2"};
  for (uint64_t mask = 0; mask < 8; ++mask) {
    bool ok = true;
    for (const Constraint& c : b->constraints) {
      ok = ok && testing::RowHolds(c, ids, mask);
    }
    EXPECT_EQ(ok, (mask & 1) == ((mask >> 1 & 1) && (mask >> 2 & 1)));
  }
  absl::StatusOr<BuiltBlock> one =
      IffAll(ctx, a, std::vector<Variable>{Variable::Binary("B1")});
  EXPECT_EQ(CountBinaryPoints(one->constraints, {"A", "B1"}), 2u);
}

TEST(FixValueIfTest, Forms) {
  BuildContext ctx = ContextWith({Variable::Integer("x", {}, 10),
                                  Variable::Integer("y", {}, 10),
                                  Variable::Binary("z")});
  absl::StatusOr<BuiltBlock> b = FixValueIf(
      ctx, *ctx.FindVariable("z"), X("x") + X("y"), 5, Rational(100));
  ASSERT_TRUE(b.ok()) << b.status();
  ExpectRow(b->constraints[0], X("x") + X("y") + X("z", 100), Sense::kLe, 105);
  ExpectRow(b->constraints[1], X("x") + X("y") - X("z", 100), Sense::kGe, -95);
  for (int x = 0; x <= 10; ++x) {
    for (int z = 0; z <= 1; ++z) {
      const Assignment a = {{"x", x}, {"y", 0}, {"z", z}};
      const bool ok = *Satisfied(b->constraints[0], a) &&
                      *Satisfied(b->constraints[1], a);
      EXPECT_EQ(ok, z == 0 || x == 5);
    }
  }
  EXPECT_FALSE(FixValueIf(ctx, *ctx.FindVariable("x"), X("y"), 1).ok());
}

TEST(BigMDefaultTest, Examples) {
  VariableTable table;
  table["x"] = Variable::Continuous("x", {}, 10);
  table["u"] = Variable::Continuous("u");
  const std::vector<LinearExpr> one = {X("x") - K(3)};
  EXPECT_EQ(*BigMDefault(one, table), Rational(8));
  const std::vector<LinearExpr> zero = {LinearExpr()};
  EXPECT_EQ(*BigMDefault(zero, table), Rational(1));
  const std::vector<LinearExpr> unbounded = {X("u")};
  absl::StatusOr<Rational> m = BigMDefault(unbounded, table);
  ASSERT_FALSE(m.ok());
  EXPECT_EQ(m.status().code(), absl::StatusCode::kFailedPrecondition);
  const std::vector<LinearExpr> unknown = {X("nope")};
  EXPECT_FALSE(BigMDefault(unknown, table).ok());
}

// Interval arithmetic against a brute-force scan of the integer box.
TEST(BigMDefaultTest, MatchesScan) {
  VariableTable table;
  table["a"] = Variable::Integer("a", {}, 4);
  table["b"] = Variable::Integer("b", {}, 3);
  table["b"].lower = Rational(1);
  const LinearExpr e = X("a", 2) - X("b", 5) + K(1);
  Rational sup = 0;
  for (int a = 0; a <= 4; ++a) {
    for (int b = 1; b <= 3; ++b) {
      sup = std::max(sup, Abs(Rational(2 * a - 5 * b + 1)));
    }
  }
  const std::vector<LinearExpr> exprs = {e};
  EXPECT_EQ(*BigMDefault(exprs, table), sup + 1);
}

TEST(BuildContextTest, FreshNames) {
  BuildContext ctx;
  ctx.ReserveName("row_1");
  EXPECT_EQ(ctx.FreshConstraintName("row"), "row_2");
  const Variable a = ctx.NewIndicator();
  const Variable b = ctx.NewIndicator();
  EXPECT_NE(a.Id(), b.Id());
  EXPECT_NE(ctx.FindVariable(a.Id()), nullptr);
}

TEST(BuildersTest, UndeclaredExpressionVariable) {
  BuildContext ctx;
  EXPECT_EQ(FixedBound(ctx, X("ghost"), BoundKind::kSupplyUpper, 1)
                .status()
                .code(),
            absl::StatusCode::kNotFound);
}

}  // namespace
}  // namespace omt
