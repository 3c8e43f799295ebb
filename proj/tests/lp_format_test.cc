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

#include <random>
#include <string>

#include "gtest/gtest.h"
#include "test_util.h"

namespace omt {
namespace {

LinearExpr X(std::string_view id, Rational c = 1) {
  return LinearExpr::Var(id, std::move(c));
}

Model Parse(std::string_view text) {
  absl::StatusOr<Model> m = ParseLp(text);
  EXPECT_TRUE(m.ok()) << m.status();
  return m.ok() ? *std::move(m) : Model{};
}

std::string ErrorOf(std::string_view text) {
  absl::StatusOr<Model> m = ParseLp(text);
  EXPECT_FALSE(m.ok()) << text;
  return m.ok() ? "" : std::string(m.status().message());
}

TEST(ParseLpTest, Knapsack) {
  const Model m = Parse(testing::ReadData("knapsack.lp"));
  EXPECT_EQ(m.objective.sense, ProblemSense::kMax);
  EXPECT_EQ(m.objective.expr, X("x1", 3) + X("x2", 4) + X("x3", 5));
  ASSERT_EQ(m.constraints.size(), 1u);
  EXPECT_EQ(m.constraints[0].name, "cap");
  EXPECT_EQ(m.constraints[0].rhs, 5);
  ASSERT_EQ(m.variables.size(), 3u);
  for (const Variable& v : m.variables) {
    EXPECT_EQ(v.type, NumberType::kBinary);
  }
}

TEST(ParseLpTest, ExactCoefficients) {
  const Model m = Parse("min: 0.1 x + 1/3 y;\nc: 2.5e-1 x - y >= -0.5;\n");
  EXPECT_EQ(m.objective.expr.CoefficientOf("x"), Rational(1, 10));
  EXPECT_EQ(m.objective.expr.CoefficientOf("y"), Rational(1, 3));
  const Constraint& c = m.constraints[0];
  EXPECT_TRUE(IsCanonical(c));
  // Negative rhs flips to -x/4 + y <= 1/2.
  EXPECT_EQ(c.sense, Sense::kLe);
  EXPECT_EQ(c.rhs, Rational(1, 2));
  EXPECT_EQ(c.lhs.CoefficientOf("x"), Rational(-1, 4));
}

TEST(ParseLpTest, Bounds) {
  const Model m = Parse(
      "max: x + y + z + w + a + b;\n"
      "c1: x + y + z + w + a + b <= 100;\n"
      "x <= 10;\n"
      "x >= 2;\n"
      "1 <= z <= 8;\n"
      "a, b >= 3;\n"
      "w >= -inf;\n"
      "y <= 1e30;\n"
      "int z;\n");
  EXPECT_EQ(*m.FindVariable("x")->lower, 2);
  EXPECT_EQ(*m.FindVariable("x")->upper, 10);
  EXPECT_EQ(*m.FindVariable("z")->lower, 1);
  EXPECT_EQ(*m.FindVariable("z")->upper, 8);
  EXPECT_EQ(m.FindVariable("z")->type, NumberType::kNonNegInteger);
  EXPECT_EQ(*m.FindVariable("a")->lower, 3);
  EXPECT_EQ(*m.FindVariable("b")->lower, 3);
  EXPECT_FALSE(m.FindVariable("w")->lower.has_value());
  EXPECT_FALSE(m.FindVariable("y")->upper.has_value());
  EXPECT_EQ(m.constraints.size(), 1u);
}

TEST(ParseLpTest, UnnamedRowsAndComments) {
  const Model m = Parse(
      "/* block\n comment */ max: ;\n"
      "x + y >= 1; // trailing\n"
      "named: x - y <= 3;\n"
      "2 x + y <= 7;\n");
  ASSERT_EQ(m.constraints.size(), 3u);
  EXPECT_NE(m.FindConstraint("R1"), nullptr);
  EXPECT_NE(m.FindConstraint("named"), nullptr);
  EXPECT_NE(m.FindConstraint("R3"), nullptr);
  EXPECT_TRUE(m.objective.expr.terms().empty());
}

TEST(ParseLpTest, VariablesOnBothSides) {
  const Model m = Parse("c: 3 x + 2 >= y - 4;\n");
  const Constraint& c = m.constraints[0];
  // 3 x - y >= -6 becomes -3 x + y <= 6.
  EXPECT_EQ(c.lhs, X("y") - X("x", 3));
  EXPECT_EQ(c.sense, Sense::kLe);
  EXPECT_EQ(c.rhs, 6);
}

TEST(ParseLpTest, Errors) {
  EXPECT_EQ(ErrorOf("max: 3 x +;\n").substr(0, 20), "line 1, column 11: e");
  EXPECT_NE(ErrorOf("c: x <= 1;\nc: y <= 2;\n").find("line 2"),
            std::string::npos);
  EXPECT_NE(ErrorOf("c: x <= 1;\nc: y <= 2;\n").find("duplicate"),
            std::string::npos);
  EXPECT_NE(ErrorOf("sin x;\n").find("unsupported"), std::string::npos);
  EXPECT_NE(ErrorOf("c: x <= 1/0;\n").find("denominator"), std::string::npos);
  ErrorOf("c: x <= 1\n");
  ErrorOf("c: x @ 1;\n");
  ErrorOf("/* open comment\n");
}

TEST(ParseLpTest, Locations) {
  absl::StatusOr<LpDocument> doc =
      ParseLpDocument("max: x;\n\nc1: x\n + y\n <= 3;\nc2: y <= 1;\n");
  ASSERT_TRUE(doc.ok()) << doc.status();
  EXPECT_EQ(doc->locations.at("c1").first_line, 3);
  EXPECT_EQ(doc->locations.at("c1").last_line, 5);
  EXPECT_EQ(doc->locations.at("c2").first_line, 6);
}

TEST(ParseLpExpressionTest, Basic) {
  absl::StatusOr<LinearExpr> e = ParseLpExpression("2 x_1 - y + 3");
  ASSERT_TRUE(e.ok()) << e.status();
  EXPECT_EQ(e->Normalized(),
            (X("x_1", 2) - X("y") + LinearExpr(Rational(3))).Normalized());
  EXPECT_FALSE(ParseLpExpression("2 x <= 3").ok());
  EXPECT_FALSE(ParseLpExpression("").ok());
}

TEST(WriteLpTest, Layout) {
  const Model m = Parse(testing::ReadData("knapsack.lp"));
  EXPECT_EQ(WriteLp(m),
            "// omt lp\n"
            "\n"
            "// objective\n"
            "max: +3 x1 +4 x2 +5 x3;\n"
            "\n"
            "// constraints\n"
            "cap: +2 x1 +3 x2 +4 x3 <= 5;\n"
            "\n"
            "// bounds\n"
            "\n"
            "// integrality\n"
            "bin x1,x2,x3;\n");
}

TEST(WriteLpTest, FractionsAndBounds) {
  const Model m = Parse(
      "min: 1/3 x + 0.25 y;\nc: x + y >= 1;\nx <= 7/2;\ny >= -inf;\n");
  const std::string text = WriteLp(m);
  EXPECT_NE(text.find("1/3 x"), std::string::npos) << text;
  EXPECT_NE(text.find("0.25 y"), std::string::npos) << text;
  EXPECT_NE(text.find("x <= 3.5;"), std::string::npos) << text;
  EXPECT_NE(text.find("y >= -inf;"), std::string::npos) << text;
}

TEST(RoundTripTest, Fixtures) {
  for (const char* name : {"chemical.lp", "supply_chain.lp", "timetabling.lp",
                           "vrp.lp", "knapsack.lp"}) {
    const Model m = testing::LoadLp(name);
    const std::string once = WriteLp(m);
    const Model back = Parse(once);
    EXPECT_TRUE(StructurallyEqual(m, back)) << name;
    EXPECT_EQ(WriteLp(back), once) << name;
  }
}

TEST(RoundTripTest, RandomModels) {
  std::mt19937_64 rng(20260101);
  for (int trial = 0; trial < 200; ++trial) {
    const Model m = testing::RandomModel(rng);
    const std::string once = WriteLp(m);
    absl::StatusOr<Model> back = ParseLp(once);
    ASSERT_TRUE(back.ok()) << back.status() << "\n" << once;
    EXPECT_TRUE(StructurallyEqual(m, *back)) << once;
    EXPECT_EQ(WriteLp(*back), once);
  }
}

}  // namespace
}  // namespace omt
