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

#ifndef OMT_TESTS_TEST_UTIL_H_
#define OMT_TESTS_TEST_UTIL_H_

// Helpers shared by the tests. The counting helpers here deliberately avoid
// omt::EnumerateFeasible so they can serve as an independent check on it.

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "omt/lp_format.h"
#include "omt/model.h"
#include "omt/rational.h"

namespace omt::testing {

inline std::string DataPath(const std::string& name) {
  return std::string(OMT_TEST_DATA_DIR) + "/" + name;
}

inline std::string ReadData(const std::string& name) {
  std::ifstream in(DataPath(name), std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Model LoadLp(const std::string& name) {
  absl::StatusOr<Model> m = ParseLp(ReadData(name));
  if (!m.ok()) return Model{};
  return *std::move(m);
}

inline std::vector<Variable> Binaries(int n, const std::string& stem = "x") {
  std::vector<Variable> out;
  for (int i = 1; i <= n; ++i) {
    out.push_back(Variable::Binary(stem + std::to_string(i)));
  }
  return out;
}

// Value of a linear row at bit pattern `mask` over `ids` (bit i = ids[i]).
inline Rational RowValue(const LinearExpr& e,
                         const std::vector<std::string>& ids, uint64_t mask) {
  Rational v = e.constant();
  for (const Term& t : e.terms()) {
    for (size_t i = 0; i < ids.size(); ++i) {
      if (ids[i] == t.variable && ((mask >> i) & 1)) v += t.coefficient;
    }
  }
  return v;
}

inline bool RowHolds(const Constraint& c, const std::vector<std::string>& ids,
                     uint64_t mask) {
  const Rational v = RowValue(c.lhs, ids, mask);
  switch (c.sense) {
    case Sense::kLe:
      return v <= c.rhs;
    case Sense::kEq:
      return v == c.rhs;
    case Sense::kGe:
      return v >= c.rhs;
  }
  return false;
}

// Number of 0-1 points over `ids` satisfying all `rows`.
inline uint64_t CountBinaryPoints(const std::vector<Constraint>& rows,
                                  const std::vector<std::string>& ids) {
  uint64_t count = 0;
  for (uint64_t mask = 0; mask < (uint64_t{1} << ids.size()); ++mask) {
    bool ok = true;
    for (const Constraint& c : rows) ok = ok && RowHolds(c, ids, mask);
    count += ok;
  }
  return count;
}

inline uint64_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Random well-formed model: mixed variable types and bounds, integer and
// fractional coefficients, all three senses.
inline Model RandomModel(std::mt19937_64& rng) {
  auto uniform = [&rng](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  auto coefficient = [&]() {
    Rational r(uniform(-20, 20), uniform(1, 4) == 1 ? 3 : uniform(1, 8));
    r.canonicalize();
    if (r == 0) r = 1;
    return r;
  };
  Model m;
  const int nvars = uniform(1, 8);
  for (int i = 0; i < nvars; ++i) {
    const std::string name = "v" + std::to_string(i);
    switch (uniform(0, 2)) {
      case 0:
        m.variables.push_back(Variable::Binary(name));
        break;
      case 1: {
        Variable v = Variable::Integer(name);
        if (uniform(0, 1)) v.upper = Rational(uniform(1, 50));
        m.variables.push_back(v);
        break;
      }
      default: {
        Variable v = Variable::Continuous(name, {std::to_string(i)});
        const int lower_kind = uniform(0, 3);
        if (lower_kind == 0) v.lower.reset();
        if (lower_kind == 1) {
          v.lower = Rational(uniform(1, 7), 2);
          v.lower->canonicalize();
        }
        if (uniform(0, 1)) {
          Rational width(uniform(1, 40), 3);
          width.canonicalize();
          v.upper = (v.lower.has_value() ? *v.lower : Rational(0)) + width;
        }
        m.variables.push_back(v);
      }
    }
  }
  m.objective.sense = uniform(0, 1) ? ProblemSense::kMax : ProblemSense::kMin;
  for (const Variable& v : m.variables) {
    if (uniform(0, 1)) m.objective.expr.AddTerm(coefficient(), v.Id());
  }
  m.objective.expr = m.objective.expr.Normalized();
  const int nrows = uniform(0, 6);
  for (int r = 0; r < nrows; ++r) {
    Constraint c;
    c.name = "c" + std::to_string(r);
    for (const Variable& v : m.variables) {
      if (uniform(0, 2) == 0) c.lhs.AddTerm(coefficient(), v.Id());
    }
    if (c.lhs.terms().empty()) {
      c.lhs.AddTerm(coefficient(), m.variables.front().Id());
    }
    c.sense = static_cast<Sense>(uniform(0, 2));
    c.rhs = coefficient() * uniform(0, 5);
    m.constraints.push_back(Canonicalize(c));
  }
  return m;
}

}  // namespace omt::testing

#endif  // OMT_TESTS_TEST_UTIL_H_
