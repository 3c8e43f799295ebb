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

#include "omt/verification.h"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <utility>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "omt/constraint_library.h"
#include "omt/model.h"
#include "omt/oracle.h"

namespace omt {
namespace {

struct Instance {
  std::string description;
  absl::StatusOr<BuiltBlock> block;
  Predicate predicate;
};

class Generator {
 public:
  Generator(int n, uint64_t seed, std::optional<Rational> forced_big_m)
      : rng_(seed), forced_big_m_(std::move(forced_big_m)) {
    for (int i = 1; i <= n; ++i) {
      vars_.push_back(Variable::Binary(absl::StrCat("x", i)));
      ctx_.AddVariable(vars_.back());
    }
  }

  const std::vector<Variable>& vars() const { return vars_; }

  int Uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  // Random integer combination of a nonempty random subset plus a constant.
  LinearExpr RandomExpr() {
    LinearExpr e;
    for (const Variable& v : vars_) {
      if (Uniform(0, 1) == 1) e.AddTerm(Uniform(-3, 3), v.Id());
    }
    const Variable& anchor = vars_[Uniform(0, vars_.size() - 1)];
    if (e.Normalized().terms().empty()) e.AddTerm(Uniform(1, 3), anchor.Id());
    e.AddConstant(Uniform(-3, 3));
    return e.Normalized();
  }

  // Shuffled copy of the variables: first is the head, rest the body.
  std::vector<Variable> Shuffled() {
    std::vector<Variable> v = vars_;
    std::shuffle(v.begin(), v.end(), rng_);
    return v;
  }

  std::optional<Rational> big_m() const { return forced_big_m_; }
  BuildContext& ctx() { return ctx_; }

 private:
  std::mt19937_64 rng_;
  std::optional<Rational> forced_big_m_;
  std::vector<Variable> vars_;
  BuildContext ctx_;
};

Rational Eval(const LinearExpr& e, const Assignment& a) { return *Evaluate(e, a); }

bool Value(const Variable& v, const Assignment& a) { return *a.Find(v.Id()) == 1; }

int CountTrue(std::span<const Variable> vs, const Assignment& a) {
  int k = 0;
  for (const Variable& v : vs) k += Value(v, a);
  return k;
}

using MakeInstance = std::function<std::optional<Instance>(Generator&)>;

struct Family {
  std::string builder;
  int min_n;
  MakeInstance make;
};

std::vector<Family> Families() {
  std::vector<Family> f;
  f.push_back({"either_or", 1, [](Generator& g) -> std::optional<Instance> {
                 LinearExpr a = g.RandomExpr(), b = g.RandomExpr();
                 return Instance{
                     absl::StrCat("f = ", ToString(a), ", g = ", ToString(b)),
                     EitherOr(g.ctx(), a, b, g.big_m()),
                     [a, b](const Assignment& p) {
                       return Eval(a, p) <= 0 || Eval(b, p) <= 0;
                     }};
               }});
  f.push_back({"if_then_big_m", 1, [](Generator& g) -> std::optional<Instance> {
                 LinearExpr a = g.RandomExpr(), b = g.RandomExpr();
                 return Instance{
                     absl::StrCat("f = ", ToString(a), ", g = ", ToString(b)),
                     IfThenBigM(g.ctx(), a, b, g.big_m()),
                     [a, b](const Assignment& p) {
                       return !(Eval(a, p) > 0) || Eval(b, p) <= 0;
                     }};
               }});
  f.push_back({"implies_binary", 2, [](Generator& g) -> std::optional<Instance> {
                 std::vector<Variable> v = g.Shuffled();
                 // Literals: x or 1 - x.
                 const bool neg_a = g.Uniform(0, 1), neg_b = g.Uniform(0, 1);
                 auto literal = [](const Variable& x, bool neg) {
                   LinearExpr e = LinearExpr::Var(x.Id());
                   return neg ? (LinearExpr().AddConstant(1) - e).Normalized()
                              : e;
                 };
                 LinearExpr a = literal(v[0], neg_a), b = literal(v[1], neg_b);
                 return Instance{
                     absl::StrCat("f = ", ToString(a), ", g = ", ToString(b)),
                     ImpliesBinary(g.ctx(), a, b),
                     [a, b](const Assignment& p) {
                       return Eval(a, p) == 0 || Eval(b, p) == 1;
                     }};
               }});
  f.push_back({"if_all_then", 2, [](Generator& g) -> std::optional<Instance> {
                 std::vector<Variable> v = g.Shuffled();
                 const Variable a = v[0];
                 std::vector<Variable> bs(v.begin() + 1, v.end());
                 const int n = bs.size();
                 std::optional<int> k;
                 if (g.Uniform(0, 2) == 0) k = g.Uniform(1, n);
                 const int need = k.value_or(n);
                 return Instance{
                     absl::StrCat("a = ", a.Id(), ", |bs| = ", n,
                                  ", at_least = ", need),
                     IfAllThen(g.ctx(), a, bs, k),
                     [a, bs, need](const Assignment& p) {
                       return CountTrue(bs, p) < need || Value(a, p);
                     }};
               }});
  f.push_back({"only_if_all", 2, [](Generator& g) -> std::optional<Instance> {
                 std::vector<Variable> v = g.Shuffled();
                 const Variable a = v[0];
                 std::vector<Variable> bs(v.begin() + 1, v.end());
                 const Strength s =
                     g.Uniform(0, 1) ? Strength::kAggregated
                                     : Strength::kDisaggregated;
                 return Instance{
                     absl::StrCat("a = ", a.Id(), ", |bs| = ", bs.size(),
                                  s == Strength::kAggregated ? ", aggregated"
                                                             : ", disaggregated"),
                     OnlyIfAll(g.ctx(), a, bs, s),
                     [a, bs](const Assignment& p) {
                       return !Value(a, p) ||
                              CountTrue(bs, p) == static_cast<int>(bs.size());
                     }};
               }});
  f.push_back({"iff_all", 2, [](Generator& g) -> std::optional<Instance> {
                 std::vector<Variable> v = g.Shuffled();
                 const Variable a = v[0];
                 std::vector<Variable> bs(v.begin() + 1, v.end());
                 return Instance{
                     absl::StrCat("a = ", a.Id(), ", |bs| = ", bs.size()),
                     IffAll(g.ctx(), a, bs),
                     [a, bs](const Assignment& p) {
                       return Value(a, p) ==
                              (CountTrue(bs, p) == static_cast<int>(bs.size()));
                     }};
               }});
  f.push_back({"fix_value_if", 2, [](Generator& g) -> std::optional<Instance> {
                 std::vector<Variable> v = g.Shuffled();
                 const Variable z = v[0];
                 LinearExpr e;
                 for (size_t i = 1; i < v.size(); ++i) {
                   if (g.Uniform(0, 1)) e.AddTerm(g.Uniform(-3, 3), v[i].Id());
                 }
                 e.AddTerm(g.Uniform(1, 3), v[1].Id());
                 e = e.Normalized();
                 if (e.terms().empty()) e.AddTerm(1, v[1].Id());
                 const Rational value = g.Uniform(-2, 3);
                 return Instance{
                     absl::StrCat("z = ", z.Id(), ", f = ", ToString(e),
                                  ", value = ", FormatRational(value)),
                     FixValueIf(g.ctx(), z, e, value, g.big_m()),
                     [z, e, value](const Assignment& p) {
                       return !Value(z, p) || Eval(e, p) == value;
                     }};
               }});
  return f;
}

}  // namespace

bool VerifyReport::ok() const {
  return std::all_of(builders.begin(), builders.end(),
                     [](const BuilderSummary& b) { return b.failures == 0; });
}

int VerifyReport::total_instances() const {
  int n = 0;
  for (const BuilderSummary& b : builders) n += b.instances;
  return n;
}

std::string VerifyReport::ToString() const {
  std::string out;
  int failures = 0;
  for (const BuilderSummary& b : builders) {
    failures += b.failures;
    absl::StrAppend(&out, b.failures == 0 ? "PASS " : "FAIL ",
                    absl::StrFormat("%-16s", b.builder), " ",
                    b.instances - b.failures, "/", b.instances, " equal\n");
    if (!b.first_failure.empty()) {
      absl::StrAppend(&out, "     ", b.first_failure, "\n");
    }
  }
  absl::StrAppend(&out, absl::StrFormat("%d instances, %d failing, %.2fs\n",
                                        total_instances(), failures, seconds));
  return out;
}

absl::StatusOr<VerifyReport> VerifyEncodings(const VerifyOptions& options) {
  if (options.max_n < 1) {
    return absl::InvalidArgumentError("max_n must be at least 1");
  }
  if (options.instances_per_n < 1) {
    return absl::InvalidArgumentError("instances_per_n must be at least 1");
  }
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  uint64_t stream = 0;
  for (const Family& family : Families()) {
    BuilderSummary summary;
    summary.builder = family.builder;
    for (int n = std::max(1, family.min_n); n <= options.max_n; ++n) {
      for (int k = 0; k < options.instances_per_n; ++k) {
        Generator gen(n, options.seed ^ (0x9e3779b97f4a7c15ULL * ++stream),
                      options.forced_big_m);
        std::optional<Instance> inst = family.make(gen);
        if (!inst.has_value()) continue;
        ++summary.instances;
        if (!inst->block.ok()) {
          ++summary.failures;
          if (summary.first_failure.empty()) {
            summary.first_failure =
                absl::StrCat("n = ", n, ", ", inst->description,
                             ": builder error ", inst->block.status().ToString());
          }
          continue;
        }
        absl::StatusOr<EnumerationDomain> domain =
            EnumerationDomain::ForVariables(gen.vars());
        if (!domain.ok()) return domain.status();
        absl::StatusOr<EquivalenceReport> eq =
            EncodingEquivalent(*inst->block, inst->predicate, *domain);
        if (!eq.ok()) return eq.status();
        if (!eq->equal) {
          ++summary.failures;
          if (summary.first_failure.empty()) {
            summary.first_failure = absl::StrCat("n = ", n, ", ",
                                                 inst->description, ": ",
                                                 eq->ToString());
          }
        }
      }
    }
    report.builders.push_back(std::move(summary));
  }
  report.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

}  // namespace omt
