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

#ifndef OMT_RATIONAL_H_
#define OMT_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "absl/status/statusor.h"

namespace omt {

// All model data (coefficients, right-hand sides, bounds, assignment values)
// are exact rationals. mpq_class keeps values in lowest terms after every
// arithmetic operation but not after construction from a numerator and
// denominator; model types canonicalize such values on entry.
using Rational = mpq_class;

// Parses "12", "-3", "0.125", "2.5e-3", "1/3" or "-7/4" exactly.
// Decimal literals are converted without rounding.
absl::StatusOr<Rational> ParseRational(std::string_view text);

// True iff the decimal expansion of `value` terminates (denominator has no
// prime factors other than 2 and 5).
bool HasFiniteDecimal(const Rational& value);

// Renders `value` as a finite decimal when possible ("0.125", "-3"), and as
// "p/q" otherwise. ParseRational(FormatRational(v)) == v for every v.
std::string FormatRational(const Rational& value);

bool IsInteger(const Rational& value);

Rational Abs(const Rational& value);

}  // namespace omt

#endif  // OMT_RATIONAL_H_
