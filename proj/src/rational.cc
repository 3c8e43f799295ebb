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

#include "omt/rational.h"

#include <cctype>
#include <string>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace omt {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

absl::StatusOr<Rational> ParseDecimal(std::string_view text) {
  std::string_view mantissa = text;
  long exponent = 0;
  if (const size_t e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    std::string_view exp_text = text.substr(e + 1);
    bool negative_exp = false;
    if (!exp_text.empty() && (exp_text[0] == '+' || exp_text[0] == '-')) {
      negative_exp = exp_text[0] == '-';
      exp_text.remove_prefix(1);
    }
    if (!AllDigits(exp_text) || exp_text.size() > 6) {
      return absl::InvalidArgumentError(
          absl::StrCat("malformed exponent in number '", std::string(text), "'"));
    }
    exponent = std::stol(std::string(exp_text));
    if (negative_exp) exponent = -exponent;
  }
  std::string digits;
  std::string_view int_part = mantissa;
  std::string_view frac_part;
  if (const size_t dot = mantissa.find('.'); dot != std::string_view::npos) {
    int_part = mantissa.substr(0, dot);
    frac_part = mantissa.substr(dot + 1);
  }
  if ((int_part.empty() && frac_part.empty()) ||
      (!int_part.empty() && !AllDigits(int_part)) ||
      (!frac_part.empty() && !AllDigits(frac_part))) {
    return absl::InvalidArgumentError(
        absl::StrCat("malformed number '", std::string(text), "'"));
  }
  digits = absl::StrCat(std::string(int_part), std::string(frac_part));
  exponent -= static_cast<long>(frac_part.size());
  mpz_class numerator(digits.empty() ? std::string("0") : digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(
                                           exponent < 0 ? -exponent : exponent));
  Rational result;
  if (exponent >= 0) {
    result = Rational(numerator * scale);
  } else {
    result = Rational(numerator, scale);
    result.canonicalize();
  }
  return result;
}

}  // namespace

absl::StatusOr<Rational> ParseRational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
    negative = text[0] == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) return absl::InvalidArgumentError("empty number");
  Rational value;
  if (const size_t slash = text.find('/'); slash != std::string_view::npos) {
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = text.substr(slash + 1);
    if (!AllDigits(num) || !AllDigits(den)) {
      return absl::InvalidArgumentError(
          absl::StrCat("malformed fraction '", std::string(text), "'"));
    }
    mpz_class d(std::string(den), 10);
    if (d == 0) return absl::InvalidArgumentError("zero denominator");
    value = Rational(mpz_class(std::string(num), 10), d);
    value.canonicalize();
  } else {
    absl::StatusOr<Rational> decimal = ParseDecimal(text);
    if (!decimal.ok()) return decimal.status();
    value = *decimal;
  }
  if (negative) value = -value;
  return value;
}

bool HasFiniteDecimal(const Rational& value) {
  Rational reduced = value;
  reduced.canonicalize();
  mpz_class den = reduced.get_den();
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) den /= 2;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) den /= 5;
  return den == 1;
}

std::string FormatRational(const Rational& input) {
  Rational value = input;
  value.canonicalize();
  if (value.get_den() == 1) return value.get_num().get_str();
  if (!HasFiniteDecimal(value)) return value.get_str();
  // Scale by 10^k until integral; k is bounded by max(power of 2, power of 5).
  const mpz_class& den = value.get_den();
  size_t places = 0;
  mpz_class scale = 1;
  while (true) {
    ++places;
    scale *= 10;
    if (mpz_divisible_p(scale.get_mpz_t(), den.get_mpz_t())) break;
  }
  mpz_class scaled = Abs(value).get_num() * (scale / den);
  std::string digits = scaled.get_str();
  if (digits.size() <= places) {
    digits.insert(0, places + 1 - digits.size(), '0');
  }
  digits.insert(digits.size() - places, ".");
  return value < 0 ? absl::StrCat("-", digits) : digits;
}

bool IsInteger(const Rational& value) {
  return mpz_divisible_p(value.get_num_mpz_t(), value.get_den_mpz_t()) != 0;
}

Rational Abs(const Rational& value) { return value < 0 ? -value : value; }

}  // namespace omt
