// Copyright 2026 The storeshare Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "storeshare/fixed.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace storeshare {

namespace {

using boost::multiprecision::mpz_int;

mpz_int floor_div(const mpz_int& num, const mpz_int& den) {
  mpz_int q = num / den;  // truncates toward zero
  if ((num % den != 0) && ((num < 0) != (den < 0))) q -= 1;
  return q;
}

mpz_int pow10(int digits) {
  mpz_int p = 1;
  for (int i = 0; i < digits; ++i) p *= 10;
  return p;
}

}  // namespace

Fixed Fixed::from_double(double value) {
  const double scaled = std::round(value * static_cast<double>(kScale));
  if (!std::isfinite(scaled) ||
      std::abs(scaled) > static_cast<double>(std::numeric_limits<std::int64_t>::max() / 2)) {
    throw std::invalid_argument("value out of fixed-point range");
  }
  return from_raw(static_cast<std::int64_t>(scaled));
}

Fixed Fixed::parse(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("not a decimal with at most 4 fraction digits: '" +
                                std::string(text) + "'");
  };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::int64_t whole = 0;
  std::int64_t frac = 0;
  int frac_digits = 0;
  bool any_digit = false;
  for (; pos < text.size() && text[pos] >= '0' && text[pos] <= '9'; ++pos) {
    whole = whole * 10 + (text[pos] - '0');
    if (whole > std::numeric_limits<std::int64_t>::max() / kScale / 10) fail();
    any_digit = true;
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    for (; pos < text.size() && text[pos] >= '0' && text[pos] <= '9'; ++pos) {
      if (++frac_digits > kDigits) fail();
      frac = frac * 10 + (text[pos] - '0');
      any_digit = true;
    }
  }
  if (!any_digit || pos != text.size()) fail();
  for (int d = frac_digits; d < kDigits; ++d) frac *= 10;
  const std::int64_t raw = whole * kScale + frac;
  return from_raw(negative ? -raw : raw);
}

std::string Fixed::to_string() const {
  return format_decimal(to_rational(), kDigits);
}

Fixed floor_to_fixed(const Rational& q) {
  const mpz_int scaled = floor_div(
      boost::multiprecision::numerator(q) * Fixed::kScale,
      boost::multiprecision::denominator(q));
  return Fixed::from_raw(scaled.convert_to<std::int64_t>());
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string format_decimal(const Rational& q, int digits) {
  const mpz_int scale = pow10(digits);
  const mpz_int num = boost::multiprecision::numerator(q);
  const mpz_int den = boost::multiprecision::denominator(q);
  const bool negative = num < 0;
  const mpz_int abs_num = negative ? mpz_int(-num) : num;
  // floor(|q| * 10^digits + 1/2)
  const mpz_int rounded = floor_div(2 * abs_num * scale + den, 2 * den);
  std::string body = rounded.str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  if (negative && rounded != 0) body.insert(0, "-");
  return body;
}

}  // namespace storeshare
