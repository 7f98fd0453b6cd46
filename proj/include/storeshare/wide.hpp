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

#ifndef STORESHARE_WIDE_HPP
#define STORESHARE_WIDE_HPP

#include <cstdint>

#include "storeshare/fixed.hpp"

namespace storeshare {

/// num / den for a 128-bit numerator.
inline Rational rational_from_wide(__int128 num, std::int64_t den) {
  if (num >= INT64_MIN && num <= INT64_MAX) {
    return Rational(static_cast<std::int64_t>(num), den);
  }
  const bool negative = num < 0;
  const unsigned __int128 mag =
      negative ? static_cast<unsigned __int128>(-(num + 1)) + 1
               : static_cast<unsigned __int128>(num);
  boost::multiprecision::mpz_int big(static_cast<std::uint64_t>(mag >> 64));
  big <<= 64;
  big += static_cast<std::uint64_t>(mag);
  if (negative) big = -big;
  return Rational(big) / Rational(den);
}

}  // namespace storeshare

#endif  // STORESHARE_WIDE_HPP
