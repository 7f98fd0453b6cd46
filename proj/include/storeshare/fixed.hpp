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

#ifndef STORESHARE_FIXED_HPP
#define STORESHARE_FIXED_HPP

// Scalar types shared by the whole library.
//
//  * Fixed    - decimal fixed point with four fractional digits. Every input
//               quantity (kWh, cents per kWh) is quantized to this grid.
//  * Rational - exact rational number. Every money amount, probability and
//               expectation is kept exact, so budget-balance identities and
//               core checks compare with ==, not with a tolerance.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace storeshare {

using Rational = boost::multiprecision::number<
    boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

/// Money in cents. Exact.
using Money = Rational;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using MoneyVector = Vector<Money>;

class Fixed {
 public:
  static constexpr std::int64_t kScale = 10000;
  static constexpr int kDigits = 4;

  constexpr Fixed() = default;
  constexpr Fixed(int units) : raw_(std::int64_t{units} * kScale) {}  // NOLINT

  static constexpr Fixed from_raw(std::int64_t raw) {
    Fixed f;
    f.raw_ = raw;
    return f;
  }
  /// Rounds half away from zero onto the 1e-4 grid.
  static Fixed from_double(double value);
  /// Parses "12", "-3.5", "0.0001". More than four fractional digits or
  /// trailing garbage throws std::invalid_argument.
  static Fixed parse(std::string_view text);

  constexpr std::int64_t raw() const { return raw_; }
  double to_double() const { return static_cast<double>(raw_) / kScale; }
  Rational to_rational() const { return Rational(raw_, kScale); }
  explicit operator double() const { return to_double(); }
  explicit operator Rational() const { return to_rational(); }

  std::string to_string() const;

  constexpr auto operator<=>(const Fixed&) const = default;

  constexpr Fixed& operator+=(Fixed o) {
    raw_ += o.raw_;
    return *this;
  }
  constexpr Fixed& operator-=(Fixed o) {
    raw_ -= o.raw_;
    return *this;
  }
  friend constexpr Fixed operator+(Fixed a, Fixed b) { return a += b; }
  friend constexpr Fixed operator-(Fixed a, Fixed b) { return a -= b; }
  friend constexpr Fixed operator-(Fixed a) { return from_raw(-a.raw_); }
  friend constexpr Fixed operator*(std::int64_t k, Fixed a) {
    return from_raw(k * a.raw_);
  }

 private:
  std::int64_t raw_ = 0;
};

/// Largest Fixed value not greater than q.
inline std::ostream& operator<<(std::ostream& os, Fixed f) { return os << f.to_string(); }

Fixed floor_to_fixed(const Rational& q);

/// Nearest double to an exact rational.
double to_double(const Rational& q);

/// Decimal rendering of an exact rational, rounded half away from zero.
std::string format_decimal(const Rational& q, int digits);

/// (a)^+ for any ordered scalar.
template <typename Scalar>
Scalar positive_part(const Scalar& a) {
  return a > Scalar(0) ? a : Scalar(0);
}

}  // namespace storeshare

namespace Eigen {

template <>
struct NumTraits<storeshare::Fixed> : GenericNumTraits<std::int64_t> {
  using Real = storeshare::Fixed;
  using NonInteger = storeshare::Fixed;
  using Nested = storeshare::Fixed;
  using Literal = storeshare::Fixed;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 1,
    MulCost = 1
  };
};

}  // namespace Eigen

#endif  // STORESHARE_FIXED_HPP
