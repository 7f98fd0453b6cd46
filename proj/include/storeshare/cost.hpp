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

#ifndef STORESHARE_COST_HPP
#define STORESHARE_COST_HPP

#include <span>
#include <utility>

#include "storeshare/coalition.hpp"
#include "storeshare/empirical.hpp"
#include "storeshare/fixed.hpp"
#include "storeshare/tariff.hpp"

namespace storeshare {

/// Daily cost of serving peak demand `demand` with storage `capacity`:
///
///   capital * C + peak * (x - C)^+ + off_peak * min(C, x)
///
/// Works for any ordered field-like scalar (double, Rational).
template <typename Scalar>
Scalar storage_cost(const Scalar& demand, const Scalar& capacity,
                    const Scalar& capital, const PriceSet<Scalar>& prices) {
  const Scalar shortfall = positive_part<Scalar>(demand - capacity);
  const Scalar stored = demand < capacity ? demand : capacity;
  return capital * capacity + prices.peak * shortfall +
         prices.off_peak * stored;
}

/// Exact realized cost for fixed-point inputs.
Money realized_cost(Fixed demand, Fixed capacity, Fixed capital,
                    const Tariff& t);

/// Per-consumer installed capacities in kWh, all nonnegative.
class CapacityProfile {
 public:
  explicit CapacityProfile(Vector<Fixed> capacities);
  CapacityProfile(std::initializer_list<Fixed> capacities);

  int consumers() const { return static_cast<int>(capacities_.size()); }
  Fixed operator[](int i) const { return capacities_(i); }
  const Vector<Fixed>& values() const { return capacities_; }

  /// C_S, the sum over members.
  Fixed total(Coalition s) const;

 private:
  Vector<Fixed> capacities_;
};

/// u(S): realized cost of coalition S pooling its installed capacities on a
/// day with per-consumer peak consumption `x`. Capital is charged at each
/// member's own rate.
Money coalition_realized_cost_u(Coalition s, std::span<const Fixed> x,
                                const CapacityProfile& caps, const Tariff& t);

/// Expected cost under the empirical measure of `d`: the plain sample mean
/// of realized_cost over every sample point.
Money expected_cost(const EmpiricalDistribution& d, Fixed capacity,
                    Fixed capital, const Tariff& t);

/// Same expectation at an arbitrary rational capacity, evaluated in
/// O(log n) from the distribution's prefix sums:
///
///   capital * C + off_peak * E[x] + arbitrage * E[(x - C)^+]
Money expected_cost_at(const EmpiricalDistribution& d, const Rational& capacity,
                       Fixed capital, const Tariff& t);

/// v(S) together with the minimizing capacity C*_S, for joint storage bought
/// at the shared capital cost.
std::pair<Money, Fixed> coalition_expected_value_v(Coalition s,
                                                   const JointSample& joint,
                                                   const Tariff& t);

}  // namespace storeshare

#endif  // STORESHARE_COST_HPP
