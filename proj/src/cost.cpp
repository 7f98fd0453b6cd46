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

#include "storeshare/cost.hpp"

#include <algorithm>
#include <stdexcept>

#include "storeshare/planner.hpp"
#include "storeshare/wide.hpp"

namespace storeshare {

namespace {

constexpr std::int64_t kMoneyScale = Fixed::kScale * Fixed::kScale;

// Numerator of realized_cost over kMoneyScale.
__int128 realized_cost_scaled(Fixed demand, Fixed capacity, Fixed capital,
                              const Tariff& t) {
  const Fixed shortfall = positive_part(demand - capacity);
  const Fixed stored = std::min(demand, capacity);
  return static_cast<__int128>(capital.raw()) * capacity.raw() +
         static_cast<__int128>(t.peak_price().raw()) * shortfall.raw() +
         static_cast<__int128>(t.off_peak_price().raw()) * stored.raw();
}

}  // namespace

Money realized_cost(Fixed demand, Fixed capacity, Fixed capital,
                    const Tariff& t) {
  if (demand < Fixed(0) || capacity < Fixed(0)) {
    throw std::invalid_argument("demand and capacity must be nonnegative");
  }
  return rational_from_wide(realized_cost_scaled(demand, capacity, capital, t),
                            kMoneyScale);
}

CapacityProfile::CapacityProfile(Vector<Fixed> capacities)
    : capacities_(std::move(capacities)) {
  for (Eigen::Index i = 0; i < capacities_.size(); ++i) {
    if (capacities_(i) < Fixed(0)) {
      throw std::invalid_argument("capacity of consumer " + std::to_string(i) +
                                  " is negative");
    }
  }
}

CapacityProfile::CapacityProfile(std::initializer_list<Fixed> capacities)
    : CapacityProfile([&] {
        Vector<Fixed> v(static_cast<Eigen::Index>(capacities.size()));
        Eigen::Index k = 0;
        for (Fixed c : capacities) v(k++) = c;
        return v;
      }()) {}

Fixed CapacityProfile::total(Coalition s) const {
  Fixed sum;
  for (int i : s.members()) sum += capacities_(i);
  return sum;
}

Money coalition_realized_cost_u(Coalition s, std::span<const Fixed> x,
                                const CapacityProfile& caps, const Tariff& t) {
  const int n = caps.consumers();
  if (static_cast<int>(x.size()) != n) {
    throw DimensionMismatch("consumption vector has " +
                            std::to_string(x.size()) + " entries, expected " +
                            std::to_string(n));
  }
  require_coalition(s, n);
  __int128 capital = 0;
  Fixed demand;
  Fixed capacity;
  for (int i : s.members()) {
    capital += static_cast<__int128>(
                   t.individual_capital_cost(static_cast<std::size_t>(i)).raw()) *
               caps[i].raw();
    demand += x[static_cast<std::size_t>(i)];
    capacity += caps[i];
  }
  // Capital enters per member; the energy terms act on the pooled totals.
  const __int128 energy = realized_cost_scaled(demand, capacity, Fixed(0), t);
  return rational_from_wide(capital + energy, kMoneyScale);
}

Money expected_cost(const EmpiricalDistribution& d, Fixed capacity,
                    Fixed capital, const Tariff& t) {
  __int128 total = 0;
  for (Fixed x : d.support()) {
    total += realized_cost_scaled(x, capacity, capital, t);
  }
  return rational_from_wide(total, kMoneyScale) /
         Rational(static_cast<std::int64_t>(d.size()));
}

Money expected_cost_at(const EmpiricalDistribution& d, const Rational& capacity,
                       Fixed capital, const Tariff& t) {
  return capital.to_rational() * capacity +
         t.off_peak_price().to_rational() * d.mean() +
         t.arbitrage_price().to_rational() * d.expected_excess(capacity);
}

std::pair<Money, Fixed> coalition_expected_value_v(Coalition s,
                                                   const JointSample& joint,
                                                   const Tariff& t) {
  const CoalitionOptimum opt = optimize_coalition(joint, s, t);
  return {opt.expected_cost, opt.capacity};
}

}  // namespace storeshare
