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

#ifndef STORESHARE_ALLOCATION_HPP
#define STORESHARE_ALLOCATION_HPP

#include <cstddef>
#include <optional>
#include <span>

#include "storeshare/cost.hpp"
#include "storeshare/empirical.hpp"
#include "storeshare/fixed.hpp"
#include "storeshare/planner.hpp"
#include "storeshare/tariff.hpp"

namespace storeshare {

enum class AllocationKind {
  kPooledRealized,   // pre-owned storage pooled for one day (xi)
  kJointExpected,    // joint investment, expected cost (zeta)
  kJointRealizedDay  // joint investment, one realized day (rho)
};

const char* to_string(AllocationKind kind);

struct AllocationResult {
  MoneyVector shares;
  AllocationKind kind = AllocationKind::kPooledRealized;
  std::optional<std::size_t> day_index;
  std::optional<Date> day;
  std::optional<Vector<Rational>> beta;  // kJointRealizedDay only

  Money total() const { return shares.sum(); }
};

/// Splits the grand coalition's realized cost of pooled storage. When the
/// pool is exhausted (x_N >= C_N, ties included) each consumer pays
/// capital + peak*(x_i - C_i) + off_peak*C_i, otherwise capital +
/// off_peak*x_i. Shares may be negative: a consumer whose spare capacity
/// absorbed someone else's overflow gets paid for it.
AllocationResult allocation_scenario1(std::span<const Fixed> x,
                                      const CapacityProfile& caps,
                                      const Tariff& t);

/// zeta_i = off_peak*E[x_i] + shared_capital*E[x_i | x_N >= C*_N].
/// Sums exactly to plan.grand.expected_cost.
AllocationResult allocation_scenario2_expected(const JointSample& j,
                                               const CapacityPlan& plan,
                                               const Tariff& t);

/// rho = beta * day_cost with beta = zeta / sum(zeta).
AllocationResult allocation_scenario2_realized(const MoneyVector& zeta,
                                               const Money& day_cost);

/// Realized cost of the grand coalition's joint storage on one day.
Money joint_realized_cost(std::span<const Fixed> x, const CapacityPlan& plan,
                          const Tariff& t);

/// Per-consumer arithmetic mean of the history.
MoneyVector average_realized_allocation(std::span<const AllocationResult> history);

struct BenefitReport {
  Money total;
  MoneyVector per_consumer;
  AllocationKind kind = AllocationKind::kPooledRealized;
};

/// Closed-form benefit of pooling on one day. Total is
///   peak*(sum (x_i-C_i)^+ - (x_N-C_N)^+) + off_peak*(sum min(C_i,x_i) - min(C_N,x_N));
/// consumer i gains arbitrage*(C_i-x_i)^+ when the pool is exhausted and
/// arbitrage*(x_i-C_i)^+ otherwise.
BenefitReport benefit_scenario1(std::span<const Fixed> x,
                                const CapacityProfile& caps, const Tariff& t);

/// Closed-form benefit of joint investment. Total is
///   capital*(sum E[x_i|x_i>=C*_i] - E[x_N|x_N>=C*_N]);
/// consumer i gains capital*(E[x_i|x_i>=C*_i] - E[x_i|x_N>=C*_N]).
BenefitReport benefit_scenario2(const JointSample& j, const CapacityPlan& plan,
                                const Tariff& t);

}  // namespace storeshare

#endif  // STORESHARE_ALLOCATION_HPP
