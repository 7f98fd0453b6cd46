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

#ifndef STORESHARE_PLANNER_HPP
#define STORESHARE_PLANNER_HPP

#include <vector>

#include "storeshare/coalition.hpp"
#include "storeshare/empirical.hpp"
#include "storeshare/fixed.hpp"
#include "storeshare/tariff.hpp"

namespace storeshare {

/// Optimal storage investment for one consumer or one coalition.
///
/// The capacity is the arbitrage-constant quantile of the demand law. Under
/// a step CDF the quantile generally overshoots gamma, so the closed-form
/// cost  off_peak*E[x] + capital*E[x | x >= C*]  can sit below the direct
/// expectation E J(x, C*). The gap is bounded by `tolerance`:
///
///   0 <= direct_cost - expected_cost <= arbitrage * jump(C*) * (E[x|x>=C*] - C*)
struct CoalitionOptimum {
  Fixed capacity;
  Money expected_cost;   // closed form, the game value
  Money direct_cost;     // E J(x, capacity), the exact minimum of the expectation
  Rational mean;         // E[x]
  Rational tail_mean;    // E[x | x >= capacity]
  Rational cdf_jump;     // P(x == capacity)
  Rational quantile_gap; // kWh: cdf_jump * (tail_mean - capacity)
  Money tolerance;       // arbitrage price * quantile_gap
  bool boundary = false; // gamma == 1: capacity is the largest sample
};

/// The gamma-quantile of `d` with gamma = arbitrage_constant(capital).
Fixed optimal_capacity(const EmpiricalDistribution& d, const Tariff& t,
                       Fixed capital);

CoalitionOptimum optimize(const EmpiricalDistribution& d, const Tariff& t,
                          Fixed capital);

/// Joint investment of coalition `s` at the tariff's shared capital cost.
CoalitionOptimum optimize_coalition(const JointSample& j, Coalition s,
                                    const Tariff& t);

/// J* at the shared capital cost.
Money optimal_expected_cost(const EmpiricalDistribution& d, const Tariff& t);
Money optimal_expected_cost(const JointSample& j, Coalition s, const Tariff& t);

struct CapacityPlan {
  Rational gamma;
  std::vector<CoalitionOptimum> individual;
  CoalitionOptimum grand;

  int consumers() const { return static_cast<int>(individual.size()); }
  Vector<Fixed> individual_capacities() const;
  MoneyVector individual_costs() const;
  /// gamma == 0: capital cost equals the arbitrage margin, so nobody buys.
  bool no_storage() const { return gamma == 0; }
};

CapacityPlan plan_capacities(const JointSample& j, const Tariff& t);

/// Minimum of the expected cost over an evenly spaced grid of `points`
/// capacities spanning [0, max sample].
struct GridMinimum {
  Money cost;
  Rational capacity;
  Rational step;
};

GridMinimum grid_minimum(const EmpiricalDistribution& d, const Tariff& t,
                         Fixed capital, int points = 1000);

}  // namespace storeshare

#endif  // STORESHARE_PLANNER_HPP
