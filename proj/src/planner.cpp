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

#include "storeshare/planner.hpp"

#include <stdexcept>

#include "storeshare/cost.hpp"

namespace storeshare {

Fixed optimal_capacity(const EmpiricalDistribution& d, const Tariff& t,
                       Fixed capital) {
  return d.quantile(t.arbitrage_constant(capital));
}

CoalitionOptimum optimize(const EmpiricalDistribution& d, const Tariff& t,
                          Fixed capital) {
  const Rational gamma = t.arbitrage_constant(capital);
  CoalitionOptimum opt;
  opt.capacity = d.quantile(gamma);
  opt.mean = d.mean();
  opt.tail_mean = d.tail_mean(opt.capacity);
  opt.expected_cost = t.off_peak_price().to_rational() * opt.mean +
                      capital.to_rational() * opt.tail_mean;
  opt.direct_cost = expected_cost(d, opt.capacity, capital, t);
  opt.cdf_jump = d.jump_at(opt.capacity);
  opt.quantile_gap = opt.cdf_jump * (opt.tail_mean - opt.capacity.to_rational());
  opt.tolerance = t.arbitrage_price().to_rational() * opt.quantile_gap;
  opt.boundary = gamma == 1;
  return opt;
}

CoalitionOptimum optimize_coalition(const JointSample& j, Coalition s,
                                    const Tariff& t) {
  return optimize(aggregate(j, s), t, t.shared_capital_cost());
}

Money optimal_expected_cost(const EmpiricalDistribution& d, const Tariff& t) {
  return optimize(d, t, t.shared_capital_cost()).expected_cost;
}

Money optimal_expected_cost(const JointSample& j, Coalition s,
                            const Tariff& t) {
  return optimize_coalition(j, s, t).expected_cost;
}

Vector<Fixed> CapacityPlan::individual_capacities() const {
  Vector<Fixed> out(consumers());
  for (int i = 0; i < consumers(); ++i) {
    out(i) = individual[static_cast<std::size_t>(i)].capacity;
  }
  return out;
}

MoneyVector CapacityPlan::individual_costs() const {
  MoneyVector out(consumers());
  for (int i = 0; i < consumers(); ++i) {
    out(i) = individual[static_cast<std::size_t>(i)].expected_cost;
  }
  return out;
}

CapacityPlan plan_capacities(const JointSample& j, const Tariff& t) {
  if (j.consumers() == 0 || j.days() == 0) throw EmptyDistribution();
  CapacityPlan plan;
  plan.gamma = t.shared_arbitrage_constant();
  plan.individual.reserve(static_cast<std::size_t>(j.consumers()));
  for (int i = 0; i < j.consumers(); ++i) {
    plan.individual.push_back(
        optimize_coalition(j, Coalition::singleton(i), t));
  }
  plan.grand = optimize_coalition(j, Coalition::grand(j.consumers()), t);
  return plan;
}

GridMinimum grid_minimum(const EmpiricalDistribution& d, const Tariff& t,
                         Fixed capital, int points) {
  if (points < 2) throw std::invalid_argument("grid needs at least 2 points");
  const Rational top = d.max().to_rational();
  GridMinimum best;
  best.step = top / Rational(points - 1);
  for (int k = 0; k < points; ++k) {
    const Rational c = best.step * Rational(k);
    const Money cost = expected_cost_at(d, c, capital, t);
    if (k == 0 || cost < best.cost) {
      best.cost = cost;
      best.capacity = c;
    }
  }
  return best;
}

}  // namespace storeshare
