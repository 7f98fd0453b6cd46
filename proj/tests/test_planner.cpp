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

#include <random>

#include "doctest.h"
#include "storeshare/cost.hpp"
#include "storeshare/errors.hpp"
#include "storeshare/planner.hpp"
#include "support.hpp"

using namespace storeshare;
using namespace storeshare::testing;

TEST_CASE("optimal capacity is the inf quantile at gamma") {
  const Tariff t = default_tariff();
  const auto& o = oracle()["quantile_1234"];
  const EmpiricalDistribution d({1, 2, 3, 4});
  CHECK(optimal_capacity(d, t, 15).to_rational() == oracle_q(o["q_gamma"]));
  CHECK(optimal_capacity(d, t, 15) == Fixed(3));
  CHECK(optimal_capacity(d, t, 15).to_rational() == oracle_q(o["direct_min_capacity"]));
  for (int cap : {0, 5, 15, 34}) CHECK(optimal_capacity(EmpiricalDistribution({4}), t, cap) == Fixed(4));
  CHECK(optimal_capacity(d, t, 35) == Fixed(0));
}

TEST_CASE("closed-form optimal expected cost") {
  const Tariff t = default_tariff();
  const EmpiricalDistribution four({4, 4, 4, 4});
  CHECK(optimal_expected_cost(four, t) == oracle_q(oracle()["degenerate_4"]));
  CHECK(optimal_expected_cost(four, t) == 140);

  // Capital cost equal to the arbitrage margin: storage is worthless.
  const Tariff edge(55, 20, 35);
  const EmpiricalDistribution d({1, 2, 6});
  const CoalitionOptimum o = optimize(d, edge, 35);
  CHECK(o.capacity == Fixed(0));
  CHECK(o.expected_cost == 55 * d.mean());
  CHECK(o.direct_cost == 55 * d.mean());

  const auto& tp = oracle()["two_point_0_10"];
  const CoalitionOptimum two = optimize(EmpiricalDistribution({0, 10}), t, 15);
  CHECK(two.capacity.to_rational() == oracle_q(tp["capacity"]));
  CHECK(two.expected_cost == oracle_q(tp["closed"]));
  CHECK(two.direct_cost == oracle_q(tp["direct"]));
  CHECK(two.expected_cost == two.direct_cost);
  CHECK(two.tolerance == 0);
}

TEST_CASE("boundary flag when every sample must be covered") {
  const Tariff t(55, 20, 0);
  const CoalitionOptimum o = optimize(EmpiricalDistribution({1, 2, 7}), t, 0);
  CHECK(o.boundary);
  CHECK(o.capacity == Fixed(7));
  CHECK_FALSE(optimize(EmpiricalDistribution({1, 2, 7}), default_tariff(), 15).boundary);
}

TEST_CASE("inf quantile minimizes the empirical expected cost") {
  const Tariff t = default_tariff();
  std::mt19937_64 rng(17);
  for (int k = 0; k < 60; ++k) {
    std::vector<Fixed> s;
    for (int i = 0; i < 25; ++i) s.push_back(random_fixed(rng, k % 2 ? 3 : 30));
    const EmpiricalDistribution d(s);
    const CoalitionOptimum o = optimize(d, t, 15);
    CHECK(o.direct_cost == expected_cost(d, o.capacity, 15, t));
    // Expected cost is piecewise linear with kinks at the samples.
    CHECK(o.direct_cost <= expected_cost(d, 0, 15, t));
    for (Fixed c : d.support()) CHECK(o.direct_cost <= expected_cost(d, c, 15, t));
    // The closed form never exceeds the direct value and misses it by at most the tolerance.
    CHECK(o.expected_cost <= o.direct_cost);
    CHECK(o.direct_cost - o.expected_cost <= o.tolerance);
    CHECK(o.tolerance == 35 * o.cdf_jump * (o.tail_mean - o.capacity.to_rational()));
  }
}

TEST_CASE("grid minimum stays above the optimum") {
  const Tariff t = default_tariff();
  std::mt19937_64 rng(23);
  for (int k = 0; k < 20; ++k) {
    std::vector<Fixed> s;
    for (int i = 0; i < 40; ++i) s.push_back(random_fixed(rng, 30));
    const EmpiricalDistribution d(s);
    const GridMinimum g = grid_minimum(d, t, 15);
    const CoalitionOptimum o = optimize(d, t, 15);
    CHECK(g.cost >= o.direct_cost);
    CHECK(o.expected_cost - g.cost <= 35 * (g.step + o.cdf_jump));
  }
  CHECK_THROWS_AS(grid_minimum(EmpiricalDistribution({1}), t, 15, 1), std::invalid_argument);
}

TEST_CASE("coalition optimum on independent consumers matches the oracle") {
  const Tariff t = default_tariff();
  for (const char* name : {"independent2", "independent3", "uniform12"}) {
    CAPTURE(name);
    const auto& o = oracle()[name];
    const JointSample j(std::string(name) == "independent2"   ? independent({{1, 3}, {2, 6}})
                        : std::string(name) == "independent3" ? independent({{1, 3}, {2, 6}, {0, 5}})
                                                              : independent({{1, 2}, {1, 2}}));
    for (std::uint32_t m = 1; m < (1u << j.consumers()); ++m) {
      const auto& row = o["values"][std::to_string(m)];
      const CoalitionOptimum opt = optimize_coalition(j, Coalition(m), t);
      CHECK(opt.capacity.to_rational() == oracle_q(row["capacity"]));
      CHECK(opt.expected_cost == oracle_q(row["closed"]));
      CHECK(opt.direct_cost == oracle_q(row["direct"]));
      CHECK(optimal_expected_cost(j, Coalition(m), t) == opt.expected_cost);
      const auto [v, c] = coalition_expected_value_v(Coalition(m), j, t);
      CHECK(v == opt.expected_cost);
      CHECK(c == opt.capacity);
    }
  }
}

TEST_CASE("capacity plan") {
  const Tariff t = default_tariff();
  const JointSample j(independent({{1, 3}, {2, 6}}));
  const CapacityPlan plan = plan_capacities(j, t);
  CHECK(plan.gamma == q("4/7"));
  CHECK(plan.consumers() == 2);
  CHECK(plan.individual_capacities()(0) == Fixed(3));
  CHECK(plan.individual_costs()(1) == 170);
  CHECK(plan.grand.capacity == Fixed(7));
  CHECK_FALSE(plan.no_storage());
  CHECK(plan_capacities(j, Tariff(55, 20, 35)).no_storage());
}
