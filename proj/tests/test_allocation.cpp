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
#include "storeshare/allocation.hpp"
#include "storeshare/errors.hpp"
#include "support.hpp"

using namespace storeshare;
using namespace storeshare::testing;

namespace {

MoneyVector money(std::initializer_list<int> v) {
  MoneyVector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index k = 0;
  for (int x : v) out(k++) = x;
  return out;
}

}  // namespace

TEST_CASE("pooled allocation, saturated branch") {
  const Tariff t = default_tariff();
  const std::vector<Fixed> x{3, 1};
  const AllocationResult r = allocation_scenario1(x, CapacityProfile{2, 2}, t);
  const auto& o = oracle()["pooled"]["xi"];
  CHECK(r.shares(0) == oracle_q(o[0]));
  CHECK(r.shares(1) == oracle_q(o[1]));
  CHECK(r.shares == money({125, 15}));
  CHECK(r.total() == 140);
  CHECK(r.kind == AllocationKind::kPooledRealized);
}

TEST_CASE("pooled allocation, slack branch") {
  const std::vector<Fixed> x{1, 1};
  const AllocationResult r = allocation_scenario1(x, CapacityProfile{2, 2}, default_tariff());
  CHECK(r.shares == money({50, 50}));
  CHECK(r.shares(0) == oracle_q(oracle()["pooled"]["xi_slack_branch"][0]));
}

TEST_CASE("pooled allocation for one consumer is its own cost") {
  const Tariff t = default_tariff();
  for (int x : {0, 2, 9}) {
    const std::vector<Fixed> v{x};
    CHECK(allocation_scenario1(v, CapacityProfile{4}, t).shares(0) ==
          realized_cost(x, 4, 15, t));
  }
  const std::vector<Fixed> none;
  CHECK_THROWS_AS(allocation_scenario1(none, CapacityProfile(Vector<Fixed>()), t), EmptyCoalition);
}

TEST_CASE("pooled allocation balances the budget") {
  const Tariff t(55, 20, 15, {15, 10, 12, 14, 0});
  std::mt19937_64 rng(4);
  for (int k = 0; k < 200; ++k) {
    std::vector<Fixed> x;
    Vector<Fixed> c(5);
    for (int i = 0; i < 5; ++i) {
      x.push_back(random_fixed(rng, 10));
      c(i) = random_fixed(rng, 10);
    }
    const CapacityProfile caps(c);
    CHECK(allocation_scenario1(x, caps, t).total() ==
          coalition_realized_cost_u(Coalition::grand(5), x, caps, t));
  }
}

TEST_CASE("expected-cost allocation") {
  const Tariff t = default_tariff();
  const JointSample twins(matrix({{2, 2}, {2, 2}, {2, 2}}));
  const CapacityPlan plan = plan_capacities(twins, t);
  CHECK(plan.grand.capacity == Fixed(4));
  const AllocationResult z = allocation_scenario2_expected(twins, plan, t);
  CHECK(z.shares == money({70, 70}));
  CHECK(z.total() == plan.grand.expected_cost);

  const JointSample one(matrix({{3}, {1}, {8}}));
  const CapacityPlan p1 = plan_capacities(one, t);
  CHECK(allocation_scenario2_expected(one, p1, t).shares(0) == p1.individual[0].expected_cost);

  for (const char* name : {"independent2", "independent3"}) {
    CAPTURE(name);
    const JointSample j(std::string(name) == "independent2" ? independent({{1, 3}, {2, 6}})
                                                            : independent({{1, 3}, {2, 6}, {0, 5}}));
    const CapacityPlan p = plan_capacities(j, t);
    const AllocationResult r = allocation_scenario2_expected(j, p, t);
    const auto& o = oracle()[name]["zeta"];
    for (int i = 0; i < j.consumers(); ++i) CHECK(r.shares(i) == oracle_q(o[static_cast<std::size_t>(i)]));
    CHECK(r.total() == p.grand.expected_cost);
  }
}

TEST_CASE("realized-day split in proportion to expected shares") {
  AllocationResult r = allocation_scenario2_realized(money({100, 300}), 200);
  CHECK(r.shares == money({50, 150}));
  CHECK(r.kind == AllocationKind::kJointRealizedDay);
  REQUIRE(r.beta);
  CHECK((*r.beta)(0) == q("1/4"));
  CHECK(allocation_scenario2_realized(money({100, 300}), 0).shares == money({0, 0}));
  CHECK(allocation_scenario2_realized(money({7, 7, 7, 7}), 100).shares == money({25, 25, 25, 25}));
  CHECK_THROWS_AS(allocation_scenario2_realized(money({0, 0}), 10), ZeroTotalExpectedCost);
}

TEST_CASE("joint realized cost uses the grand capacity") {
  const Tariff t = default_tariff();
  const JointSample j(independent({{1, 3}, {2, 6}}));
  const CapacityPlan plan = plan_capacities(j, t);
  const std::vector<Fixed> x{3, 6};
  CHECK(joint_realized_cost(x, plan, t) == realized_cost(9, 7, 15, t));
}

TEST_CASE("average of realized allocations") {
  std::vector<AllocationResult> days(2);
  days[0].shares = money({10, 20});
  days[1].shares = money({30, 40});
  CHECK(average_realized_allocation(days) == money({20, 30}));
  CHECK(average_realized_allocation(std::span(days).first(1)) == money({10, 20}));
  CHECK_THROWS_AS(average_realized_allocation({}), EmptyHistory);
  days[1].shares = money({1});
  CHECK_THROWS_AS(average_realized_allocation(days), DimensionMismatch);
}

TEST_CASE("pooled benefit, both routes") {
  const Tariff t = default_tariff();
  const std::vector<Fixed> x{3, 1};
  const CapacityProfile caps{2, 2};
  const BenefitReport b = benefit_scenario1(x, caps, t);
  CHECK(b.total == oracle_q(oracle()["pooled"]["benefit_total"]));
  CHECK(b.total == 35);
  CHECK(b.per_consumer == money({0, 35}));
  const Money own = coalition_realized_cost_u({0}, x, caps, t) + coalition_realized_cost_u({1}, x, caps, t);
  CHECK(own - coalition_realized_cost_u({0, 1}, x, caps, t) == b.total);

  const std::vector<Fixed> exact{2, 2};
  CHECK(benefit_scenario1(exact, caps, t).total == 0);
  CHECK(benefit_scenario1(exact, caps, t).per_consumer == money({0, 0}));

  const std::vector<Fixed> y{5, 0};
  const BenefitReport d = benefit_scenario1(y, CapacityProfile{2, 3}, t);
  CHECK(d.total == oracle_q(oracle()["pooled"]["benefit_disjoint"]));
  CHECK(d.total == 105);
  CHECK(d.per_consumer.sum() == d.total);
}

TEST_CASE("joint benefit, both routes") {
  const Tariff t = default_tariff();
  for (const char* name : {"independent2", "independent3"}) {
    CAPTURE(name);
    const JointSample j(std::string(name) == "independent2" ? independent({{1, 3}, {2, 6}})
                                                            : independent({{1, 3}, {2, 6}, {0, 5}}));
    const CapacityPlan p = plan_capacities(j, t);
    const BenefitReport b = benefit_scenario2(j, p, t);
    const auto& o = oracle()[name];
    CHECK(b.total == oracle_q(o["benefit_total"]));
    CHECK(b.total > 0);
    for (int i = 0; i < j.consumers(); ++i)
      CHECK(b.per_consumer(i) == oracle_q(o["benefit"][static_cast<std::size_t>(i)]));
    CHECK(b.per_consumer.sum() == b.total);
  }

  const JointSample one(matrix({{3}, {1}, {8}}));
  CHECK(benefit_scenario2(one, plan_capacities(one, t), t).total == 0);

  std::mt19937_64 rng(8);
  PeakMatrix col = random_matrix(rng, 60, 1);
  PeakMatrix dup(60, 2);
  dup << col, col;
  const JointSample same(dup);
  const CapacityPlan p = plan_capacities(same, t);
  const BenefitReport b = benefit_scenario2(same, p, t);
  const Money eps = p.individual[0].tolerance + p.individual[1].tolerance + p.grand.tolerance;
  CHECK(abs(b.total) <= eps);
}
