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

#include "storeshare/allocation.hpp"

#include <algorithm>

#include "storeshare/errors.hpp"

namespace storeshare {

namespace {

void require_size(std::size_t got, int expected, const char* what) {
  if (static_cast<int>(got) != expected) {
    throw DimensionMismatch(std::string(what) + " has " + std::to_string(got) +
                            " entries, expected " + std::to_string(expected));
  }
}

Fixed sum(std::span<const Fixed> x) {
  Fixed total;
  for (Fixed v : x) total += v;
  return total;
}

}  // namespace

const char* to_string(AllocationKind kind) {
  switch (kind) {
    case AllocationKind::kPooledRealized:
      return "pooled-realized";
    case AllocationKind::kJointExpected:
      return "joint-expected";
    case AllocationKind::kJointRealizedDay:
      return "joint-realized-day";
  }
  return "unknown";
}

AllocationResult allocation_scenario1(std::span<const Fixed> x,
                                      const CapacityProfile& caps,
                                      const Tariff& t) {
  const int n = caps.consumers();
  require_size(x.size(), n, "consumption vector");
  if (n == 0) throw EmptyCoalition();
  const bool exhausted = sum(x) >= caps.total(Coalition::grand(n));
  const Money peak = t.peak_price().to_rational();
  const Money off_peak = t.off_peak_price().to_rational();

  AllocationResult out;
  out.kind = AllocationKind::kPooledRealized;
  out.shares.resize(n);
  for (int i = 0; i < n; ++i) {
    const Money xi = x[static_cast<std::size_t>(i)].to_rational();
    const Money ci = caps[i].to_rational();
    const Money capital =
        t.individual_capital_cost(static_cast<std::size_t>(i)).to_rational() * ci;
    out.shares(i) = exhausted ? capital + peak * (xi - ci) + off_peak * ci
                              : capital + off_peak * xi;
  }
  return out;
}

AllocationResult allocation_scenario2_expected(const JointSample& j,
                                               const CapacityPlan& plan,
                                               const Tariff& t) {
  const int n = j.consumers();
  require_size(static_cast<std::size_t>(plan.consumers()), n, "capacity plan");
  const Coalition grand = Coalition::grand(n);
  const Money off_peak = t.off_peak_price().to_rational();
  const Money capital = t.shared_capital_cost().to_rational();

  AllocationResult out;
  out.kind = AllocationKind::kJointExpected;
  out.shares.resize(n);
  for (int i = 0; i < n; ++i) {
    const Coalition me = Coalition::singleton(i);
    out.shares(i) =
        off_peak * plan.individual[static_cast<std::size_t>(i)].mean +
        capital * conditional_mean_given_aggregate(j, me, plan.grand.capacity,
                                                   grand);
  }
  return out;
}

AllocationResult allocation_scenario2_realized(const MoneyVector& zeta,
                                               const Money& day_cost) {
  const Money total = zeta.sum();
  if (total <= 0) throw ZeroTotalExpectedCost();
  AllocationResult out;
  out.kind = AllocationKind::kJointRealizedDay;
  Vector<Rational> beta = zeta / total;
  out.shares = beta * day_cost;
  out.beta = std::move(beta);
  return out;
}

Money joint_realized_cost(std::span<const Fixed> x, const CapacityPlan& plan,
                          const Tariff& t) {
  require_size(x.size(), plan.consumers(), "consumption vector");
  return realized_cost(sum(x), plan.grand.capacity, t.shared_capital_cost(), t);
}

MoneyVector average_realized_allocation(
    std::span<const AllocationResult> history) {
  if (history.empty()) throw EmptyHistory();
  const Eigen::Index n = history.front().shares.size();
  MoneyVector total = MoneyVector::Zero(n);
  for (const auto& day : history) {
    if (day.shares.size() != n) {
      throw DimensionMismatch("allocation history mixes consumer counts");
    }
    total += day.shares;
  }
  return total / Money(static_cast<std::int64_t>(history.size()));
}

BenefitReport benefit_scenario1(std::span<const Fixed> x,
                                const CapacityProfile& caps, const Tariff& t) {
  const int n = caps.consumers();
  require_size(x.size(), n, "consumption vector");
  if (n == 0) throw EmptyCoalition();
  const Fixed x_total = sum(x);
  const Fixed c_total = caps.total(Coalition::grand(n));
  const bool exhausted = x_total >= c_total;

  Fixed separate_overflow;
  Fixed separate_stored;
  for (int i = 0; i < n; ++i) {
    const Fixed xi = x[static_cast<std::size_t>(i)];
    separate_overflow += positive_part(xi - caps[i]);
    separate_stored += std::min(caps[i], xi);
  }
  const Fixed pooled_overflow = positive_part(x_total - c_total);
  const Fixed pooled_stored = std::min(c_total, x_total);

  BenefitReport out;
  out.kind = AllocationKind::kPooledRealized;
  out.total = t.peak_price().to_rational() *
                  (separate_overflow - pooled_overflow).to_rational() +
              t.off_peak_price().to_rational() *
                  (separate_stored - pooled_stored).to_rational();
  out.per_consumer.resize(n);
  const Money margin = t.arbitrage_price().to_rational();
  for (int i = 0; i < n; ++i) {
    const Fixed xi = x[static_cast<std::size_t>(i)];
    const Fixed slack = exhausted ? positive_part(caps[i] - xi)
                                  : positive_part(xi - caps[i]);
    out.per_consumer(i) = margin * slack.to_rational();
  }
  return out;
}

BenefitReport benefit_scenario2(const JointSample& j, const CapacityPlan& plan,
                                const Tariff& t) {
  const int n = j.consumers();
  require_size(static_cast<std::size_t>(plan.consumers()), n, "capacity plan");
  const Money capital = t.shared_capital_cost().to_rational();
  const Coalition grand = Coalition::grand(n);

  Rational separate_tails = 0;
  BenefitReport out;
  out.kind = AllocationKind::kJointExpected;
  out.per_consumer.resize(n);
  for (int i = 0; i < n; ++i) {
    const Rational own_tail = plan.individual[static_cast<std::size_t>(i)].tail_mean;
    separate_tails += own_tail;
    out.per_consumer(i) =
        capital * (own_tail - conditional_mean_given_aggregate(
                                  j, Coalition::singleton(i),
                                  plan.grand.capacity, grand));
  }
  out.total = capital * (separate_tails - plan.grand.tail_mean);
  return out;
}

}  // namespace storeshare
