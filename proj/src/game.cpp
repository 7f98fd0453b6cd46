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

#include "storeshare/game.hpp"

#include <algorithm>
#include <execution>
#include <numeric>
#include <random>

#include "storeshare/allocation.hpp"
#include "storeshare/errors.hpp"
#include "storeshare/planner.hpp"

namespace storeshare {

namespace {

// Parallel map over all nonempty coalitions; slot s holds the value of mask s.
std::vector<CoalitionValue> evaluate_all(int n,
                                         const GameInstance::Evaluator& eval) {
  const std::uint32_t count = std::uint32_t{1} << n;
  std::vector<CoalitionValue> table(count, CoalitionValue{0, 0});
  std::vector<std::uint32_t> masks(count - 1);
  std::iota(masks.begin(), masks.end(), 1u);
  std::for_each(std::execution::par, masks.begin(), masks.end(),
                [&](std::uint32_t m) { table[m] = eval(Coalition(m)); });
  return table;
}

CheckMode resolve_mode(const GameInstance& g, const CheckOptions& options) {
  if (options.mode) return *options.mode;
  return g.players() <= g.exhaustive_limit() ? CheckMode::kExhaustive
                                             : CheckMode::kSampled;
}

// Value lookup that materializes locally when an exhaustive scan is asked of
// a lazy game.
class ValueSource {
 public:
  ValueSource(const GameInstance& g, CheckMode mode) : game_(g) {
    if (mode == CheckMode::kExhaustive && !g.materialized()) {
      if (g.players() > kMaxMaterializedPlayers) {
        throw TooManyPlayers(g.players(), kMaxMaterializedPlayers);
      }
      local_ = evaluate_all(g.players(), [&](Coalition s) { return g(s); });
    }
  }
  CoalitionValue operator()(Coalition s) const {
    return local_.empty() ? game_(s) : local_[s.mask()];
  }

 private:
  const GameInstance& game_;
  std::vector<CoalitionValue> local_;
};

Coalition random_coalition(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<std::uint32_t> pick(
      1u, Coalition::grand(n).mask());
  return Coalition(pick(rng));
}

}  // namespace

const char* to_string(GameKind kind) {
  return kind == GameKind::kPooledStorage ? "pooled-storage"
                                          : "joint-investment";
}

const char* to_string(CheckMode mode) {
  return mode == CheckMode::kExhaustive ? "exhaustive" : "sampled";
}

GameInstance::GameInstance(int players, GameKind kind, Evaluator evaluator)
    : players_(players), kind_(kind), evaluator_(std::move(evaluator)) {
  if (players < 1) throw EmptyCoalition();
  if (players > Coalition::kMaxPlayers) {
    throw TooManyPlayers(players, Coalition::kMaxPlayers);
  }
}

CoalitionValue GameInstance::operator()(Coalition s) const {
  if (s.empty()) return {0, 0};
  if (!s.is_subset_of(Coalition::grand(players_))) {
    throw DimensionMismatch("coalition outside the game");
  }
  if (!table_.empty()) return table_[s.mask()];
  return evaluator_(s);
}

void GameInstance::materialize() {
  if (players_ > kMaxMaterializedPlayers) {
    throw TooManyPlayers(players_, kMaxMaterializedPlayers);
  }
  if (table_.empty()) table_ = evaluate_all(players_, evaluator_);
}

int GameInstance::exhaustive_limit() const {
  return kind_ == GameKind::kPooledStorage ? kExhaustivePooledPlayers
                                           : kExhaustiveJointPlayers;
}

GameInstance pooled_storage_game(std::span<const Fixed> x,
                                 const CapacityProfile& caps, const Tariff& t) {
  if (static_cast<int>(x.size()) != caps.consumers()) {
    throw DimensionMismatch("consumption and capacity vectors differ in size");
  }
  auto demand = std::make_shared<const std::vector<Fixed>>(x.begin(), x.end());
  auto profile = std::make_shared<const CapacityProfile>(caps);
  auto tariff = std::make_shared<const Tariff>(t);
  return GameInstance(caps.consumers(), GameKind::kPooledStorage,
                      [demand, profile, tariff](Coalition s) {
                        return CoalitionValue{
                            coalition_realized_cost_u(s, *demand, *profile,
                                                      *tariff),
                            0};
                      });
}

GameInstance joint_investment_game(const JointSample& j, const Tariff& t) {
  auto joint = std::make_shared<const JointSample>(j);
  auto tariff = std::make_shared<const Tariff>(t);
  return GameInstance(j.consumers(), GameKind::kJointInvestment,
                      [joint, tariff](Coalition s) {
                        const CoalitionOptimum opt =
                            optimize_coalition(*joint, s, *tariff);
                        return CoalitionValue{opt.expected_cost, opt.tolerance};
                      });
}

GameInstance materialize_game(std::span<const Fixed> x,
                              const CapacityProfile& caps, const Tariff& t) {
  GameInstance g = pooled_storage_game(x, caps, t);
  g.materialize();
  return g;
}

GameInstance materialize_game(const JointSample& j, const Tariff& t) {
  GameInstance g = joint_investment_game(j, t);
  g.materialize();
  return g;
}

SubadditivityReport check_subadditivity(const GameInstance& g,
                                        const CheckOptions& options) {
  SubadditivityReport report;
  report.mode = resolve_mode(g, options);
  const ValueSource value(g, report.mode);

  auto check_pair = [&](Coalition s, Coalition t) {
    ++report.pairs_checked;
    if (s.empty() || t.empty()) return;
    const CoalitionValue vs = value(s);
    const CoalitionValue vt = value(t);
    const CoalitionValue vu = value(s | t);
    const Money rhs = vs.value + vt.value;
    const Money slack = rhs - vu.value;
    const Money tol = vs.tolerance + vt.tolerance + options.extra_tolerance;
    if (tol > report.largest_tolerance) report.largest_tolerance = tol;
    if (!report.worst_slack || slack < *report.worst_slack) {
      report.worst_slack = slack;
      report.tolerance_at_worst = tol;
    }
    if (slack < -tol) {
      report.violations.push_back({s, t, vu.value, rhs, slack, tol});
    }
  };

  if (report.mode == CheckMode::kExhaustive) {
    for_each_disjoint_pair(g.players(), check_pair);
  } else {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> side(0, 2);
    for (std::uint64_t k = 0; k < options.samples; ++k) {
      std::uint32_t s = 0;
      std::uint32_t t = 0;
      for (int i = 0; i < g.players(); ++i) {
        const int where = side(rng);
        if (where == 1) s |= std::uint32_t{1} << i;
        if (where == 2) t |= std::uint32_t{1} << i;
      }
      check_pair(Coalition(s), Coalition(t));
    }
  }
  return report;
}

CoreCheckReport check_core_membership(const GameInstance& g,
                                      const MoneyVector& allocation,
                                      const CheckOptions& options) {
  const int n = g.players();
  if (allocation.size() != n) {
    throw DimensionMismatch("allocation has " +
                            std::to_string(allocation.size()) +
                            " entries for a " + std::to_string(n) +
                            "-player game");
  }
  CoreCheckReport report;
  report.mode = resolve_mode(g, options);
  report.allocation = allocation;
  const ValueSource value(g, report.mode);

  const Coalition grand = Coalition::grand(n);
  report.budget_gap = value(grand).value - allocation.sum();
  report.budget_balanced = report.budget_gap == 0;

  auto check = [&](Coalition s) {
    ++report.coalitions_checked;
    Money lhs = 0;
    for (int i : s.members()) lhs += allocation(i);
    const CoalitionValue v = value(s);
    const Money slack = v.value - lhs;
    const Money tol = v.tolerance + options.extra_tolerance;
    if (tol > report.largest_tolerance) report.largest_tolerance = tol;
    if (!report.worst_slack || slack < *report.worst_slack) {
      report.worst_slack = slack;
      report.worst_coalition = s;
    }
    if (slack < -tol) report.violations.push_back({s, {}, lhs, v.value, slack, tol});
    return slack;
  };

  if (report.mode == CheckMode::kExhaustive) {
    report.slack.assign(std::size_t{1} << n, Money(0));
    for (std::uint32_t m = 1; m <= grand.mask(); ++m) {
      report.slack[m] = check(Coalition(m));
    }
  } else {
    std::mt19937_64 rng(options.seed);
    for (std::uint64_t k = 0; k < options.samples; ++k) {
      check(random_coalition(rng, n));
    }
  }
  return report;
}

CoreCertificate core_nonemptiness_certificate(const GameInstance& g,
                                              const MoneyVector& allocation,
                                              const CheckOptions& options) {
  CoreCertificate cert;
  cert.kind = g.kind();
  cert.allocation = allocation;
  cert.report = check_core_membership(g, allocation, options);
  return cert;
}

CoreCertificate core_nonemptiness_certificate(std::span<const Fixed> x,
                                              const CapacityProfile& caps,
                                              const Tariff& t,
                                              const CheckOptions& options) {
  const GameInstance g = pooled_storage_game(x, caps, t);
  return core_nonemptiness_certificate(
      g, allocation_scenario1(x, caps, t).shares, options);
}

CoreCertificate core_nonemptiness_certificate(const JointSample& j,
                                              const Tariff& t,
                                              const CheckOptions& options) {
  const CapacityPlan plan = plan_capacities(j, t);
  const GameInstance g = joint_investment_game(j, t);
  return core_nonemptiness_certificate(
      g, allocation_scenario2_expected(j, plan, t).shares, options);
}

Money pooled_allocation_slack(Coalition s, std::span<const Fixed> x,
                              const CapacityProfile& caps, const Tariff& t) {
  const int n = caps.consumers();
  Fixed x_all;
  for (Fixed v : x) x_all += v;
  const bool exhausted = x_all >= caps.total(Coalition::grand(n));
  Fixed x_s;
  for (int i : s.members()) x_s += x[static_cast<std::size_t>(i)];
  const Fixed c_s = caps.total(s);
  const Fixed gap = exhausted ? positive_part(c_s - x_s) : positive_part(x_s - c_s);
  return t.arbitrage_price().to_rational() * gap.to_rational();
}

}  // namespace storeshare
