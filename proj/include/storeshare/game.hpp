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

#ifndef STORESHARE_GAME_HPP
#define STORESHARE_GAME_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "storeshare/coalition.hpp"
#include "storeshare/cost.hpp"
#include "storeshare/empirical.hpp"
#include "storeshare/fixed.hpp"
#include "storeshare/tariff.hpp"

namespace storeshare {

enum class GameKind {
  kPooledStorage,   // u: realized cost of pooling pre-owned storage
  kJointInvestment  // v: optimal expected cost of joint storage
};

const char* to_string(GameKind kind);

/// Value of one coalition plus the slack any check involving it may use.
/// Tolerance is zero for pooled-storage games and the quantile-gap bound for
/// joint-investment games.
struct CoalitionValue {
  Money value;
  Money tolerance;
};

inline constexpr int kMaxMaterializedPlayers = 20;
inline constexpr int kExhaustivePooledPlayers = 16;
inline constexpr int kExhaustiveJointPlayers = 10;

/// Cost-sharing game (N, value). Either lazy, evaluating coalitions on
/// demand, or materialized into a table indexed by coalition mask.
class GameInstance {
 public:
  using Evaluator = std::function<CoalitionValue(Coalition)>;

  GameInstance(int players, GameKind kind, Evaluator evaluator);

  int players() const { return players_; }
  GameKind kind() const { return kind_; }
  bool materialized() const { return !table_.empty(); }

  /// Value of `s`; the empty coalition is worth 0.
  CoalitionValue operator()(Coalition s) const;

  /// Evaluates all 2^n - 1 nonempty coalitions. Evaluations run in parallel;
  /// each lands in its own slot so the table does not depend on scheduling.
  /// Throws TooManyPlayers above kMaxMaterializedPlayers.
  void materialize();

  /// Largest player count checked exhaustively for this kind.
  int exhaustive_limit() const;

 private:
  int players_;
  GameKind kind_;
  Evaluator evaluator_;
  std::vector<CoalitionValue> table_;
};

/// u(S) for one realized day.
GameInstance pooled_storage_game(std::span<const Fixed> x,
                                 const CapacityProfile& caps, const Tariff& t);

/// v(S) = J*_S under the empirical measure of `j`.
GameInstance joint_investment_game(const JointSample& j, const Tariff& t);

GameInstance materialize_game(std::span<const Fixed> x,
                              const CapacityProfile& caps, const Tariff& t);
GameInstance materialize_game(const JointSample& j, const Tariff& t);

enum class CheckMode { kExhaustive, kSampled };

const char* to_string(CheckMode mode);

struct CheckOptions {
  /// Unset: exhaustive up to the game's exhaustive limit, sampled beyond.
  std::optional<CheckMode> mode;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 20160101;
  /// Added on top of every coalition's own tolerance.
  Money extra_tolerance = 0;
};

/// One failed inequality. For subadditivity `other` is the second coalition
/// of the pair and lhs = v(S u T), rhs = v(S) + v(T).
struct Violation {
  Coalition coalition;
  Coalition other;
  Money lhs;
  Money rhs;
  Money slack;  // rhs - lhs
  Money tolerance;
};

struct SubadditivityReport {
  CheckMode mode = CheckMode::kExhaustive;
  std::uint64_t pairs_checked = 0;
  /// Smallest v(S) + v(T) - v(S u T) over pairs of nonempty coalitions.
  std::optional<Money> worst_slack;
  Money tolerance_at_worst = 0;
  Money largest_tolerance = 0;
  std::vector<Violation> violations;

  bool pass() const { return violations.empty(); }
};

/// Checks v(S) + v(T) >= v(S u T) - tol(S) - tol(T) for disjoint S, T.
/// Exhaustive mode visits all 3^n ordered pairs, including empty ones.
SubadditivityReport check_subadditivity(const GameInstance& g,
                                        const CheckOptions& options = {});

struct CoreCheckReport {
  CheckMode mode = CheckMode::kExhaustive;
  MoneyVector allocation;
  bool budget_balanced = false;
  Money budget_gap = 0;  // v(N) - sum(allocation)
  std::uint64_t coalitions_checked = 0;
  /// v(S) - sum_S allocation, indexed by mask (exhaustive mode only).
  std::vector<Money> slack;
  std::optional<Money> worst_slack;
  Coalition worst_coalition;
  Money largest_tolerance = 0;
  std::vector<Violation> violations;

  bool pass() const { return budget_balanced && violations.empty(); }
};

/// Budget balance is checked exactly; every coalition inequality
/// sum_S alloc <= v(S) within that coalition's tolerance.
CoreCheckReport check_core_membership(const GameInstance& g,
                                      const MoneyVector& allocation,
                                      const CheckOptions& options = {});

/// Constructive proof of a nonempty core: an allocation plus its passing
/// core check.
struct CoreCertificate {
  GameKind kind = GameKind::kPooledStorage;
  MoneyVector allocation;
  CoreCheckReport report;

  bool certified() const { return report.pass(); }
};

CoreCertificate core_nonemptiness_certificate(const GameInstance& g,
                                              const MoneyVector& allocation,
                                              const CheckOptions& options = {});

/// Certificate for the pooled-storage game of one day, using the
/// closed-form pooled allocation.
CoreCertificate core_nonemptiness_certificate(std::span<const Fixed> x,
                                              const CapacityProfile& caps,
                                              const Tariff& t,
                                              const CheckOptions& options = {});

/// Certificate for the joint-investment game, using the expected-cost
/// allocation.
CoreCertificate core_nonemptiness_certificate(const JointSample& j,
                                              const Tariff& t,
                                              const CheckOptions& options = {});

/// Core slack of the pooled allocation predicted in closed form:
/// arbitrage*(C_S - x_S)^+ if the grand pool is exhausted, else
/// arbitrage*(x_S - C_S)^+.
Money pooled_allocation_slack(Coalition s, std::span<const Fixed> x,
                              const CapacityProfile& caps, const Tariff& t);

}  // namespace storeshare

#endif  // STORESHARE_GAME_HPP
