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

#ifndef STORESHARE_REPORT_HPP
#define STORESHARE_REPORT_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "storeshare/data.hpp"
#include "storeshare/empirical.hpp"
#include "storeshare/fixed.hpp"

namespace storeshare {

inline constexpr int kReportVersion = 1;

struct ConsumerPlanRow {
  std::string id;
  Fixed capacity;
  Money expected_cost;
  Money direct_cost;
  Money zeta;
  Money benefit;
  Money tolerance;
};

/// Optimal capacities, expected costs and the expected-cost allocation.
struct PlanSection {
  Rational gamma;
  std::vector<ConsumerPlanRow> consumers;
  Fixed grand_capacity;
  Money grand_cost;
  Money grand_direct_cost;
  Money grand_tolerance;
  Money zeta_total;
  Money total_benefit;
  Rational cost_reduction;  // (sum J*_i - J*_N) / sum J*_i
  bool budget_balanced = false;
  bool no_storage = false;
  bool boundary = false;
};

struct CdfCurve {
  std::string id;
  std::vector<std::pair<Fixed, Rational>> points;  // (kWh, F(kWh)) at jumps
};

struct SimulationRow {
  std::size_t index = 0;
  std::size_t source_day = 0;  // row of the history replayed
  Date date;
  Money total;
  MoneyVector shares;
};

struct SimulationSection {
  int scenario = 2;
  bool resampled = false;
  std::vector<SimulationRow> rows;
  std::vector<MoneyVector> trajectory;  // running mean after D days
  MoneyVector limit;                    // value the running mean converges to
  bool budget_balanced = true;
};

struct SuiteResult {
  std::string name;
  std::string property;
  std::string mode;
  bool pass = true;
  std::uint64_t checks = 0;
  std::optional<Money> worst_slack;
  Money tolerance = 0;
  std::vector<std::string> violations;  // first few, human readable
};

struct VerificationSection {
  std::vector<SuiteResult> suites;
  bool all_pass() const;
};

struct DataSummary {
  std::string source;  // "csv" or "synthetic"
  std::vector<std::string> consumers;
  std::size_t days = 0;
  std::size_t dropped_days = 0;
  std::size_t excluded_days = 0;
  std::string first_day;
  std::string last_day;
};

struct RunReport {
  RunConfig config;
  DataSummary data;
  std::optional<PlanSection> plan;
  std::vector<CdfCurve> cdfs;  // consumers first, aggregate last
  std::optional<SimulationSection> simulation;
  std::optional<VerificationSection> verification;
};

DataSummary summarize(const IngestResult& ingest);
DataSummary summarize(const DailyPeakSeries& series);

/// Plan for the joint-investment scenario. Needs at least `min_days` days.
PlanSection make_plan_section(const DailyPeakSeries& series, const RunConfig& cfg,
                              std::size_t min_days = 30);

/// Empirical CDFs of every consumer and of the grand-coalition aggregate.
std::vector<CdfCurve> make_cdf_curves(const DailyPeakSeries& series);

/// Daily allocations for `days` days. History rows are replayed in order
/// when days <= history length, otherwise drawn i.i.d. from the history
/// with `seed`. Scenario 1 pools the planned individual capacities;
/// scenario 2 splits the joint storage's realized cost in proportion to
/// zeta.
SimulationSection make_simulation_section(const DailyPeakSeries& series,
                                          const RunConfig& cfg,
                                          std::size_t days, int scenario,
                                          std::uint64_t seed);

struct VerifyOptions {
  int max_players = kMaxVerifyPlayers;
  std::size_t days = 10;     // realized days checked for the pooled game
  bool equal_split = false;  // replace the closed-form allocations
  std::uint64_t seed = 1;

  static constexpr int kMaxVerifyPlayers = 20;
};

/// Runs the game-theoretic property suites on the data. Throws
/// TooManyPlayers when the series has more than options.max_players
/// consumers.
VerificationSection make_verification_section(const DailyPeakSeries& series,
                                              const RunConfig& cfg,
                                              const VerifyOptions& options);

/// SHA-256 of the canonical JSON of the config, hex encoded.
std::string config_hash(const RunConfig& cfg);

nlohmann::json to_json(const RunReport& report);
std::string render_text(const RunReport& report);

/// Writes tab-separated plot inputs derived from a JSON report into `dir`
/// and returns the written paths. Throws MissingSection when the report has
/// neither CDFs nor a simulation.
std::vector<std::filesystem::path> write_plot_data(const nlohmann::json& report,
                                                   const std::filesystem::path& dir);

struct RunInputs {
  std::string config;  // empty: defaults
  std::string data;    // empty: synthetic
};

/// Writes report.json, report.txt and manifest.json into `dir`.
void write_run_directory(const RunReport& report, const RunInputs& inputs,
                         const std::filesystem::path& dir);

}  // namespace storeshare

#endif  // STORESHARE_REPORT_HPP
