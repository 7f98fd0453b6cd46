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

#ifndef STORESHARE_DATA_HPP
#define STORESHARE_DATA_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "json.hpp"
#include "storeshare/empirical.hpp"
#include "storeshare/fixed.hpp"
#include "storeshare/tariff.hpp"

namespace storeshare {

/// Daily window [start_hour, end_hour) of peak pricing.
struct PeakWindow {
  int start_hour = 7;
  int end_hour = 23;
};

/// Which calendar days carry peak pricing.
struct CalendarFilter {
  bool exclude_weekends = true;
  std::vector<Date> holidays;  // sorted

  bool includes(Date d) const;
};

/// Parameters of the correlated synthetic demand generator: lognormal
/// marginals glued by a Gaussian copula.
struct SynthSpec {
  std::vector<double> means;       // kWh, > 0
  std::vector<double> log_sigmas;  // sd of log-demand, > 0
  Eigen::MatrixXd correlation;     // target Pearson correlation of the demands
  int days = 2000;
  std::uint64_t seed = 1;
  Date start{std::chrono::year{2016}, std::chrono::January, std::chrono::day{1}};

  int consumers() const { return static_cast<int>(means.size()); }
};

/// Five households: Pecan-Street-like correlations with marginals sized so
/// optimal capacities land in the 13-30 kWh range.
SynthSpec default_synth_spec();

/// Correlation targets for the five-household fixture.
Eigen::MatrixXd household_correlation_targets();

struct RunConfig {
  Fixed peak_price = Fixed(55);
  Fixed off_peak_price = Fixed(20);
  Fixed shared_capital = Fixed(15);
  std::vector<Fixed> individual_capital;  // empty: shared cost for everyone
  PeakWindow window;
  CalendarFilter calendar;
  int scenario = 2;
  std::uint64_t seed = 1;
  std::string output_dir = "run";
  SynthSpec synth = default_synth_spec();

  /// Tariff for `consumers` consumers; per-consumer capital costs, when
  /// given, must match that count.
  Tariff tariff(int consumers) const;
  Tariff tariff() const;

  nlohmann::json to_json() const;
};

/// Builds a validated config from JSON; omitted fields keep their defaults.
/// Throws ValidationError listing every violated invariant (ViabilityError
/// when the only problems are capital costs above the arbitrage price).
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::filesystem::path& path);

struct IngestResult {
  DailyPeakSeries peak;
  PeakMatrix off_peak;           // energy outside the window, same layout
  std::size_t dropped_days = 0;  // included days missing some consumer
  std::size_t excluded_days = 0; // weekends and holidays seen in the file
};

/// Reads `timestamp,consumer_id,kwh` rows and sums each consumer's energy
/// inside the peak window for every included day.
IngestResult ingest_intervals(std::istream& in, const RunConfig& cfg);
IngestResult ingest_intervals(const std::filesystem::path& path,
                              const RunConfig& cfg);

/// Deterministic in the spec (seed included). Throws NonPSDCorrelation when
/// the targets are not a valid correlation matrix or are unreachable with
/// the requested marginals.
DailyPeakSeries generate_synthetic(const SynthSpec& spec,
                                   const CalendarFilter& calendar = {});

/// Writes hourly interval rows whose peak-window hours sum exactly to the
/// series' daily values. Off-window hours carry half the mean peak-hour
/// energy.
void write_intervals_csv(std::ostream& out, const DailyPeakSeries& series,
                         const PeakWindow& window);

std::string format_date(Date d);
Date parse_date(const std::string& text);

}  // namespace storeshare

#endif  // STORESHARE_DATA_HPP
