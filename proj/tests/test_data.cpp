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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "storeshare/data.hpp"
#include "storeshare/errors.hpp"
#include "support.hpp"

using namespace storeshare;
using namespace storeshare::testing;
using nlohmann::json;

namespace {

const char* kHeader = "timestamp,consumer_id,kwh\n";

// 2016-01-04 is a Monday, 2016-01-09 a Saturday.
std::string hourly_day(const std::string& date, const std::string& id, const char* kwh) {
  std::string out;
  for (int h = 0; h < 24; ++h) {
    out += date + "T" + (h < 10 ? "0" : "") + std::to_string(h) + ":00," + id + "," + kwh + "\n";
  }
  return out;
}

IngestResult ingest_text(const std::string& text, const RunConfig& cfg = {}) {
  std::istringstream in(text);
  return ingest_intervals(in, cfg);
}

}  // namespace

TEST_CASE("config defaults") {
  const RunConfig cfg = parse_config(json::object());
  CHECK(cfg.peak_price == Fixed(55));
  CHECK(cfg.off_peak_price == Fixed(20));
  CHECK(cfg.shared_capital == Fixed(15));
  CHECK(cfg.window.start_hour == 7);
  CHECK(cfg.window.end_hour == 23);
  CHECK(cfg.calendar.exclude_weekends);
  CHECK(cfg.synth.consumers() == 5);

  const auto path = std::filesystem::temp_directory_path() / "storeshare_empty_config.json";
  std::ofstream(path) << "  \n";
  CHECK(load_config(path).to_json() == cfg.to_json());
  std::filesystem::remove(path);
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(parse_config(json{{"tariff", {{"pi_h", 10}, {"pi_l", 20}}}}), ValidationError);
  try {
    parse_config(json{{"tariff", {{"pi_shared", 40}}}});
    FAIL("expected ViabilityError");
  } catch (const ViabilityError& e) {
    CHECK(e.issues().size() == 1);
  }
  try {
    parse_config(json{{"tarif", 1}, {"scenario", 3}, {"peak_window", {{"start_hour", 23}, {"end_hour", 7}}}});
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.issues().size() == 3);
  }
  CHECK_THROWS_AS(parse_config(json{{"tariff", {{"pi_h", "55.00001"}}}}), ValidationError);
  CHECK(parse_config(json{{"tariff", {{"pi_h", "60.5"}}}}).peak_price == fx("60.5"));
  CHECK_THROWS_AS(parse_config(json{{"calendar", {{"holidays", {"2016-02-30"}}}}}), ValidationError);
}

TEST_CASE("config json round trip") {
  json in = {{"tariff", {{"pi_h", "50"}, {"pi_l", "18.5"}, {"pi_shared", 12}, {"pi_i", {10, "11.25"}}}},
             {"peak_window", {{"start_hour", 8}, {"end_hour", 22}}},
             {"calendar", {{"exclude_weekends", false}, {"holidays", {"2016-12-25", "2016-01-01"}}}},
             {"scenario", 1},
             {"seed", 99},
             {"output_dir", "out"}};
  const RunConfig a = parse_config(in);
  CHECK(a.calendar.holidays.front() == parse_date("2016-01-01"));
  CHECK(a.synth.seed == 99);
  const RunConfig b = parse_config(a.to_json());
  CHECK(b.to_json() == a.to_json());
  CHECK(b.individual_capital[1] == fx("11.25"));
  CHECK(a.tariff(2).individual_capital_cost(1) == fx("11.25"));
  CHECK_THROWS_AS(a.tariff(3), DimensionMismatch);
}

TEST_CASE("dates") {
  CHECK(format_date(parse_date("2016-01-04")) == "2016-01-04");
  CHECK_THROWS_AS(parse_date("2016-1-4x"), std::invalid_argument);
  CalendarFilter f;
  CHECK(f.includes(parse_date("2016-01-04")));
  CHECK_FALSE(f.includes(parse_date("2016-01-09")));
  f.holidays = {parse_date("2016-01-04")};
  CHECK_FALSE(f.includes(parse_date("2016-01-04")));
  f.exclude_weekends = false;
  CHECK(f.includes(parse_date("2016-01-09")));
}

TEST_CASE("ingest: peak window") {
  const IngestResult r = ingest_text(kHeader + hourly_day("2016-01-04", "a", "1"));
  REQUIRE(r.peak.day_count() == 1);
  CHECK(r.peak.values(0, 0) == Fixed(16));
  CHECK(r.off_peak(0, 0) == Fixed(8));
  CHECK(r.peak.consumers == std::vector<std::string>{"a"});
  CHECK(format_date(r.peak.days[0]) == "2016-01-04");

  RunConfig narrow;
  narrow.window = {9, 10};
  CHECK(ingest_text(kHeader + hourly_day("2016-01-04", "a", "0.25"), narrow).peak.values(0, 0) ==
        fx("0.25"));
}

TEST_CASE("ingest: calendar and rectangularity") {
  CHECK_THROWS_AS(ingest_text(kHeader + hourly_day("2016-01-09", "a", "1")), EmptyAfterFilter);

  const std::string text = kHeader + hourly_day("2016-01-04", "b", "1") +
                           hourly_day("2016-01-04", "a", "2") + hourly_day("2016-01-05", "a", "2") +
                           hourly_day("2016-01-09", "a", "2") + hourly_day("2016-01-09", "b", "2") +
                           hourly_day("2016-01-06", "a", "3") + hourly_day("2016-01-06", "b", "3");
  const IngestResult r = ingest_text(text);
  CHECK(r.peak.day_count() == 2);
  CHECK(r.dropped_days == 1);
  CHECK(r.excluded_days == 1);
  CHECK(r.peak.consumers == std::vector<std::string>{"a", "b"});
  CHECK(r.peak.values(0, 0) == Fixed(32));
  CHECK(r.peak.values(0, 1) == Fixed(16));
  CHECK(r.peak.values(1, 1) == Fixed(48));

  RunConfig all;
  all.calendar.exclude_weekends = false;
  CHECK(ingest_text(text, all).peak.day_count() == 3);
}

TEST_CASE("ingest: malformed input") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      ingest_text(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("") == 1);
  CHECK(line_of("time,id,kwh\n") == 1);
  CHECK(line_of(std::string(kHeader) + "2016-01-04T07:00,a\n") == 2);
  CHECK(line_of(std::string(kHeader) + "2016-01-04T07:00,a,1\n2016-13-04T07:00,a,1\n") == 3);
  CHECK(line_of(std::string(kHeader) + "2016-01-04T07:00,a,x\n") == 2);
  CHECK(line_of(std::string(kHeader) + "2016-01-04T07:00,a,-1\n") == 2);
  CHECK(line_of(std::string(kHeader) + "2016-01-04T07:00,a,1\n2016-01-04 07:00:00,a,1\n") == 3);
  CHECK(line_of(std::string(kHeader) + "2016-01-04T07:00,,1\n") == 2);
}

TEST_CASE("synthetic generator") {
  SynthSpec spec;
  spec.means = {10, 20};
  spec.log_sigmas = {0.3, 0.4};
  spec.correlation = Eigen::MatrixXd::Identity(2, 2);
  spec.days = 2000;
  spec.seed = 5;
  const DailyPeakSeries s = generate_synthetic(spec);
  CHECK(s.day_count() == 2000);
  CHECK(std::abs(correlation_matrix(s)(0, 1)) <= 0.05);
  CHECK(s.consumers == std::vector<std::string>{"h1", "h2"});
  for (Date d : s.days) CHECK(CalendarFilter{}.includes(d));

  const DailyPeakSeries again = generate_synthetic(spec);
  CHECK(again.values == s.values);
  spec.seed = 6;
  CHECK_FALSE(generate_synthetic(spec).values == s.values);

  spec.correlation << 1, 1, 1, 1;
  spec.log_sigmas = {0.3, 0.3};
  spec.means = {10, 10};
  const DailyPeakSeries twins = generate_synthetic(spec);
  CHECK(twins.values.col(0) == twins.values.col(1));

  spec.correlation << 1, 2, 2, 1;
  CHECK_THROWS(generate_synthetic(spec));
  SynthSpec bad = default_synth_spec();
  bad.correlation(0, 1) = bad.correlation(1, 0) = -0.99;
  bad.correlation(0, 2) = bad.correlation(2, 0) = 0.99;
  bad.correlation(1, 2) = bad.correlation(2, 1) = 0.99;
  CHECK_THROWS_AS(generate_synthetic(bad), NonPSDCorrelation);
}

TEST_CASE("synthetic fixture recovers the household correlations") {
  SynthSpec spec = default_synth_spec();
  spec.days = 2000;
  const Eigen::MatrixXd target = household_correlation_targets();
  CHECK(target(0, 1) == doctest::Approx(0.363586));
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    spec.seed = seed;
    const Eigen::MatrixXd got = correlation_matrix(generate_synthetic(spec));
    CHECK((got - target).cwiseAbs().maxCoeff() <= 0.05);
  }
}

TEST_CASE("interval CSV round trip") {
  SynthSpec spec = default_synth_spec();
  spec.days = 60;
  const DailyPeakSeries s = generate_synthetic(spec);
  RunConfig cfg;
  std::ostringstream out;
  write_intervals_csv(out, s, cfg.window);
  const IngestResult r = ingest_text(out.str(), cfg);
  CHECK(r.peak.values == s.values);
  CHECK(r.peak.days == s.days);
  CHECK(r.dropped_days == 0);

  // Peak plus off-peak accounts for every interval in the file.
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1> totals = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>::Zero(5);
  while (std::getline(lines, line)) {
    const auto a = line.find(','), b = line.rfind(',');
    totals(std::stoi(line.substr(a + 2, b - a - 2)) - 1) += Fixed::parse(line.substr(b + 1)).raw();
  }
  for (int i = 0; i < 5; ++i) {
    std::int64_t sum = 0;
    for (Eigen::Index d = 0; d < r.peak.day_count(); ++d)
      sum += r.peak.values(d, i).raw() + r.off_peak(d, i).raw();
    CHECK(sum == totals(i));
  }

  // Ingesting the same file twice gives the same series.
  std::ostringstream again;
  write_intervals_csv(again, r.peak, cfg.window);
  CHECK(again.str() == out.str());
}
