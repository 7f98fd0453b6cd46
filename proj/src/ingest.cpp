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

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <tuple>

#include "storeshare/data.hpp"
#include "storeshare/errors.hpp"

namespace storeshare {

namespace {

struct Timestamp {
  Date date;
  int second_of_day = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool read_int(std::string_view s, int& out) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

// YYYY-MM-DDTHH:MM[:SS], 'T' or ' ' as separator, local time.
std::optional<Timestamp> parse_timestamp(std::string_view s) {
  if (s.size() != 16 && s.size() != 19) return std::nullopt;
  if (s[4] != '-' || s[7] != '-' || (s[10] != 'T' && s[10] != ' ') || s[13] != ':') {
    return std::nullopt;
  }
  int y = 0, mo = 0, d = 0, h = 0, mi = 0, se = 0;
  if (!read_int(s.substr(0, 4), y) || !read_int(s.substr(5, 2), mo) ||
      !read_int(s.substr(8, 2), d) || !read_int(s.substr(11, 2), h) ||
      !read_int(s.substr(14, 2), mi)) {
    return std::nullopt;
  }
  if (s.size() == 19 && (s[16] != ':' || !read_int(s.substr(17, 2), se))) {
    return std::nullopt;
  }
  const Date date{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(mo)},
                  std::chrono::day{static_cast<unsigned>(d)}};
  if (!date.ok() || h < 0 || h > 23 || mi < 0 || mi > 59 || se < 0 || se > 59) {
    return std::nullopt;
  }
  return Timestamp{date, h * 3600 + mi * 60 + se};
}

std::optional<Fixed> parse_energy(std::string_view s) {
  double value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  try {
    return Fixed::from_double(value);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

struct DayTotals {
  std::map<std::string, std::pair<Fixed, Fixed>> by_consumer;  // (peak, off)
};

}  // namespace

IngestResult ingest_intervals(std::istream& in, const RunConfig& cfg) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError(1, "missing header");
  ++line_no;
  if (trim(line) != "timestamp,consumer_id,kwh") {
    throw ParseError(line_no, "expected header 'timestamp,consumer_id,kwh'");
  }

  const int window_start = cfg.window.start_hour * 3600;
  const int window_end = cfg.window.end_hour * 3600;
  std::map<Date, DayTotals> days;
  std::set<Date> excluded;
  std::set<std::string> consumers;
  std::set<std::tuple<int, int, std::string>> seen;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view row = trim(line);
    if (row.empty()) continue;
    const auto c1 = row.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : row.find(',', c1 + 1);
    if (c2 == std::string_view::npos || row.find(',', c2 + 1) != std::string_view::npos) {
      throw ParseError(line_no, "expected 3 comma-separated fields");
    }
    const auto ts = parse_timestamp(trim(row.substr(0, c1)));
    if (!ts) throw ParseError(line_no, "unparseable timestamp");
    const std::string id(trim(row.substr(c1 + 1, c2 - c1 - 1)));
    if (id.empty()) throw ParseError(line_no, "empty consumer_id");
    const auto kwh = parse_energy(trim(row.substr(c2 + 1)));
    if (!kwh) throw ParseError(line_no, "unparseable kwh");
    if (*kwh < Fixed(0)) throw ParseError(line_no, "negative energy");

    const int day_number =
        std::chrono::sys_days{ts->date}.time_since_epoch().count();
    if (!seen.emplace(day_number, ts->second_of_day, id).second) {
      throw ParseError(line_no, "duplicate (timestamp, consumer) row");
    }
    consumers.insert(id);
    if (!cfg.calendar.includes(ts->date)) {
      excluded.insert(ts->date);
      continue;
    }
    auto& cell = days[ts->date].by_consumer[id];
    if (ts->second_of_day >= window_start && ts->second_of_day < window_end) {
      cell.first += *kwh;
    } else {
      cell.second += *kwh;
    }
  }

  IngestResult out;
  out.excluded_days = excluded.size();
  out.peak.consumers.assign(consumers.begin(), consumers.end());
  std::vector<const DayTotals*> complete;
  for (const auto& [date, totals] : days) {
    if (totals.by_consumer.size() == consumers.size()) {
      out.peak.days.push_back(date);
      complete.push_back(&totals);
    } else {
      ++out.dropped_days;
    }
  }
  if (complete.empty()) throw EmptyAfterFilter();

  const auto rows = static_cast<Eigen::Index>(complete.size());
  const auto cols = static_cast<Eigen::Index>(consumers.size());
  out.peak.values.resize(rows, cols);
  out.off_peak.resize(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    Eigen::Index c = 0;
    for (const auto& [id, cell] : complete[static_cast<std::size_t>(r)]->by_consumer) {
      out.peak.values(r, c) = cell.first;
      out.off_peak(r, c) = cell.second;
      ++c;
    }
  }
  return out;
}

IngestResult ingest_intervals(const std::filesystem::path& path,
                              const RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open data file " + path.string());
  return ingest_intervals(in, cfg);
}

}  // namespace storeshare
