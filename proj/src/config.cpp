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

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "storeshare/data.hpp"
#include "storeshare/errors.hpp"

namespace storeshare {

using nlohmann::json;

std::string format_date(Date d) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(d.year()),
                static_cast<unsigned>(d.month()), static_cast<unsigned>(d.day()));
  return buf;
}

Date parse_date(const std::string& text) {
  int y = 0;
  unsigned m = 0;
  unsigned d = 0;
  char tail = 0;
  if (text.size() != 10 ||
      std::sscanf(text.c_str(), "%4d-%2u-%2u%c", &y, &m, &d, &tail) != 3) {
    throw std::invalid_argument("not an ISO date (YYYY-MM-DD): '" + text + "'");
  }
  const Date date{std::chrono::year{y}, std::chrono::month{m},
                  std::chrono::day{d}};
  if (!date.ok()) throw std::invalid_argument("invalid calendar date '" + text + "'");
  return date;
}

bool CalendarFilter::includes(Date d) const {
  if (exclude_weekends) {
    const std::chrono::weekday wd{std::chrono::sys_days{d}};
    if (wd == std::chrono::Saturday || wd == std::chrono::Sunday) return false;
  }
  return !std::binary_search(holidays.begin(), holidays.end(), d);
}

Tariff RunConfig::tariff(int consumers) const {
  if (!individual_capital.empty() &&
      static_cast<int>(individual_capital.size()) != consumers) {
    throw DimensionMismatch("config lists " +
                            std::to_string(individual_capital.size()) +
                            " per-consumer capital costs for " +
                            std::to_string(consumers) + " consumers");
  }
  return Tariff(peak_price, off_peak_price, shared_capital, individual_capital);
}

Tariff RunConfig::tariff() const {
  return Tariff(peak_price, off_peak_price, shared_capital, individual_capital);
}

json RunConfig::to_json() const {
  json j;
  j["tariff"] = {{"pi_h", peak_price.to_string()},
                 {"pi_l", off_peak_price.to_string()},
                 {"pi_shared", shared_capital.to_string()}};
  if (!individual_capital.empty()) {
    json pi = json::array();
    for (Fixed f : individual_capital) pi.push_back(f.to_string());
    j["tariff"]["pi_i"] = pi;
  }
  j["peak_window"] = {{"start_hour", window.start_hour},
                      {"end_hour", window.end_hour}};
  json holidays = json::array();
  for (Date d : calendar.holidays) holidays.push_back(format_date(d));
  j["calendar"] = {{"exclude_weekends", calendar.exclude_weekends},
                   {"holidays", holidays}};
  j["scenario"] = scenario;
  j["seed"] = seed;
  j["output_dir"] = output_dir;
  json corr = json::array();
  for (Eigen::Index r = 0; r < synth.correlation.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < synth.correlation.cols(); ++c) {
      row.push_back(synth.correlation(r, c));
    }
    corr.push_back(row);
  }
  j["synthetic"] = {{"means", synth.means},
                    {"log_sigmas", synth.log_sigmas},
                    {"correlation", corr},
                    {"days", synth.days},
                    {"start_date", format_date(synth.start)}};
  return j;
}

namespace {

// Collects problems instead of stopping at the first one.
class Reader {
 public:
  std::vector<std::string> issues;

  void check_keys(const json& obj, const std::string& where,
                  std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) {
      issues.push_back(where + " must be an object");
      return;
    }
    for (const auto& [key, _] : obj.items()) {
      if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) {
            return key == a;
          }) == allowed.end()) {
        issues.push_back("unknown key '" + where + "." + key + "'");
      }
    }
  }

  void fixed(const json& obj, const char* key, const std::string& where,
             Fixed& out) {
    if (!obj.contains(key)) return;
    out = to_fixed(obj.at(key), where + "." + key, out);
  }

  Fixed to_fixed(const json& v, const std::string& where, Fixed fallback) {
    try {
      if (v.is_number()) return Fixed::from_double(v.get<double>());
      if (v.is_string()) return Fixed::parse(v.get<std::string>());
    } catch (const std::exception& e) {
      issues.push_back(where + ": " + e.what());
      return fallback;
    }
    issues.push_back(where + " must be a number");
    return fallback;
  }

  template <typename T>
  void number(const json& obj, const char* key, const std::string& where,
              T& out) {
    if (!obj.contains(key)) return;
    const json& v = obj.at(key);
    if (!v.is_number()) {
      issues.push_back(where + "." + key + " must be a number");
      return;
    }
    if constexpr (std::is_integral_v<T>) {
      if (!v.is_number_integer()) {
        issues.push_back(where + "." + key + " must be an integer");
        return;
      }
      if (std::is_unsigned_v<T> && v.get<double>() < 0) {
        issues.push_back(where + "." + key + " must be nonnegative");
        return;
      }
    }
    out = v.get<T>();
  }

  void date(const json& v, const std::string& where, Date& out) {
    try {
      out = parse_date(v.get<std::string>());
    } catch (const std::exception& e) {
      issues.push_back(where + ": " + e.what());
    }
  }
};

}  // namespace

RunConfig parse_config(const json& j) {
  RunConfig cfg;
  Reader r;
  if (j.is_null()) return cfg;
  r.check_keys(j, "config",
               {"tariff", "peak_window", "calendar", "scenario", "seed",
                "output_dir", "synthetic"});
  if (!r.issues.empty() && !j.is_object()) throw ValidationError(r.issues);

  if (j.contains("tariff")) {
    const json& t = j.at("tariff");
    r.check_keys(t, "tariff", {"pi_h", "pi_l", "pi_shared", "pi_i"});
    if (t.is_object()) {
      r.fixed(t, "pi_h", "tariff", cfg.peak_price);
      r.fixed(t, "pi_l", "tariff", cfg.off_peak_price);
      r.fixed(t, "pi_shared", "tariff", cfg.shared_capital);
      if (t.contains("pi_i")) {
        const json& pi = t.at("pi_i");
        if (!pi.is_array()) {
          r.issues.push_back("tariff.pi_i must be an array");
        } else {
          for (std::size_t k = 0; k < pi.size(); ++k) {
            cfg.individual_capital.push_back(r.to_fixed(
                pi[k], "tariff.pi_i[" + std::to_string(k) + "]", Fixed(0)));
          }
        }
      }
    }
  }
  if (j.contains("peak_window")) {
    const json& w = j.at("peak_window");
    r.check_keys(w, "peak_window", {"start_hour", "end_hour"});
    if (w.is_object()) {
      r.number(w, "start_hour", "peak_window", cfg.window.start_hour);
      r.number(w, "end_hour", "peak_window", cfg.window.end_hour);
    }
  }
  if (j.contains("calendar")) {
    const json& c = j.at("calendar");
    r.check_keys(c, "calendar", {"exclude_weekends", "holidays"});
    if (c.is_object()) {
      if (c.contains("exclude_weekends")) {
        if (c.at("exclude_weekends").is_boolean()) {
          cfg.calendar.exclude_weekends = c.at("exclude_weekends").get<bool>();
        } else {
          r.issues.push_back("calendar.exclude_weekends must be a boolean");
        }
      }
      if (c.contains("holidays")) {
        const json& h = c.at("holidays");
        if (!h.is_array()) {
          r.issues.push_back("calendar.holidays must be an array of dates");
        } else {
          for (std::size_t k = 0; k < h.size(); ++k) {
            Date d{};
            const std::string where = "calendar.holidays[" + std::to_string(k) + "]";
            if (!h[k].is_string()) {
              r.issues.push_back(where + " must be a date string");
              continue;
            }
            r.date(h[k], where, d);
            if (d.ok()) cfg.calendar.holidays.push_back(d);
          }
          std::sort(cfg.calendar.holidays.begin(), cfg.calendar.holidays.end());
        }
      }
    }
  }
  r.number(j, "scenario", "config", cfg.scenario);
  r.number(j, "seed", "config", cfg.seed);
  if (j.contains("output_dir")) {
    if (j.at("output_dir").is_string()) {
      cfg.output_dir = j.at("output_dir").get<std::string>();
    } else {
      r.issues.push_back("config.output_dir must be a string");
    }
  }
  if (j.contains("synthetic")) {
    const json& s = j.at("synthetic");
    r.check_keys(s, "synthetic",
                 {"means", "log_sigmas", "correlation", "days", "start_date"});
    if (s.is_object()) {
      try {
        if (s.contains("means")) cfg.synth.means = s.at("means").get<std::vector<double>>();
        if (s.contains("log_sigmas")) {
          cfg.synth.log_sigmas = s.at("log_sigmas").get<std::vector<double>>();
        }
        if (s.contains("correlation")) {
          const auto rows = s.at("correlation").get<std::vector<std::vector<double>>>();
          cfg.synth.correlation.resize(static_cast<Eigen::Index>(rows.size()),
                                       static_cast<Eigen::Index>(rows.size()));
          for (std::size_t a = 0; a < rows.size(); ++a) {
            if (rows[a].size() != rows.size()) {
              r.issues.push_back("synthetic.correlation must be square");
              break;
            }
            for (std::size_t b = 0; b < rows.size(); ++b) {
              cfg.synth.correlation(static_cast<Eigen::Index>(a),
                                    static_cast<Eigen::Index>(b)) = rows[a][b];
            }
          }
        }
      } catch (const json::exception& e) {
        r.issues.push_back(std::string("synthetic: ") + e.what());
      }
      r.number(s, "days", "synthetic", cfg.synth.days);
      if (s.contains("start_date")) r.date(s.at("start_date"), "synthetic.start_date", cfg.synth.start);
    }
  }
  cfg.synth.seed = cfg.seed;

  if (!(cfg.window.start_hour >= 0 && cfg.window.start_hour < cfg.window.end_hour &&
        cfg.window.end_hour <= 24)) {
    r.issues.push_back("peak window must satisfy 0 <= start_hour < end_hour <= 24");
  }
  if (cfg.scenario != 1 && cfg.scenario != 2) {
    r.issues.push_back("scenario must be 1 or 2");
  }
  const int n = cfg.synth.consumers();
  if (static_cast<int>(cfg.synth.log_sigmas.size()) != n ||
      cfg.synth.correlation.rows() != n || cfg.synth.correlation.cols() != n) {
    r.issues.push_back("synthetic means, log_sigmas and correlation sizes differ");
  }
  if (cfg.synth.days < 0) r.issues.push_back("synthetic.days must be nonnegative");

  std::vector<std::string> not_viable;
  Tariff::collect_violations(cfg.peak_price, cfg.off_peak_price,
                             cfg.shared_capital, cfg.individual_capital,
                             r.issues, not_viable);
  if (!r.issues.empty()) {
    r.issues.insert(r.issues.end(), not_viable.begin(), not_viable.end());
    throw ValidationError(r.issues);
  }
  if (!not_viable.empty()) throw ViabilityError(not_viable);
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return RunConfig{};
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError({std::string("config is not valid JSON: ") + e.what()});
  }
  return parse_config(j);
}

}  // namespace storeshare
