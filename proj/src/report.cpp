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

#include "storeshare/report.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <random>
#include <sstream>

#include <fmt/format.h>

#include "storeshare/allocation.hpp"
#include "storeshare/cost.hpp"
#include "storeshare/errors.hpp"
#include "storeshare/game.hpp"
#include "storeshare/planner.hpp"

namespace storeshare {
namespace {

using nlohmann::json;

constexpr const char* kQuantileConvention =
    "inf: smallest observed value c with F(c) >= gamma; gamma = 0 gives 0";
constexpr std::size_t kMaxListedViolations = 10;

double d(const Rational& q) { return to_double(q); }
double d(Fixed f) { return f.to_double(); }

std::string coalition_name(Coalition s, const std::vector<std::string>& ids) {
  std::string out = "{";
  bool first = true;
  for (int i : s.members()) {
    if (!first) out += ",";
    out += ids[static_cast<std::size_t>(i)];
    first = false;
  }
  return out + "}";
}

std::vector<Fixed> day_row(const DailyPeakSeries& series, Eigen::Index day) {
  std::vector<Fixed> x(static_cast<std::size_t>(series.consumer_count()));
  for (int i = 0; i < series.consumer_count(); ++i)
    x[static_cast<std::size_t>(i)] = series.values(day, i);
  return x;
}

MoneyVector equal_split(const Money& total, int n) {
  return MoneyVector::Constant(n, total / Money(n));
}

void keep_worst(std::optional<Money>& worst, const std::optional<Money>& candidate) {
  if (candidate && (!worst || *candidate < *worst)) worst = candidate;
}

void note(SuiteResult& suite, std::string text) {
  suite.pass = false;
  if (suite.violations.size() < kMaxListedViolations)
    suite.violations.push_back(std::move(text));
}

void absorb_subadditivity(SuiteResult& suite, const SubadditivityReport& r,
                          const std::vector<std::string>& ids,
                          const std::string& where) {
  suite.mode = to_string(r.mode);
  suite.checks += r.pairs_checked;
  keep_worst(suite.worst_slack, r.worst_slack);
  suite.tolerance = std::max(suite.tolerance, r.largest_tolerance);
  for (const auto& v : r.violations) {
    note(suite, fmt::format("{}{} + {}: joint {:.4f} > separate {:.4f} (tolerance {:.4f})",
                            where, coalition_name(v.coalition, ids),
                            coalition_name(v.other, ids), d(v.lhs), d(v.rhs),
                            d(v.tolerance)));
  }
}

void absorb_core(SuiteResult& suite, const CoreCheckReport& r,
                 const std::vector<std::string>& ids, const std::string& where) {
  suite.mode = to_string(r.mode);
  suite.checks += r.coalitions_checked;
  keep_worst(suite.worst_slack, r.worst_slack);
  suite.tolerance = std::max(suite.tolerance, r.largest_tolerance);
  if (!r.budget_balanced)
    note(suite, fmt::format("{}allocation misses the grand value by {:.4f}", where,
                            d(r.budget_gap)));
  for (const auto& v : r.violations) {
    note(suite, fmt::format("{}{}: allocated {:.4f} > value {:.4f} (tolerance {:.4f})",
                            where, coalition_name(v.coalition, ids), d(v.lhs),
                            d(v.rhs), d(v.tolerance)));
  }
}

json money_array(const MoneyVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(d(v(i)));
  return out;
}

json suite_json(const SuiteResult& s) {
  json out = {{"name", s.name},
              {"property", s.property},
              {"mode", s.mode},
              {"pass", s.pass},
              {"checks", s.checks},
              {"worst_slack", s.worst_slack ? json(d(*s.worst_slack)) : json(nullptr)},
              {"tolerance", d(s.tolerance)},
              {"violations", s.violations}};
  return out;
}

std::string hex(const unsigned char* bytes, unsigned len) {
  std::string out;
  for (unsigned i = 0; i < len; ++i) out += fmt::format("{:02x}", bytes[i]);
  return out;
}

std::string sanitize(const std::string& id) {
  std::string out;
  for (char c : id)
    out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') ? c : '_';
  return out;
}

}  // namespace

bool VerificationSection::all_pass() const {
  return std::all_of(suites.begin(), suites.end(),
                     [](const SuiteResult& s) { return s.pass; });
}

DataSummary summarize(const DailyPeakSeries& series) {
  DataSummary s;
  s.source = "synthetic";
  s.consumers = series.consumers;
  s.days = series.days.size();
  if (!series.days.empty()) {
    s.first_day = format_date(series.days.front());
    s.last_day = format_date(series.days.back());
  }
  return s;
}

DataSummary summarize(const IngestResult& ingest) {
  DataSummary s = summarize(ingest.peak);
  s.source = "csv";
  s.dropped_days = ingest.dropped_days;
  s.excluded_days = ingest.excluded_days;
  return s;
}

PlanSection make_plan_section(const DailyPeakSeries& series, const RunConfig& cfg,
                              std::size_t min_days) {
  series.validate();
  if (series.days.size() < min_days) {
    throw ValidationError({fmt::format("planning needs at least {} days of data, got {}",
                                       min_days, series.days.size())});
  }
  const int n = series.consumer_count();
  const Tariff t = cfg.tariff(n);
  const JointSample j(series);
  const CapacityPlan plan = plan_capacities(j, t);
  const AllocationResult zeta = allocation_scenario2_expected(j, plan, t);
  const BenefitReport benefit = benefit_scenario2(j, plan, t);

  PlanSection out;
  out.gamma = plan.gamma;
  out.no_storage = plan.no_storage();
  out.boundary = plan.grand.boundary;
  Money separate = 0;
  for (int i = 0; i < n; ++i) {
    const CoalitionOptimum& o = plan.individual[static_cast<std::size_t>(i)];
    out.consumers.push_back({series.consumers[static_cast<std::size_t>(i)], o.capacity,
                             o.expected_cost, o.direct_cost, zeta.shares(i),
                             benefit.per_consumer(i), o.tolerance});
    separate += o.expected_cost;
    out.boundary = out.boundary || o.boundary;
  }
  out.grand_capacity = plan.grand.capacity;
  out.grand_cost = plan.grand.expected_cost;
  out.grand_direct_cost = plan.grand.direct_cost;
  out.grand_tolerance = plan.grand.tolerance;
  out.zeta_total = zeta.total();
  out.total_benefit = benefit.total;
  out.budget_balanced = out.zeta_total == out.grand_cost;
  out.cost_reduction = separate > 0 ? (separate - out.grand_cost) / separate : Rational(0);
  return out;
}

std::vector<CdfCurve> make_cdf_curves(const DailyPeakSeries& series) {
  series.validate();
  const JointSample j(series);
  const int n = series.consumer_count();
  auto curve = [](std::string id, const EmpiricalDistribution& dist) {
    CdfCurve c{std::move(id), {}};
    const auto support = dist.support();
    const auto total = static_cast<std::int64_t>(support.size());
    for (std::size_t k = 0; k < support.size(); ++k) {
      if (k + 1 < support.size() && support[k + 1] == support[k]) continue;
      c.points.emplace_back(support[k],
                            Rational(static_cast<std::int64_t>(k + 1), total));
    }
    return c;
  };
  std::vector<CdfCurve> out;
  for (int i = 0; i < n; ++i)
    out.push_back(curve(series.consumers[static_cast<std::size_t>(i)], j.marginal(i)));
  out.push_back(curve("aggregate", aggregate(j, Coalition::grand(n))));
  return out;
}

SimulationSection make_simulation_section(const DailyPeakSeries& series,
                                          const RunConfig& cfg,
                                          std::size_t days, int scenario,
                                          std::uint64_t seed) {
  series.validate();
  if (scenario != 1 && scenario != 2)
    throw ValidationError({fmt::format("scenario must be 1 or 2, got {}", scenario)});
  const int n = series.consumer_count();
  const auto history = static_cast<std::size_t>(series.day_count());
  if (history == 0) throw EmptyHistory();
  const Tariff t = cfg.tariff(n);
  const JointSample j(series);
  const CapacityPlan plan = plan_capacities(j, t);
  const CapacityProfile caps(plan.individual_capacities());

  SimulationSection out;
  out.scenario = scenario;
  out.resampled = days > history;

  MoneyVector zeta;
  if (scenario == 2) {
    zeta = allocation_scenario2_expected(j, plan, t).shares;
    out.limit = zeta;
  } else {
    out.limit = MoneyVector::Zero(n);
    for (std::size_t k = 0; k < history; ++k) {
      const auto x = day_row(series, static_cast<Eigen::Index>(k));
      out.limit += allocation_scenario1(x, caps, t).shares;
    }
    out.limit /= Money(static_cast<std::int64_t>(history));
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, history - 1);
  MoneyVector running = MoneyVector::Zero(n);
  out.rows.reserve(days);
  out.trajectory.reserve(days);
  for (std::size_t k = 0; k < days; ++k) {
    const std::size_t src = out.resampled ? pick(rng) : k;
    const auto x = day_row(series, static_cast<Eigen::Index>(src));
    SimulationRow row;
    row.index = k + 1;
    row.source_day = src;
    row.date = series.days[src];
    if (scenario == 2) {
      row.total = joint_realized_cost(x, plan, t);
      row.shares = allocation_scenario2_realized(zeta, row.total).shares;
    } else {
      row.total = coalition_realized_cost_u(Coalition::grand(n), x, caps, t);
      row.shares = allocation_scenario1(x, caps, t).shares;
    }
    if (row.shares.sum() != row.total) out.budget_balanced = false;
    running += row.shares;
    out.trajectory.push_back(running / Money(static_cast<std::int64_t>(k + 1)));
    out.rows.push_back(std::move(row));
  }
  return out;
}

VerificationSection make_verification_section(const DailyPeakSeries& series,
                                              const RunConfig& cfg,
                                              const VerifyOptions& options) {
  series.validate();
  const int n = series.consumer_count();
  if (n > options.max_players) throw TooManyPlayers(n, options.max_players);
  const Tariff t = cfg.tariff(n);
  const JointSample j(series);
  const CapacityPlan plan = plan_capacities(j, t);
  const CapacityProfile caps(plan.individual_capacities());
  const auto& ids = series.consumers;
  const Coalition grand = Coalition::grand(n);
  CheckOptions check;
  check.seed = options.seed;

  SuiteResult pooled_sub{"pooled-subadditivity", "u(S u T) <= u(S) + u(T)", "", true, 0, {}, 0, {}};
  SuiteResult pooled_core{"pooled-core", "pooled allocation lies in the core of u", "", true, 0, {}, 0, {}};
  SuiteResult joint_sub{"joint-subadditivity", "v(S u T) <= v(S) + v(T)", "", true, 0, {}, 0, {}};
  SuiteResult joint_core{"joint-core", "expected-cost allocation lies in the core of v", "", true, 0, {}, 0, {}};
  SuiteResult benefit{"benefit-consistency", "benefit formulas match cost differences", "exhaustive", true, 0, {}, 0, {}};

  const std::size_t checked_days =
      std::min(options.days, static_cast<std::size_t>(series.day_count()));
  for (std::size_t k = 0; k < checked_days; ++k) {
    const auto x = day_row(series, static_cast<Eigen::Index>(k));
    const std::string where = format_date(series.days[k]) + " ";
    GameInstance g = n <= kMaxMaterializedPlayers ? materialize_game(x, caps, t)
                                                  : pooled_storage_game(x, caps, t);
    absorb_subadditivity(pooled_sub, check_subadditivity(g, check), ids, where);

    const AllocationResult xi = allocation_scenario1(x, caps, t);
    const MoneyVector alloc = options.equal_split ? equal_split(g(grand).value, n) : xi.shares;
    const CoreCheckReport core = check_core_membership(g, alloc, check);
    absorb_core(pooled_core, core, ids, where);
    if (!options.equal_split && core.mode == CheckMode::kExhaustive) {
      for (std::uint32_t m = 1; m <= grand.mask(); ++m) {
        const Coalition s = Coalition(m);
        if (core.slack[m] != pooled_allocation_slack(s, x, caps, t))
          note(pooled_core, where + coalition_name(s, ids) +
                                ": slack differs from its closed form");
      }
    }

    const BenefitReport b = benefit_scenario1(x, caps, t);
    Money separate = 0;
    for (int i = 0; i < n; ++i) {
      const Money own = g(Coalition::singleton(i)).value;
      separate += own;
      ++benefit.checks;
      if (b.per_consumer(i) != own - xi.shares(i))
        note(benefit, fmt::format("{}{}: pooled benefit differs from u(i) - xi_i", where, ids[i]));
    }
    ++benefit.checks;
    if (b.total != separate - g(grand).value)
      note(benefit, where + "pooled total benefit differs from sum u(i) - u(N)");
  }

  GameInstance v = n <= kExhaustiveJointPlayers ? materialize_game(j, t)
                                                : joint_investment_game(j, t);
  absorb_subadditivity(joint_sub, check_subadditivity(v, check), ids, "");
  const AllocationResult zeta = allocation_scenario2_expected(j, plan, t);
  const MoneyVector alloc =
      options.equal_split ? equal_split(v(grand).value, n) : zeta.shares;
  absorb_core(joint_core, check_core_membership(v, alloc, check), ids, "");

  const BenefitReport b = benefit_scenario2(j, plan, t);
  Money separate = 0;
  for (int i = 0; i < n; ++i) {
    const CoalitionOptimum& o = plan.individual[static_cast<std::size_t>(i)];
    separate += o.expected_cost;
    ++benefit.checks;
    if (b.per_consumer(i) != o.expected_cost - zeta.shares(i))
      note(benefit, fmt::format("{}: joint benefit differs from J*_i - zeta_i", ids[i]));
  }
  ++benefit.checks;
  if (b.total != separate - plan.grand.expected_cost)
    note(benefit, "joint total benefit differs from sum J*_i - J*_N");

  VerificationSection out;
  out.suites = {pooled_sub, pooled_core, joint_sub, joint_core, benefit};
  return out;
}

std::string config_hash(const RunConfig& cfg) {
  const std::string text = cfg.to_json().dump();
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned len = 0;
  if (EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error("sha256 failed");
  return hex(digest, len);
}

nlohmann::json to_json(const RunReport& r) {
  json out;
  out["report_version"] = kReportVersion;
  out["seed"] = r.config.seed;
  out["config_hash"] = config_hash(r.config);
  out["config"] = r.config.to_json();
  out["quantile_convention"] = kQuantileConvention;
  out["data"] = {{"source", r.data.source},
                 {"consumers", r.data.consumers},
                 {"days", r.data.days},
                 {"dropped_days", r.data.dropped_days},
                 {"excluded_days", r.data.excluded_days},
                 {"first_day", r.data.first_day},
                 {"last_day", r.data.last_day}};

  if (r.plan) {
    const PlanSection& p = *r.plan;
    json rows = json::array();
    for (const auto& c : p.consumers) {
      rows.push_back({{"id", c.id},
                      {"capacity", d(c.capacity)},
                      {"expected_cost", d(c.expected_cost)},
                      {"direct_cost", d(c.direct_cost)},
                      {"zeta", d(c.zeta)},
                      {"benefit", d(c.benefit)},
                      {"tolerance", d(c.tolerance)}});
    }
    out["plan"] = {{"gamma", d(p.gamma)},
                   {"gamma_exact", p.gamma.str()},
                   {"regime", p.no_storage ? "no-storage" : "storage"},
                   {"boundary", p.boundary},
                   {"consumers", rows},
                   {"grand", {{"capacity", d(p.grand_capacity)},
                              {"expected_cost", d(p.grand_cost)},
                              {"direct_cost", d(p.grand_direct_cost)},
                              {"tolerance", d(p.grand_tolerance)},
                              {"zeta_total", d(p.zeta_total)}}},
                   {"budget_balanced", p.budget_balanced},
                   {"cost_reduction_fraction", d(p.cost_reduction)}};
    json per = json::object();
    for (const auto& c : p.consumers) per[c.id] = d(c.benefit);
    out["benefit"] = {{"kind", "joint-expected"},
                      {"total", d(p.total_benefit)},
                      {"per_consumer", per}};
  }

  if (!r.cdfs.empty()) {
    json curves = json::array();
    for (const auto& c : r.cdfs) {
      json kwh = json::array(), f = json::array();
      for (const auto& [x, p] : c.points) {
        kwh.push_back(d(x));
        f.push_back(d(p));
      }
      curves.push_back({{"id", c.id}, {"kwh", kwh}, {"cdf", f}});
    }
    out["cdf"] = curves;
  }

  if (r.simulation) {
    const SimulationSection& s = *r.simulation;
    json rows = json::array();
    for (const auto& row : s.rows) {
      rows.push_back({{"day", row.index},
                      {"date", format_date(row.date)},
                      {"source_day", row.source_day},
                      {"total", d(row.total)},
                      {"shares", money_array(row.shares)}});
    }
    json traj = json::array();
    for (const auto& m : s.trajectory) traj.push_back(money_array(m));
    out["simulation"] = {{"scenario", s.scenario},
                         {"days", s.rows.size()},
                         {"resampled", s.resampled},
                         {"budget_balanced", s.budget_balanced},
                         {"limit", money_array(s.limit)},
                         {"rows", rows},
                         {"trajectory", traj}};
  }

  if (r.verification) {
    json suites = json::array();
    for (const auto& s : r.verification->suites) suites.push_back(suite_json(s));
    out["verification"] = {{"all_pass", r.verification->all_pass()}, {"suites", suites}};
  }
  return out;
}

std::string render_text(const RunReport& r) {
  // Render from the JSON form so both carry the same numbers.
  const json j = to_json(r);
  std::string out;
  auto num = [](const json& v) { return fmt::format("{:.4f}", v.get<double>()); };

  out += fmt::format("storeshare report v{}\n", j["report_version"].get<int>());
  out += fmt::format("seed         {}\n", j["seed"].get<std::uint64_t>());
  out += fmt::format("config hash  {}\n", j["config_hash"].get<std::string>());
  out += fmt::format("quantile     {}\n", j["quantile_convention"].get<std::string>());
  const json& data = j["data"];
  out += fmt::format("data         {} days ({} .. {}), {} consumers, source {}, "
                     "{} dropped, {} excluded\n",
                     data["days"].get<std::size_t>(), data["first_day"].get<std::string>(),
                     data["last_day"].get<std::string>(), data["consumers"].size(),
                     data["source"].get<std::string>(),
                     data["dropped_days"].get<std::size_t>(),
                     data["excluded_days"].get<std::size_t>());

  if (j.contains("plan")) {
    const json& p = j["plan"];
    out += fmt::format("\nPLAN  gamma {} ({})  regime {}\n", num(p["gamma"]),
                       p["gamma_exact"].get<std::string>(), p["regime"].get<std::string>());
    out += fmt::format("{:<12} {:>12} {:>14} {:>14} {:>14} {:>12}\n", "consumer",
                       "capacity", "expected_cost", "zeta", "benefit", "tolerance");
    for (const auto& c : p["consumers"]) {
      out += fmt::format("{:<12} {:>12} {:>14} {:>14} {:>14} {:>12}\n",
                         c["id"].get<std::string>(), num(c["capacity"]),
                         num(c["expected_cost"]), num(c["zeta"]), num(c["benefit"]),
                         num(c["tolerance"]));
    }
    const json& g = p["grand"];
    out += fmt::format("{:<12} {:>12} {:>14} {:>14} {:>14} {:>12}\n", "grand",
                       num(g["capacity"]), num(g["expected_cost"]), num(g["zeta_total"]),
                       num(j["benefit"]["total"]), num(g["tolerance"]));
    out += fmt::format("budget balanced      {}\n", p["budget_balanced"].get<bool>() ? "yes" : "no");
    out += fmt::format("cost reduction       {}\n", num(p["cost_reduction_fraction"]));
  }

  if (j.contains("cdf")) {
    out += "\nCDF support points\n";
    for (const auto& c : j["cdf"])
      out += fmt::format("{:<12} {:>8}\n", c["id"].get<std::string>(), c["kwh"].size());
  }

  if (j.contains("simulation")) {
    const json& s = j["simulation"];
    out += fmt::format("\nSIMULATION  scenario {}  days {}  resampled {}  budget balanced {}\n",
                       s["scenario"].get<int>(), s["days"].get<std::size_t>(),
                       s["resampled"].get<bool>() ? "yes" : "no",
                       s["budget_balanced"].get<bool>() ? "yes" : "no");
    std::string head = fmt::format("{:>6} {:<10} {:>12}", "day", "date", "total");
    for (const auto& id : data["consumers"]) head += fmt::format(" {:>12}", id.get<std::string>());
    out += head + "\n";
    for (const auto& row : s["rows"]) {
      std::string line = fmt::format("{:>6} {:<10} {:>12}", row["day"].get<std::size_t>(),
                                     row["date"].get<std::string>(), num(row["total"]));
      for (const auto& v : row["shares"]) line += fmt::format(" {:>12}", num(v));
      out += line + "\n";
    }
    std::string lim = fmt::format("{:>6} {:<10} {:>12}", "", "limit", "");
    for (const auto& v : s["limit"]) lim += fmt::format(" {:>12}", num(v));
    out += lim + "\n";
    if (!s["trajectory"].empty()) {
      std::string last = fmt::format("{:>6} {:<10} {:>12}", "", "mean", "");
      for (const auto& v : s["trajectory"].back()) last += fmt::format(" {:>12}", num(v));
      out += last + "\n";
    }
  }

  if (j.contains("verification")) {
    const json& v = j["verification"];
    out += fmt::format("\nVERIFICATION  {}\n", v["all_pass"].get<bool>() ? "PASS" : "FAIL");
    for (const auto& s : v["suites"]) {
      const std::string worst = s["worst_slack"].is_null() ? "-" : num(s["worst_slack"]);
      out += fmt::format("{:<22} {:<4} {:<10} checks {:>10}  worst slack {:>12}  tolerance {:>10}\n",
                         s["name"].get<std::string>(), s["pass"].get<bool>() ? "PASS" : "FAIL",
                         s["mode"].get<std::string>(), s["checks"].get<std::uint64_t>(),
                         worst, num(s["tolerance"]));
      for (const auto& msg : s["violations"]) out += "    " + msg.get<std::string>() + "\n";
    }
  }
  return out;
}

std::vector<std::filesystem::path> write_plot_data(const nlohmann::json& report,
                                                   const std::filesystem::path& dir) {
  const bool has_cdf = report.contains("cdf");
  const bool has_sim = report.contains("simulation");
  if (!has_cdf && !has_sim) throw MissingSection("cdf or simulation");
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;

  if (has_cdf) {
    for (const auto& c : report["cdf"]) {
      const auto path = dir / ("cdf_" + sanitize(c["id"].get<std::string>()) + ".tsv");
      std::ofstream f(path);
      f << "kwh\tcdf\n";
      const auto& kwh = c["kwh"];
      const auto& cdf = c["cdf"];
      for (std::size_t k = 0; k < kwh.size(); ++k)
        f << fmt::format("{}\t{}\n", kwh[k].get<double>(), cdf[k].get<double>());
      written.push_back(path);
    }
  }
  if (has_sim) {
    const auto path = dir / "trajectory.tsv";
    std::ofstream f(path);
    std::string head = "day";
    for (const auto& id : report["data"]["consumers"]) head += "\t" + id.get<std::string>();
    f << head << "\n";
    std::size_t day = 0;
    for (const auto& m : report["simulation"]["trajectory"]) {
      std::string line = std::to_string(++day);
      for (const auto& v : m) line += fmt::format("\t{}", v.get<double>());
      f << line << "\n";
    }
    written.push_back(path);
  }
  return written;
}

void write_run_directory(const RunReport& report, const RunInputs& inputs,
                         const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const json j = to_json(report);
  std::ofstream(dir / "report.json") << j.dump(2) << "\n";
  std::ofstream(dir / "report.txt") << render_text(report);
  const json manifest = {{"report_version", kReportVersion},
                         {"inputs", {{"config", inputs.config.empty() ? json(nullptr) : json(inputs.config)},
                                     {"data", inputs.data.empty() ? json(nullptr) : json(inputs.data)}}},
                         {"seed", report.config.seed},
                         {"config_hash", j["config_hash"]},
                         {"files", {"report.json", "report.txt"}}};
  std::ofstream(dir / "manifest.json") << manifest.dump(2) << "\n";
}

}  // namespace storeshare
