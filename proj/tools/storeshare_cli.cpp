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

// storeshare: plan, simulate and verify shared household storage.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "storeshare/data.hpp"
#include "storeshare/errors.hpp"
#include "storeshare/report.hpp"

namespace fs = std::filesystem;
using namespace storeshare;

namespace {

struct Common {
  std::string config;
  std::string data;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<int> scenario;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--config", c.config, "JSON config file")->check(CLI::ExistingFile);
  app->add_option("--data", c.data, "interval CSV (timestamp,consumer_id,kwh); synthetic if omitted")
      ->check(CLI::ExistingFile);
  app->add_option("--out", c.out, "run directory (default: output_dir from the config)");
  app->add_option("--seed", c.seed, "seed for every random draw");
  app->add_option("--scenario", c.scenario, "1: pooled storage, 2: joint investment")
      ->check(CLI::IsMember({1, 2}));
}

RunConfig resolve_config(const Common& c) {
  RunConfig cfg = c.config.empty() ? RunConfig{} : load_config(c.config);
  if (c.seed) cfg.seed = *c.seed;
  if (c.scenario) cfg.scenario = *c.scenario;
  cfg.synth.seed = cfg.seed;
  return cfg;
}

RunReport load_data(const Common& c, const RunConfig& cfg, DailyPeakSeries& series) {
  RunReport r;
  r.config = cfg;
  if (c.data.empty()) {
    series = generate_synthetic(cfg.synth, cfg.calendar);
    r.data = summarize(series);
  } else {
    IngestResult in = ingest_intervals(fs::path(c.data), cfg);
    series = std::move(in.peak);
    r.data = summarize(in);
  }
  return r;
}

fs::path out_dir(const Common& c, const RunConfig& cfg) {
  return c.out.empty() ? fs::path(cfg.output_dir) : fs::path(c.out);
}

void finish(const RunReport& r, const Common& c) {
  const fs::path dir = out_dir(c, r.config);
  write_run_directory(r, {c.config, c.data}, dir);
  std::cout << render_text(r);
  std::cout << "\nwrote " << (dir / "report.json").string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cost sharing for jointly used household energy storage"};
  app.require_subcommand(1);

  Common plan_opts, sim_opts, verify_opts;
  auto* plan = app.add_subcommand("plan", "optimal capacities, expected costs and allocation");
  add_common(plan, plan_opts);

  auto* simulate = app.add_subcommand("simulate", "daily realized cost sharing");
  add_common(simulate, sim_opts);
  std::size_t sim_days = 100;
  simulate->add_option("--days", sim_days, "days to simulate");

  auto* verify = app.add_subcommand("verify", "check the cooperative-game properties on the data");
  add_common(verify, verify_opts);
  int max_n = VerifyOptions::kMaxVerifyPlayers;
  std::size_t verify_days = 10;
  bool equal_split = false;
  verify->add_option("--max-n", max_n, "refuse data with more consumers than this");
  verify->add_option("--days", verify_days, "realized days checked for the pooled game");
  verify->add_flag("--equal-split", equal_split, "check an equal split instead of the closed-form allocations");

  auto* synth = app.add_subcommand("synth", "write a synthetic interval CSV");
  std::string synth_config, synth_out = "synthetic.csv";
  std::optional<std::uint64_t> synth_seed;
  std::optional<int> synth_days;
  synth->add_option("--config", synth_config, "JSON config file")->check(CLI::ExistingFile);
  synth->add_option("--out", synth_out, "CSV path");
  synth->add_option("--seed", synth_seed, "seed");
  synth->add_option("--days", synth_days, "number of kept days");

  auto* plotdata = app.add_subcommand("plotdata", "tab-separated plot inputs from a report");
  std::string report_path, plot_out;
  plotdata->add_option("--report", report_path, "report.json")->required()->check(CLI::ExistingFile);
  plotdata->add_option("--out", plot_out, "directory (default: next to the report)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*plan) {
      const RunConfig cfg = resolve_config(plan_opts);
      DailyPeakSeries series;
      RunReport r = load_data(plan_opts, cfg, series);
      r.plan = make_plan_section(series, cfg);
      r.cdfs = make_cdf_curves(series);
      finish(r, plan_opts);
      return r.plan->budget_balanced ? 0 : 1;
    }
    if (*simulate) {
      const RunConfig cfg = resolve_config(sim_opts);
      DailyPeakSeries series;
      RunReport r = load_data(sim_opts, cfg, series);
      r.plan = make_plan_section(series, cfg);
      r.cdfs = make_cdf_curves(series);
      r.simulation = make_simulation_section(series, cfg, sim_days, cfg.scenario, cfg.seed);
      finish(r, sim_opts);
      return r.simulation->budget_balanced ? 0 : 1;
    }
    if (*verify) {
      const RunConfig cfg = resolve_config(verify_opts);
      DailyPeakSeries series;
      RunReport r = load_data(verify_opts, cfg, series);
      VerifyOptions opts;
      opts.max_players = max_n;
      opts.days = verify_days;
      opts.equal_split = equal_split;
      opts.seed = cfg.seed;
      r.verification = make_verification_section(series, cfg, opts);
      r.plan = make_plan_section(series, cfg, 1);
      finish(r, verify_opts);
      return r.verification->all_pass() ? 0 : 1;
    }
    if (*synth) {
      RunConfig cfg = synth_config.empty() ? RunConfig{} : load_config(synth_config);
      if (synth_seed) cfg.seed = *synth_seed;
      cfg.synth.seed = cfg.seed;
      if (synth_days) cfg.synth.days = *synth_days;
      const DailyPeakSeries series = generate_synthetic(cfg.synth, cfg.calendar);
      const fs::path out(synth_out);
      if (out.has_parent_path()) fs::create_directories(out.parent_path());
      std::ofstream f(out);
      write_intervals_csv(f, series, cfg.window);
      std::cout << "wrote " << series.days.size() << " days for "
                << series.consumer_count() << " consumers to " << out.string() << "\n";
      return 0;
    }
    if (*plotdata) {
      std::ifstream in(report_path);
      const nlohmann::json report = nlohmann::json::parse(in);
      const fs::path dir = plot_out.empty() ? fs::path(report_path).parent_path() : fs::path(plot_out);
      for (const auto& p : write_plot_data(report, dir)) std::cout << p.string() << "\n";
      return 0;
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
