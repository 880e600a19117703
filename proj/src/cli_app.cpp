// Copyright 2026 The ldpfair Authors
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

#include "ldpfair/cli.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ldpfair/error.hpp"
#include "ldpfair/verify.hpp"

namespace ldpfair {

namespace {

struct SourceOpts {
  std::string scenario;
  std::string dist_path;

  std::string label() const { return scenario.empty() ? dist_path : scenario; }

  JointDistribution resolve(ScenarioKind* kind) const {
    if (!scenario.empty()) {
      const Scenario& sc = builtin_scenario(scenario);
      if (kind) *kind = sc.kind;
      return sc.dist;
    }
    std::ifstream in(dist_path);
    if (!in) {
      throw Error(Errc::IoError, "cannot read '" + dist_path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    if (kind) *kind = ScenarioKind::Synthetic;
    return parse_distribution(buf.str());
  }
};

std::vector<double> parse_eps_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      double v = std::stod(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error(Errc::InvalidConfig, "bad epsilon value '" + item + "'");
    }
  }
  if (out.empty()) throw Error(Errc::InvalidConfig, "empty epsilon list");
  return out;
}

std::vector<double> log_spaced(double lo, double hi, size_t points) {
  if (!(lo > 0) || !(hi > 0) || hi < lo || points < 1) {
    throw Error(Errc::InvalidConfig, "need 0 < eps-min <= eps-max and points >= 1");
  }
  std::vector<double> out;
  if (points == 1) return {lo};
  double llo = std::log(lo), lhi = std::log(hi);
  for (size_t i = 0; i < points; ++i) {
    out.push_back(std::exp(llo + (lhi - llo) * static_cast<double>(i) /
                                     static_cast<double>(points - 1)));
  }
  return out;
}

void flush_warnings(const std::vector<std::string>& warnings,
                    std::ostream& err) {
  for (const auto& w : warnings) err << "warning: " << w << "\n";
}

bool assumptions_violated(const AssumptionReport& a) {
  return a.uniform_discrimination.status ==
             UniformDiscrimination::Status::Violated ||
         !a.reliable_y.holds;
}

}  // namespace

AnalyzeReport build_analyze_report(const JointDistribution& dist,
                                   const std::string& scenario_label,
                                   const std::vector<double>& eps,
                                   bool per_group,
                                   std::vector<std::string>* warnings) {
  AnalyzeReport r;
  r.scenario = scenario_label;
  r.x_domain = dist.x_domain();
  r.epsilon = eps;
  PredictionTable base = baseline_predictor(dist);
  r.baseline = evaluate_predictor(base, dist);
  if (per_group) r.rates_baseline = group_rates(base, dist);
  for (double e : eps) {
    RRParams params = RRParams::from_epsilon(e);
    PredictionTable ldp = ldp_predictor_closed_form(dist, params);
    if (warnings) {
      for (const BoundaryWarning& w : ldp.boundary_warnings()) {
        warnings->push_back("epsilon " + format12(e) +
                            " lies within 1e-12 of the flip threshold " +
                            format12(w.eps_star) + " at (x=" +
                            dist.x_domain()[w.x] + ", a=" + std::to_string(w.a) +
                            "); resolved as the exact boundary case");
      }
    }
    r.ldp.push_back(evaluate_predictor(ldp, dist));
    if (per_group) r.rates_ldp.push_back(group_rates(ldp, dist));
    r.verdicts.push_back(theorem_verdict(dist, params));
  }
  r.assumptions = check_assumptions(dist);
  return r;
}

namespace {

int cmd_scenarios(const OutputSpec& spec, std::ostream& out) {
  if (spec.format == OutputFormat::Json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& sc : builtin_scenarios()) {
      j.push_back({{"name", sc.name},
                   {"kind", sc.kind == ScenarioKind::Synthetic ? "synthetic"
                                                               : "real-world"},
                   {"x_domain", sc.dist.x_domain()},
                   {"notes", sc.notes}});
    }
    write_output(spec, j.dump(2) + "\n", out);
  } else {
    std::string payload = "name,kind,x_count\n";
    for (const auto& sc : builtin_scenarios()) {
      payload += sc.name;
      payload += sc.kind == ScenarioKind::Synthetic ? ",synthetic," : ",real-world,";
      payload += std::to_string(sc.dist.x_count()) + "\n";
    }
    write_output(spec, payload, out);
  }
  return 0;
}

struct EpsOpts {
  std::string eps_csv;
  double eps_min = 0, eps_max = 0;
  size_t points = 0;

  std::vector<double> resolve(ScenarioKind kind) const {
    if (!eps_csv.empty()) return parse_eps_list(eps_csv);
    if (points > 0) return log_spaced(eps_min, eps_max, points);
    return default_eps_grid(kind);
  }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Closed-form and Monte Carlo analysis of how randomized-response "
               "obfuscation of a binary sensitive attribute changes the "
               "fairness of a majority-vote classifier"};
  app.require_subcommand(1);

  // scenarios list
  auto* scenarios_cmd = app.add_subcommand("scenarios", "registry access");
  scenarios_cmd->require_subcommand(1);
  auto* list_cmd = scenarios_cmd->add_subcommand("list", "list builtin scenarios");
  std::string list_format = "csv", list_out;
  list_cmd->add_option("--format", list_format, "csv|json");
  list_cmd->add_option("--out", list_out, "output path (default stdout)");

  auto add_source = [](CLI::App* cmd, SourceOpts* src) {
    auto* s = cmd->add_option("--scenario", src->scenario, "builtin scenario name");
    auto* d = cmd->add_option("--dist", src->dist_path, "distribution document path");
    s->excludes(d);
  };

  // analyze
  SourceOpts an_src;
  EpsOpts an_eps;
  std::string an_format = "json", an_out;
  bool an_per_group = false, an_require = false;
  auto* analyze_cmd = app.add_subcommand(
      "analyze", "closed-form fairness metrics over an epsilon list");
  add_source(analyze_cmd, &an_src);
  analyze_cmd->add_option("--eps", an_eps.eps_csv, "comma-separated epsilon list");
  analyze_cmd->add_option("--eps-min", an_eps.eps_min);
  analyze_cmd->add_option("--eps-max", an_eps.eps_max);
  analyze_cmd->add_option("--points", an_eps.points, "log-spaced point count");
  analyze_cmd->add_flag("--per-group", an_per_group,
                        "emit acceptance rate and TPR per group");
  analyze_cmd->add_flag("--require-assumptions", an_require,
                        "exit 3 when an assumption check is violated");
  analyze_cmd->add_option("--format", an_format, "csv|json");
  analyze_cmd->add_option("--out", an_out);

  // sweep (dense analytic grid)
  SourceOpts sw_src;
  EpsOpts sw_eps;
  std::string sw_format = "csv", sw_out;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "analytic metrics over a dense epsilon grid");
  add_source(sweep_cmd, &sw_src);
  sweep_cmd->add_option("--eps", sw_eps.eps_csv);
  sweep_cmd->add_option("--eps-min", sw_eps.eps_min);
  sweep_cmd->add_option("--eps-max", sw_eps.eps_max);
  sweep_cmd->add_option("--points", sw_eps.points);
  sweep_cmd->add_option("--format", sw_format, "csv|json");
  sweep_cmd->add_option("--out", sw_out);

  // thresholds
  SourceOpts th_src;
  std::string th_format = "json", th_out;
  auto* thresholds_cmd =
      app.add_subcommand("thresholds", "per-x flip cases and critical epsilons");
  add_source(thresholds_cmd, &th_src);
  thresholds_cmd->add_option("--format", th_format, "csv|json");
  thresholds_cmd->add_option("--out", th_out);

  // assumptions
  SourceOpts as_src;
  std::string as_format = "json", as_out;
  bool as_require = false;
  auto* assumptions_cmd =
      app.add_subcommand("assumptions", "uniform-discrimination and reliable-Y checks");
  add_source(assumptions_cmd, &as_src);
  assumptions_cmd->add_flag("--require-assumptions", as_require);
  assumptions_cmd->add_option("--format", as_format, "csv|json");
  assumptions_cmd->add_option("--out", as_out);

  // simulate
  SourceOpts sim_src;
  EpsOpts sim_eps;
  std::string sim_format = "json", sim_out, sim_config;
  ExperimentConfig cfg;
  bool sim_serial = false, sim_require = false;
  auto* simulate_cmd =
      app.add_subcommand("simulate", "finite-sample Monte Carlo replication");
  add_source(simulate_cmd, &sim_src);
  simulate_cmd->add_option("--config", sim_config, "experiment config document");
  simulate_cmd->add_option("--eps", sim_eps.eps_csv);
  simulate_cmd->add_option("--eps-min", sim_eps.eps_min);
  simulate_cmd->add_option("--eps-max", sim_eps.eps_max);
  simulate_cmd->add_option("--points", sim_eps.points);
  auto* sim_n = simulate_cmd->add_option("--n", cfg.n, "samples per run");
  auto* sim_runs = simulate_cmd->add_option("--runs", cfg.runs);
  auto* sim_seed = simulate_cmd->add_option("--seed", cfg.seed);
  auto* sim_tf = simulate_cmd->add_option("--train-fraction", cfg.train_fraction);
  simulate_cmd->add_flag("--serial", sim_serial, "single-threaded reference path");
  simulate_cmd->add_flag("--require-assumptions", sim_require);
  simulate_cmd->add_option("--format", sim_format, "csv|json");
  simulate_cmd->add_option("--out", sim_out);

  // verify
  size_t verify_n = 1000;
  uint64_t verify_seed = 20260810;
  auto* verify_cmd = app.add_subcommand(
      "verify", "run the theorem property suites over builtins plus random "
                "distributions");
  verify_cmd->add_option("--n", verify_n, "random distributions per suite");
  verify_cmd->add_option("--seed", verify_seed);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*list_cmd) {
      return cmd_scenarios(OutputSpec::parse(list_format, list_out), out);
    }
    if (*analyze_cmd || *sweep_cmd) {
      bool is_analyze = static_cast<bool>(*analyze_cmd);
      SourceOpts& src = is_analyze ? an_src : sw_src;
      EpsOpts& eps_opts = is_analyze ? an_eps : sw_eps;
      if (src.scenario.empty() && src.dist_path.empty()) {
        throw Error(Errc::InvalidConfig, "need --scenario or --dist");
      }
      ScenarioKind kind;
      JointDistribution dist = src.resolve(&kind);
      std::vector<double> eps = eps_opts.resolve(kind);
      std::vector<std::string> warnings;
      AnalyzeReport report = build_analyze_report(
          dist, src.label(), eps, is_analyze && an_per_group, &warnings);
      flush_warnings(warnings, err);
      OutputSpec spec = OutputSpec::parse(is_analyze ? an_format : sw_format,
                                          is_analyze ? an_out : sw_out);
      write_output(spec,
                   spec.format == OutputFormat::Json ? analyze_to_json(report)
                                                     : analyze_to_csv(report),
                   out);
      if (is_analyze && an_require && assumptions_violated(report.assumptions)) {
        err << "assumption violation reported; failing per --require-assumptions\n";
        return 3;
      }
      return 0;
    }
    if (*thresholds_cmd) {
      if (th_src.scenario.empty() && th_src.dist_path.empty()) {
        throw Error(Errc::InvalidConfig, "need --scenario or --dist");
      }
      JointDistribution dist = th_src.resolve(nullptr);
      ThresholdReport report{th_src.label(), flip_thresholds(dist)};
      OutputSpec spec = OutputSpec::parse(th_format, th_out);
      write_output(spec,
                   spec.format == OutputFormat::Json
                       ? thresholds_to_json(report)
                       : thresholds_to_csv(report),
                   out);
      return 0;
    }
    if (*assumptions_cmd) {
      if (as_src.scenario.empty() && as_src.dist_path.empty()) {
        throw Error(Errc::InvalidConfig, "need --scenario or --dist");
      }
      JointDistribution dist = as_src.resolve(nullptr);
      AssumptionReport report = check_assumptions(dist);
      OutputSpec spec = OutputSpec::parse(as_format, as_out);
      write_output(spec,
                   spec.format == OutputFormat::Json
                       ? assumptions_to_json(as_src.label(), dist.x_domain(), report)
                       : assumptions_to_csv(as_src.label(), dist.x_domain(), report),
                   out);
      if (as_require && assumptions_violated(report)) {
        err << "assumption violation reported; failing per --require-assumptions\n";
        return 3;
      }
      return 0;
    }
    if (*simulate_cmd) {
      if (!sim_config.empty()) {
        std::ifstream in(sim_config);
        if (!in) throw Error(Errc::IoError, "cannot read '" + sim_config + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        nlohmann::json doc = nlohmann::json::parse(buf.str(), nullptr, false);
        if (doc.is_discarded()) {
          throw Error(Errc::ParseError, "invalid JSON in config document");
        }
        if (doc.contains("scenario")) cfg.scenario = doc["scenario"].get<std::string>();
        if (doc.contains("eps_grid")) cfg.eps_grid = doc["eps_grid"].get<std::vector<double>>();
        if (sim_n->count() == 0 && doc.contains("n")) cfg.n = doc["n"].get<size_t>();
        if (sim_runs->count() == 0 && doc.contains("runs")) cfg.runs = doc["runs"].get<size_t>();
        if (sim_seed->count() == 0 && doc.contains("seed")) cfg.seed = doc["seed"].get<uint64_t>();
        if (sim_tf->count() == 0 && doc.contains("train_fraction")) {
          cfg.train_fraction = doc["train_fraction"].get<double>();
        }
      }
      if (!sim_src.scenario.empty()) cfg.scenario = sim_src.scenario;
      if (!sim_src.dist_path.empty()) cfg.scenario = sim_src.dist_path;
      if (cfg.scenario.empty()) {
        throw Error(Errc::InvalidConfig, "need --scenario, --dist, or a config document");
      }
      if (!sim_eps.eps_csv.empty() || sim_eps.points > 0) {
        ScenarioKind kind = ScenarioKind::Synthetic;
        cfg.eps_grid = sim_eps.resolve(kind);
      } else if (cfg.eps_grid.empty()) {
        ScenarioKind kind = ScenarioKind::Synthetic;
        for (const auto& sc : builtin_scenarios()) {
          if (sc.name == cfg.scenario) kind = sc.kind;
        }
        cfg.eps_grid = default_eps_grid(kind);
      }
      SweepResult sweep = run_experiment(
          cfg, sim_serial ? ExecMode::Serial : ExecMode::Parallel);
      SimulateReport report{sweep, aggregate(sweep)};
      OutputSpec spec = OutputSpec::parse(sim_format, sim_out);
      write_output(spec,
                   spec.format == OutputFormat::Json ? simulate_to_json(report)
                                                     : simulate_to_csv(report),
                   out);
      if (sim_require) {
        SourceOpts src;
        try {
          builtin_scenario(cfg.scenario);
          src.scenario = cfg.scenario;
        } catch (const Error&) {
          src.dist_path = cfg.scenario;
        }
        if (assumptions_violated(check_assumptions(src.resolve(nullptr)))) {
          err << "assumption violation reported; failing per --require-assumptions\n";
          return 3;
        }
      }
      return 0;
    }
    if (*verify_cmd) {
      std::vector<SuiteResult> results = run_verification(verify_n, verify_seed);
      bool all_ok = true;
      for (const SuiteResult& r : results) {
        out << (r.passed() ? "PASS " : "FAIL ") << r.name << " ("
            << r.cases << " checks";
        if (!r.passed()) {
          out << ", " << r.violations << " violations; first: " << r.first_failure;
          all_ok = false;
        }
        out << ")\n";
      }
      out << (all_ok ? "verification passed\n" : "verification FAILED\n");
      return all_ok ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::UnknownScenario ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 1;
}

}  // namespace ldpfair
