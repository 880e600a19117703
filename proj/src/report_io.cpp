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

#include "ldpfair/report_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "ldpfair/error.hpp"

namespace ldpfair {

using json = nlohmann::ordered_json;

const char* kSweepCsvHeader =
    "scenario,epsilon,run,metric,group_or_x,baseline,ldp,analytic_baseline,"
    "analytic_ldp";

OutputSpec OutputSpec::parse(const std::string& format, const std::string& out) {
  OutputSpec spec;
  if (format == "csv") {
    spec.format = OutputFormat::Csv;
  } else if (format == "json") {
    spec.format = OutputFormat::Json;
  } else {
    throw Error(Errc::InvalidConfig, "format must be csv or json");
  }
  spec.destination = out;
  return spec;
}

namespace {

json num(double v) { return json(round12(v)); }

json rat(const Rat& v) {
  return json{{"v", round12(v.get_d())}, {"exact", exact_string(v)}};
}

json rat_opt(const std::optional<Rat>& v) {
  return v ? rat(*v) : json(nullptr);
}

Rat rat_from(const json& j) {
  if (!j.is_object() || !j.contains("exact")) {
    throw Error(Errc::ParseError, "expected a {v, exact} value object");
  }
  return parse_rational(j["exact"].get<std::string>());
}

std::optional<Rat> rat_opt_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return rat_from(j);
}

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Baseline: return "baseline";
    case Provenance::LdpClosedForm: return "ldp-closed-form";
    case Provenance::FromDistribution: return "from-distribution";
  }
  return "?";
}

Provenance provenance_from(const std::string& s) {
  if (s == "baseline") return Provenance::Baseline;
  if (s == "ldp-closed-form") return Provenance::LdpClosedForm;
  if (s == "from-distribution") return Provenance::FromDistribution;
  throw Error(Errc::ParseError, "unknown provenance '" + s + "'");
}

json fairness_to_json(const FairnessReport& r) {
  json j;
  j["sd"] = rat(r.sd);
  j["csd"] = r.csd;
  j["eod"] = rat_opt(r.eod);
  j["accuracy"] = rat(r.accuracy);
  j["provenance"] = provenance_name(r.predictor_provenance);
  return j;
}

FairnessReport fairness_from_json(const json& j) {
  FairnessReport r;
  r.sd = rat_from(j.at("sd"));
  r.csd = j.at("csd").get<std::vector<int>>();
  r.eod = rat_opt_from(j.at("eod"));
  r.accuracy = rat_from(j.at("accuracy"));
  r.predictor_provenance = provenance_from(j.at("provenance").get<std::string>());
  return r;
}

json assumptions_to_json_obj(const std::vector<std::string>& x_domain,
                             const AssumptionReport& a) {
  json u;
  switch (a.uniform_discrimination.status) {
    case UniformDiscrimination::Status::Holds:
      u["status"] = "holds";
      u["direction"] = a.uniform_discrimination.direction;
      break;
    case UniformDiscrimination::Status::Violated: {
      u["status"] = "violated";
      auto [xg, xl] = *a.uniform_discrimination.witnesses;
      u["witness_gamma1_gt_gamma0"] = x_domain[xg];
      u["witness_gamma1_lt_gamma0"] = x_domain[xl];
      break;
    }
    case UniformDiscrimination::Status::Vacuous:
      u["status"] = "vacuous";
      break;
  }
  json ry;
  ry["holds"] = a.reliable_y.holds;
  if (!a.reliable_y.holds) {
    ry["witness_x"] = x_domain[*a.reliable_y.witness_x];
    ry["deviation"] = rat(*a.reliable_y.deviation);
  }
  return json{{"uniform_discrimination", u},
              {"reliable_y", ry},
              {"x_independent_a", a.x_independent_a}};
}

AssumptionReport assumptions_from_json_obj(
    const std::vector<std::string>& x_domain, const json& j) {
  auto x_index = [&](const std::string& label) -> size_t {
    for (size_t i = 0; i < x_domain.size(); ++i) {
      if (x_domain[i] == label) return i;
    }
    throw Error(Errc::ParseError, "unknown x label '" + label + "'");
  };
  AssumptionReport a;
  const json& u = j.at("uniform_discrimination");
  std::string status = u.at("status").get<std::string>();
  if (status == "holds") {
    a.uniform_discrimination.status = UniformDiscrimination::Status::Holds;
    a.uniform_discrimination.direction = u.at("direction").get<int>();
  } else if (status == "violated") {
    a.uniform_discrimination.status = UniformDiscrimination::Status::Violated;
    a.uniform_discrimination.witnesses = std::make_pair(
        x_index(u.at("witness_gamma1_gt_gamma0").get<std::string>()),
        x_index(u.at("witness_gamma1_lt_gamma0").get<std::string>()));
  } else {
    a.uniform_discrimination.status = UniformDiscrimination::Status::Vacuous;
  }
  const json& ry = j.at("reliable_y");
  a.reliable_y.holds = ry.at("holds").get<bool>();
  if (!a.reliable_y.holds) {
    a.reliable_y.witness_x = x_index(ry.at("witness_x").get<std::string>());
    a.reliable_y.deviation = rat_from(ry.at("deviation"));
  }
  a.x_independent_a = j.at("x_independent_a").get<bool>();
  return a;
}

json verdict_to_json(const std::vector<std::string>& x_domain, double eps,
                     const Verdict& v) {
  json j;
  j["epsilon"] = num(eps);
  j["regime"] = regime_name(v.regime);
  j["sd"] = rat(v.sd);
  j["sd_prime"] = rat(v.sd_prime);
  json pairs;
  for (size_t x = 0; x < v.csd_pairs.size(); ++x) {
    pairs[x_domain[x]] = json::array({v.csd_pairs[x].first, v.csd_pairs[x].second});
  }
  j["csd_pairs"] = pairs;
  if (v.eod_pair) {
    j["eod"] = rat(v.eod_pair->first);
    j["eod_prime"] = rat(v.eod_pair->second);
  } else {
    j["eod"] = nullptr;
    j["eod_prime"] = nullptr;
  }
  json th = json::array();
  for (const TheoremCheck& t : v.theorems) {
    json tj;
    tj["name"] = t.name;
    tj["status"] = t.status();
    tj["premises_hold"] = t.premises_hold;
    if (!t.premises_hold) tj["failed_premise"] = t.failed_premise;
    if (t.inequality_evaluated) tj["inequality_holds"] = t.inequality_holds;
    th.push_back(tj);
  }
  j["theorems"] = th;
  return j;
}

Verdict verdict_from_json(const std::vector<std::string>& x_domain,
                          const json& j) {
  Verdict v;
  std::string regime = j.at("regime").get<std::string>();
  bool found = false;
  for (Regime r : {Regime::Unchanged, Regime::PartiallyReduced,
                   Regime::Eliminated, Regime::Flipped, Regime::Worsened,
                   Regime::Introduced}) {
    if (regime == regime_name(r)) {
      v.regime = r;
      found = true;
    }
  }
  if (!found) throw Error(Errc::ParseError, "unknown regime '" + regime + "'");
  v.sd = rat_from(j.at("sd"));
  v.sd_prime = rat_from(j.at("sd_prime"));
  v.csd_pairs.resize(x_domain.size());
  for (size_t x = 0; x < x_domain.size(); ++x) {
    const json& p = j.at("csd_pairs").at(x_domain[x]);
    v.csd_pairs[x] = {p.at(0).get<int>(), p.at(1).get<int>()};
  }
  if (!j.at("eod").is_null()) {
    v.eod_pair = std::make_pair(rat_from(j.at("eod")), rat_from(j.at("eod_prime")));
  }
  for (const json& tj : j.at("theorems")) {
    TheoremCheck t;
    t.name = tj.at("name").get<std::string>();
    t.premises_hold = tj.at("premises_hold").get<bool>();
    if (!t.premises_hold) t.failed_premise = tj.at("failed_premise").get<std::string>();
    if (tj.contains("inequality_holds")) {
      t.inequality_evaluated = true;
      t.inequality_holds = tj.at("inequality_holds").get<bool>();
    }
    v.theorems.push_back(std::move(t));
  }
  return v;
}

json group_rates_to_json(const GroupRates& g) {
  json j;
  j["acceptance"] = json{{"0", rat(g.acceptance[0])}, {"1", rat(g.acceptance[1])}};
  j["tpr"] = json{{"0", rat_opt(g.tpr[0])}, {"1", rat_opt(g.tpr[1])}};
  return j;
}

GroupRates group_rates_from_json(const json& j) {
  GroupRates g;
  g.acceptance[0] = rat_from(j.at("acceptance").at("0"));
  g.acceptance[1] = rat_from(j.at("acceptance").at("1"));
  g.tpr[0] = rat_opt_from(j.at("tpr").at("0"));
  g.tpr[1] = rat_opt_from(j.at("tpr").at("1"));
  return g;
}

std::string csv_rat(const Rat& v) { return format12(v.get_d()); }

std::string csv_rat_opt(const std::optional<Rat>& v) {
  return v ? csv_rat(*v) : std::string();
}

void csv_row(std::string& out, const std::string& scenario, double eps,
             const std::string& run, const std::string& metric,
             const std::string& gx, const std::string& baseline,
             const std::string& ldp, const std::string& ana_b,
             const std::string& ana_l) {
  out += scenario + "," + format12(eps) + "," + run + "," + metric + "," + gx +
         "," + baseline + "," + ldp + "," + ana_b + "," + ana_l + "\n";
}

}  // namespace

std::string analyze_to_json(const AnalyzeReport& r) {
  json j;
  j["scenario"] = r.scenario;
  j["x_domain"] = r.x_domain;
  json eps = json::array();
  for (double e : r.epsilon) eps.push_back(num(e));
  j["epsilon"] = eps;

  json m;
  m["sd"] = rat(r.baseline.sd);
  json sd_prime = json::array();
  for (const auto& fr : r.ldp) sd_prime.push_back(rat(fr.sd));
  m["sd_prime"] = sd_prime;
  json csd, csd_prime;
  for (size_t x = 0; x < r.x_domain.size(); ++x) {
    csd[r.x_domain[x]] = r.baseline.csd[x];
    json series = json::array();
    for (const auto& fr : r.ldp) series.push_back(fr.csd[x]);
    csd_prime[r.x_domain[x]] = series;
  }
  m["csd"] = csd;
  m["csd_prime"] = csd_prime;
  m["eod"] = rat_opt(r.baseline.eod);
  json eod_prime = json::array();
  for (const auto& fr : r.ldp) eod_prime.push_back(rat_opt(fr.eod));
  m["eod_prime"] = eod_prime;
  m["accuracy"] = rat(r.baseline.accuracy);
  json acc_prime = json::array();
  for (const auto& fr : r.ldp) acc_prime.push_back(rat(fr.accuracy));
  m["accuracy_prime"] = acc_prime;
  j["metrics"] = m;

  j["assumptions"] = assumptions_to_json_obj(r.x_domain, r.assumptions);
  json verdicts = json::array();
  for (size_t i = 0; i < r.verdicts.size(); ++i) {
    verdicts.push_back(verdict_to_json(r.x_domain, r.epsilon[i], r.verdicts[i]));
  }
  j["verdict"] = verdicts;

  if (r.rates_baseline) {
    json pg;
    pg["baseline"] = group_rates_to_json(*r.rates_baseline);
    json series = json::array();
    for (const auto& g : r.rates_ldp) series.push_back(group_rates_to_json(g));
    pg["ldp"] = series;
    j["per_group"] = pg;
  }
  return j.dump(2) + "\n";
}

AnalyzeReport analyze_from_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(Errc::ParseError, "invalid JSON report");
  AnalyzeReport r;
  r.scenario = j.at("scenario").get<std::string>();
  r.x_domain = j.at("x_domain").get<std::vector<std::string>>();
  r.epsilon = j.at("epsilon").get<std::vector<double>>();
  const json& m = j.at("metrics");

  r.baseline.sd = rat_from(m.at("sd"));
  r.baseline.eod = rat_opt_from(m.at("eod"));
  r.baseline.accuracy = rat_from(m.at("accuracy"));
  r.baseline.csd.resize(r.x_domain.size());
  for (size_t x = 0; x < r.x_domain.size(); ++x) {
    r.baseline.csd[x] = m.at("csd").at(r.x_domain[x]).get<int>();
  }
  r.baseline.predictor_provenance = Provenance::Baseline;

  r.ldp.resize(r.epsilon.size());
  for (size_t i = 0; i < r.epsilon.size(); ++i) {
    FairnessReport& fr = r.ldp[i];
    fr.sd = rat_from(m.at("sd_prime").at(i));
    fr.eod = rat_opt_from(m.at("eod_prime").at(i));
    fr.accuracy = rat_from(m.at("accuracy_prime").at(i));
    fr.csd.resize(r.x_domain.size());
    for (size_t x = 0; x < r.x_domain.size(); ++x) {
      fr.csd[x] = m.at("csd_prime").at(r.x_domain[x]).at(i).get<int>();
    }
    fr.predictor_provenance = Provenance::LdpClosedForm;
  }

  r.assumptions = assumptions_from_json_obj(r.x_domain, j.at("assumptions"));
  for (const json& vj : j.at("verdict")) {
    r.verdicts.push_back(verdict_from_json(r.x_domain, vj));
  }
  if (j.contains("per_group")) {
    r.rates_baseline = group_rates_from_json(j.at("per_group").at("baseline"));
    for (const json& gj : j.at("per_group").at("ldp")) {
      r.rates_ldp.push_back(group_rates_from_json(gj));
    }
  }
  return r;
}

std::string analyze_to_csv(const AnalyzeReport& r) {
  std::string out = std::string(kSweepCsvHeader) + "\n";
  for (size_t i = 0; i < r.epsilon.size(); ++i) {
    double e = r.epsilon[i];
    const FairnessReport& fr = r.ldp[i];
    csv_row(out, r.scenario, e, "", "sd", "", csv_rat(r.baseline.sd),
            csv_rat(fr.sd), csv_rat(r.baseline.sd), csv_rat(fr.sd));
    for (size_t x = 0; x < r.x_domain.size(); ++x) {
      csv_row(out, r.scenario, e, "", "csd", r.x_domain[x],
              std::to_string(r.baseline.csd[x]), std::to_string(fr.csd[x]),
              std::to_string(r.baseline.csd[x]), std::to_string(fr.csd[x]));
    }
    csv_row(out, r.scenario, e, "", "eod", "", csv_rat_opt(r.baseline.eod),
            csv_rat_opt(fr.eod), csv_rat_opt(r.baseline.eod),
            csv_rat_opt(fr.eod));
    csv_row(out, r.scenario, e, "", "accuracy", "", csv_rat(r.baseline.accuracy),
            csv_rat(fr.accuracy), csv_rat(r.baseline.accuracy),
            csv_rat(fr.accuracy));
    if (r.rates_baseline) {
      const GroupRates& gb = *r.rates_baseline;
      const GroupRates& gl = r.rates_ldp[i];
      for (int a = 0; a < 2; ++a) {
        csv_row(out, r.scenario, e, "", "acceptance_rate", std::to_string(a),
                csv_rat(gb.acceptance[a]), csv_rat(gl.acceptance[a]),
                csv_rat(gb.acceptance[a]), csv_rat(gl.acceptance[a]));
        csv_row(out, r.scenario, e, "", "tpr", std::to_string(a),
                csv_rat_opt(gb.tpr[a]), csv_rat_opt(gl.tpr[a]),
                csv_rat_opt(gb.tpr[a]), csv_rat_opt(gl.tpr[a]));
      }
    }
  }
  return out;
}

std::string thresholds_to_json(const ThresholdReport& r) {
  json rows = json::array();
  for (const ThresholdRow& row : r.table.rows) {
    json j;
    j["x"] = r.table.x_domain[row.x];
    j["case"] = cell_case_name(row.tag);
    j["ratio_neg_d0_over_d1"] = rat_opt(row.ratio_neg_d0_over_d1);
    j["ratio_neg_d1_over_d0"] = rat_opt(row.ratio_neg_d1_over_d0);
    j["eps_star"] = row.eps_star ? json(round12(*row.eps_star)) : json(nullptr);
    j["flip_group"] = row.flip_group ? json(*row.flip_group) : json(nullptr);
    rows.push_back(j);
  }
  json j{{"scenario", r.scenario},
         {"x_domain", r.table.x_domain},
         {"thresholds", rows}};
  return j.dump(2) + "\n";
}

ThresholdReport thresholds_from_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(Errc::ParseError, "invalid JSON report");
  ThresholdReport r;
  r.scenario = j.at("scenario").get<std::string>();
  r.table.x_domain = j.at("x_domain").get<std::vector<std::string>>();
  size_t x = 0;
  for (const json& rowj : j.at("thresholds")) {
    ThresholdRow row;
    row.x = x++;
    std::string tag = rowj.at("case").get<std::string>();
    bool found = false;
    for (CellCase c : {CellCase::BothNonneg, CellCase::BothNonpos,
                       CellCase::A1PosA0Neg, CellCase::A1NegA0Pos,
                       CellCase::Degenerate}) {
      if (tag == cell_case_name(c)) {
        row.tag = c;
        found = true;
      }
    }
    if (!found) throw Error(Errc::ParseError, "unknown case tag '" + tag + "'");
    if (!rowj.at("ratio_neg_d0_over_d1").is_null()) {
      row.ratio_neg_d0_over_d1 = rat_from(rowj.at("ratio_neg_d0_over_d1"));
    }
    if (!rowj.at("ratio_neg_d1_over_d0").is_null()) {
      row.ratio_neg_d1_over_d0 = rat_from(rowj.at("ratio_neg_d1_over_d0"));
    }
    if (!rowj.at("eps_star").is_null()) {
      row.eps_star = rowj.at("eps_star").get<double>();
    }
    if (!rowj.at("flip_group").is_null()) {
      row.flip_group = rowj.at("flip_group").get<int>();
    }
    r.table.rows.push_back(std::move(row));
  }
  return r;
}

std::string thresholds_to_csv(const ThresholdReport& r) {
  std::string out =
      "scenario,x,case,ratio_neg_d0_over_d1,ratio_neg_d1_over_d0,eps_star,"
      "flip_group\n";
  for (const ThresholdRow& row : r.table.rows) {
    out += r.scenario + "," + r.table.x_domain[row.x] + "," +
           cell_case_name(row.tag) + ",";
    out += (row.ratio_neg_d0_over_d1 ? exact_string(*row.ratio_neg_d0_over_d1)
                                     : std::string()) + ",";
    out += (row.ratio_neg_d1_over_d0 ? exact_string(*row.ratio_neg_d1_over_d0)
                                     : std::string()) + ",";
    out += (row.eps_star ? format12(*row.eps_star) : std::string()) + ",";
    out += (row.flip_group ? std::to_string(*row.flip_group) : std::string()) +
           "\n";
  }
  return out;
}

std::string assumptions_to_json(const std::string& scenario,
                                const std::vector<std::string>& x_domain,
                                const AssumptionReport& a) {
  json j{{"scenario", scenario},
         {"x_domain", x_domain},
         {"assumptions", assumptions_to_json_obj(x_domain, a)}};
  return j.dump(2) + "\n";
}

std::string assumptions_to_csv(const std::string& scenario,
                               const std::vector<std::string>& x_domain,
                               const AssumptionReport& a) {
  std::string out = "scenario,check,status,detail\n";
  const UniformDiscrimination& u = a.uniform_discrimination;
  std::string status, detail;
  switch (u.status) {
    case UniformDiscrimination::Status::Holds:
      status = "holds";
      detail = "direction=" + std::to_string(u.direction);
      break;
    case UniformDiscrimination::Status::Violated:
      status = "violated";
      detail = "gamma1>gamma0 at x=" + x_domain[u.witnesses->first] +
               "; gamma1<gamma0 at x=" + x_domain[u.witnesses->second];
      break;
    case UniformDiscrimination::Status::Vacuous:
      status = "vacuous";
      break;
  }
  out += scenario + ",uniform_discrimination," + status + "," + detail + "\n";
  if (a.reliable_y.holds) {
    out += scenario + ",reliable_y,holds,\n";
  } else {
    out += scenario + ",reliable_y,violated,x=" +
           x_domain[*a.reliable_y.witness_x] +
           " deviation=" + exact_string(*a.reliable_y.deviation) + "\n";
  }
  out += scenario + ",x_independent_a," +
         (a.x_independent_a ? "true" : "false") + ",\n";
  return out;
}

std::string simulate_to_json(const SimulateReport& r) {
  const SweepResult& s = r.sweep;
  json j;
  j["scenario"] = s.scenario;
  j["x_domain"] = s.x_domain;
  json eps = json::array();
  for (double e : s.eps) eps.push_back(num(e));
  j["epsilon"] = eps;
  j["n"] = s.n;
  j["runs"] = s.runs;
  j["seed"] = s.seed;
  j["train_fraction"] = num(s.train_fraction);

  json ana;
  ana["baseline"] = fairness_to_json(s.analytic_baseline);
  json ana_ldp = json::array();
  for (const auto& fr : s.analytic_ldp) ana_ldp.push_back(fairness_to_json(fr));
  ana["ldp"] = ana_ldp;
  j["analytic"] = ana;

  json aggs = json::array();
  for (const AggregateRow& row : r.aggregates) {
    json a;
    a["epsilon"] = num(row.eps);
    a["metric"] = row.metric;
    a["group_or_x"] = row.group_or_x;
    a["count"] = row.count;
    a["mean_baseline"] = num(row.mean_baseline);
    a["stddev_baseline"] = num(row.stddev_baseline);
    a["mean_ldp"] = num(row.mean_ldp);
    a["stddev_ldp"] = num(row.stddev_ldp);
    if (row.analytic_defined) {
      a["analytic_baseline"] = num(row.analytic_baseline);
      a["analytic_ldp"] = num(row.analytic_ldp);
      a["gap_baseline"] = num(row.gap_baseline);
      a["gap_ldp"] = num(row.gap_ldp);
    }
    aggs.push_back(a);
  }
  j["aggregates"] = aggs;

  json all_runs = json::array();
  for (const auto& per_eps : s.cells) {
    json runs = json::array();
    for (const RunCell& c : per_eps) {
      json rc;
      rc["baseline"] = fairness_to_json(c.baseline);
      rc["ldp"] = fairness_to_json(c.ldp);
      rc["ldp_matches_closed_form"] = c.ldp_matches_closed_form;
      json ab = json::array(), al = json::array();
      for (auto [x, a] : c.absent_baseline) ab.push_back(json::array({x, a}));
      for (auto [x, a] : c.absent_ldp) al.push_back(json::array({x, a}));
      rc["absent_baseline"] = ab;
      rc["absent_ldp"] = al;
      runs.push_back(rc);
    }
    all_runs.push_back(runs);
  }
  j["runs_detail"] = all_runs;
  return j.dump(2) + "\n";
}

SimulateReport simulate_from_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(Errc::ParseError, "invalid JSON report");
  SimulateReport r;
  SweepResult& s = r.sweep;
  s.scenario = j.at("scenario").get<std::string>();
  s.x_domain = j.at("x_domain").get<std::vector<std::string>>();
  s.eps = j.at("epsilon").get<std::vector<double>>();
  s.n = j.at("n").get<size_t>();
  s.runs = j.at("runs").get<size_t>();
  s.seed = j.at("seed").get<uint64_t>();
  s.train_fraction = j.at("train_fraction").get<double>();
  s.analytic_baseline = fairness_from_json(j.at("analytic").at("baseline"));
  for (const json& fj : j.at("analytic").at("ldp")) {
    s.analytic_ldp.push_back(fairness_from_json(fj));
  }
  for (const json& runsj : j.at("runs_detail")) {
    std::vector<RunCell> cells;
    for (const json& rc : runsj) {
      RunCell c;
      c.baseline = fairness_from_json(rc.at("baseline"));
      c.ldp = fairness_from_json(rc.at("ldp"));
      c.ldp_matches_closed_form = rc.at("ldp_matches_closed_form").get<bool>();
      for (const json& p : rc.at("absent_baseline")) {
        c.absent_baseline.emplace_back(p.at(0).get<uint32_t>(), p.at(1).get<int>());
      }
      for (const json& p : rc.at("absent_ldp")) {
        c.absent_ldp.emplace_back(p.at(0).get<uint32_t>(), p.at(1).get<int>());
      }
      cells.push_back(std::move(c));
    }
    s.cells.push_back(std::move(cells));
  }
  for (const json& a : j.at("aggregates")) {
    AggregateRow row;
    row.eps = a.at("epsilon").get<double>();
    row.metric = a.at("metric").get<std::string>();
    row.group_or_x = a.at("group_or_x").get<std::string>();
    row.count = a.at("count").get<size_t>();
    row.mean_baseline = a.at("mean_baseline").get<double>();
    row.stddev_baseline = a.at("stddev_baseline").get<double>();
    row.mean_ldp = a.at("mean_ldp").get<double>();
    row.stddev_ldp = a.at("stddev_ldp").get<double>();
    if (a.contains("analytic_baseline")) {
      row.analytic_defined = true;
      row.analytic_baseline = a.at("analytic_baseline").get<double>();
      row.analytic_ldp = a.at("analytic_ldp").get<double>();
      row.gap_baseline = a.at("gap_baseline").get<double>();
      row.gap_ldp = a.at("gap_ldp").get<double>();
    }
    r.aggregates.push_back(std::move(row));
  }
  return r;
}

std::string simulate_to_csv(const SimulateReport& r) {
  const SweepResult& s = r.sweep;
  std::string out = std::string(kSweepCsvHeader) + "\n";
  auto opt_str = [](const std::optional<Rat>& v) { return csv_rat_opt(v); };
  for (size_t e = 0; e < s.eps.size(); ++e) {
    const FairnessReport& ana_b = s.analytic_baseline;
    const FairnessReport& ana_l = s.analytic_ldp[e];
    for (size_t run = 0; run < s.cells[e].size(); ++run) {
      const RunCell& c = s.cells[e][run];
      std::string rs = std::to_string(run);
      csv_row(out, s.scenario, s.eps[e], rs, "sd", "", csv_rat(c.baseline.sd),
              csv_rat(c.ldp.sd), csv_rat(ana_b.sd), csv_rat(ana_l.sd));
      for (size_t x = 0; x < s.x_domain.size(); ++x) {
        csv_row(out, s.scenario, s.eps[e], rs, "csd", s.x_domain[x],
                std::to_string(c.baseline.csd[x]), std::to_string(c.ldp.csd[x]),
                std::to_string(ana_b.csd[x]), std::to_string(ana_l.csd[x]));
      }
      csv_row(out, s.scenario, s.eps[e], rs, "eod", "", opt_str(c.baseline.eod),
              opt_str(c.ldp.eod), opt_str(ana_b.eod), opt_str(ana_l.eod));
      csv_row(out, s.scenario, s.eps[e], rs, "accuracy", "",
              csv_rat(c.baseline.accuracy), csv_rat(c.ldp.accuracy),
              csv_rat(ana_b.accuracy), csv_rat(ana_l.accuracy));
    }
  }
  // aggregate rows keyed by run = mean / stddev
  for (const AggregateRow& row : r.aggregates) {
    std::string ana_b =
        row.analytic_defined ? format12(row.analytic_baseline) : std::string();
    std::string ana_l =
        row.analytic_defined ? format12(row.analytic_ldp) : std::string();
    csv_row(out, s.scenario, row.eps, "mean", row.metric, row.group_or_x,
            format12(row.mean_baseline), format12(row.mean_ldp), ana_b, ana_l);
    csv_row(out, s.scenario, row.eps, "stddev", row.metric, row.group_or_x,
            format12(row.stddev_baseline), format12(row.stddev_ldp), ana_b,
            ana_l);
  }
  return out;
}

void write_output(const OutputSpec& spec, const std::string& payload,
                  std::ostream& stdout_stream) {
  if (spec.destination.empty()) {
    stdout_stream << payload;
    return;
  }
  std::ofstream out(spec.destination, std::ios::binary);
  if (!out) {
    throw Error(Errc::IoError, "cannot open '" + spec.destination + "' for writing");
  }
  out << payload;
  if (!out) {
    throw Error(Errc::IoError, "write to '" + spec.destination + "' failed");
  }
}

}  // namespace ldpfair
