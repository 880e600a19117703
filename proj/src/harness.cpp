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

#include "ldpfair/harness.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "ldpfair/error.hpp"

namespace ldpfair {

namespace {

// stream parts for per-run key derivation
constexpr uint64_t kSamplePart = 0;
constexpr uint64_t kShufflePart = 1;
constexpr uint64_t kObfuscatePart = 2;

struct Cdf {
  std::vector<double> upper;  // cumulative upper bounds per flat cell
  size_t k;

  // flat cell order: (y * k + x) * 2 + a
  Record decode(size_t cell) const {
    Record r;
    r.a = static_cast<uint8_t>(cell & 1);
    size_t yx = cell >> 1;
    r.x = static_cast<uint32_t>(yx % k);
    r.y = static_cast<uint8_t>(yx / k);
    return r;
  }
};

Cdf build_cdf(const JointDistribution& dist) {
  Cdf c;
  c.k = dist.x_count();
  const size_t cells = c.k * 4;
  c.upper.resize(cells);
  Rat acc = 0;
  for (size_t i = 0; i < cells; ++i) {
    size_t a = i & 1, yx = i >> 1, x = yx % c.k, y = yx / c.k;
    acc += dist.p(static_cast<int>(y), x, static_cast<int>(a));
    c.upper[i] = acc.get_d();
  }
  c.upper.back() = 1.0;  // close the interval against rounding
  return c;
}

Record draw_record(const Cdf& cdf, double u) {
  auto it = std::upper_bound(cdf.upper.begin(), cdf.upper.end(), u);
  size_t cell = std::min<size_t>(it - cdf.upper.begin(), cdf.upper.size() - 1);
  return cdf.decode(cell);
}

}  // namespace

SampleSet sample(const JointDistribution& dist, size_t n, uint64_t seed,
                 bool parallel) {
  if (n < 1) throw Error(Errc::InvalidConfig, "sample size must be >= 1");
  Cdf cdf = build_cdf(dist);
  RngStream rng(seed);
  SampleSet out;
  out.seed = seed;
  out.records.resize(n);
  Record* rec = out.records.data();
#pragma omp parallel for schedule(static) if (parallel && n > 16384)
  for (int64_t i = 0; i < static_cast<int64_t>(n); ++i) {
    rec[i] = draw_record(cdf, rng.uniform_at(static_cast<uint64_t>(i)));
  }
  return out;
}

void ExperimentConfig::validate() const {
  if (eps_grid.empty()) {
    throw Error(Errc::InvalidConfig, "eps grid must be non-empty");
  }
  for (double e : eps_grid) {
    if (!(e > 0) || std::isinf(e)) {
      throw Error(Errc::InvalidConfig, "eps grid entries must be finite and positive");
    }
  }
  if (runs < 1) throw Error(Errc::InvalidConfig, "runs must be >= 1");
  if (n < 1) throw Error(Errc::InvalidConfig, "n must be >= 1");
  if (!(train_fraction > 0) || train_fraction > 1) {
    throw Error(Errc::InvalidConfig, "train fraction must lie in (0, 1]");
  }
}

void split_indices(size_t n, double train_fraction, const RngStream& rng,
                   std::vector<uint32_t>* train, std::vector<uint32_t>* test) {
  std::vector<uint32_t> idx(n);
  for (size_t i = 0; i < n; ++i) idx[i] = static_cast<uint32_t>(i);
  for (size_t i = n - 1; i > 0; --i) {
    size_t j = rng.below_at(i, i + 1);
    std::swap(idx[i], idx[j]);
  }
  size_t n_train = std::min<size_t>(
      n, static_cast<size_t>(std::llround(train_fraction * static_cast<double>(n))));
  if (n_train == 0) n_train = 1;
  train->assign(idx.begin(), idx.begin() + n_train);
  if (n_train == n) {
    *test = idx;  // degenerate fraction 1: evaluate on the full sample
  } else {
    test->assign(idx.begin() + n_train, idx.end());
  }
}

std::vector<Record> obfuscate_records(const std::vector<Record>& records,
                                      const RRParams& params,
                                      const RngStream& rng, bool parallel) {
  std::vector<Record> out(records);
  const double p = params.retention_d();
  Record* rec = out.data();
  const int64_t n = static_cast<int64_t>(out.size());
#pragma omp parallel for schedule(static) if (parallel && n > 16384)
  for (int64_t i = 0; i < n; ++i) {
    if (rng.uniform_at(static_cast<uint64_t>(i)) >= p) rec[i].a ^= 1;
  }
  return out;
}

PredictionTable fit_majority(const std::vector<Record>& records,
                             size_t x_count,
                             std::vector<std::pair<uint32_t, int>>* absent) {
  std::vector<int64_t> diff(x_count * 2, 0);   // count(Y=1) - count(Y=0)
  std::vector<int64_t> total(x_count * 2, 0);
  for (const Record& r : records) {
    size_t cell = r.x * 2 + r.a;
    diff[cell] += r.y ? 1 : -1;
    ++total[cell];
  }
  PredictionTable t(x_count, Provenance::FromDistribution);
  for (size_t x = 0; x < x_count; ++x) {
    for (int a = 0; a < 2; ++a) {
      size_t cell = x * 2 + a;
      if (total[cell] == 0) {
        t.set(x, a, 0);  // unseen cell: conservative negative prediction
        if (absent) absent->emplace_back(static_cast<uint32_t>(x), a);
      } else {
        t.set(x, a, diff[cell] >= 0 ? 1 : 0);
      }
    }
  }
  return t;
}

JointDistribution empirical_distribution(
    const std::vector<Record>& records,
    const std::vector<std::string>& x_domain) {
  const size_t k = x_domain.size();
  if (records.empty()) {
    throw Error(Errc::InvalidConfig, "cannot build an empirical distribution from zero records");
  }
  std::vector<long> counts(k * 4, 0);
  for (const Record& r : records) {
    ++counts[(static_cast<size_t>(r.y) * k + r.x) * 2 + r.a];
  }
  std::vector<Rat> entries(k * 4);
  const long n = static_cast<long>(records.size());
  for (size_t i = 0; i < entries.size(); ++i) {
    entries[i] = Rat(counts[i], n);
    entries[i].canonicalize();
  }
  return JointDistribution::create(x_domain, std::move(entries));
}

namespace {

JointDistribution resolve_scenario(const std::string& name_or_path) {
  for (const auto& sc : builtin_scenarios()) {
    if (sc.name == name_or_path) return sc.dist;
  }
  std::ifstream in(name_or_path);
  if (!in) {
    throw Error(Errc::UnknownScenario,
                "'" + name_or_path + "' is neither a builtin scenario nor a readable file");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_distribution(buf.str());
}

RunCell run_single(const JointDistribution& dist,
                   const ExperimentConfig& config, size_t eps_idx,
                   size_t run_idx, const PredictionTable& closed_form,
                   bool parallel_records) {
  RngStream run_key =
      RngStream(config.seed).child(eps_idx).child(run_idx);

  SampleSet samples = sample(dist, config.n, run_key.child(kSamplePart).key(),
                             parallel_records);

  std::vector<uint32_t> train_idx, test_idx;
  split_indices(config.n, config.train_fraction, run_key.child(kShufflePart),
                &train_idx, &test_idx);

  std::vector<Record> train, test;
  train.reserve(train_idx.size());
  test.reserve(test_idx.size());
  for (uint32_t i : train_idx) train.push_back(samples.records[i]);
  for (uint32_t i : test_idx) test.push_back(samples.records[i]);

  RRParams params = RRParams::from_epsilon(config.eps_grid[eps_idx]);
  std::vector<Record> train_obf = obfuscate_records(
      train, params, run_key.child(kObfuscatePart), parallel_records);

  RunCell cell;
  PredictionTable base_model = fit_majority(train, dist.x_count(), &cell.absent_baseline);
  PredictionTable ldp_model =
      fit_majority(train_obf, dist.x_count(), &cell.absent_ldp);

  // fairness is audited on the untouched test records
  JointDistribution test_dist = empirical_distribution(test, dist.x_domain());
  cell.baseline = evaluate_predictor(base_model, test_dist);
  cell.ldp = evaluate_predictor(ldp_model, test_dist);
  cell.ldp_matches_closed_form = ldp_model.same_predictions(closed_form);
  return cell;
}

}  // namespace

SweepResult run_experiment(const ExperimentConfig& config, ExecMode mode) {
  config.validate();
  JointDistribution dist = resolve_scenario(config.scenario);

  SweepResult result;
  result.scenario = config.scenario;
  result.x_domain = dist.x_domain();
  result.eps = config.eps_grid;
  result.n = config.n;
  result.runs = config.runs;
  result.seed = config.seed;
  result.train_fraction = config.train_fraction;

  result.analytic_baseline = evaluate_predictor(baseline_predictor(dist), dist);
  std::vector<PredictionTable> closed_forms;
  for (double eps : config.eps_grid) {
    PredictionTable t = ldp_predictor_closed_form(dist, RRParams::from_epsilon(eps));
    result.analytic_ldp.push_back(evaluate_predictor(t, dist));
    closed_forms.push_back(std::move(t));
  }

  const size_t n_eps = config.eps_grid.size();
  result.cells.assign(n_eps, std::vector<RunCell>(config.runs));

  if (mode == ExecMode::Serial) {
    for (size_t e = 0; e < n_eps; ++e) {
      for (size_t r = 0; r < config.runs; ++r) {
        result.cells[e][r] =
            run_single(dist, config, e, r, closed_forms[e], false);
      }
    }
    return result;
  }

  const int64_t total = static_cast<int64_t>(n_eps * config.runs);
#pragma omp parallel for schedule(dynamic)
  for (int64_t i = 0; i < total; ++i) {
    size_t e = static_cast<size_t>(i) / config.runs;
    size_t r = static_cast<size_t>(i) % config.runs;
    result.cells[e][r] = run_single(dist, config, e, r, closed_forms[e], false);
  }
  return result;
}

namespace {

struct Welford {
  size_t count = 0;
  double mean = 0, m2 = 0;

  void add(double v) {
    ++count;
    double d = v - mean;
    mean += d / static_cast<double>(count);
    m2 += d * (v - mean);
  }
  double stddev() const {
    return count > 1 ? std::sqrt(m2 / static_cast<double>(count - 1)) : 0.0;
  }
};

}  // namespace

std::vector<AggregateRow> aggregate(const SweepResult& result) {
  std::vector<AggregateRow> rows;
  for (size_t e = 0; e < result.eps.size(); ++e) {
    const FairnessReport& ana_b = result.analytic_baseline;
    const FairnessReport& ana_l = result.analytic_ldp[e];

    auto make_row = [&](const std::string& metric, const std::string& gx,
                        auto value_of_baseline, auto value_of_ldp,
                        std::optional<double> ana_base,
                        std::optional<double> ana_ldp) {
      AggregateRow row;
      row.eps = result.eps[e];
      row.metric = metric;
      row.group_or_x = gx;
      Welford wb, wl;
      for (const RunCell& c : result.cells[e]) {
        auto vb = value_of_baseline(c);
        auto vl = value_of_ldp(c);
        if (!vb || !vl) continue;  // count only runs where both sides defined
        wb.add(*vb);
        wl.add(*vl);
      }
      // rows round to 12 significant digits so serialization is lossless
      row.count = wb.count;
      row.mean_baseline = round12(wb.mean);
      row.stddev_baseline = round12(wb.stddev());
      row.mean_ldp = round12(wl.mean);
      row.stddev_ldp = round12(wl.stddev());
      if (ana_base && ana_ldp) {
        row.analytic_defined = true;
        row.analytic_baseline = round12(*ana_base);
        row.analytic_ldp = round12(*ana_ldp);
        row.gap_baseline = round12(std::abs(row.mean_baseline - row.analytic_baseline));
        row.gap_ldp = round12(std::abs(row.mean_ldp - row.analytic_ldp));
      }
      rows.push_back(std::move(row));
    };

    make_row(
        "sd", "",
        [](const RunCell& c) { return std::optional<double>(c.baseline.sd.get_d()); },
        [](const RunCell& c) { return std::optional<double>(c.ldp.sd.get_d()); },
        ana_b.sd.get_d(), ana_l.sd.get_d());
    for (size_t x = 0; x < result.x_domain.size(); ++x) {
      make_row(
          "csd", result.x_domain[x],
          [x](const RunCell& c) { return std::optional<double>(c.baseline.csd[x]); },
          [x](const RunCell& c) { return std::optional<double>(c.ldp.csd[x]); },
          static_cast<double>(ana_b.csd[x]), static_cast<double>(ana_l.csd[x]));
    }
    make_row(
        "eod", "",
        [](const RunCell& c) {
          return c.baseline.eod ? std::optional<double>(c.baseline.eod->get_d())
                                : std::nullopt;
        },
        [](const RunCell& c) {
          return c.ldp.eod ? std::optional<double>(c.ldp.eod->get_d())
                           : std::nullopt;
        },
        ana_b.eod ? std::optional<double>(ana_b.eod->get_d()) : std::nullopt,
        ana_l.eod ? std::optional<double>(ana_l.eod->get_d()) : std::nullopt);
    make_row(
        "accuracy", "",
        [](const RunCell& c) { return std::optional<double>(c.baseline.accuracy.get_d()); },
        [](const RunCell& c) { return std::optional<double>(c.ldp.accuracy.get_d()); },
        ana_b.accuracy.get_d(), ana_l.accuracy.get_d());
  }
  return rows;
}

}  // namespace ldpfair
