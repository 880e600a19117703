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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ldpfair/metrics.hpp"
#include "ldpfair/scenarios.hpp"

namespace ldpfair {

// Finite-sample replication of the closed-form pipeline: draw records,
// obfuscate the sensitive bit of the training split, fit majority-vote
// models, evaluate both on the untouched test split.
//
// Determinism contract: every random draw is a pure function of
// (base seed, eps index, run index, record index), so results are
// bit-identical across worker counts and schedules. The OpenMP kernels
// and the serial reference produce equal SweepResults.

struct Record {
  uint8_t a;
  uint32_t x;
  uint8_t y;
  bool operator==(const Record&) const = default;
};

struct SampleSet {
  std::vector<Record> records;
  uint64_t seed = 0;

  size_t n() const { return records.size(); }
  bool operator==(const SampleSet&) const = default;
};

/// n i.i.d. draws by inverse CDF over the flattened exact table.
SampleSet sample(const JointDistribution& dist, size_t n, uint64_t seed,
                 bool parallel = false);

struct ExperimentConfig {
  std::string scenario;          // builtin name or distribution-document path
  std::vector<double> eps_grid;  // strictly positive
  size_t n = 100000;
  size_t runs = 100;
  uint64_t seed = 0;
  double train_fraction = 0.8;   // in (0, 1]; 1 evaluates on the full sample

  void validate() const;  // throws InvalidConfig
};

/// One (eps, run) outcome.
struct RunCell {
  FairnessReport baseline;
  FairnessReport ldp;
  // (x, a) cells unseen in the training split; they predict 0
  std::vector<std::pair<uint32_t, int>> absent_baseline;
  std::vector<std::pair<uint32_t, int>> absent_ldp;
  // empirical LDP table equals the closed-form table on the true distribution
  bool ldp_matches_closed_form = false;

  bool operator==(const RunCell&) const = default;
};

struct SweepResult {
  std::string scenario;
  std::vector<std::string> x_domain;
  std::vector<double> eps;
  size_t n = 0;
  size_t runs = 0;
  uint64_t seed = 0;
  double train_fraction = 0.8;
  std::vector<std::vector<RunCell>> cells;  // [eps_index][run]
  FairnessReport analytic_baseline;
  std::vector<FairnessReport> analytic_ldp;  // per eps

  bool operator==(const SweepResult&) const = default;
};

enum class ExecMode { Serial, Parallel };

/// Resolves the scenario, draws per-run samples, and fills the sweep.
/// Serial and Parallel are interchangeable by construction.
SweepResult run_experiment(const ExperimentConfig& config,
                           ExecMode mode = ExecMode::Parallel);

/// Deterministic train/test split: Fisher-Yates shuffle of [0, n) driven
/// by the stream, then a prefix/suffix cut at round(train_fraction * n).
void split_indices(size_t n, double train_fraction, const RngStream& rng,
                   std::vector<uint32_t>* train, std::vector<uint32_t>* test);

/// Randomized-response pass over the sensitive bits; input is untouched.
std::vector<Record> obfuscate_records(const std::vector<Record>& records,
                                      const RRParams& params,
                                      const RngStream& rng,
                                      bool parallel = false);

/// Majority-vote fit on records: predict 1 iff count(Y=1) >= count(Y=0)
/// within the (x, a) cell; cells with no records predict 0 and are
/// reported through `absent`.
PredictionTable fit_majority(const std::vector<Record>& records,
                             size_t x_count,
                             std::vector<std::pair<uint32_t, int>>* absent);

/// Exact empirical distribution of a record set (denominator = count).
JointDistribution empirical_distribution(const std::vector<Record>& records,
                                         const std::vector<std::string>& x_domain);

struct AggregateRow {
  double eps;
  std::string metric;       // "sd", "csd", "eod", "accuracy"
  std::string group_or_x;   // x label for csd rows, else empty
  size_t count = 0;         // runs with the metric defined
  double mean_baseline = 0, stddev_baseline = 0;
  double mean_ldp = 0, stddev_ldp = 0;
  bool analytic_defined = false;
  double analytic_baseline = 0, analytic_ldp = 0;
  double gap_baseline = 0, gap_ldp = 0;  // |mean - analytic|

  bool operator==(const AggregateRow&) const = default;
};

/// Mean / sample standard deviation per (eps, metric), with the analytic
/// reference and absolute gap. Pure; repeated calls yield equal rows.
std::vector<AggregateRow> aggregate(const SweepResult& result);

}  // namespace ldpfair
