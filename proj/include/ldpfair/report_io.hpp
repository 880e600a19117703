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

#include <optional>
#include <string>
#include <vector>

#include "ldpfair/harness.hpp"
#include "ldpfair/theory.hpp"

namespace ldpfair {

enum class OutputFormat { Csv, Json };

struct OutputSpec {
  OutputFormat format = OutputFormat::Json;
  std::string destination;  // empty = standard output

  static OutputSpec parse(const std::string& format, const std::string& out);
};

/// Closed-form audit of one distribution over an epsilon list.
struct AnalyzeReport {
  std::string scenario;
  std::vector<std::string> x_domain;
  std::vector<double> epsilon;
  FairnessReport baseline;
  std::vector<FairnessReport> ldp;  // per epsilon
  AssumptionReport assumptions;
  std::vector<Verdict> verdicts;    // per epsilon
  // populated by --per-group
  std::optional<GroupRates> rates_baseline;
  std::vector<GroupRates> rates_ldp;

  bool operator==(const AnalyzeReport&) const = default;
};

struct ThresholdReport {
  std::string scenario;
  ThresholdTable table;
};

struct SimulateReport {
  SweepResult sweep;
  std::vector<AggregateRow> aggregates;
};

// Fixed row schema shared by analytic and Monte Carlo CSV output:
//   scenario,epsilon,run,metric,group_or_x,baseline,ldp,analytic_baseline,analytic_ldp
// `run` is an integer for per-run rows, "mean"/"stddev" for aggregate
// rows, and empty for analytic rows (where baseline/ldp repeat the
// analytic columns). Undefined values render as empty fields.
extern const char* kSweepCsvHeader;

// Serialization is deterministic: identical input yields identical
// bytes. Numeric values carry 12 significant digits; exact rationals are
// rendered as {"v": <number>, "exact": "num/den"} objects in JSON.
std::string analyze_to_json(const AnalyzeReport&);
std::string analyze_to_csv(const AnalyzeReport&);
AnalyzeReport analyze_from_json(const std::string&);

std::string thresholds_to_json(const ThresholdReport&);
std::string thresholds_to_csv(const ThresholdReport&);
ThresholdReport thresholds_from_json(const std::string&);

std::string assumptions_to_json(const std::string& scenario,
                                const std::vector<std::string>& x_domain,
                                const AssumptionReport&);
std::string assumptions_to_csv(const std::string& scenario,
                               const std::vector<std::string>& x_domain,
                               const AssumptionReport&);

std::string simulate_to_json(const SimulateReport&);
std::string simulate_to_csv(const SimulateReport&);
SimulateReport simulate_from_json(const std::string&);

/// Writes to the destination (or the given stream for stdout);
/// throws IoError when the file cannot be written.
void write_output(const OutputSpec& spec, const std::string& payload,
                  std::ostream& stdout_stream);

}  // namespace ldpfair
