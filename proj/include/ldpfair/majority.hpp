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

#include "ldpfair/distribution.hpp"
#include "ldpfair/rr.hpp"

namespace ldpfair {

enum class Provenance { Baseline, LdpClosedForm, FromDistribution };

struct BoundaryWarning {
  size_t x;
  int a;
  double eps_star;  // threshold the numeric epsilon landed on
};

/// Deterministic majority-vote prediction per (x, a) cell.
class PredictionTable {
 public:
  PredictionTable(size_t x_count, Provenance prov)
      : yhat_(x_count * 2, 0), provenance_(prov) {}

  int at(size_t x, int a) const { return yhat_[x * 2 + a]; }
  void set(size_t x, int a, int v) { yhat_[x * 2 + a] = static_cast<uint8_t>(v); }
  size_t x_count() const { return yhat_.size() / 2; }
  Provenance provenance() const { return provenance_; }

  const std::vector<BoundaryWarning>& boundary_warnings() const { return warnings_; }
  void add_boundary_warning(BoundaryWarning w) { warnings_.push_back(w); }

  /// Cell-wise equality; provenance and warnings do not participate.
  bool same_predictions(const PredictionTable& other) const {
    return yhat_ == other.yhat_;
  }

 private:
  std::vector<uint8_t> yhat_;
  Provenance provenance_;
  std::vector<BoundaryWarning> warnings_;
};

/// Baseline rule: predict 1 iff Delta(x,a) >= 0 (exact comparison).
PredictionTable baseline_predictor(const JointDistribution& dist);

/// Same rule applied to an already-obfuscated (or empirical) distribution.
PredictionTable predictor_from_distribution(const JointDistribution& dist_prime);

/// Closed form for the model trained on channel output, stated on the
/// original distribution: predict 1 at (x,a) iff
///   Delta_a, Delta_abar >= 0, or
///   Delta_a > 0 > Delta_abar and e^eps >= -Delta_abar/Delta_a, or
///   Delta_a < 0 < Delta_abar and e^eps <= -Delta_abar/Delta_a.
/// Exact-mode params decide via the sign of p*Delta_a + (1-p)*Delta_abar;
/// numeric-mode params compare eps against ln(ratio) with the boundary
/// tolerance and record a warning on near-ties.
PredictionTable ldp_predictor_closed_form(const JointDistribution& dist,
                                          const RRParams& params);

enum class CellCase {
  BothNonneg,
  BothNonpos,
  A1PosA0Neg,
  A1NegA0Pos,
  Degenerate,  // Delta_1 == Delta_0 == 0
};

const char* cell_case_name(CellCase c);

/// Per-x flip analysis: the sign case of (Delta_1, Delta_0), the two
/// critical ratios where their denominators are nonzero, and, for
/// opposite-signed cells, the privacy level at which a group's
/// prediction changes and which group that is.
struct ThresholdRow {
  size_t x;
  CellCase tag;
  std::optional<Rat> ratio_neg_d0_over_d1;  // -Delta_0 / Delta_1
  std::optional<Rat> ratio_neg_d1_over_d0;  // -Delta_1 / Delta_0
  std::optional<double> eps_star;           // ln of the governing ratio
  std::optional<int> flip_group;            // group whose prediction changes
};

struct ThresholdTable {
  std::vector<std::string> x_domain;
  std::vector<ThresholdRow> rows;
};

ThresholdTable flip_thresholds(const JointDistribution& dist);

}  // namespace ldpfair
