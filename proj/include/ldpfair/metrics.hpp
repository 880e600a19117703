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
#include <vector>

#include "ldpfair/majority.hpp"

namespace ldpfair {

// Every metric conditions on the true sensitive attribute A, never on
// the channel output A'. A predictor trained on obfuscated data is still
// audited against the original distribution.

/// Difference in acceptance rates between groups:
/// sum_x yhat(x,1) P[x|A=1] - sum_x yhat(x,0) P[x|A=0].
/// Throws ZeroGroupMass when either group has zero mass.
Rat statistical_disparity(const PredictionTable& pred,
                          const JointDistribution& dist);

/// Per-x disparity of a deterministic predictor: yhat(x,1) - yhat(x,0).
std::vector<int> conditional_sd(const PredictionTable& pred,
                                const JointDistribution& dist);

/// Difference in true positive rates between groups. Throws UndefinedEOD
/// when P[Y=1, A=a] == 0 for some group.
Rat equal_opportunity_diff(const PredictionTable& pred,
                           const JointDistribution& dist);

Rat accuracy(const PredictionTable& pred, const JointDistribution& dist);

struct FairnessReport {
  Rat sd;
  std::vector<int> csd;         // per x, in {-1, 0, 1}
  std::optional<Rat> eod;       // unset when a group has no positive mass
  Rat accuracy;
  Provenance predictor_provenance;

  bool operator==(const FairnessReport&) const = default;
};

FairnessReport evaluate_predictor(const PredictionTable& pred,
                                  const JointDistribution& dist);

/// P[yhat=1 | A=a] and P[yhat=1 | Y=1, A=a] series for group-separated
/// output.
struct GroupRates {
  Rat acceptance[2];
  std::optional<Rat> tpr[2];

  bool operator==(const GroupRates& o) const {
    return acceptance[0] == o.acceptance[0] &&
           acceptance[1] == o.acceptance[1] && tpr[0] == o.tpr[0] &&
           tpr[1] == o.tpr[1];
  }
};
GroupRates group_rates(const PredictionTable& pred,
                       const JointDistribution& dist);

/// Direction of the uniform-discrimination comparison the closed forms
/// branch on: which group's Gamma weakly dominates across all x.
enum class SdBranch { GroupOneDominant, Equal, GroupZeroDominant };

const char* sd_branch_name(SdBranch b);

struct ClosedFormSd {
  Rat value;
  SdBranch branch;
  bool x_independent_a;
};

/// Probability-mass quantification of SD (no params) and SD' (with
/// params), evaluated over the Delta sign/threshold index sets rather
/// than through a prediction table. Requires uniform discrimination
/// (AssumptionViolated otherwise); ZeroGroupMass as in the direct route.
/// Under X independent of A the expression reduces to P[X in flip set];
/// in the dependent case the per-group conditional masses are used.
ClosedFormSd sd_closed_form(const JointDistribution& dist);
ClosedFormSd sd_closed_form(const JointDistribution& dist,
                            const RRParams& params);

/// Quantification of EOD over the shared conditional mass P[x | Y=1]:
///   sum_{x: Delta_1 >= 0} P[x|Y=1] - sum_{x: Delta_0 >= 0} P[x|Y=1]
/// (flip-threshold index sets in the primed variant). Requires the
/// reliable-outcome assumption (AssumptionViolated otherwise); the
/// shared-mass identity additionally needs X independent of A, which the
/// caller is responsible for when treating this as exact.
/// Throws UndefinedEOD when a group has no positive mass.
Rat eod_closed_form(const JointDistribution& dist);
Rat eod_closed_form(const JointDistribution& dist, const RRParams& params);

}  // namespace ldpfair
