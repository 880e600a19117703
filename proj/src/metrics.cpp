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

#include "ldpfair/metrics.hpp"

#include "ldpfair/error.hpp"

namespace ldpfair {

Rat statistical_disparity(const PredictionTable& pred,
                          const JointDistribution& dist) {
  Rat pa1 = dist.group_mass(1);
  Rat pa0 = dist.group_mass(0);
  if (pa1 == 0 || pa0 == 0) {
    throw Error(Errc::ZeroGroupMass, "a sensitive group has zero mass");
  }
  Rat acc1 = 0, acc0 = 0;
  for (size_t x = 0; x < dist.x_count(); ++x) {
    if (pred.at(x, 1)) acc1 += dist.cell_mass(x, 1);
    if (pred.at(x, 0)) acc0 += dist.cell_mass(x, 0);
  }
  return Rat(acc1 / pa1 - acc0 / pa0);
}

std::vector<int> conditional_sd(const PredictionTable& pred,
                                const JointDistribution& dist) {
  std::vector<int> out(dist.x_count());
  for (size_t x = 0; x < dist.x_count(); ++x) {
    out[x] = pred.at(x, 1) - pred.at(x, 0);
  }
  return out;
}

Rat equal_opportunity_diff(const PredictionTable& pred,
                           const JointDistribution& dist) {
  Rat pos1 = dist.positive_mass(1);
  Rat pos0 = dist.positive_mass(0);
  if (pos1 == 0 || pos0 == 0) {
    throw Error(Errc::UndefinedEod,
                "a group has zero positive mass; true positive rate undefined");
  }
  Rat tp1 = 0, tp0 = 0;
  for (size_t x = 0; x < dist.x_count(); ++x) {
    if (pred.at(x, 1)) tp1 += dist.p(1, x, 1);
    if (pred.at(x, 0)) tp0 += dist.p(1, x, 0);
  }
  return Rat(tp1 / pos1 - tp0 / pos0);
}

Rat accuracy(const PredictionTable& pred, const JointDistribution& dist) {
  Rat correct = 0;
  for (size_t x = 0; x < dist.x_count(); ++x) {
    for (int a = 0; a < 2; ++a) {
      correct += pred.at(x, a) ? dist.p(1, x, a) : dist.p(0, x, a);
    }
  }
  return correct;
}

FairnessReport evaluate_predictor(const PredictionTable& pred,
                                  const JointDistribution& dist) {
  FairnessReport r;
  r.sd = statistical_disparity(pred, dist);
  r.csd = conditional_sd(pred, dist);
  if (dist.positive_mass(0) > 0 && dist.positive_mass(1) > 0) {
    r.eod = equal_opportunity_diff(pred, dist);
  }
  r.accuracy = accuracy(pred, dist);
  r.predictor_provenance = pred.provenance();
  return r;
}

GroupRates group_rates(const PredictionTable& pred,
                       const JointDistribution& dist) {
  GroupRates g;
  for (int a = 0; a < 2; ++a) {
    Rat pa = dist.group_mass(a);
    Rat pos = dist.positive_mass(a);
    Rat acc = 0, tp = 0;
    for (size_t x = 0; x < dist.x_count(); ++x) {
      if (pred.at(x, a)) {
        acc += dist.cell_mass(x, a);
        tp += dist.p(1, x, a);
      }
    }
    if (pa == 0) throw Error(Errc::ZeroGroupMass, "group has zero mass");
    g.acceptance[a] = Rat(acc / pa);
    if (pos > 0) g.tpr[a] = Rat(tp / pos);
  }
  return g;
}

const char* sd_branch_name(SdBranch b) {
  switch (b) {
    case SdBranch::GroupOneDominant: return "exists-x-gamma1-gt-gamma0";
    case SdBranch::Equal: return "all-x-gamma1-eq-gamma0";
    case SdBranch::GroupZeroDominant: return "exists-x-gamma1-lt-gamma0";
  }
  return "?";
}

namespace {

// Gamma comparison direction across all x with both cells defined.
// Throws AssumptionViolated when strict comparisons point both ways.
SdBranch gamma_branch(const JointDistribution& dist) {
  GammaTable g = gamma_table(dist);
  bool gt = false, lt = false;
  for (size_t x = 0; x < dist.x_count(); ++x) {
    if (!g.at(x, 1) || !g.at(x, 0)) continue;
    int c = sign_of(Rat(*g.at(x, 1) - *g.at(x, 0)));
    if (c > 0) gt = true;
    if (c < 0) lt = true;
  }
  if (gt && lt) {
    throw Error(Errc::AssumptionViolated,
                "uniform discrimination fails: both groups dominate somewhere");
  }
  if (gt) return SdBranch::GroupOneDominant;
  if (lt) return SdBranch::GroupZeroDominant;
  return SdBranch::Equal;
}

struct CondMass {
  Rat given_a1, given_a0;
};

CondMass cond_masses(const JointDistribution& dist, size_t x) {
  Rat pa1 = dist.group_mass(1), pa0 = dist.group_mass(0);
  if (pa1 == 0 || pa0 == 0) {
    throw Error(Errc::ZeroGroupMass, "a sensitive group has zero mass");
  }
  return {Rat(dist.cell_mass(x, 1) / pa1), Rat(dist.cell_mass(x, 0) / pa0)};
}

}  // namespace

ClosedFormSd sd_closed_form(const JointDistribution& dist) {
  SdBranch branch = gamma_branch(dist);
  DeltaTable d = delta_table(dist);
  bool indep = independence_check(dist).independent;

  // sum over {Delta_1 >= 0} of P[x|A=1] minus the mirror, partitioned by
  // the sign pattern; under uniform discrimination one mixed pattern is
  // impossible (up to zero-mass cells, which carry no conditional mass).
  Rat total = 0;
  for (size_t x = 0; x < dist.x_count(); ++x) {
    bool in1 = d.at(x, 1) >= 0;
    bool in0 = d.at(x, 0) >= 0;
    if (!in1 && !in0) continue;
    CondMass m = cond_masses(dist, x);
    if (in1 && in0) {
      total += m.given_a1 - m.given_a0;
    } else if (in1) {
      total += m.given_a1;
    } else {
      total -= m.given_a0;
    }
  }
  return {total, branch, indep};
}

ClosedFormSd sd_closed_form(const JointDistribution& dist,
                            const RRParams& params) {
  // p == 1 is the identity channel; the threshold conditions below are
  // stated for finite eps.
  if (params.exact() && params.retention() == 1) {
    return sd_closed_form(dist);
  }
  SdBranch branch = gamma_branch(dist);
  DeltaTable d = delta_table(dist);
  bool indep = independence_check(dist).independent;

  Rat total = 0;
  for (size_t x = 0; x < dist.x_count(); ++x) {
    const Rat& d1 = d.at(x, 1);
    const Rat& d0 = d.at(x, 0);
    int s1 = sign_of(d1), s0 = sign_of(d0);

    if (s1 >= 0 && s0 >= 0) {  // both stay at 1
      CondMass m = cond_masses(dist, x);
      total += m.given_a1 - m.given_a0;
      continue;
    }
    if (s1 <= 0 && s0 <= 0) continue;  // both stay at 0

    // opposite signs: membership decided by e^eps against the two ratios
    Rat r_keep = Rat(-(s1 > 0 ? d0 : d1) / (s1 > 0 ? d1 : d0));  // positive group stays 1
    Rat r_flip = Rat(-(s1 > 0 ? d1 : d0) / (s1 > 0 ? d0 : d1));  // negative group turns 1
    int cmp_keep = compare_exp_eps(params, r_keep);
    int cmp_flip = compare_exp_eps(params, r_flip);
    bool pos_is_one = cmp_keep >= 0;   // e^eps >= ratio (non-strict)
    bool neg_is_one = cmp_flip <= 0;   // e^eps <= ratio (non-strict)

    if (!pos_is_one) continue;  // then the other ratio is below e^eps: both 0
    CondMass m = cond_masses(dist, x);
    if (neg_is_one) {
      total += m.given_a1 - m.given_a0;
    } else if (s1 > 0) {
      total += m.given_a1;
    } else {
      total -= m.given_a0;
    }
  }
  return {total, branch, indep};
}

namespace {

Rat shared_positive_mass(const JointDistribution& dist, size_t x, Rat p_y1) {
  return Rat(dist.yx_mass(1, x) / p_y1);
}

void require_reliable_y(const JointDistribution& dist) {
  for (size_t x = 0; x < dist.x_count(); ++x) {
    Rat m1 = dist.cell_mass(x, 1), m0 = dist.cell_mass(x, 0);
    if (m1 == 0 || m0 == 0) continue;
    if (Rat(dist.p(1, x, 1) / m1) != Rat(dist.p(1, x, 0) / m0)) {
      throw Error(Errc::AssumptionViolated,
                  "reliable-Y fails at x index " + std::to_string(x));
    }
  }
}

Rat eod_over_sets(const JointDistribution& dist,
                  const std::vector<int>& in_set1,
                  const std::vector<int>& in_set0) {
  Rat pos1 = dist.positive_mass(1), pos0 = dist.positive_mass(0);
  if (pos1 == 0 || pos0 == 0) {
    throw Error(Errc::UndefinedEod, "a group has zero positive mass");
  }
  Rat p_y1 = pos1 + pos0;
  Rat total = 0;
  for (size_t x = 0; x < dist.x_count(); ++x) {
    if (in_set1[x] == in_set0[x]) continue;
    Rat m = shared_positive_mass(dist, x, p_y1);
    total += in_set1[x] ? m : -m;
  }
  return total;
}

}  // namespace

Rat eod_closed_form(const JointDistribution& dist) {
  require_reliable_y(dist);
  DeltaTable d = delta_table(dist);
  std::vector<int> s1(dist.x_count()), s0(dist.x_count());
  for (size_t x = 0; x < dist.x_count(); ++x) {
    s1[x] = d.at(x, 1) >= 0;
    s0[x] = d.at(x, 0) >= 0;
  }
  return eod_over_sets(dist, s1, s0);
}

Rat eod_closed_form(const JointDistribution& dist, const RRParams& params) {
  require_reliable_y(dist);
  PredictionTable pred = ldp_predictor_closed_form(dist, params);
  std::vector<int> s1(dist.x_count()), s0(dist.x_count());
  for (size_t x = 0; x < dist.x_count(); ++x) {
    s1[x] = pred.at(x, 1);
    s0[x] = pred.at(x, 0);
  }
  return eod_over_sets(dist, s1, s0);
}

}  // namespace ldpfair
