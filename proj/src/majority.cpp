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

#include "ldpfair/majority.hpp"

#include <cmath>

namespace ldpfair {

PredictionTable baseline_predictor(const JointDistribution& dist) {
  DeltaTable d = delta_table(dist);
  PredictionTable t(dist.x_count(), Provenance::Baseline);
  for (size_t x = 0; x < dist.x_count(); ++x) {
    for (int a = 0; a < 2; ++a) {
      t.set(x, a, d.at(x, a) >= 0 ? 1 : 0);
    }
  }
  return t;
}

PredictionTable predictor_from_distribution(const JointDistribution& dist_prime) {
  DeltaTable d = delta_table(dist_prime);
  PredictionTable t(dist_prime.x_count(), Provenance::FromDistribution);
  for (size_t x = 0; x < dist_prime.x_count(); ++x) {
    for (int a = 0; a < 2; ++a) {
      t.set(x, a, d.at(x, a) >= 0 ? 1 : 0);
    }
  }
  return t;
}

namespace {

// Case analysis on (sign Delta_a, sign Delta_abar, e^eps vs ratio).
int ldp_cell(const Rat& da, const Rat& dab, const RRParams& params,
             bool* at_boundary, double* eps_star) {
  if (at_boundary) *at_boundary = false;
  if (params.exact()) {
    const Rat& p = params.retention();
    return sign_of(p * da + (1 - p) * dab) >= 0 ? 1 : 0;
  }
  int sa = sign_of(da), sb = sign_of(dab);
  if (sa >= 0 && sb >= 0) return 1;
  if (sa <= 0 && sb <= 0) return 0;  // at least one strictly negative here
  Rat ratio = Rat(-dab / da);        // positive: signs are opposite
  bool tie = false;
  int cmp = compare_exp_eps(params, ratio, &tie);
  if (tie && at_boundary) {
    *at_boundary = true;
    if (eps_star) *eps_star = std::log(ratio.get_d());
  }
  if (sa > 0) return cmp >= 0 ? 1 : 0;  // e^eps >= -dab/da keeps the sign of da
  return cmp <= 0 ? 1 : 0;              // sa < 0 < sb: flips up below the ratio
}

}  // namespace

PredictionTable ldp_predictor_closed_form(const JointDistribution& dist,
                                          const RRParams& params) {
  DeltaTable d = delta_table(dist);
  PredictionTable t(dist.x_count(), Provenance::LdpClosedForm);
  for (size_t x = 0; x < dist.x_count(); ++x) {
    for (int a = 0; a < 2; ++a) {
      bool tie = false;
      double eps_star = 0;
      t.set(x, a, ldp_cell(d.at(x, a), d.at(x, 1 - a), params, &tie, &eps_star));
      if (tie) t.add_boundary_warning({x, a, eps_star});
    }
  }
  return t;
}

const char* cell_case_name(CellCase c) {
  switch (c) {
    case CellCase::BothNonneg: return "both-nonneg";
    case CellCase::BothNonpos: return "both-nonpos";
    case CellCase::A1PosA0Neg: return "a1pos-a0neg";
    case CellCase::A1NegA0Pos: return "a1neg-a0pos";
    case CellCase::Degenerate: return "degenerate";
  }
  return "?";
}

ThresholdTable flip_thresholds(const JointDistribution& dist) {
  DeltaTable d = delta_table(dist);
  ThresholdTable table;
  table.x_domain = dist.x_domain();
  for (size_t x = 0; x < dist.x_count(); ++x) {
    const Rat& d1 = d.at(x, 1);
    const Rat& d0 = d.at(x, 0);
    ThresholdRow row;
    row.x = x;
    if (d1 != 0) row.ratio_neg_d0_over_d1 = Rat(-d0 / d1);
    if (d0 != 0) row.ratio_neg_d1_over_d0 = Rat(-d1 / d0);

    int s1 = sign_of(d1), s0 = sign_of(d0);
    if (s1 == 0 && s0 == 0) {
      row.tag = CellCase::Degenerate;
    } else if (s1 >= 0 && s0 >= 0) {
      row.tag = CellCase::BothNonneg;
    } else if (s1 <= 0 && s0 <= 0) {
      row.tag = CellCase::BothNonpos;
    } else if (s1 > 0) {
      row.tag = CellCase::A1PosA0Neg;
    } else {
      row.tag = CellCase::A1NegA0Pos;
    }

    // A finite-eps flip exists only for opposite-signed cells. The group
    // whose ratio exceeds 1 is the one that changes prediction; when both
    // ratios equal 1 the negative-delta group flips exactly at eps = 0.
    if (row.tag == CellCase::A1PosA0Neg || row.tag == CellCase::A1NegA0Pos) {
      Rat r_pos = *row.ratio_neg_d0_over_d1;  // governs the positive group's cell
      Rat r_neg = *row.ratio_neg_d1_over_d0;  // governs the negative group's cell
      int pos_group = (row.tag == CellCase::A1PosA0Neg) ? 1 : 0;
      if (row.tag == CellCase::A1NegA0Pos) std::swap(r_pos, r_neg);
      if (r_neg > 1) {
        // below ln(r_neg) the negative group's prediction rises to 1
        row.eps_star = std::log(r_neg.get_d());
        row.flip_group = 1 - pos_group;
      } else if (r_pos > 1) {
        // below ln(r_pos) the positive group's prediction drops to 0
        row.eps_star = std::log(r_pos.get_d());
        row.flip_group = pos_group;
      } else {
        // both ratios are 1: the negative group is predicted 1 only at eps == 0
        row.eps_star = 0.0;
        row.flip_group = 1 - pos_group;
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace ldpfair
