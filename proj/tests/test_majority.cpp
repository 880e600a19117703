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

#include "doctest.h"
#include "ldpfair/generators.hpp"
#include "ldpfair/scenarios.hpp"

using namespace ldpfair;

namespace {

const JointDistribution& dist(const char* name) {
  return builtin_scenario(name).dist;
}

}  // namespace

TEST_CASE("baseline rule on S1 and S4") {
  PredictionTable s1 = baseline_predictor(dist("S1"));
  CHECK(s1.at(0, 1) == 1);
  CHECK(s1.at(1, 1) == 1);
  CHECK(s1.at(0, 0) == 0);
  CHECK(s1.at(1, 0) == 1);
  CHECK(s1.provenance() == Provenance::Baseline);

  PredictionTable s4 = baseline_predictor(dist("S4"));
  CHECK(s4.at(0, 1) == 0);
  CHECK(s4.at(0, 0) == 0);
  CHECK(s4.at(1, 1) == 1);
  CHECK(s4.at(1, 0) == 1);
}

TEST_CASE("balanced cell predicts positive") {
  JointDistribution d = parse_distribution(R"({
    "x_domain": ["0"],
    "p": {"y1": {"a1": ["0.25"], "a0": ["0.3"]},
          "y0": {"a1": ["0.25"], "a0": ["0.2"]}}})");
  CHECK(baseline_predictor(d).at(0, 1) == 1);  // delta == 0
}

TEST_CASE("closed form flips below the threshold") {
  // group 0 at x=0 rises to 1 because e^0.5 <= 7/3
  PredictionTable t = ldp_predictor_closed_form(dist("S1"), RRParams::from_epsilon(0.5));
  CHECK(t.at(0, 0) == 1);
  CHECK(t.at(0, 1) == 1);
  CHECK(t.at(1, 0) == 1);
  CHECK(t.at(1, 1) == 1);
  CHECK(t.provenance() == Provenance::LdpClosedForm);

  // S5: (x=1, a=0) = 1 because e^0.3 <= 0.14/0.10
  PredictionTable s5 = ldp_predictor_closed_form(dist("S5"), RRParams::from_epsilon(0.3));
  CHECK(s5.at(1, 0) == 1);

  // weak privacy: every finite ratio is far below e^16
  PredictionTable weak = ldp_predictor_closed_form(dist("S5"), RRParams::from_epsilon(16));
  CHECK(weak.same_predictions(baseline_predictor(dist("S5"))));
}

TEST_CASE("predictor-from-distribution matches the closed form (spot)") {
  RRParams p34 = RRParams::from_retention(Rat(3, 4));
  PredictionTable via_channel =
      predictor_from_distribution(obfuscate_distribution(dist("S1"), p34));
  PredictionTable closed = ldp_predictor_closed_form(dist("S1"), p34);
  CHECK(via_channel.same_predictions(closed));
  CHECK(via_channel.provenance() == Provenance::FromDistribution);

  // identity channel reproduces the baseline
  RRParams ident = RRParams::from_retention(Rat(1));
  CHECK(predictor_from_distribution(obfuscate_distribution(dist("S1"), ident))
            .same_predictions(baseline_predictor(dist("S1"))));
}

TEST_CASE("path equivalence over builtins and the retention grid") {
  for (const auto& sc : builtin_scenarios()) {
    for (const Rat& p : {Rat(1, 2), Rat(5, 8), Rat(3, 4), Rat(9, 10), Rat(1)}) {
      CAPTURE(sc.name);
      CAPTURE(exact_string(p));
      RRParams params = RRParams::from_retention(p);
      PredictionTable closed = ldp_predictor_closed_form(sc.dist, params);
      PredictionTable fitted =
          predictor_from_distribution(obfuscate_distribution(sc.dist, params));
      CHECK(closed.same_predictions(fitted));
    }
  }
}

TEST_CASE("total mixing makes the table constant in a") {
  for (const auto& sc : builtin_scenarios()) {
    PredictionTable t =
        ldp_predictor_closed_form(sc.dist, RRParams::from_retention(Rat(1, 2)));
    for (size_t x = 0; x < sc.dist.x_count(); ++x) {
      CHECK(t.at(x, 0) == t.at(x, 1));
    }
  }
}

TEST_CASE("step monotonicity: a single jump at the critical epsilon") {
  // S6 x=0: delta_1 = 0.01 > 0 > delta_0 = -0.04, jump for group 1 at ln 4
  const JointDistribution& s6 = dist("S6");
  double eps_star = std::log(4.0);
  int prev = -1;
  int jumps = 0;
  for (double eps : {0.05, 0.4, 1.0, eps_star - 1e-6, eps_star + 1e-6, 1.6, 3.0, 8.0}) {
    int y = ldp_predictor_closed_form(s6, RRParams::from_epsilon(eps)).at(0, 1);
    if (prev >= 0) {
      CHECK(y >= prev);  // nondecreasing in eps
      jumps += (y != prev);
    }
    prev = y;
  }
  CHECK(jumps == 1);

  // exact grid straddling p* = 4/5
  CHECK(ldp_predictor_closed_form(s6, RRParams::from_retention(Rat(79, 100))).at(0, 1) == 0);
  CHECK(ldp_predictor_closed_form(s6, RRParams::from_retention(Rat(4, 5))).at(0, 1) == 1);
  CHECK(ldp_predictor_closed_form(s6, RRParams::from_retention(Rat(81, 100))).at(0, 1) == 1);

  // mirrored single drop: S1 (x=0, a=0) has delta_0 < 0 < delta_1 and
  // falls from 1 to 0 once eps passes ln(7/3)
  const JointDistribution& s1 = dist("S1");
  double cutoff = std::log(7.0 / 3.0);
  prev = -1;
  jumps = 0;
  for (double eps : {0.05, 0.3, 0.6, cutoff - 1e-6, cutoff + 1e-6, 1.2, 4.0}) {
    int y = ldp_predictor_closed_form(s1, RRParams::from_epsilon(eps)).at(0, 0);
    if (prev >= 0) {
      CHECK(y <= prev);  // nonincreasing in eps
      jumps += (y != prev);
    }
    prev = y;
  }
  CHECK(jumps == 1);
}

TEST_CASE("opposite-signed pair can never invert the pattern") {
  // with delta_1 > 0 > delta_0, (yhat'_1, yhat'_0) = (0, 1) is impossible
  RngStream rng(31);
  for (uint64_t i = 0; i < 200; ++i) {
    JointDistribution d = random_distribution(rng.child(i), 2 + i % 4);
    DeltaTable dt = delta_table(d);
    for (const Rat& p : {Rat(1, 2), Rat(5, 8), Rat(3, 4), Rat(9, 10), Rat(1)}) {
      PredictionTable t = ldp_predictor_closed_form(d, RRParams::from_retention(p));
      for (size_t x = 0; x < d.x_count(); ++x) {
        if (dt.at(x, 1) > 0 && dt.at(x, 0) < 0) {
          CHECK_FALSE((t.at(x, 1) == 0 && t.at(x, 0) == 1));
        }
      }
    }
  }
}

TEST_CASE("numeric boundary tie emits a warning, exact path stays silent") {
  double eps_star = std::log(7.0 / 3.0);
  PredictionTable tied =
      ldp_predictor_closed_form(dist("S1"), RRParams::from_epsilon(eps_star));
  CHECK(tied.boundary_warnings().size() > 0);
  CHECK(tied.at(0, 0) == 1);  // ties resolve as the boundary equality case

  PredictionTable away =
      ldp_predictor_closed_form(dist("S1"), RRParams::from_epsilon(0.5));
  CHECK(away.boundary_warnings().empty());

  PredictionTable exact =
      ldp_predictor_closed_form(dist("S1"), RRParams::from_retention(Rat(7, 10)));
  CHECK(exact.boundary_warnings().empty());
  // p = 7/10 gives e^eps = 7/3 exactly: the non-strict case keeps group 0 at 1
  CHECK(exact.at(0, 0) == 1);
}

TEST_CASE("flip thresholds: S1, S2, S4, S6 cases") {
  ThresholdTable s1 = flip_thresholds(dist("S1"));
  CHECK(s1.rows[0].tag == CellCase::A1PosA0Neg);
  CHECK(*s1.rows[0].ratio_neg_d1_over_d0 == Rat(7, 3));
  CHECK(*s1.rows[0].ratio_neg_d0_over_d1 == Rat(3, 7));
  CHECK(*s1.rows[0].flip_group == 0);
  CHECK(*s1.rows[0].eps_star == doctest::Approx(std::log(7.0 / 3.0)).epsilon(1e-12));
  CHECK(s1.rows[1].tag == CellCase::BothNonneg);
  CHECK_FALSE(s1.rows[1].eps_star.has_value());

  ThresholdTable s2 = flip_thresholds(dist("S2"));
  CHECK(*s2.rows[0].eps_star == doctest::Approx(std::log(14.0 / 11.0)).epsilon(1e-12));
  CHECK(*s2.rows[0].flip_group == 0);

  ThresholdTable s4 = flip_thresholds(dist("S4"));
  CHECK(s4.rows[0].tag == CellCase::BothNonpos);
  CHECK(s4.rows[1].tag == CellCase::BothNonneg);
  CHECK_FALSE(s4.rows[0].eps_star.has_value());
  CHECK_FALSE(s4.rows[1].eps_star.has_value());

  // S6 x=0: the positive group flips (down) at ln 4
  ThresholdTable s6 = flip_thresholds(dist("S6"));
  CHECK(*s6.rows[0].flip_group == 1);
  CHECK(*s6.rows[0].eps_star == doctest::Approx(std::log(4.0)).epsilon(1e-12));
}

TEST_CASE("critical ratios multiply to one where both are defined") {
  for (const auto& sc : builtin_scenarios()) {
    for (const ThresholdRow& row : flip_thresholds(sc.dist).rows) {
      if (row.ratio_neg_d0_over_d1 && row.ratio_neg_d1_over_d0) {
        CHECK(*row.ratio_neg_d0_over_d1 * *row.ratio_neg_d1_over_d0 == 1);
      }
    }
  }
}

TEST_CASE("degenerate cell: both deltas zero keep prediction 1") {
  JointDistribution d = parse_distribution(R"({
    "x_domain": ["0", "1"],
    "p": {"y1": {"a1": ["0.15", "0.1"], "a0": ["0.15", "0.15"]},
          "y0": {"a1": ["0.15", "0.05"], "a0": ["0.15", "0.1"]}}})");
  ThresholdTable t = flip_thresholds(d);
  CHECK(t.rows[0].tag == CellCase::Degenerate);
  for (const Rat& p : {Rat(1, 2), Rat(3, 4), Rat(1)}) {
    PredictionTable pt = ldp_predictor_closed_form(d, RRParams::from_retention(p));
    CHECK(pt.at(0, 0) == 1);
    CHECK(pt.at(0, 1) == 1);
  }
}
