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

#include "ldpfair/verify.hpp"

#include "ldpfair/generators.hpp"
#include "ldpfair/scenarios.hpp"
#include "ldpfair/theory.hpp"

namespace ldpfair {

namespace {

const std::vector<Rat>& retention_grid() {
  static const std::vector<Rat> grid{Rat(1, 2), Rat(5, 8), Rat(3, 4),
                                     Rat(9, 10), Rat(1)};
  return grid;
}

size_t x_count_for(size_t i) { return 2 + i % 4; }  // cycles 2..5

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    ++result_.cases;
    if (!ok) {
      if (result_.violations == 0) result_.first_failure = what;
      ++result_.violations;
    }
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

bool sandwich(const Rat& v, const Rat& vp) {
  if (v > 0) return vp >= 0 && vp <= v;
  if (v < 0) return vp <= 0 && vp >= v;
  return vp == 0;
}

std::string tag(const std::string& kind, size_t i, const Rat& p) {
  return kind + " #" + std::to_string(i) + " p=" + exact_string(p);
}

using DistList = std::vector<JointDistribution>;

SuiteResult csd_sandwich_suite(const DistList& dists) {
  Suite s("csd-sandwich");
  for (size_t i = 0; i < dists.size(); ++i) {
    const auto& d = dists[i];
    PredictionTable base = baseline_predictor(d);
    std::vector<int> csd = conditional_sd(base, d);
    for (const Rat& p : retention_grid()) {
      RRParams params = RRParams::from_retention(p);
      std::vector<int> csd_p =
          conditional_sd(ldp_predictor_closed_form(d, params), d);
      for (size_t x = 0; x < csd.size(); ++x) {
        s.check(sandwich(Rat(csd[x]), Rat(csd_p[x])),
                tag("dist", i, p) + " x=" + std::to_string(x));
      }
    }
  }
  return s.take();
}

SuiteResult sd_sandwich_suite(const DistList& indep_as3) {
  Suite s("sd-sandwich-independent");
  for (size_t i = 0; i < indep_as3.size(); ++i) {
    const auto& d = indep_as3[i];
    Rat sd = statistical_disparity(baseline_predictor(d), d);
    for (const Rat& p : retention_grid()) {
      RRParams params = RRParams::from_retention(p);
      Rat sdp = statistical_disparity(ldp_predictor_closed_form(d, params), d);
      s.check(sandwich(sd, sdp), tag("indep-as3", i, p));
    }
  }
  return s.take();
}

SuiteResult sd_ordering_suite(const DistList& as3) {
  Suite s("sd-ordering");
  for (size_t i = 0; i < as3.size(); ++i) {
    const auto& d = as3[i];
    int dir = check_uniform_discrimination(d).direction;
    Rat sd = statistical_disparity(baseline_predictor(d), d);
    for (const Rat& p : retention_grid()) {
      RRParams params = RRParams::from_retention(p);
      Rat sdp = statistical_disparity(ldp_predictor_closed_form(d, params), d);
      bool ok = dir > 0 ? sdp <= sd : dir < 0 ? sdp >= sd : sdp == sd;
      s.check(ok, tag("as3", i, p));
    }
  }
  return s.take();
}

SuiteResult eod_sandwich_suite(const DistList& as4) {
  Suite s("eod-sandwich");
  for (size_t i = 0; i < as4.size(); ++i) {
    const auto& d = as4[i];
    if (d.positive_mass(0) == 0 || d.positive_mass(1) == 0) continue;
    Rat eod = equal_opportunity_diff(baseline_predictor(d), d);
    for (const Rat& p : retention_grid()) {
      RRParams params = RRParams::from_retention(p);
      Rat eodp = equal_opportunity_diff(ldp_predictor_closed_form(d, params), d);
      s.check(sandwich(eod, eodp), tag("as4", i, p));
    }
  }
  return s.take();
}

SuiteResult delta_mixing_suite(const DistList& dists) {
  Suite s("delta-mixing-identity");
  for (size_t i = 0; i < dists.size(); ++i) {
    const auto& d = dists[i];
    DeltaTable delta = delta_table(d);
    for (const Rat& p : retention_grid()) {
      RRParams params = RRParams::from_retention(p);
      DeltaTable delta_p = delta_table(obfuscate_distribution(d, params));
      for (size_t x = 0; x < d.x_count(); ++x) {
        for (int a = 0; a < 2; ++a) {
          Rat expected = p * delta.at(x, a) + (1 - p) * delta.at(x, 1 - a);
          s.check(delta_p.at(x, a) == expected, tag("dist", i, p));
        }
      }
    }
  }
  return s.take();
}

SuiteResult gamma_sign_suite(const DistList& dists) {
  Suite s("gamma-prime-sign-preservation");
  for (size_t i = 0; i < dists.size(); ++i) {
    const auto& d = dists[i];
    GammaTable g = gamma_table(d);
    for (const Rat& p : retention_grid()) {
      RRParams params = RRParams::from_retention(p);
      GammaTable gp = gamma_prime(d, params);
      for (size_t x = 0; x < d.x_count(); ++x) {
        if (!g.at(x, 0) || !g.at(x, 1) || !gp.at(x, 0) || !gp.at(x, 1)) continue;
        int before = sign_of(Rat(*g.at(x, 1) - *g.at(x, 0)));
        int after = sign_of(Rat(*gp.at(x, 1) - *gp.at(x, 0)));
        // total mixing at p = 1/2 collapses the comparison to equality
        int expected = (p == Rat(1, 2)) ? 0 : before;
        s.check(after == expected, tag("dist", i, p) + " x=" + std::to_string(x));
      }
    }
  }
  return s.take();
}

SuiteResult closed_form_sd_suite(const DistList& as3) {
  Suite s("closed-form-sd-equivalence");
  for (size_t i = 0; i < as3.size(); ++i) {
    const auto& d = as3[i];
    Rat direct = statistical_disparity(baseline_predictor(d), d);
    s.check(sd_closed_form(d).value == direct, tag("as3", i, Rat(0)));
    for (const Rat& p : retention_grid()) {
      RRParams params = RRParams::from_retention(p);
      Rat direct_p =
          statistical_disparity(ldp_predictor_closed_form(d, params), d);
      s.check(sd_closed_form(d, params).value == direct_p, tag("as3", i, p));
    }
  }
  return s.take();
}

SuiteResult closed_form_eod_suite(const DistList& indep_as4) {
  Suite s("closed-form-eod-equivalence");
  for (size_t i = 0; i < indep_as4.size(); ++i) {
    const auto& d = indep_as4[i];
    if (d.positive_mass(0) == 0 || d.positive_mass(1) == 0) continue;
    Rat direct = equal_opportunity_diff(baseline_predictor(d), d);
    s.check(eod_closed_form(d) == direct, tag("indep-as4", i, Rat(0)));
    for (const Rat& p : retention_grid()) {
      RRParams params = RRParams::from_retention(p);
      Rat direct_p =
          equal_opportunity_diff(ldp_predictor_closed_form(d, params), d);
      s.check(eod_closed_form(d, params) == direct_p, tag("indep-as4", i, p));
    }
  }
  return s.take();
}

SuiteResult channel_preservation_suite(const DistList& dists) {
  Suite s("channel-preservation");
  for (size_t i = 0; i < dists.size(); ++i) {
    const auto& d = dists[i];
    for (const Rat& p : retention_grid()) {
      RRParams params = RRParams::from_retention(p);
      JointDistribution dp = obfuscate_distribution(d, params);
      Rat sum = 0;
      bool marginal_ok = true;
      for (int y = 0; y < 2; ++y) {
        for (size_t x = 0; x < d.x_count(); ++x) {
          sum += dp.p(y, x, 0) + dp.p(y, x, 1);
          if (dp.yx_mass(y, x) != d.yx_mass(y, x)) marginal_ok = false;
        }
      }
      s.check(sum == 1 && marginal_ok, tag("dist", i, p));
    }
  }
  return s.take();
}

SuiteResult path_equivalence_suite(const DistList& dists) {
  Suite s("predictor-path-equivalence");
  for (size_t i = 0; i < dists.size(); ++i) {
    const auto& d = dists[i];
    for (const Rat& p : retention_grid()) {
      RRParams params = RRParams::from_retention(p);
      PredictionTable closed = ldp_predictor_closed_form(d, params);
      PredictionTable fitted =
          predictor_from_distribution(obfuscate_distribution(d, params));
      s.check(closed.same_predictions(fitted), tag("dist", i, p));
    }
  }
  return s.take();
}

}  // namespace

std::vector<SuiteResult> run_verification(size_t n_random, uint64_t seed) {
  RngStream root(seed);

  DistList general, as3, as4, indep_as3, indep_as4;
  for (const auto& sc : builtin_scenarios()) general.push_back(sc.dist);
  for (size_t i = 0; i < n_random; ++i) {
    size_t k = x_count_for(i);
    general.push_back(random_distribution(root.child(1).child(i), k));
    as3.push_back(random_assumption3_distribution(root.child(2).child(i), k));
    as4.push_back(random_assumption4_distribution(root.child(3).child(i), k));
    indep_as3.push_back(
        random_independent_assumption3_distribution(root.child(4).child(i), k));
    indep_as4.push_back(
        random_independent_assumption4_distribution(root.child(5).child(i), k));
  }
  // builtins that satisfy the respective premises join those suites
  for (const auto& sc : builtin_scenarios()) {
    AssumptionReport a = check_assumptions(sc.dist);
    bool holds3 = a.uniform_discrimination.status ==
                  UniformDiscrimination::Status::Holds;
    if (holds3) as3.push_back(sc.dist);
    if (holds3 && a.x_independent_a) indep_as3.push_back(sc.dist);
    if (a.reliable_y.holds) {
      as4.push_back(sc.dist);
      if (a.x_independent_a) indep_as4.push_back(sc.dist);
    }
  }

  std::vector<SuiteResult> results;
  results.push_back(csd_sandwich_suite(general));
  results.push_back(sd_sandwich_suite(indep_as3));
  results.push_back(sd_ordering_suite(as3));
  results.push_back(eod_sandwich_suite(as4));
  results.push_back(delta_mixing_suite(general));
  results.push_back(gamma_sign_suite(general));
  results.push_back(closed_form_sd_suite(as3));
  results.push_back(closed_form_eod_suite(indep_as4));
  results.push_back(channel_preservation_suite(general));
  results.push_back(path_equivalence_suite(general));
  return results;
}

}  // namespace ldpfair
