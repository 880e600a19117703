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

#include "ldpfair/scenarios.hpp"

#include "ldpfair/error.hpp"

namespace ldpfair {

namespace {

// Row order: y1a1, y1a0, y0a1, y0a0; each row ordered by x_domain.
JointDistribution make(std::vector<std::string> xd,
                       std::vector<std::string> y1a1,
                       std::vector<std::string> y1a0,
                       std::vector<std::string> y0a1,
                       std::vector<std::string> y0a0) {
  const size_t k = xd.size();
  std::vector<Rat> entries(k * 4);
  for (size_t x = 0; x < k; ++x) {
    entries[(1 * k + x) * 2 + 1] = parse_rational(y1a1[x]);
    entries[(1 * k + x) * 2 + 0] = parse_rational(y1a0[x]);
    entries[(0 * k + x) * 2 + 1] = parse_rational(y0a1[x]);
    entries[(0 * k + x) * 2 + 0] = parse_rational(y0a0[x]);
  }
  return JointDistribution::create(std::move(xd), std::move(entries));
}

std::vector<Scenario> build_registry() {
  std::vector<Scenario> reg;
  reg.push_back({"S1", ScenarioKind::Synthetic,
                 make({"0", "1"},
                      {"0.35", "0.35"}, {"0", "0.15"},
                      {"0", "0"}, {"0.15", "0"}),
                 "X independent of A; uniform discrimination holds (group 1 "
                 "dominant); reliable-Y fails at x=0."});
  reg.push_back({"S2", ScenarioKind::Synthetic,
                 make({"0", "1"},
                      {"0.28", "0.38"}, {"0", "0.12"},
                      {"0", "0"}, {"0.22", "0"}),
                 "X dependent on A; uniform discrimination holds (group 1 "
                 "dominant); reliable-Y fails at x=0."});
  reg.push_back({"S3", ScenarioKind::Synthetic,
                 make({"0", "1", "2"},
                      {"0.03", "0.17", "0.03"}, {"0", "0.17", "0.03"},
                      {"0.24", "0.03", "0"}, {"0.1", "0.2", "0"}),
                 "X dependent on A; uniform discrimination holds; reliable-Y "
                 "fails, so the EOD sandwich does not apply; obfuscation "
                 "flips the sign of SD with |SD'| < |SD|."});
  reg.push_back({"S4", ScenarioKind::Synthetic,
                 make({"0", "1"},
                      {"0", "0.4"}, {"0.03", "0.34"},
                      {"0.03", "0.07"}, {"0.13", "0"}),
                 "Yule association paradox: CSD_x = 0 for every x yet "
                 "SD = 0.26; obfuscation leaves every metric unchanged."});
  reg.push_back({"S5", ScenarioKind::Synthetic,
                 make({"0", "1", "2"},
                      {"0.03", "0.17", "0.03"}, {"0", "0.17", "0.03"},
                      {"0.24", "0.03", "0"}, {"0.03", "0.27", "0"}),
                 "X dependent on A; uniform discrimination holds; reliable-Y "
                 "fails; obfuscation flips the sign of SD with |SD'| > |SD|."});
  reg.push_back({"S6", ScenarioKind::Synthetic,
                 make({"0", "1", "2", "3", "4"},
                      {"0.05", "0.08", "0.09", "0.13", "0.14"},
                      {"0.02", "0.03", "0.06", "0.03", "0.04"},
                      {"0.04", "0.02", "0.01", "0.06", "0"},
                      {"0.06", "0.04", "0.02", "0.08", "0"}),
                 "X dependent on A; uniform discrimination holds (group 1 "
                 "dominant); reliable-Y fails."});
  reg.push_back({"S7", ScenarioKind::Synthetic,
                 make({"0", "1", "2", "3", "4"},
                      {"0.05", "0.07", "0.04", "0.06", "0.05"},
                      {"0.05", "0.07", "0.04", "0.06", "0.05"},
                      {"0", "0.06", "0.05", "0.02", "0"},
                      {"0.09", "0.04", "0.06", "0.02", "0.12"}),
                 "As tabulated, reliable-Y does not hold: P[Y=1|x=0,A=1] = 1 "
                 "vs P[Y=1|x=0,A=0] = 5/14 (also violated at x=1, x=2, x=4), "
                 "and uniform discrimination fails (x=0 favors group 1, x=1 "
                 "favors group 0)."});
  reg.push_back({"compas", ScenarioKind::RealWorld,
                 make({"0", "1"},
                      {"0.12", "0.03"}, {"0.06", "0.03"},
                      {"0.15", "0.1"}, {"0.25", "0.26"}),
                 "Race vs recidivism risk; x = number of priors. Majority "
                 "vote predicts 0 everywhere, so SD = 0 on this coarse "
                 "table."});
  reg.push_back({"adult", ScenarioKind::RealWorld,
                 make({"0", "1"},
                      {"0.06", "0.53"}, {"0.02", "0.21"},
                      {"0.03", "0.06"}, {"0.02", "0.07"}),
                 "Gender vs income; x = education level. Majority vote "
                 "predicts 1 everywhere on this coarse table."});
  reg.push_back({"german", ScenarioKind::RealWorld,
                 make({"0", "1"},
                      {"0.23", "0.27"}, {"0.08", "0.13"},
                      {"0.06", "0.13"}, {"0.01", "0.09"}),
                 "Gender vs credit default; x = credit history. Uniform "
                 "discrimination is violated: Gamma_1 < Gamma_0 at x=0 but "
                 "Gamma_1 > Gamma_0 at x=1."});
  reg.push_back({"lsac", ScenarioKind::RealWorld,
                 make({"0", "1"},
                      {"0.43", "0.47"}, {"0.03", "0.01"},
                      {"0.02", "0.02"}, {"0.01", "0.01"}),
                 "Race vs bar passage; x = undergraduate GPA. Majority vote "
                 "predicts 1 everywhere on this coarse table."});
  return reg;
}

}  // namespace

const std::vector<Scenario>& builtin_scenarios() {
  static const std::vector<Scenario> registry = build_registry();
  return registry;
}

const Scenario& builtin_scenario(const std::string& name) {
  for (const auto& s : builtin_scenarios()) {
    if (s.name == name) return s;
  }
  throw Error(Errc::UnknownScenario, "no builtin scenario named '" + name + "'");
}

std::vector<std::string> scenario_names() {
  std::vector<std::string> names;
  for (const auto& s : builtin_scenarios()) names.push_back(s.name);
  return names;
}

const std::vector<double>& default_eps_grid(ScenarioKind kind) {
  static const std::vector<double> synthetic{16, 8, 2, 1, 0.85, 0.5,
                                             0.4, 0.3, 0.2, 0.1};
  static const std::vector<double> real{16, 8, 5, 4, 3, 2, 1, 0.5};
  return kind == ScenarioKind::Synthetic ? synthetic : real;
}

}  // namespace ldpfair
