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

#include <string>
#include <vector>

#include "ldpfair/distribution.hpp"

namespace ldpfair {

enum class ScenarioKind { Synthetic, RealWorld };

struct Scenario {
  std::string name;
  ScenarioKind kind;
  JointDistribution dist;
  std::string notes;  // structural facts about the table
};

/// Registry of the builtin study distributions: S1..S7 plus the four
/// coarse real-world tables (compas, adult, german, lsac).
const std::vector<Scenario>& builtin_scenarios();

/// Throws UnknownScenario for names outside the registry.
const Scenario& builtin_scenario(const std::string& name);

std::vector<std::string> scenario_names();

/// Default epsilon grids used by sweeps when none is given.
const std::vector<double>& default_eps_grid(ScenarioKind kind);

}  // namespace ldpfair
