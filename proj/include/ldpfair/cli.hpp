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

#include <ostream>
#include <string>
#include <vector>

#include "ldpfair/report_io.hpp"

namespace ldpfair {

// Exit codes: 0 success, 1 invalid arguments or input document,
// 2 scenario not found, 3 assumption violation under --require-assumptions.

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

/// Closed-form audit used by the analyze and sweep subcommands; boundary
/// warnings from numeric threshold ties are appended to `warnings`.
AnalyzeReport build_analyze_report(const JointDistribution& dist,
                                   const std::string& scenario_label,
                                   const std::vector<double>& eps,
                                   bool per_group,
                                   std::vector<std::string>* warnings);

}  // namespace ldpfair
