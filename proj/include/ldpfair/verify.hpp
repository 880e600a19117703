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

#include <cstdint>
#include <string>
#include <vector>

namespace ldpfair {

struct SuiteResult {
  std::string name;
  size_t cases = 0;       // individual assertions checked
  size_t violations = 0;
  std::string first_failure;  // description of the first violated case

  bool passed() const { return violations == 0; }
};

/// Runs every theorem/lemma property suite over the builtin scenarios
/// plus `n_random` seeded random distributions with |x_domain| cycling
/// through 2..5, each at retention p in {1/2, 5/8, 3/4, 9/10, 1}:
///   - CSD sandwich per x (any distribution)
///   - SD sandwich (X independent of A + uniform discrimination)
///   - SD ordering (uniform discrimination, dependent allowed)
///   - EOD sandwich (reliable-Y instances)
///   - channel Delta mixing identity (exact)
///   - Gamma' sign preservation (p > 1/2; collapse to equality at p = 1/2)
///   - closed-form SD/SD'/EOD against the direct predictor route
///   - channel mass and (Y, X)-marginal preservation
///   - closed-form LDP predictor against the obfuscate-then-fit route
std::vector<SuiteResult> run_verification(size_t n_random, uint64_t seed);

}  // namespace ldpfair
