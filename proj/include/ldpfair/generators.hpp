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

#include "ldpfair/distribution.hpp"
#include "ldpfair/rng.hpp"

namespace ldpfair {

// Seeded generators for the property suites. Every draw is converted to
// an exact rational (doubles are dyadic rationals), so generated tables
// satisfy the exact sum-to-one invariant and all downstream arithmetic
// stays exact.

/// Cell masses drawn uniformly and normalized over the 4k-cell simplex.
JointDistribution random_distribution(const RngStream& rng, size_t x_count);

/// Rejection-sampled until uniform discrimination holds (any direction).
JointDistribution random_assumption3_distribution(const RngStream& rng,
                                                  size_t x_count);

/// P[x,a] over a 2k simplex composed with a shared conditional
/// P[Y=1|x] per x, so the reliable-outcome assumption holds exactly.
JointDistribution random_assumption4_distribution(const RngStream& rng,
                                                  size_t x_count);

/// Product form P[x,a] = P[x] P[a] with free per-cell outcome
/// conditionals, rejection-sampled for uniform discrimination.
JointDistribution random_independent_assumption3_distribution(
    const RngStream& rng, size_t x_count);

/// Product form composed with a shared conditional P[Y=1|x]: both X
/// independent of A and reliable-Y hold exactly.
JointDistribution random_independent_assumption4_distribution(
    const RngStream& rng, size_t x_count);

}  // namespace ldpfair
