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
#include <string>
#include <utility>
#include <vector>

#include "ldpfair/metrics.hpp"

namespace ldpfair {

/// Uniform discrimination: if one group's Gamma strictly dominates at
/// some x, it must weakly dominate at every x. Cells with undefined
/// Gamma are excluded from both quantifiers; with no defined comparison
/// at all the check is vacuous.
struct UniformDiscrimination {
  enum class Status { Holds, Violated, Vacuous };
  Status status = Status::Vacuous;
  int direction = 0;  // +1 group 1 dominates, -1 group 0, 0 all equal
  // When violated: an x where Gamma_1 > Gamma_0 and one where Gamma_1 < Gamma_0.
  std::optional<std::pair<size_t, size_t>> witnesses;

  bool operator==(const UniformDiscrimination&) const = default;
};

/// Reliable outcome: P[Y=1|x,A=1] == P[Y=1|x,A=0] for every x where both
/// cells have positive mass.
struct ReliableY {
  bool holds = true;
  std::optional<size_t> witness_x;
  std::optional<Rat> deviation;  // |P[Y=1|x,1] - P[Y=1|x,0]| at the witness

  bool operator==(const ReliableY&) const = default;
};

struct AssumptionReport {
  UniformDiscrimination uniform_discrimination;
  ReliableY reliable_y;
  bool x_independent_a = false;

  bool operator==(const AssumptionReport&) const = default;
};

UniformDiscrimination check_uniform_discrimination(const JointDistribution&);

/// Default absolute tolerance when checking sampled tables.
inline constexpr double kEmpiricalReliableYTol = 1e-9;

/// Exact equality for exact tables; the tolerance overload is for
/// empirical ones (pass kEmpiricalReliableYTol unless a run configures
/// otherwise).
ReliableY check_reliable_y(const JointDistribution&);
ReliableY check_reliable_y(const JointDistribution&, double tolerance);

AssumptionReport check_assumptions(const JointDistribution&);

/// Gamma of the obfuscated distribution expressed on the original one:
///   Gamma'(x,a) = (p D_a + (1-p) D_abar) / (p P[x,a] + (1-p) P[x,abar]),
/// undefined where the denominator is zero.
GammaTable gamma_prime(const JointDistribution&, const RRParams&);

/// Effect of obfuscation on SD, classified from the (SD, SD') pair.
/// Worsened (same sign, larger magnitude) and Introduced (from exact
/// parity) cannot occur under uniform discrimination with the dominant
/// group privileged, but are reachable for arbitrary inputs.
enum class Regime {
  Unchanged,
  PartiallyReduced,
  Eliminated,
  Flipped,
  Worsened,
  Introduced,
};

const char* regime_name(Regime r);
Regime classify_regime(const Rat& sd, const Rat& sd_prime);

struct TheoremCheck {
  std::string name;
  bool premises_hold = false;
  std::string failed_premise;   // non-empty when premises fail
  bool inequality_evaluated = false;
  bool inequality_holds = false;
  /// "pass", "violated", or "not-applicable"
  std::string status() const;

  bool operator==(const TheoremCheck&) const = default;
};

struct Verdict {
  Regime regime;
  Rat sd, sd_prime;
  std::vector<std::pair<int, int>> csd_pairs;          // (CSD_x, CSD'_x)
  std::optional<std::pair<Rat, Rat>> eod_pair;
  std::vector<TheoremCheck> theorems;

  bool operator==(const Verdict&) const = default;
};

/// Baseline vs LDP metrics for one (distribution, privacy level) pair,
/// with every sandwich/ordering statement evaluated and its premises
/// reported. A failed inequality under failed premises is never a
/// violation, only not-applicable.
Verdict theorem_verdict(const JointDistribution&, const RRParams&);

}  // namespace ldpfair
