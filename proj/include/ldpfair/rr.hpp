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

#include "ldpfair/distribution.hpp"
#include "ldpfair/rng.hpp"

namespace ldpfair {

/// Binary randomized-response channel parameters. The retention
/// probability p = e^eps / (e^eps + 1) is the chance the reported bit is
/// the true bit.
///
/// Two modes:
///  - epsilon mode (from_epsilon): carries the real privacy level;
///    prediction-flip comparisons go through eps vs ln(ratio) in double
///    precision with a 1e-12 boundary tolerance.
///  - exact mode (from_retention): p is an exact rational in [1/2, 1];
///    every downstream comparison is an exact sign test. Used by the
///    property suites and closed-form cross-checks, since p is
///    irrational for rational eps > 0.
/// Both modes hold an exact rational p (epsilon mode stores the exact
/// value of the double), so the distribution-level channel is always
/// exact arithmetic.
class RRParams {
 public:
  static RRParams from_epsilon(double eps);     // NegativeEpsilon, NonFiniteEpsilon
  static RRParams from_retention(const Rat& p); // InvalidProbability unless 1/2 <= p <= 1
  /// Both fields supplied (e.g. from a config document); they must agree
  /// within 1e-12.
  static RRParams from_parts(std::optional<double> eps, std::optional<Rat> p);

  const Rat& retention() const { return p_; }
  double retention_d() const { return p_.get_d(); }
  /// ln(p / (1-p)); +inf when p == 1.
  double epsilon() const;
  bool exact() const { return exact_; }
  bool has_epsilon() const { return epsilon_.has_value(); }

 private:
  RRParams(std::optional<double> eps, Rat p, bool exact)
      : epsilon_(eps), p_(std::move(p)), exact_(exact) {}

  std::optional<double> epsilon_;
  Rat p_;
  bool exact_;
};

/// Absolute tolerance for numeric-mode comparisons of eps against a flip
/// threshold ln(ratio). Ties inside the tolerance resolve like exact
/// equality; callers may surface a boundary warning.
inline constexpr double kEpsBoundaryTol = 1e-12;

/// Three-way comparison of e^eps against a positive exact ratio:
/// -1 below, 0 equal (or within tolerance in epsilon mode), +1 above.
/// Sets *at_boundary when the numeric path resolved a near-tie.
int compare_exp_eps(const RRParams& params, const Rat& ratio,
                    bool* at_boundary = nullptr);

/// Distribution of (Y, X, A') under the channel:
/// P'[y,x,a] = p P[y,x,a] + (1-p) P[y,x,1-a]. Exact; the (Y, X)
/// marginal is unchanged.
JointDistribution obfuscate_distribution(const JointDistribution& dist,
                                         const RRParams& params);

/// Per-record randomizer: reports `a` with probability p, the flipped
/// bit otherwise. Pure in (stream, index).
int randomize_record(int a, const RRParams& params, const RngStream& rng,
                     uint64_t index);

}  // namespace ldpfair
