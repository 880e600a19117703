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
#include <vector>

#include "ldpfair/rational.hpp"

namespace ldpfair {

/// A probability value: exact rational in [0, 1], constructed without
/// rounding from a decimal string or an integer pair.
class Prob {
 public:
  Prob() : value_(0) {}
  explicit Prob(const Rat& v);                  // throws InvalidProbability
  static Prob from_string(const std::string&);  // decimal or "n/d"
  static Prob from_ratio(long num, long den);

  const Rat& value() const { return value_; }
  operator const Rat&() const { return value_; }

 private:
  Rat value_;
};

/// Exact joint distribution over (Y, X, A) with binary Y and A and a
/// finite ordered X domain. Entries are nonnegative rationals summing
/// to exactly 1. Immutable after construction.
class JointDistribution {
 public:
  /// entries laid out as entries[(y * k + x) * 2 + a].
  static JointDistribution create(std::vector<std::string> x_domain,
                                  std::vector<Rat> entries);

  size_t x_count() const { return x_domain_.size(); }
  const std::vector<std::string>& x_domain() const { return x_domain_; }

  const Rat& p(int y, size_t x, int a) const {
    return entries_[(static_cast<size_t>(y) * x_count() + x) * 2 +
                    static_cast<size_t>(a)];
  }
  /// P[X=x, A=a]
  Rat cell_mass(size_t x, int a) const { return p(1, x, a) + p(0, x, a); }
  /// P[A=a]
  Rat group_mass(int a) const;
  /// P[X=x]
  Rat x_mass(size_t x) const;
  /// P[Y=1, A=a]
  Rat positive_mass(int a) const;
  /// P[Y=y, X=x]
  Rat yx_mass(int y, size_t x) const;

  bool operator==(const JointDistribution&) const = default;

 private:
  JointDistribution(std::vector<std::string> xd, std::vector<Rat> e)
      : x_domain_(std::move(xd)), entries_(std::move(e)) {}

  std::vector<std::string> x_domain_;
  std::vector<Rat> entries_;
};

/// Delta(x,a) = P[Y=1,X=x,A=a] - P[Y=0,X=x,A=a]
class DeltaTable {
 public:
  DeltaTable(size_t x_count) : values_(x_count * 2) {}
  const Rat& at(size_t x, int a) const { return values_[x * 2 + a]; }
  Rat& at(size_t x, int a) { return values_[x * 2 + a]; }
  size_t x_count() const { return values_.size() / 2; }
  bool operator==(const DeltaTable&) const = default;

 private:
  std::vector<Rat> values_;
};

/// Gamma(x,a) = P[Y=1|X=x,A=a] - P[Y=0|X=x,A=a]; undefined on cells with
/// zero mass (never conditioned on a null event).
class GammaTable {
 public:
  GammaTable(size_t x_count) : values_(x_count * 2) {}
  const std::optional<Rat>& at(size_t x, int a) const { return values_[x * 2 + a]; }
  std::optional<Rat>& at(size_t x, int a) { return values_[x * 2 + a]; }
  size_t x_count() const { return values_.size() / 2; }

 private:
  std::vector<std::optional<Rat>> values_;
};

/// Marginal and conditional tables used by the closed-form metric
/// expressions. Conditionals on zero-mass events are left unset.
struct MarginalSet {
  Rat p_a[2];
  std::vector<Rat> p_x;
  std::vector<std::optional<Rat>> p_x_given_a[2];
  std::vector<std::optional<Rat>> p_x_given_y1_a[2];
  std::vector<std::optional<Rat>> p_x_given_y1;
};

struct IndependenceReport {
  bool independent;   // P[x,a] == P[x]P[a] exactly, for all cells
  Rat max_deviation;  // max |P[x,a] - P[x]P[a]|
};

DeltaTable delta_table(const JointDistribution& dist);
GammaTable gamma_table(const JointDistribution& dist);
MarginalSet marginals(const JointDistribution& dist);
IndependenceReport independence_check(const JointDistribution& dist);

/// Parses the JSON distribution document:
///   {"x_domain": ["0","1"],
///    "p": {"y1": {"a1": [...], "a0": [...]}, "y0": {...}}}
/// with one decimal string per (y, x, a), arrays ordered by x_domain.
/// Throws SumNotOne, NegativeEntry, DuplicateLabel, MissingCell, ParseError.
JointDistribution parse_distribution(const std::string& json_text);

/// Inverse of parse_distribution; exact decimals where the entries
/// terminate, "num/den" otherwise. parse(render(d)) == d.
std::string render_distribution(const JointDistribution& dist);

}  // namespace ldpfair
