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

#include <gmpxx.h>

#include <string>

namespace ldpfair {

// All probability arithmetic in this library is exact. Sign tests on
// Delta/Gamma values decide predictions, so no rounding is tolerated
// anywhere between input parsing and metric evaluation.
using Rat = mpq_class;

/// Parses "0.35", "-0.1", "2", or "7/20" into an exact rational.
/// Throws Error(ParseError) on anything else.
Rat parse_rational(const std::string& text);

/// Canonical "num/den" form ("num" when the denominator is 1).
std::string exact_string(const Rat& v);

/// Exact decimal form when the denominator divides a power of ten,
/// otherwise falls back to exact_string. parse_rational round-trips both.
std::string decimal_string(const Rat& v);

/// Nearest double rounded to 12 significant digits; used for all
/// human-facing numeric output.
double to_double12(const Rat& v);
double round12(double v);

/// Fixed "%.12g" rendering (locale-independent).
std::string format12(double v);

inline int sign_of(const Rat& v) { return sgn(v); }

}  // namespace ldpfair
