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

#include "ldpfair/rational.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>

#include "ldpfair/error.hpp"

namespace ldpfair {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ParseError: return "ParseError";
    case Errc::SumNotOne: return "SumNotOne";
    case Errc::NegativeEntry: return "NegativeEntry";
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::MissingCell: return "MissingCell";
    case Errc::InvalidProbability: return "InvalidProbability";
    case Errc::UnknownScenario: return "UnknownScenario";
    case Errc::NegativeEpsilon: return "NegativeEpsilon";
    case Errc::NonFiniteEpsilon: return "NonFiniteEpsilon";
    case Errc::ZeroGroupMass: return "ZeroGroupMass";
    case Errc::UndefinedEod: return "UndefinedEOD";
    case Errc::AssumptionViolated: return "AssumptionViolated";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::IoError: return "IoError";
  }
  return "Error";
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad(const std::string& text) {
  throw Error(Errc::ParseError, "not a decimal or rational literal: '" + text + "'");
}

}  // namespace

Rat parse_rational(const std::string& text) {
  std::string s = text;
  // trim ascii whitespace
  size_t b = s.find_first_not_of(" \t\r\n");
  size_t e = s.find_last_not_of(" \t\r\n");
  if (b == std::string::npos) bad(text);
  s = s.substr(b, e - b + 1);

  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = (s[0] == '-');
    s = s.substr(1);
  }
  if (s.empty()) bad(text);

  // mpz_class string constructors auto-detect octal/hex prefixes, so the
  // base is pinned to 10 throughout.
  Rat out;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    mpz_class d(den, 10);
    if (d == 0) bad(text);
    out = Rat(mpz_class(num, 10), d);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) bad(text);
    if (ip.empty()) ip = "0";
    if (!all_digits(ip) || (!fp.empty() && !all_digits(fp))) bad(text);
    mpz_class num(ip + fp, 10);
    mpz_class den = 1;
    for (size_t i = 0; i < fp.size(); ++i) den *= 10;
    out = Rat(num, den);
  } else {
    if (!all_digits(s)) bad(text);
    out = Rat(mpz_class(s, 10));
  }
  out.canonicalize();
  return neg ? Rat(-out) : out;
}

std::string exact_string(const Rat& v) { return v.get_str(); }

std::string decimal_string(const Rat& v) {
  mpz_class num = v.get_num();
  mpz_class den = v.get_den();
  bool neg = num < 0;
  if (neg) num = -num;

  // strip factors of 2 and 5; only those admit a terminating decimal
  mpz_class rest = den;
  unsigned twos = 0, fives = 0;
  while (rest % 2 == 0) { rest /= 2; ++twos; }
  while (rest % 5 == 0) { rest /= 5; ++fives; }
  if (rest != 1) return exact_string(v);

  unsigned places = std::max(twos, fives);
  for (unsigned i = twos; i < places; ++i) num *= 2;
  for (unsigned i = fives; i < places; ++i) num *= 5;

  std::string digits = num.get_str();
  std::string out;
  if (places == 0) {
    out = digits;
  } else {
    while (digits.size() <= places) digits.insert(digits.begin(), '0');
    out = digits.substr(0, digits.size() - places) + "." +
          digits.substr(digits.size() - places);
  }
  return neg ? "-" + out : out;
}

double round12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

double to_double12(const Rat& v) { return round12(v.get_d()); }

std::string format12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace ldpfair
