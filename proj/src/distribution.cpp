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

#include "ldpfair/distribution.hpp"

#include <set>

#include "json.hpp"
#include "ldpfair/error.hpp"

namespace ldpfair {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

Prob::Prob(const Rat& v) : value_(v) {
  if (v < 0 || v > 1) {
    throw Error(Errc::InvalidProbability,
                "probability out of [0,1]: " + exact_string(v));
  }
}

Prob Prob::from_string(const std::string& s) { return Prob(parse_rational(s)); }

Prob Prob::from_ratio(long num, long den) {
  if (den == 0) throw Error(Errc::InvalidProbability, "zero denominator");
  Rat v(num, den);
  v.canonicalize();
  return Prob(v);
}

JointDistribution JointDistribution::create(std::vector<std::string> x_domain,
                                            std::vector<Rat> entries) {
  if (x_domain.empty()) {
    throw Error(Errc::MissingCell, "x_domain must be non-empty");
  }
  std::set<std::string> seen;
  for (const auto& label : x_domain) {
    if (!seen.insert(label).second) {
      throw Error(Errc::DuplicateLabel, "duplicate x label '" + label + "'");
    }
  }
  if (entries.size() != x_domain.size() * 4) {
    throw Error(Errc::MissingCell, "expected one entry per (y, x, a) cell");
  }
  Rat sum = 0;
  for (const auto& e : entries) {
    if (e < 0) {
      throw Error(Errc::NegativeEntry, "negative entry " + exact_string(e));
    }
    sum += e;
  }
  if (sum != 1) {
    throw Error(Errc::SumNotOne, "entries sum to " + exact_string(sum));
  }
  return JointDistribution(std::move(x_domain), std::move(entries));
}

Rat JointDistribution::group_mass(int a) const {
  Rat s = 0;
  for (size_t x = 0; x < x_count(); ++x) s += cell_mass(x, a);
  return s;
}

Rat JointDistribution::x_mass(size_t x) const {
  return cell_mass(x, 0) + cell_mass(x, 1);
}

Rat JointDistribution::positive_mass(int a) const {
  Rat s = 0;
  for (size_t x = 0; x < x_count(); ++x) s += p(1, x, a);
  return s;
}

Rat JointDistribution::yx_mass(int y, size_t x) const {
  return p(y, x, 0) + p(y, x, 1);
}

DeltaTable delta_table(const JointDistribution& dist) {
  DeltaTable t(dist.x_count());
  for (size_t x = 0; x < dist.x_count(); ++x) {
    for (int a = 0; a < 2; ++a) {
      t.at(x, a) = dist.p(1, x, a) - dist.p(0, x, a);
    }
  }
  return t;
}

GammaTable gamma_table(const JointDistribution& dist) {
  GammaTable t(dist.x_count());
  for (size_t x = 0; x < dist.x_count(); ++x) {
    for (int a = 0; a < 2; ++a) {
      Rat m = dist.cell_mass(x, a);
      if (m > 0) {
        t.at(x, a) = Rat((dist.p(1, x, a) - dist.p(0, x, a)) / m);
      }
    }
  }
  return t;
}

MarginalSet marginals(const JointDistribution& dist) {
  MarginalSet m;
  const size_t k = dist.x_count();
  m.p_x.resize(k);
  Rat p_y1 = 0;
  for (int a = 0; a < 2; ++a) {
    m.p_a[a] = dist.group_mass(a);
    m.p_x_given_a[a].resize(k);
    m.p_x_given_y1_a[a].resize(k);
    p_y1 += dist.positive_mass(a);
  }
  m.p_x_given_y1.resize(k);
  for (size_t x = 0; x < k; ++x) {
    m.p_x[x] = dist.x_mass(x);
    for (int a = 0; a < 2; ++a) {
      if (m.p_a[a] > 0) {
        m.p_x_given_a[a][x] = Rat(dist.cell_mass(x, a) / m.p_a[a]);
      }
      Rat pos = dist.positive_mass(a);
      if (pos > 0) {
        m.p_x_given_y1_a[a][x] = Rat(dist.p(1, x, a) / pos);
      }
    }
    if (p_y1 > 0) {
      m.p_x_given_y1[x] = Rat(dist.yx_mass(1, x) / p_y1);
    }
  }
  return m;
}

IndependenceReport independence_check(const JointDistribution& dist) {
  IndependenceReport r{true, Rat(0)};
  Rat pa1 = dist.group_mass(1);
  Rat pa0 = dist.group_mass(0);
  for (size_t x = 0; x < dist.x_count(); ++x) {
    Rat px = dist.x_mass(x);
    for (int a = 0; a < 2; ++a) {
      Rat dev = dist.cell_mass(x, a) - px * (a ? pa1 : pa0);
      if (dev != 0) r.independent = false;
      if (dev < 0) dev = -dev;
      if (dev > r.max_deviation) r.max_deviation = dev;
    }
  }
  return r;
}

namespace {

std::vector<Rat> parse_row(const json& doc, const char* ykey, const char* akey,
                           size_t k) {
  if (!doc.contains("p") || !doc["p"].contains(ykey) ||
      !doc["p"][ykey].contains(akey)) {
    throw Error(Errc::MissingCell,
                std::string("missing p.") + ykey + "." + akey);
  }
  const json& arr = doc["p"][ykey][akey];
  if (!arr.is_array() || arr.size() != k) {
    throw Error(Errc::MissingCell,
                std::string("p.") + ykey + "." + akey + " must list one value per x");
  }
  std::vector<Rat> out;
  out.reserve(k);
  for (const auto& v : arr) {
    if (!v.is_string()) {
      throw Error(Errc::ParseError, "probability entries must be strings");
    }
    Rat r = parse_rational(v.get<std::string>());
    if (r < 0) {
      throw Error(Errc::NegativeEntry, "negative entry " + v.get<std::string>());
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace

JointDistribution parse_distribution(const std::string& json_text) {
  json doc = json::parse(json_text, nullptr, false);
  if (doc.is_discarded()) {
    throw Error(Errc::ParseError, "invalid JSON in distribution document");
  }
  if (!doc.contains("x_domain") || !doc["x_domain"].is_array() ||
      doc["x_domain"].empty()) {
    throw Error(Errc::MissingCell, "missing or empty x_domain");
  }
  std::vector<std::string> xd;
  for (const auto& v : doc["x_domain"]) {
    if (!v.is_string()) throw Error(Errc::ParseError, "x_domain labels must be strings");
    xd.push_back(v.get<std::string>());
  }
  const size_t k = xd.size();
  auto y1a1 = parse_row(doc, "y1", "a1", k);
  auto y1a0 = parse_row(doc, "y1", "a0", k);
  auto y0a1 = parse_row(doc, "y0", "a1", k);
  auto y0a0 = parse_row(doc, "y0", "a0", k);

  std::vector<Rat> entries(k * 4);
  for (size_t x = 0; x < k; ++x) {
    entries[(0 * k + x) * 2 + 0] = y0a0[x];
    entries[(0 * k + x) * 2 + 1] = y0a1[x];
    entries[(1 * k + x) * 2 + 0] = y1a0[x];
    entries[(1 * k + x) * 2 + 1] = y1a1[x];
  }
  return JointDistribution::create(std::move(xd), std::move(entries));
}

std::string render_distribution(const JointDistribution& dist) {
  ordered_json doc;
  doc["x_domain"] = dist.x_domain();
  auto row = [&](int y, int a) {
    std::vector<std::string> vals;
    for (size_t x = 0; x < dist.x_count(); ++x) {
      vals.push_back(decimal_string(dist.p(y, x, a)));
    }
    return vals;
  };
  doc["p"]["y1"]["a1"] = row(1, 1);
  doc["p"]["y1"]["a0"] = row(1, 0);
  doc["p"]["y0"]["a1"] = row(0, 1);
  doc["p"]["y0"]["a0"] = row(0, 0);
  return doc.dump(2) + "\n";
}

}  // namespace ldpfair
