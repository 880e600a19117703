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

#include "doctest.h"
#include "ldpfair/error.hpp"
#include "ldpfair/generators.hpp"
#include "ldpfair/scenarios.hpp"

using namespace ldpfair;

namespace {

const char* kS1Doc = R"({
  "x_domain": ["0", "1"],
  "p": {
    "y1": {"a1": ["0.35", "0.35"], "a0": ["0", "0.15"]},
    "y0": {"a1": ["0", "0"], "a0": ["0.15", "0"]}
  }
})";

}  // namespace

TEST_CASE("distribution document parses to exact rationals") {
  JointDistribution d = parse_distribution(kS1Doc);
  CHECK(d.x_count() == 2);
  CHECK(d.p(1, 0, 1) == Rat(7, 20));
  CHECK(d.p(0, 0, 0) == Rat(3, 20));
  CHECK(d.p(0, 1, 1) == 0);
}

TEST_CASE("document errors carry their cause") {
  auto expect = [](const std::string& doc, Errc code) {
    try {
      parse_distribution(doc);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == code);
    }
  };
  // entries sum to 0.99
  expect(R"({"x_domain":["0","1"],"p":{
    "y1":{"a1":["0.35","0.35"],"a0":["0","0.14"]},
    "y0":{"a1":["0","0"],"a0":["0.15","0"]}}})",
         Errc::SumNotOne);
  expect(R"({"x_domain":["0","1"],"p":{
    "y1":{"a1":["0.45","0.35"],"a0":["0","0.15"]},
    "y0":{"a1":["0","0"],"a0":["-0.1","0.15"]}}})",
         Errc::NegativeEntry);
  expect(R"({"x_domain":["0","0"],"p":{
    "y1":{"a1":["0.35","0.35"],"a0":["0","0.15"]},
    "y0":{"a1":["0","0"],"a0":["0.15","0"]}}})",
         Errc::DuplicateLabel);
  // missing y0.a0 row
  expect(R"({"x_domain":["0","1"],"p":{
    "y1":{"a1":["0.35","0.35"],"a0":["0","0.15"]},
    "y0":{"a1":["0","0"]}}})",
         Errc::MissingCell);
  // short array
  expect(R"({"x_domain":["0","1"],"p":{
    "y1":{"a1":["0.35"],"a0":["0","0.15"]},
    "y0":{"a1":["0","0"],"a0":["0.15","0"]}}})",
         Errc::MissingCell);
  expect("not json", Errc::ParseError);
}

TEST_CASE("render/parse round-trips every builtin bit-exactly") {
  for (const auto& sc : builtin_scenarios()) {
    CAPTURE(sc.name);
    JointDistribution back = parse_distribution(render_distribution(sc.dist));
    CHECK(back == sc.dist);
  }
}

TEST_CASE("delta table on S1") {
  const JointDistribution& s1 = builtin_scenario("S1").dist;
  DeltaTable d = delta_table(s1);
  CHECK(d.at(0, 1) == Rat(7, 20));    // 0.35
  CHECK(d.at(0, 0) == Rat(-3, 20));   // -0.15
  CHECK(d.at(1, 0) == Rat(3, 20));
}

TEST_CASE("delta is zero when the cell is balanced") {
  JointDistribution d = parse_distribution(R"({
    "x_domain": ["0"],
    "p": {"y1": {"a1": ["0.25"], "a0": ["0.25"]},
          "y0": {"a1": ["0.25"], "a0": ["0.25"]}}})");
  DeltaTable t = delta_table(d);
  CHECK(t.at(0, 0) == 0);
  CHECK(t.at(0, 1) == 0);
}

TEST_CASE("gamma table: german ratios and undefined cells") {
  const JointDistribution& german = builtin_scenario("german").dist;
  GammaTable g = gamma_table(german);
  CHECK(*g.at(0, 1) == Rat(17, 29));
  CHECK(*g.at(0, 0) == Rat(7, 9));
  CHECK(*g.at(1, 1) == Rat(7, 20));
  CHECK(*g.at(1, 0) == Rat(2, 11));

  // zero-mass cell stays undefined
  JointDistribution zero_cell = parse_distribution(R"({
    "x_domain": ["0", "1"],
    "p": {"y1": {"a1": ["0.5", "0"], "a0": ["0.25", "0"]},
          "y0": {"a1": ["0", "0"], "a0": ["0.25", "0"]}}})");
  GammaTable gz = gamma_table(zero_cell);
  CHECK_FALSE(gz.at(1, 1).has_value());
  CHECK_FALSE(gz.at(1, 0).has_value());
  CHECK(gz.at(0, 1).has_value());
}

TEST_CASE("marginals: known masses and normalization") {
  MarginalSet m1 = marginals(builtin_scenario("S1").dist);
  CHECK(m1.p_a[1] == Rat(7, 10));
  CHECK(*m1.p_x_given_y1_a[0][0] == 0);        // P[x=0 | Y=1, A=0]
  CHECK(*m1.p_x_given_y1_a[0][1] == 1);
  CHECK(*m1.p_x_given_y1_a[1][0] == Rat(1, 2)); // P[x=0 | Y=1, A=1]
  CHECK(*m1.p_x_given_y1[0] == Rat(7, 17));     // 0.35 / 0.85
  MarginalSet mc = marginals(builtin_scenario("compas").dist);
  CHECK(mc.p_a[0] == Rat(3, 5));

  for (const auto& sc : builtin_scenarios()) {
    MarginalSet m = marginals(sc.dist);
    Rat sum = 0;
    for (const auto& v : m.p_x) sum += v;
    CHECK(sum == 1);
    for (int a = 0; a < 2; ++a) {
      Rat cond = 0;
      for (const auto& v : m.p_x_given_a[a]) {
        REQUIRE(v.has_value());
        cond += *v;
      }
      CHECK(cond == 1);
    }
  }
}

TEST_CASE("marginals flag zero-mass conditionals as undefined") {
  JointDistribution d = parse_distribution(R"({
    "x_domain": ["0"],
    "p": {"y1": {"a1": ["0"], "a0": ["0"]},
          "y0": {"a1": ["1"], "a0": ["0"]}}})");
  MarginalSet m = marginals(d);
  CHECK_FALSE(m.p_x_given_a[0][0].has_value());   // P[A=0] = 0
  CHECK_FALSE(m.p_x_given_y1[0].has_value());     // P[Y=1] = 0
  CHECK(m.p_x_given_a[1][0].has_value());
}

TEST_CASE("independence: S1 exact, S2 dependent, products exact") {
  CHECK(independence_check(builtin_scenario("S1").dist).independent);
  CHECK(independence_check(builtin_scenario("S1").dist).max_deviation == 0);
  IndependenceReport s2 = independence_check(builtin_scenario("S2").dist);
  CHECK_FALSE(s2.independent);
  CHECK(s2.max_deviation > 0);

  RngStream rng(17);
  for (uint64_t i = 0; i < 50; ++i) {
    JointDistribution d =
        random_independent_assumption4_distribution(rng.child(i), 2 + i % 4);
    IndependenceReport r = independence_check(d);
    CHECK(r.independent);
    CHECK(r.max_deviation == 0);
  }
}

TEST_CASE("structural identities on random tables") {
  RngStream rng(18);
  for (uint64_t i = 0; i < 100; ++i) {
    JointDistribution d = random_distribution(rng.child(i), 2 + i % 4);
    DeltaTable dt = delta_table(d);
    GammaTable gt = gamma_table(d);
    for (size_t x = 0; x < d.x_count(); ++x) {
      for (int a = 0; a < 2; ++a) {
        // delta + 2 P[Y=0,x,a] reconstructs the cell mass
        CHECK(dt.at(x, a) + 2 * d.p(0, x, a) == d.cell_mass(x, a));
        if (gt.at(x, a)) {
          CHECK(*gt.at(x, a) * d.cell_mass(x, a) == dt.at(x, a));
          CHECK(*gt.at(x, a) >= -1);
          CHECK(*gt.at(x, a) <= 1);
        }
      }
    }
  }
}

TEST_CASE("prob type enforces its range") {
  CHECK_THROWS_AS(Prob(Rat(3, 2)), Error);
  CHECK_THROWS_AS(Prob(Rat(-1, 2)), Error);
  CHECK(Prob::from_ratio(7, 20).value() == Rat(7, 20));
  CHECK(Prob::from_string("0.35").value() == Rat(7, 20));
}
