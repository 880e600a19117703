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

#include "ldpfair/generators.hpp"

#include "ldpfair/theory.hpp"

namespace ldpfair {

namespace {

std::vector<std::string> labels(size_t k) {
  std::vector<std::string> out;
  for (size_t i = 0; i < k; ++i) out.push_back(std::to_string(i));
  return out;
}

Rat draw(const RngStream& rng, uint64_t idx) { return Rat(rng.uniform_at(idx)); }

// strictly inside (0,1); group masses must not vanish
Rat draw_open01(const RngStream& rng, uint64_t idx) {
  for (uint64_t i = idx;; i += 7777) {
    Rat v = draw(rng, i);
    if (v > 0 && v < 1) return v;
  }
}

std::vector<Rat> simplex(const RngStream& rng, size_t cells, uint64_t base) {
  std::vector<Rat> w(cells);
  Rat sum = 0;
  for (size_t i = 0; i < cells; ++i) {
    w[i] = draw(rng, base + i);
    sum += w[i];
  }
  if (sum == 0) {
    w.assign(cells, Rat(1, static_cast<long>(cells)));
    return w;
  }
  for (auto& v : w) v = Rat(v / sum);
  return w;
}

JointDistribution compose_shared_conditional(const RngStream& rng, size_t k,
                                             const std::vector<Rat>& xa_mass,
                                             uint64_t cond_base) {
  std::vector<Rat> entries(k * 4);
  for (size_t x = 0; x < k; ++x) {
    Rat r = draw(rng, cond_base + x);  // shared P[Y=1|x]
    for (int a = 0; a < 2; ++a) {
      const Rat& m = xa_mass[x * 2 + a];
      entries[(1 * k + x) * 2 + a] = r * m;
      entries[(0 * k + x) * 2 + a] = (1 - r) * m;
    }
  }
  return JointDistribution::create(labels(k), std::move(entries));
}

std::vector<Rat> product_xa_mass(const RngStream& rng, size_t k,
                                 uint64_t base) {
  std::vector<Rat> px = simplex(rng, k, base);
  Rat pa1 = draw_open01(rng, base + 1000);
  std::vector<Rat> mass(k * 2);
  for (size_t x = 0; x < k; ++x) {
    mass[x * 2 + 1] = px[x] * pa1;
    mass[x * 2 + 0] = px[x] * (1 - pa1);
  }
  return mass;
}

}  // namespace

JointDistribution random_distribution(const RngStream& rng, size_t x_count) {
  std::vector<Rat> e = simplex(rng, x_count * 4, 0);
  // simplex order matches entry layout: (y * k + x) * 2 + a
  return JointDistribution::create(labels(x_count), std::move(e));
}

JointDistribution random_assumption3_distribution(const RngStream& rng,
                                                  size_t x_count) {
  for (uint64_t attempt = 0;; ++attempt) {
    JointDistribution d = random_distribution(rng.child(attempt), x_count);
    if (check_uniform_discrimination(d).status ==
        UniformDiscrimination::Status::Holds) {
      return d;
    }
  }
}

JointDistribution random_assumption4_distribution(const RngStream& rng,
                                                  size_t x_count) {
  std::vector<Rat> mass = simplex(rng, x_count * 2, 0);
  return compose_shared_conditional(rng, x_count, mass, 5000);
}

JointDistribution random_independent_assumption3_distribution(
    const RngStream& rng, size_t x_count) {
  for (uint64_t attempt = 0;; ++attempt) {
    RngStream s = rng.child(attempt);
    std::vector<Rat> mass = product_xa_mass(s, x_count, 0);
    std::vector<Rat> entries(x_count * 4);
    for (size_t x = 0; x < x_count; ++x) {
      for (int a = 0; a < 2; ++a) {
        Rat q = draw(s, 2000 + x * 2 + a);  // per-cell P[Y=1|x,a]
        entries[(1 * x_count + x) * 2 + a] = q * mass[x * 2 + a];
        entries[(0 * x_count + x) * 2 + a] = (1 - q) * mass[x * 2 + a];
      }
    }
    JointDistribution d =
        JointDistribution::create(labels(x_count), std::move(entries));
    if (check_uniform_discrimination(d).status ==
        UniformDiscrimination::Status::Holds) {
      return d;
    }
  }
}

JointDistribution random_independent_assumption4_distribution(
    const RngStream& rng, size_t x_count) {
  std::vector<Rat> mass = product_xa_mass(rng, x_count, 0);
  return compose_shared_conditional(rng, x_count, mass, 5000);
}

}  // namespace ldpfair
