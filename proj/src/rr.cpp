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

#include "ldpfair/rr.hpp"

#include <cmath>
#include <limits>

#include "ldpfair/error.hpp"

namespace ldpfair {

RRParams RRParams::from_epsilon(double eps) {
  if (std::isnan(eps) || std::isinf(eps)) {
    throw Error(Errc::NonFiniteEpsilon, "epsilon must be finite");
  }
  if (eps < 0) {
    throw Error(Errc::NegativeEpsilon, "epsilon must be nonnegative");
  }
  // 1/(1+e^-eps) stays accurate for large eps where e^eps overflows.
  double p = 1.0 / (1.0 + std::exp(-eps));
  return RRParams(eps, Rat(p), false);
}

RRParams RRParams::from_retention(const Rat& p) {
  if (p < Rat(1, 2) || p > 1) {
    throw Error(Errc::InvalidProbability,
                "retention probability must lie in [1/2, 1], got " +
                    exact_string(p));
  }
  return RRParams(std::nullopt, p, true);
}

RRParams RRParams::from_parts(std::optional<double> eps, std::optional<Rat> p) {
  if (p && eps) {
    RRParams from_eps = RRParams::from_epsilon(*eps);
    RRParams from_p = RRParams::from_retention(*p);
    if (std::abs(from_p.retention_d() - from_eps.retention_d()) > 1e-12) {
      throw Error(Errc::InvalidConfig,
                  "epsilon and retention probability disagree");
    }
    return RRParams(eps, *p, true);
  }
  if (p) return from_retention(*p);
  if (eps) return from_epsilon(*eps);
  throw Error(Errc::InvalidConfig, "need epsilon or retention probability");
}

double RRParams::epsilon() const {
  if (epsilon_) return *epsilon_;
  if (p_ == 1) return std::numeric_limits<double>::infinity();
  return std::log(Rat(p_ / (1 - p_)).get_d());
}

int compare_exp_eps(const RRParams& params, const Rat& ratio,
                    bool* at_boundary) {
  if (at_boundary) *at_boundary = false;
  if (params.exact()) {
    const Rat& p = params.retention();
    if (p == 1) return 1;  // e^eps unbounded
    // e^eps = p/(1-p); compare exactly by cross-multiplication
    int s = sign_of(p - (1 - p) * ratio);
    return s;
  }
  double eps = params.epsilon();
  double eps_star = std::log(ratio.get_d());
  double d = eps - eps_star;
  if (std::abs(d) <= kEpsBoundaryTol) {
    if (at_boundary) *at_boundary = true;
    return 0;
  }
  return d > 0 ? 1 : -1;
}

JointDistribution obfuscate_distribution(const JointDistribution& dist,
                                         const RRParams& params) {
  const Rat& p = params.retention();
  Rat q = 1 - p;
  const size_t k = dist.x_count();
  std::vector<Rat> entries(k * 4);
  for (int y = 0; y < 2; ++y) {
    for (size_t x = 0; x < k; ++x) {
      for (int a = 0; a < 2; ++a) {
        entries[(static_cast<size_t>(y) * k + x) * 2 + a] =
            p * dist.p(y, x, a) + q * dist.p(y, x, 1 - a);
      }
    }
  }
  return JointDistribution::create(dist.x_domain(), std::move(entries));
}

int randomize_record(int a, const RRParams& params, const RngStream& rng,
                     uint64_t index) {
  return rng.uniform_at(index) < params.retention_d() ? a : 1 - a;
}

}  // namespace ldpfair
