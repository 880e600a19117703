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

// Wall-clock comparison of the serial reference against the OpenMP
// kernels: the (eps x run) sweep loop and the per-record sampling /
// obfuscation loops. Also asserts the two paths agree bit-for-bit.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ldpfair/harness.hpp"

using namespace ldpfair;

namespace {

template <typename F>
double timed(F&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  ExperimentConfig cfg;
  cfg.scenario = "S6";
  cfg.eps_grid = {8, 2, 1, 0.5, 0.2};
  cfg.n = 100000;
  cfg.runs = argc > 1 ? static_cast<size_t>(std::atoi(argv[1])) : 20;
  cfg.seed = 7;

#ifdef _OPENMP
  std::printf("omp max threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both paths are serial\n");
#endif
  std::printf("sweep: scenario=%s n=%zu runs=%zu eps points=%zu\n",
              cfg.scenario.c_str(), cfg.n, cfg.runs, cfg.eps_grid.size());

  SweepResult serial_result, parallel_result;
  double t_serial = timed([&] { serial_result = run_experiment(cfg, ExecMode::Serial); });
  double t_parallel = timed([&] { parallel_result = run_experiment(cfg, ExecMode::Parallel); });
  bool equal = serial_result == parallel_result;
  std::printf("  serial   %.3fs\n  parallel %.3fs  (speedup %.2fx, results %s)\n",
              t_serial, t_parallel, t_serial / t_parallel,
              equal ? "identical" : "DIFFER");

  const JointDistribution& dist = builtin_scenario("S6").dist;
  const size_t big_n = 20000000;
  SampleSet s_serial, s_parallel;
  double ts = timed([&] { s_serial = sample(dist, big_n, 42, false); });
  double tp = timed([&] { s_parallel = sample(dist, big_n, 42, true); });
  bool sample_equal = s_serial == s_parallel;
  std::printf("sample %zu records:\n  serial   %.3fs\n  parallel %.3fs  "
              "(speedup %.2fx, results %s)\n",
              big_n, ts, tp, ts / tp, sample_equal ? "identical" : "DIFFER");

  RRParams params = RRParams::from_epsilon(1.0);
  RngStream stream(99);
  std::vector<Record> o_serial, o_parallel;
  double tos = timed([&] { o_serial = obfuscate_records(s_serial.records, params, stream, false); });
  double top = timed([&] { o_parallel = obfuscate_records(s_serial.records, params, stream, true); });
  bool obf_equal = o_serial == o_parallel;
  std::printf("obfuscate %zu records:\n  serial   %.3fs\n  parallel %.3fs  "
              "(speedup %.2fx, results %s)\n",
              big_n, tos, top, tos / top, obf_equal ? "identical" : "DIFFER");

  return (equal && sample_equal && obf_equal) ? 0 : 1;
}
