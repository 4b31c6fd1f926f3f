// SPDX-License-Identifier: Apache-2.0
//
// mmwavesim - multiuser mmWave MIMO link-level simulator
// Copyright (C) 2026 The mmwavesim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <benchmark/benchmark.h>

#include <vector>

#include "mmwavesim/array_geometry.hpp"
#include "mmwavesim/channel_model.hpp"
#include "mmwavesim/random.hpp"
#include "mmwavesim/simulation.hpp"
#include "mmwavesim/subspace_tracking.hpp"

namespace {

using namespace mmwavesim;

void bm_generate_channel(benchmark::State& state) {
  const ClusterModelParams params;
  const UlaSpec ms{4, 0.5};
  const UlaSpec bs{static_cast<int>(state.range(0)), 0.5};
  Rng rng = make_trial_rng(1, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_channel(params, ms, bs, 40.0, rng));
  }
}
BENCHMARK(bm_generate_channel)->Arg(64)->Arg(256);

void bm_channel_svd(benchmark::State& state) {
  Rng rng = make_trial_rng(2, 0);
  const CMatrix m = complex_gaussian_matrix(rng, 2, state.range(0), 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(channel_svd(m));
  }
}
BENCHMARK(bm_channel_svd)->Arg(16)->Arg(64);

void bm_pastd_update(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  Rng rng = make_trial_rng(3, 0);
  PastdState tracker = pastd_init(2, dim, 1.0);
  const CVector sample = complex_gaussian_vector(rng, dim, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pastd_update(tracker, sample));
  }
}
BENCHMARK(bm_pastd_update)->Arg(2)->Arg(16)->Arg(64);

void bm_run_trial(benchmark::State& state) {
  ScenarioConfig cfg;
  cfg.bf_mode = state.range(0) == 0 ? BfMode::Hybrid : BfMode::FullyDigital;
  cfg = cfg.validated();
  std::int64_t idx = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_trial(cfg, idx++));
  }
}
BENCHMARK(bm_run_trial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
