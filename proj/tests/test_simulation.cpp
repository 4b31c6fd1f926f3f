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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "mmwavesim/errors.hpp"
#include "mmwavesim/simulation.hpp"

using namespace mmwavesim;

namespace {

// Small, fast scenario used throughout this file.
ScenarioConfig small_config() {
  ScenarioConfig cfg;
  cfg.num_users = 2;
  cfg.n_bs = 8;
  cfg.n_ms = 2;
  cfg.n_bs_rf = 4;
  cfg.n_ms_rf = 2;
  cfg.multiplex_order = 1;
  cfg.probe_len = 16;
  cfg.pilot_len = 8;
  cfg.n_trials = 10;
  cfg.master_seed = 5;
  return cfg;
}

} // namespace

TEST_CASE("noise_variance thermal floor") {
  // -174 dBm/Hz + 10 log10(500 MHz) + 6 dB noise figure = -81.01 dBm
  const double nv = noise_variance(500e6, 6.0);
  CHECK(nv == doctest::Approx(7.924465962305569e-12).epsilon(1e-9));
  // no noise figure, 1 Hz: the raw floor
  CHECK(noise_variance(1.0, 0.0) == doctest::Approx(3.981071705534972e-21).epsilon(1e-9));
  CHECK_THROWS_AS(noise_variance(0.0, 6.0), std::invalid_argument);
}

TEST_CASE("validated catches invariant violations") {
  CHECK_NOTHROW(ScenarioConfig{}.validated());

  ScenarioConfig cfg;
  SUBCASE("m above the RF chain count") {
    cfg.multiplex_order = 3;  // n_ms_rf = 2
    CHECK_THROWS_AS(cfg.validated(), ConfigError);
  }
  SUBCASE("zero-forcing needs long enough pilots") {
    cfg.pilot_len = 4;
    cfg.num_users = 5;
    CHECK_THROWS_AS(cfg.validated(), ConfigError);
  }
  SUBCASE("no estimators") {
    cfg.estimators = EstimatorSet{false, false, false};
    CHECK_THROWS_AS(cfg.validated(), ConfigError);
  }
  SUBCASE("bad distance range") {
    cfg.dist_min_m = 50.0;
    cfg.dist_max_m = 5.0;
    CHECK_THROWS_AS(cfg.validated(), ConfigError);
  }
  SUBCASE("RF chains above antenna count") {
    cfg.n_bs_rf = 128;
    CHECK_THROWS_AS(cfg.validated(), ConfigError);
  }
  SUBCASE("beta outside (0, 1]") {
    cfg.beta = 0.0;
    CHECK_THROWS_AS(cfg.validated(), ConfigError);
    cfg.beta = 1.5;
    CHECK_THROWS_AS(cfg.validated(), ConfigError);
  }
}

TEST_CASE("validated normalizes fully digital mode") {
  ScenarioConfig cfg;
  cfg.bf_mode = BfMode::FullyDigital;
  cfg.n_bs_rf = 16;
  cfg.n_ms_rf = 2;
  const ScenarioConfig v = cfg.validated();
  CHECK(v.n_bs_rf == v.n_bs);
  CHECK(v.n_ms_rf == v.n_ms);
}

TEST_CASE("run_trial is a pure function of (config, index)") {
  const ScenarioConfig cfg = small_config().validated();
  const TrialResult a = run_trial(cfg, 3);
  const TrialResult b = run_trial(cfg, 3);
  const TrialResult c = run_trial(cfg, 4);

  REQUIRE(a.distances.size() == 2);
  REQUIRE(a.rates.size() == 2);
  CHECK(a.trial == 3);
  for (int k = 0; k < 2; ++k) {
    CHECK(a.distances[k] == b.distances[k]);
    CHECK(a.distances[k] >= cfg.dist_min_m);
    CHECK(a.distances[k] <= cfg.dist_max_m);
    for (int l = 0; l < kNumLinks; ++l) {
      for (int e = 0; e < kNumEstimators; ++e) {
        CHECK(a.rates[k][l][e] == b.rates[k][l][e]);
      }
    }
  }
  CHECK(a.distances[0] != c.distances[0]);
}

TEST_CASE("run_trial fills only the configured estimator slots") {
  ScenarioConfig cfg = small_config();
  cfg.estimators = EstimatorSet{true, false, true};
  const TrialResult t = run_trial(cfg.validated(), 0);
  for (int k = 0; k < cfg.num_users; ++k) {
    for (const Link link : {Link::Downlink, Link::Uplink}) {
      CHECK(std::isfinite(t.rate(k, link, Estimator::PilotMatched)));
      CHECK(std::isnan(t.rate(k, link, Estimator::ZeroForcing)));
      CHECK(std::isfinite(t.rate(k, link, Estimator::Perfect)));
      CHECK(t.rate(k, link, Estimator::PilotMatched) > 0.0);
    }
  }
}

TEST_CASE("run_trial honors the ideal-tracking test hook") {
  ScenarioConfig cfg = small_config();
  cfg.ideal_tracking = true;
  cfg.noise_var_override = 0.0;
  cfg.estimators = EstimatorSet{false, true, true};
  const TrialResult t = run_trial(cfg.validated(), 1);
  for (int k = 0; k < cfg.num_users; ++k) {
    // noise-free + ideal MS bases: zero-forcing hits the same beams as
    // perfect CSI, so the rates coincide to numerical precision
    for (const Link link : {Link::Downlink, Link::Uplink}) {
      const double zf = t.rate(k, link, Estimator::ZeroForcing);
      const double pf = t.rate(k, link, Estimator::Perfect);
      CHECK(zf == doctest::Approx(pf).epsilon(1e-6));
    }
  }
}

TEST_CASE("run_campaign pools samples and orders trials") {
  ScenarioConfig cfg = small_config();
  const CampaignResult result = run_campaign(cfg);

  REQUIRE(result.trials.size() == 10);
  CHECK(result.failed_trials.empty());
  for (std::size_t i = 0; i < result.trials.size(); ++i) {
    CHECK(result.trials[i].trial == static_cast<std::int64_t>(i));
  }

  // all three estimators on both links
  CHECK(result.stats.series.size() == 6);
  for (const SeriesStats& s : result.stats.series) {
    CHECK(s.n_samples == 20);  // 10 trials x 2 users
    CHECK(s.cdf.size() == 20);
    CHECK(s.median_bps > 0.0);
    CHECK(s.p90_bps >= s.median_bps);
    CHECK(s.cdf.back().prob == doctest::Approx(1.0));
  }

  // medians recomputed from the raw trials
  const SeriesStats* dl_pm = result.stats.find(Link::Downlink, Estimator::PilotMatched);
  REQUIRE(dl_pm != nullptr);
  std::vector<double> pooled;
  for (const TrialResult& t : result.trials) {
    for (int k = 0; k < cfg.num_users; ++k) {
      pooled.push_back(t.rate(k, Link::Downlink, Estimator::PilotMatched));
    }
  }
  CHECK(dl_pm->median_bps == percentile(pooled, 0.5));
  CHECK(dl_pm->p90_bps == percentile(pooled, 0.9));

  CHECK(result.stats.find(Link::Uplink, Estimator::Perfect) != nullptr);
}

TEST_CASE("run_campaign output is invariant to the worker count") {
  ScenarioConfig cfg = small_config();
  cfg.n_trials = 12;
  cfg.workers = 1;
  const CampaignResult serial = run_campaign(cfg);
  cfg.workers = 4;
  const CampaignResult parallel = run_campaign(cfg);

  REQUIRE(serial.trials.size() == parallel.trials.size());
  for (std::size_t i = 0; i < serial.trials.size(); ++i) {
    const TrialResult& a = serial.trials[i];
    const TrialResult& b = parallel.trials[i];
    CHECK(a.trial == b.trial);
    for (int k = 0; k < cfg.num_users; ++k) {
      CHECK(a.distances[k] == b.distances[k]);
      for (int l = 0; l < kNumLinks; ++l) {
        for (int e = 0; e < kNumEstimators; ++e) {
          const double ra = a.rates[k][l][e];
          const double rb = b.rates[k][l][e];
          if (std::isnan(ra)) {
            CHECK(std::isnan(rb));
          } else {
            CHECK(ra == rb);
          }
        }
      }
    }
  }
}

TEST_CASE("run_campaign reports progress") {
  ScenarioConfig cfg = small_config();
  cfg.n_trials = 5;
  std::vector<std::int64_t> seen;
  run_campaign(cfg, [&seen](std::int64_t done, std::int64_t total) {
    CHECK(total == 5);
    seen.push_back(done);
  });
  REQUIRE(seen.size() == 5);
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  CHECK(seen.back() == 5);
}

TEST_CASE("run_campaign validates the config first") {
  ScenarioConfig cfg = small_config();
  cfg.multiplex_order = 7;
  CHECK_THROWS_AS(run_campaign(cfg), ConfigError);
}

TEST_CASE("empirical_cdf") {
  const std::vector<CdfPoint> cdf = empirical_cdf({3.0, 1.0, 2.0});
  REQUIRE(cdf.size() == 3);
  CHECK(cdf[0].value == 1.0);
  CHECK(cdf[0].prob == doctest::Approx(1.0 / 3.0));
  CHECK(cdf[1].value == 2.0);
  CHECK(cdf[1].prob == doctest::Approx(2.0 / 3.0));
  CHECK(cdf[2].value == 3.0);
  CHECK(cdf[2].prob == doctest::Approx(1.0));
  CHECK_THROWS_AS(empirical_cdf({}), std::invalid_argument);
}

TEST_CASE("percentile uses the nearest-rank definition") {
  const std::vector<double> even = {10.0, 20.0, 30.0, 40.0};
  CHECK(percentile(even, 0.5) == 20.0);    // ceil(0.5 * 4) = 2
  CHECK(percentile(even, 0.51) == 30.0);   // ceil(2.04) = 3
  CHECK(percentile(even, 0.9) == 40.0);    // ceil(3.6) = 4
  CHECK(percentile(even, 0.0) == 10.0);    // clamped to rank 1
  CHECK(percentile(even, 1.0) == 40.0);

  const std::vector<double> odd = {5.0, 1.0, 3.0, 2.0, 4.0};
  CHECK(percentile(odd, 0.5) == 3.0);      // ceil(2.5) = 3 on sorted {1..5}

  CHECK_THROWS_AS(percentile({}, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(percentile({1.0}, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(percentile({1.0}, -0.1), std::invalid_argument);
}

TEST_CASE("stats lookup misses return null") {
  ScenarioConfig cfg = small_config();
  cfg.estimators = EstimatorSet{true, false, false};
  const CampaignResult result = run_campaign(cfg);
  CHECK(result.stats.series.size() == 2);
  CHECK(result.stats.find(Link::Downlink, Estimator::PilotMatched) != nullptr);
  CHECK(result.stats.find(Link::Downlink, Estimator::ZeroForcing) == nullptr);
}
