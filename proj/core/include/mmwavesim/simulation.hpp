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

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mmwavesim/channel_model.hpp"
#include "mmwavesim/types.hpp"

namespace mmwavesim {

struct EstimatorSet {
  bool pm = true;
  bool zf = true;
  bool perfect = true;

  bool contains(Estimator e) const;
  bool any() const { return pm || zf || perfect; }
  int count() const { return (pm ? 1 : 0) + (zf ? 1 : 0) + (perfect ? 1 : 0); }
};

/// Full Monte-Carlo campaign description. Defaults mirror the reference
/// urban scenario: a 64-antenna base station with 16 RF chains serving five
/// 4-antenna mobiles with 2 RF chains each over 500 MHz at 73 GHz.
struct ScenarioConfig {
  int num_users = 5;
  int n_bs = 64;
  int n_ms = 4;
  int n_bs_rf = 16;
  int n_ms_rf = 2;
  int multiplex_order = 1;  // spatial streams per user
  double carrier_freq_ghz = 73.0;
  double bandwidth_mhz = 500.0;
  double probe_power_w = 1.0;
  double ms_power_w = 0.1;
  double bs_data_power_w = 1.0;
  int probe_len = 60;
  int pilot_len = 32;
  double dist_min_m = 5.0;
  double dist_max_m = 100.0;
  double noise_figure_db = 6.0;
  double beta = 1.0;  // tracker forgetting factor
  std::int64_t n_trials = 5000;
  std::uint64_t master_seed = 1;
  BfMode bf_mode = BfMode::Hybrid;
  EstimatorSet estimators;
  int n_clusters = 4;
  int n_rays = 6;
  double angle_spread_deg = 7.5;
  double path_loss_exponent = 2.0;
  double ref_loss_db = 69.7;
  double shadowing_std_db = 0.0;
  int workers = 1;

  // Library-level switches for controlled experiments; not config-file keys.
  bool ideal_tracking = false;                 // bypass the tracker, use true factors
  std::optional<double> noise_var_override;    // force the noise variance, watts

  double bandwidth_hz() const { return bandwidth_mhz * 1e6; }
  double carrier_freq_hz() const { return carrier_freq_ghz * 1e9; }
  ClusterModelParams channel_params() const;

  /// Normalized copy (fully digital mode forces n_rf = n on both sides)
  /// after checking every invariant; throws ConfigError on violation.
  ScenarioConfig validated() const;
};

/// Rates of every configured (user, link, estimator) cell for one trial.
/// Unconfigured estimator slots stay NaN.
struct TrialResult {
  std::int64_t trial = 0;
  std::vector<double> distances;  // per user, meters
  // rates[user][link][estimator], bits/s
  std::vector<std::array<std::array<double, kNumEstimators>, kNumLinks>> rates;

  double rate(int user, Link link, Estimator est) const {
    return rates[user][static_cast<int>(link)][static_cast<int>(est)];
  }
};

struct CdfPoint {
  double value = 0.0;
  double prob = 0.0;
};

/// Empirical summary of the per-user rates pooled over all trials of a
/// campaign, one series per (link, estimator).
struct SeriesStats {
  Link link = Link::Downlink;
  Estimator estimator = Estimator::Perfect;
  std::vector<CdfPoint> cdf;
  double median_bps = 0.0;
  double p90_bps = 0.0;
  std::size_t n_samples = 0;
};

struct CampaignStats {
  BfMode bf_mode = BfMode::Hybrid;
  std::vector<SeriesStats> series;

  const SeriesStats* find(Link link, Estimator est) const;
};

struct CampaignResult {
  std::vector<TrialResult> trials;          // successes, ordered by trial index
  std::vector<std::int64_t> failed_trials;  // indices of excluded trials
  CampaignStats stats;
};

/// Thermal noise power over bandwidth `bandwidth_hz` for a -174 dBm/Hz noise
/// floor plus the receiver noise figure, in watts.
double noise_variance(double bandwidth_hz, double noise_figure_db);

/// One end-to-end trial: drop users at random distances, draw their
/// channels, run the probing stage per user, run the pilot stage, form the
/// configured channel estimates, and evaluate both link directions for each
/// estimator. Fully determined by (cfg, trial_idx). `cfg` must already be
/// validated.
TrialResult run_trial(const ScenarioConfig& cfg, std::int64_t trial_idx);

using ProgressFn = std::function<void(std::int64_t completed, std::int64_t total)>;

/// Run all trials (in parallel when cfg.workers > 1; the output is invariant
/// to the worker count) and pool the per-user rates into one empirical CDF,
/// median and 90th percentile per (link, estimator). Individual trial
/// failures are recorded and excluded; more than 0.1% failures aborts with
/// CampaignError.
CampaignResult run_campaign(const ScenarioConfig& cfg, const ProgressFn& progress = {});

/// Points (v_(i), i/n) over the ascending sorted values. Rejects empty input.
std::vector<CdfPoint> empirical_cdf(std::vector<double> values);

/// Nearest-rank percentile: the sorted sample at index ceil(p*n) (1-based,
/// clamped to [1, n]). Rejects empty input and p outside [0, 1].
double percentile(std::vector<double> values, double p);

} // namespace mmwavesim
