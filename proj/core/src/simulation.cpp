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

#include "mmwavesim/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "mmwavesim/errors.hpp"
#include "mmwavesim/estimation_protocol.hpp"
#include "mmwavesim/link_rates.hpp"
#include "mmwavesim/random.hpp"
#include "mmwavesim/subspace_tracking.hpp"

namespace mmwavesim {

namespace {

constexpr double kMaxFailedFraction = 1e-3;
constexpr int kMaxPilotBookAttempts = 5;

void require(bool ok, const char* what) {
  if (!ok) {
    throw ConfigError(what);
  }
}

} // namespace

bool EstimatorSet::contains(Estimator e) const {
  switch (e) {
    case Estimator::PilotMatched: return pm;
    case Estimator::ZeroForcing: return zf;
    case Estimator::Perfect: return perfect;
  }
  return false;
}

ClusterModelParams ScenarioConfig::channel_params() const {
  ClusterModelParams p;
  p.n_clusters = n_clusters;
  p.n_rays_per_cluster = n_rays;
  p.angle_spread = angle_spread_deg * std::numbers::pi / 180.0;
  p.carrier_freq = carrier_freq_hz();
  p.path_loss_exponent = path_loss_exponent;
  p.ref_loss_db = ref_loss_db;
  p.shadowing_std_db = shadowing_std_db;
  return p;
}

ScenarioConfig ScenarioConfig::validated() const {
  ScenarioConfig c = *this;
  if (c.bf_mode == BfMode::FullyDigital) {
    c.n_bs_rf = c.n_bs;
    c.n_ms_rf = c.n_ms;
  }
  require(c.num_users >= 1, "k must be >= 1");
  require(c.n_bs >= 1 && c.n_ms >= 1, "antenna counts must be >= 1");
  require(c.n_bs_rf >= 1 && c.n_bs_rf <= c.n_bs, "n_bs_rf must be in [1, n_bs]");
  require(c.n_ms_rf >= 1 && c.n_ms_rf <= c.n_ms, "n_ms_rf must be in [1, n_ms]");
  require(c.multiplex_order >= 1 && c.multiplex_order <= c.n_ms_rf &&
              c.multiplex_order <= c.n_bs_rf,
          "m must be in [1, min(n_ms_rf, n_bs_rf)]");
  require(c.carrier_freq_ghz > 0.0, "f0_ghz must be > 0");
  require(c.bandwidth_mhz > 0.0, "bw_mhz must be > 0");
  require(c.probe_power_w > 0.0 && c.ms_power_w > 0.0 && c.bs_data_power_w > 0.0,
          "powers must be > 0");
  require(c.probe_len >= 1, "probe_len must be >= 1");
  require(c.pilot_len >= c.multiplex_order, "pilot_len must be >= m");
  require(!c.estimators.zf || c.pilot_len >= c.multiplex_order * c.num_users,
          "zf needs pilot_len >= m * k");
  require(c.dist_min_m > 0.0 && c.dist_max_m >= c.dist_min_m,
          "distance range must satisfy 0 < dist_min_m <= dist_max_m");
  require(c.noise_figure_db >= 0.0, "noise_figure_db must be >= 0");
  require(c.beta > 0.0 && c.beta <= 1.0, "beta must be in (0, 1]");
  require(c.n_trials >= 1, "trials must be >= 1");
  require(c.estimators.any(), "at least one estimator must be enabled");
  require(c.n_clusters >= 1 && c.n_rays >= 1, "cluster geometry counts must be >= 1");
  require(c.angle_spread_deg >= 0.0, "angle_spread_deg must be >= 0");
  require(c.path_loss_exponent > 0.0, "path_loss_exponent must be > 0");
  require(std::isfinite(c.ref_loss_db), "ref_loss_db must be finite");
  require(c.shadowing_std_db >= 0.0, "shadowing_std_db must be >= 0");
  require(c.workers >= 1, "workers must be >= 1");
  return c;
}

const SeriesStats* CampaignStats::find(Link link, Estimator est) const {
  for (const SeriesStats& s : series) {
    if (s.link == link && s.estimator == est) {
      return &s;
    }
  }
  return nullptr;
}

double noise_variance(double bandwidth_hz, double noise_figure_db) {
  if (!(bandwidth_hz > 0.0)) {
    throw std::invalid_argument("noise_variance: bandwidth must be > 0");
  }
  const double dbm = -174.0 + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
  return std::pow(10.0, (dbm - 30.0) / 10.0);
}

TrialResult run_trial(const ScenarioConfig& cfg, std::int64_t trial_idx) {
  Rng rng = make_trial_rng(cfg.master_seed, trial_idx);
  const int num_users = cfg.num_users;
  const int order = cfg.multiplex_order;

  const CombinerMode mode =
      (cfg.bf_mode == BfMode::Hybrid) ? CombinerMode::Grid : CombinerMode::Identity;
  const AnalogCombiner d_bs = build_analog_combiner(cfg.n_bs, cfg.n_bs_rf, mode);
  const AnalogCombiner d_ms = build_analog_combiner(cfg.n_ms, cfg.n_ms_rf, mode);
  const UlaSpec bs_spec{cfg.n_bs, 0.5};
  const UlaSpec ms_spec{cfg.n_ms, 0.5};
  const ClusterModelParams params = cfg.channel_params();
  const double noise_var = cfg.noise_var_override
                               ? *cfg.noise_var_override
                               : noise_variance(cfg.bandwidth_hz(), cfg.noise_figure_db);

  // Fixed draw order: distances, then per-user channels, then the probing
  // stage per user, then the pilot book (with regeneration on a degenerate
  // draw), then the pilot-stage noise. Keep it stable; the byte-determinism
  // guarantee depends on it.
  TrialResult result;
  result.trial = trial_idx;
  result.distances.resize(num_users);
  for (int k = 0; k < num_users; ++k) {
    result.distances[k] = uniform_real(rng, cfg.dist_min_m, cfg.dist_max_m);
  }

  std::vector<ChannelRealization> channels;
  channels.reserve(num_users);
  for (int k = 0; k < num_users; ++k) {
    channels.push_back(make_channel_realization(params, ms_spec, bs_spec, d_ms, d_bs,
                                                result.distances[k], rng));
  }

  ProbingConfig probing;
  probing.probe_len = cfg.probe_len;
  probing.probe_power = cfg.probe_power_w;
  probing.noise_var = noise_var;

  std::vector<CMatrix> ms_bases(num_users);
  for (int k = 0; k < num_users; ++k) {
    if (cfg.ideal_tracking) {
      ms_bases[k] = channels[k].svd.left_vectors.leftCols(order);
    } else {
      ms_bases[k] = run_phase_a(channels[k].composite_channel, probing, d_bs, d_ms,
                                order, cfg.beta, rng);
    }
  }

  const bool need_uplink_pilots = cfg.estimators.pm || cfg.estimators.zf;
  PilotBook book;
  std::optional<ZfMatrices> zf;
  CMatrix y;
  if (need_uplink_pilots) {
    for (int attempt = 0;; ++attempt) {
      book = generate_pilot_book(num_users, order, cfg.pilot_len, cfg.ms_power_w, rng);
      if (!cfg.estimators.zf) {
        break;
      }
      try {
        zf = zf_matrix(book);
        break;
      } catch (const DegenerateStateError&) {
        if (attempt + 1 >= kMaxPilotBookAttempts) {
          throw;
        }
      }
    }
    std::vector<CMatrix> composites(num_users);
    for (int k = 0; k < num_users; ++k) {
      composites[k] = channels[k].composite_channel;
    }
    y = simulate_phase_b_rx(composites, ms_bases, book, noise_var, d_bs, rng);
  }

  std::vector<CMatrix> composites(num_users);
  for (int k = 0; k < num_users; ++k) {
    composites[k] = channels[k].composite_channel;
  }

  result.rates.assign(num_users, {});
  for (auto& per_user : result.rates) {
    for (auto& per_link : per_user) {
      per_link.fill(std::numeric_limits<double>::quiet_NaN());
    }
  }

  const auto evaluate = [&](Estimator est, const std::vector<CMatrix>& bs_mats,
                            const std::vector<CMatrix>& ms_mats) {
    const BeamformerSet bf = make_precoders(bs_mats, ms_mats, cfg.bs_data_power_w,
                                            cfg.ms_power_w, d_bs, d_ms);
    const std::vector<double> dl =
        downlink_rates(composites, bf, noise_var, cfg.bandwidth_hz(), d_bs, d_ms);
    const std::vector<double> ul =
        uplink_rates(composites, bf, noise_var, cfg.bandwidth_hz(), d_bs, d_ms);
    const int e = static_cast<int>(est);
    for (int k = 0; k < num_users; ++k) {
      result.rates[k][static_cast<int>(Link::Downlink)][e] = dl[k];
      result.rates[k][static_cast<int>(Link::Uplink)][e] = ul[k];
    }
  };

  if (cfg.estimators.pm) {
    std::vector<CMatrix> bs_mats(num_users);
    for (int k = 0; k < num_users; ++k) {
      bs_mats[k] = pm_estimate(y, book.pilots[k]).columns;
    }
    evaluate(Estimator::PilotMatched, bs_mats, ms_bases);
  }
  if (cfg.estimators.zf) {
    std::vector<CMatrix> bs_mats(num_users);
    for (int k = 0; k < num_users; ++k) {
      bs_mats[k] = zf_estimate(y, zf->per_user[k]).columns;
    }
    evaluate(Estimator::ZeroForcing, bs_mats, ms_bases);
  }
  if (cfg.estimators.perfect) {
    std::vector<CMatrix> bs_mats(num_users);
    std::vector<CMatrix> ms_mats(num_users);
    for (int k = 0; k < num_users; ++k) {
      const ChannelSvd& svd = channels[k].svd;
      bs_mats[k] = svd.right_vectors.leftCols(order) *
                   svd.singular_values.head(order).asDiagonal();
      ms_mats[k] = svd.left_vectors.leftCols(order);
    }
    evaluate(Estimator::Perfect, bs_mats, ms_mats);
  }

  return result;
}

CampaignResult run_campaign(const ScenarioConfig& raw_cfg, const ProgressFn& progress) {
  const ScenarioConfig cfg = raw_cfg.validated();
  const std::int64_t total = cfg.n_trials;
  const int workers = static_cast<int>(
      std::min<std::int64_t>(cfg.workers, total));

  std::vector<std::optional<TrialResult>> slots(static_cast<std::size_t>(total));
  std::vector<char> failed(static_cast<std::size_t>(total), 0);
  std::atomic<std::int64_t> next{0};
  std::atomic<std::int64_t> completed{0};
  std::mutex progress_mutex;
  std::exception_ptr first_error;
  std::mutex error_mutex;

  const auto worker_loop = [&]() {
    for (;;) {
      const std::int64_t idx = next.fetch_add(1);
      if (idx >= total) {
        return;
      }
      try {
        slots[static_cast<std::size_t>(idx)] = run_trial(cfg, idx);
      } catch (const NumericalError&) {
        // covers DegenerateStateError too
        failed[static_cast<std::size_t>(idx)] = 1;
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) {
          first_error = std::current_exception();
        }
        return;
      }
      const std::int64_t done = completed.fetch_add(1) + 1;
      if (progress) {
        const std::lock_guard<std::mutex> lock(progress_mutex);
        progress(done, total);
      }
    }
  };

  if (workers <= 1) {
    worker_loop();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back(worker_loop);
    }
    for (std::thread& t : pool) {
      t.join();
    }
  }
  if (first_error) {
    std::rethrow_exception(first_error);
  }

  CampaignResult out;
  out.trials.reserve(static_cast<std::size_t>(total));
  for (std::int64_t i = 0; i < total; ++i) {
    if (failed[static_cast<std::size_t>(i)]) {
      out.failed_trials.push_back(i);
    } else {
      out.trials.push_back(std::move(*slots[static_cast<std::size_t>(i)]));
    }
  }
  const double failed_fraction =
      static_cast<double>(out.failed_trials.size()) / static_cast<double>(total);
  if (failed_fraction > kMaxFailedFraction) {
    std::ostringstream msg;
    msg << "campaign aborted: " << out.failed_trials.size() << " of " << total
        << " trials failed (threshold " << kMaxFailedFraction << ")";
    throw CampaignError(msg.str());
  }

  out.stats.bf_mode = cfg.bf_mode;
  const std::array<Estimator, kNumEstimators> est_order = {
      Estimator::PilotMatched, Estimator::ZeroForcing, Estimator::Perfect};
  for (int link = 0; link < kNumLinks; ++link) {
    for (Estimator est : est_order) {
      if (!cfg.estimators.contains(est)) {
        continue;
      }
      std::vector<double> samples;
      samples.reserve(out.trials.size() * static_cast<std::size_t>(cfg.num_users));
      for (const TrialResult& trial : out.trials) {
        for (int k = 0; k < cfg.num_users; ++k) {
          samples.push_back(trial.rates[k][link][static_cast<int>(est)]);
        }
      }
      SeriesStats series;
      series.link = static_cast<Link>(link);
      series.estimator = est;
      series.n_samples = samples.size();
      if (!samples.empty()) {
        series.median_bps = percentile(samples, 0.5);
        series.p90_bps = percentile(samples, 0.9);
        series.cdf = empirical_cdf(std::move(samples));
      }
      out.stats.series.push_back(std::move(series));
    }
  }
  return out;
}

std::vector<CdfPoint> empirical_cdf(std::vector<double> values) {
  if (values.empty()) {
    throw std::invalid_argument("empirical_cdf: empty input");
  }
  std::sort(values.begin(), values.end());
  std::vector<CdfPoint> points(values.size());
  const double n = static_cast<double>(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    points[i] = CdfPoint{values[i], static_cast<double>(i + 1) / n};
  }
  return points;
}

double percentile(std::vector<double> values, double p) {
  if (values.empty()) {
    throw std::invalid_argument("percentile: empty input");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("percentile: p must be in [0, 1]");
  }
  std::sort(values.begin(), values.end());
  const auto n = static_cast<std::int64_t>(values.size());
  std::int64_t rank = static_cast<std::int64_t>(
      std::ceil(p * static_cast<double>(n)));
  rank = std::clamp<std::int64_t>(rank, 1, n);
  return values[static_cast<std::size_t>(rank - 1)];
}

} // namespace mmwavesim
