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

#include "mmwavesim/output.hpp"

#include <array>
#include <cstdio>
#include <fstream>

#include "mmwavesim/errors.hpp"

namespace mmwavesim {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

std::ofstream open_csv(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open '" + path + "' for writing");
  }
  return out;
}

void close_csv(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) {
    throw IoError("write to '" + path + "' failed");
  }
}

} // namespace

OutputPaths emit_results(const ScenarioConfig& cfg, const CampaignResult& result,
                         const std::string& prefix) {
  OutputPaths paths;
  paths.rates = prefix + "_rates.csv";
  paths.summary = prefix + "_summary.csv";
  paths.cdf = prefix + "_cdf.csv";

  const std::string bf = to_string(cfg.bf_mode);
  const std::array<Estimator, kNumEstimators> est_order = {
      Estimator::PilotMatched, Estimator::ZeroForcing, Estimator::Perfect};
  const std::array<Link, kNumLinks> link_order = {Link::Downlink, Link::Uplink};

  {
    std::ofstream out = open_csv(paths.rates);
    out << "trial,user,link,bf_mode,estimator,rate_bps,distance_m\n";
    for (const TrialResult& trial : result.trials) {
      const int num_users = static_cast<int>(trial.distances.size());
      for (int k = 0; k < num_users; ++k) {
        for (Link link : link_order) {
          for (Estimator est : est_order) {
            if (!cfg.estimators.contains(est)) {
              continue;
            }
            out << trial.trial << ',' << k << ',' << to_string(link) << ',' << bf
                << ',' << to_string(est) << ',' << fmt(trial.rate(k, link, est))
                << ',' << fmt(trial.distances[k]) << '\n';
          }
        }
      }
    }
    close_csv(out, paths.rates);
  }

  {
    std::ofstream out = open_csv(paths.summary);
    out << "link,bf_mode,estimator,median_bps,p90_bps,n_samples\n";
    for (const SeriesStats& s : result.stats.series) {
      out << to_string(s.link) << ',' << bf << ',' << to_string(s.estimator) << ','
          << fmt(s.median_bps) << ',' << fmt(s.p90_bps) << ',' << s.n_samples << '\n';
    }
    close_csv(out, paths.summary);
  }

  {
    std::ofstream out = open_csv(paths.cdf);
    out << "link,bf_mode,estimator,rate_bps,cdf\n";
    for (const SeriesStats& s : result.stats.series) {
      for (const CdfPoint& p : s.cdf) {
        out << to_string(s.link) << ',' << bf << ',' << to_string(s.estimator) << ','
            << fmt(p.value) << ',' << fmt(p.prob) << '\n';
      }
    }
    close_csv(out, paths.cdf);
  }

  return paths;
}

} // namespace mmwavesim
