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

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mmwavesim/config.hpp"
#include "mmwavesim/errors.hpp"
#include "mmwavesim/output.hpp"
#include "mmwavesim/simulation.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw mmwavesim::ConfigError("cannot read config file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void print_summary(const mmwavesim::CampaignResult& result,
                   const mmwavesim::ScenarioConfig& cfg,
                   const mmwavesim::OutputPaths& paths) {
  std::printf("%-4s %-8s %-9s %14s %14s %10s\n", "link", "bf_mode", "estimator",
              "median_bps", "p90_bps", "n_samples");
  for (const mmwavesim::SeriesStats& s : result.stats.series) {
    std::printf("%-4s %-8s %-9s %14.6g %14.6g %10zu\n",
                mmwavesim::to_string(s.link).c_str(),
                mmwavesim::to_string(cfg.bf_mode).c_str(),
                mmwavesim::to_string(s.estimator).c_str(), s.median_bps, s.p90_bps,
                s.n_samples);
  }
  std::printf("trials: %zu succeeded, %zu failed\n", result.trials.size(),
              result.failed_trials.size());
  std::printf("wrote %s %s %s\n", paths.rates.c_str(), paths.summary.c_str(),
              paths.cdf.c_str());
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"multiuser mmWave MIMO link-level simulator"};
  std::string config_path;
  std::string out_prefix = "results";
  std::vector<std::string> overrides;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> trials;
  bool quiet = false;

  app.add_option("--config", config_path, "flat 'key = value' config file");
  app.add_option("--set", overrides, "override one key as key=value (repeatable)");
  app.add_option("--seed", seed, "master seed (overrides config)");
  app.add_option("--trials", trials, "trial count (overrides config)");
  app.add_option("--out", out_prefix, "output file prefix");
  app.add_flag("--quiet", quiet, "suppress progress output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  mmwavesim::ScenarioConfig cfg;
  try {
    if (!config_path.empty()) {
      cfg = mmwavesim::parse_config(read_file(config_path));
    }
    for (const std::string& kv : overrides) {
      mmwavesim::apply_override(cfg, kv);
    }
    if (seed) {
      cfg.master_seed = *seed;
    }
    if (trials) {
      cfg.n_trials = *trials;
    }
    cfg = cfg.validated();
  } catch (const mmwavesim::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 1;
  }

  try {
    mmwavesim::ProgressFn progress;
    if (!quiet) {
      const std::int64_t step = std::max<std::int64_t>(1, cfg.n_trials / 200);
      progress = [step](std::int64_t done, std::int64_t total) {
        if (done % step == 0 || done == total) {
          std::fprintf(stderr, "\r%" PRId64 "/%" PRId64 " trials", done, total);
        }
      };
    }
    const mmwavesim::CampaignResult result = mmwavesim::run_campaign(cfg, progress);
    if (!quiet) {
      std::fprintf(stderr, "\n");
    }
    const mmwavesim::OutputPaths paths = mmwavesim::emit_results(cfg, result, out_prefix);
    print_summary(result, cfg, paths);
    return result.failed_trials.empty() ? 0 : 2;
  } catch (const mmwavesim::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
