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

#include "mmwavesim/config.hpp"

#include <charconv>
#include <cstdio>
#include <functional>
#include <sstream>

#include "mmwavesim/errors.hpp"

namespace mmwavesim {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view value, const char* what) {
  T out{};
  const char* begin = value.data();
  const char* end = begin + value.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError(std::string(what) + ": cannot parse '" + std::string(value) + "'");
  }
  return out;
}

BfMode parse_bf_mode(std::string_view value) {
  if (value == "hybrid") {
    return BfMode::Hybrid;
  }
  if (value == "fd") {
    return BfMode::FullyDigital;
  }
  throw ConfigError("bf_mode must be 'hybrid' or 'fd', got '" + std::string(value) + "'");
}

EstimatorSet parse_estimators(std::string_view value) {
  EstimatorSet set{false, false, false};
  std::size_t pos = 0;
  while (pos <= value.size()) {
    const std::size_t comma = std::min(value.find(',', pos), value.size());
    const std::string_view token = trim(value.substr(pos, comma - pos));
    if (token == "pm") {
      set.pm = true;
    } else if (token == "zf") {
      set.zf = true;
    } else if (token == "perfect") {
      set.perfect = true;
    } else {
      throw ConfigError("estimators: unknown token '" + std::string(token) + "'");
    }
    pos = comma + 1;
  }
  return set;
}

std::string format_estimators(const EstimatorSet& set) {
  std::string out;
  const auto add = [&out](const char* name) {
    if (!out.empty()) {
      out += ',';
    }
    out += name;
  };
  if (set.pm) add("pm");
  if (set.zf) add("zf");
  if (set.perfect) add("perfect");
  return out;
}

using Setter = std::function<void(ScenarioConfig&, std::string_view)>;

const std::vector<std::pair<std::string, Setter>>& setters() {
  static const std::vector<std::pair<std::string, Setter>> table = {
      {"k", [](ScenarioConfig& c, std::string_view v) { c.num_users = parse_number<int>(v, "k"); }},
      {"n_bs", [](ScenarioConfig& c, std::string_view v) { c.n_bs = parse_number<int>(v, "n_bs"); }},
      {"n_ms", [](ScenarioConfig& c, std::string_view v) { c.n_ms = parse_number<int>(v, "n_ms"); }},
      {"n_bs_rf", [](ScenarioConfig& c, std::string_view v) { c.n_bs_rf = parse_number<int>(v, "n_bs_rf"); }},
      {"n_ms_rf", [](ScenarioConfig& c, std::string_view v) { c.n_ms_rf = parse_number<int>(v, "n_ms_rf"); }},
      {"m", [](ScenarioConfig& c, std::string_view v) { c.multiplex_order = parse_number<int>(v, "m"); }},
      {"f0_ghz", [](ScenarioConfig& c, std::string_view v) { c.carrier_freq_ghz = parse_number<double>(v, "f0_ghz"); }},
      {"bw_mhz", [](ScenarioConfig& c, std::string_view v) { c.bandwidth_mhz = parse_number<double>(v, "bw_mhz"); }},
      {"probe_power_w", [](ScenarioConfig& c, std::string_view v) { c.probe_power_w = parse_number<double>(v, "probe_power_w"); }},
      {"ms_power_w", [](ScenarioConfig& c, std::string_view v) { c.ms_power_w = parse_number<double>(v, "ms_power_w"); }},
      {"bs_data_power_w", [](ScenarioConfig& c, std::string_view v) { c.bs_data_power_w = parse_number<double>(v, "bs_data_power_w"); }},
      {"probe_len", [](ScenarioConfig& c, std::string_view v) { c.probe_len = parse_number<int>(v, "probe_len"); }},
      {"pilot_len", [](ScenarioConfig& c, std::string_view v) { c.pilot_len = parse_number<int>(v, "pilot_len"); }},
      {"dist_min_m", [](ScenarioConfig& c, std::string_view v) { c.dist_min_m = parse_number<double>(v, "dist_min_m"); }},
      {"dist_max_m", [](ScenarioConfig& c, std::string_view v) { c.dist_max_m = parse_number<double>(v, "dist_max_m"); }},
      {"noise_figure_db", [](ScenarioConfig& c, std::string_view v) { c.noise_figure_db = parse_number<double>(v, "noise_figure_db"); }},
      {"beta", [](ScenarioConfig& c, std::string_view v) { c.beta = parse_number<double>(v, "beta"); }},
      {"trials", [](ScenarioConfig& c, std::string_view v) { c.n_trials = parse_number<std::int64_t>(v, "trials"); }},
      {"seed", [](ScenarioConfig& c, std::string_view v) { c.master_seed = parse_number<std::uint64_t>(v, "seed"); }},
      {"bf_mode", [](ScenarioConfig& c, std::string_view v) { c.bf_mode = parse_bf_mode(v); }},
      {"estimators", [](ScenarioConfig& c, std::string_view v) { c.estimators = parse_estimators(v); }},
      {"n_clusters", [](ScenarioConfig& c, std::string_view v) { c.n_clusters = parse_number<int>(v, "n_clusters"); }},
      {"n_rays", [](ScenarioConfig& c, std::string_view v) { c.n_rays = parse_number<int>(v, "n_rays"); }},
      {"angle_spread_deg", [](ScenarioConfig& c, std::string_view v) { c.angle_spread_deg = parse_number<double>(v, "angle_spread_deg"); }},
      {"path_loss_exponent", [](ScenarioConfig& c, std::string_view v) { c.path_loss_exponent = parse_number<double>(v, "path_loss_exponent"); }},
      {"ref_loss_db", [](ScenarioConfig& c, std::string_view v) { c.ref_loss_db = parse_number<double>(v, "ref_loss_db"); }},
      {"shadowing_std_db", [](ScenarioConfig& c, std::string_view v) { c.shadowing_std_db = parse_number<double>(v, "shadowing_std_db"); }},
      {"workers", [](ScenarioConfig& c, std::string_view v) { c.workers = parse_number<int>(v, "workers"); }},
  };
  return table;
}

const Setter* find_setter(std::string_view key) {
  for (const auto& [name, setter] : setters()) {
    if (name == key) {
      return &setter;
    }
  }
  return nullptr;
}

void apply_key_value(ScenarioConfig& cfg, std::string_view key, std::string_view value) {
  const Setter* setter = find_setter(key);
  if (setter == nullptr) {
    throw ConfigError("unknown key '" + std::string(key) + "'");
  }
  if (value.empty()) {
    throw ConfigError("key '" + std::string(key) + "' has an empty value");
  }
  (*setter)(cfg, value);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

} // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> out;
    out.reserve(setters().size());
    for (const auto& [name, setter] : setters()) {
      out.push_back(name);
    }
    return out;
  }();
  return keys;
}

ScenarioConfig parse_config(std::string_view text) {
  ScenarioConfig cfg;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    pos = eol + 1;

    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("expected 'key = value'", line_no);
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    try {
      apply_key_value(cfg, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError(e.what(), line_no);
    }
  }
  return cfg.validated();
}

void apply_override(ScenarioConfig& cfg, std::string_view key_value) {
  const std::size_t eq = key_value.find('=');
  if (eq == std::string_view::npos) {
    throw ConfigError("override must look like key=value, got '" +
                      std::string(key_value) + "'");
  }
  apply_key_value(cfg, trim(key_value.substr(0, eq)), trim(key_value.substr(eq + 1)));
}

std::string format_config(const ScenarioConfig& cfg) {
  std::ostringstream out;
  out << "k = " << cfg.num_users << '\n'
      << "n_bs = " << cfg.n_bs << '\n'
      << "n_ms = " << cfg.n_ms << '\n'
      << "n_bs_rf = " << cfg.n_bs_rf << '\n'
      << "n_ms_rf = " << cfg.n_ms_rf << '\n'
      << "m = " << cfg.multiplex_order << '\n'
      << "f0_ghz = " << format_double(cfg.carrier_freq_ghz) << '\n'
      << "bw_mhz = " << format_double(cfg.bandwidth_mhz) << '\n'
      << "probe_power_w = " << format_double(cfg.probe_power_w) << '\n'
      << "ms_power_w = " << format_double(cfg.ms_power_w) << '\n'
      << "bs_data_power_w = " << format_double(cfg.bs_data_power_w) << '\n'
      << "probe_len = " << cfg.probe_len << '\n'
      << "pilot_len = " << cfg.pilot_len << '\n'
      << "dist_min_m = " << format_double(cfg.dist_min_m) << '\n'
      << "dist_max_m = " << format_double(cfg.dist_max_m) << '\n'
      << "noise_figure_db = " << format_double(cfg.noise_figure_db) << '\n'
      << "beta = " << format_double(cfg.beta) << '\n'
      << "trials = " << cfg.n_trials << '\n'
      << "seed = " << cfg.master_seed << '\n'
      << "bf_mode = " << to_string(cfg.bf_mode) << '\n'
      << "estimators = " << format_estimators(cfg.estimators) << '\n'
      << "n_clusters = " << cfg.n_clusters << '\n'
      << "n_rays = " << cfg.n_rays << '\n'
      << "angle_spread_deg = " << format_double(cfg.angle_spread_deg) << '\n'
      << "path_loss_exponent = " << format_double(cfg.path_loss_exponent) << '\n'
      << "ref_loss_db = " << format_double(cfg.ref_loss_db) << '\n'
      << "shadowing_std_db = " << format_double(cfg.shadowing_std_db) << '\n'
      << "workers = " << cfg.workers << '\n';
  return out.str();
}

} // namespace mmwavesim
