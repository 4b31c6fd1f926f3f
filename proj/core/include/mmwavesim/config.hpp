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

#include <string>
#include <string_view>
#include <vector>

#include "mmwavesim/simulation.hpp"

namespace mmwavesim {

/// Recognized `key = value` configuration keys, in canonical order.
const std::vector<std::string>& config_keys();

/// Parse a flat `key = value` config file (UTF-8, `#` comments, blank lines
/// allowed). Omitted keys keep their defaults. Unknown keys, unparsable
/// values and invariant violations throw ConfigError carrying the offending
/// line number. The returned config is validated and normalized.
ScenarioConfig parse_config(std::string_view text);

/// Apply one `key=value` override in place. Throws ConfigError for unknown
/// keys or bad values; does not re-validate (call cfg.validated() after the
/// last override).
void apply_override(ScenarioConfig& cfg, std::string_view key_value);

/// Render a config back to the flat key = value format (all keys explicit).
std::string format_config(const ScenarioConfig& cfg);

} // namespace mmwavesim
