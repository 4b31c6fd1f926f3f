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

#include "mmwavesim/simulation.hpp"

namespace mmwavesim {

struct OutputPaths {
  std::string rates;    // <prefix>_rates.csv
  std::string summary;  // <prefix>_summary.csv
  std::string cdf;      // <prefix>_cdf.csv
};

/// Write the campaign to three CSV files. Rows are emitted in a fixed order
/// (trial, user, link, estimator) and all numbers are printed with 15
/// significant digits, so identical campaigns produce byte-identical files.
/// Throws IoError on filesystem failure.
OutputPaths emit_results(const ScenarioConfig& cfg, const CampaignResult& result,
                         const std::string& prefix);

} // namespace mmwavesim
