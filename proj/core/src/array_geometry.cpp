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

#include "mmwavesim/array_geometry.hpp"

#include <cmath>
#include <numbers>

#include "mmwavesim/errors.hpp"

namespace mmwavesim {

CVector ula_response(const UlaSpec& spec, double theta) {
  if (spec.num_elements < 1) {
    throw std::invalid_argument("ula_response: num_elements must be >= 1");
  }
  if (!(spec.element_spacing > 0.0)) {
    throw std::invalid_argument("ula_response: element_spacing must be > 0");
  }
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("ula_response: theta must be finite");
  }
  const int n = spec.num_elements;
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  const double phase_step = -2.0 * std::numbers::pi * spec.element_spacing * std::sin(theta);
  CVector response(n);
  for (int m = 0; m < n; ++m) {
    response(m) = std::polar(scale, phase_step * m);
  }
  return response;
}

std::vector<double> build_angle_grid(int n_rf) {
  if (n_rf < 1) {
    throw std::invalid_argument("build_angle_grid: n_rf must be >= 1");
  }
  std::vector<double> grid(n_rf);
  for (int i = 0; i < n_rf; ++i) {
    grid[i] = -std::numbers::pi / 2.0 + std::numbers::pi * i / n_rf;
  }
  return grid;
}

AnalogCombiner build_analog_combiner(int n_antennas, int n_rf, CombinerMode mode) {
  if (n_antennas < 1 || n_rf < 1) {
    throw std::invalid_argument("build_analog_combiner: counts must be >= 1");
  }
  AnalogCombiner combiner;
  combiner.mode = mode;
  if (mode == CombinerMode::Identity) {
    if (n_rf != n_antennas) {
      throw std::invalid_argument(
          "build_analog_combiner: identity mode requires n_rf == n_antennas");
    }
    combiner.matrix = CMatrix::Identity(n_antennas, n_antennas);
    return combiner;
  }
  if (n_rf > n_antennas) {
    throw std::invalid_argument(
        "build_analog_combiner: grid mode requires n_rf <= n_antennas");
  }
  combiner.angle_grid = build_angle_grid(n_rf);
  combiner.matrix.resize(n_antennas, n_rf);
  const UlaSpec spec{n_antennas, 0.5};
  for (int i = 0; i < n_rf; ++i) {
    combiner.matrix.col(i) = ula_response(spec, combiner.angle_grid[i]);
  }
  return combiner;
}

} // namespace mmwavesim
