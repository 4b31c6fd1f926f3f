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

#include <vector>

#include "mmwavesim/types.hpp"

namespace mmwavesim {

/// Uniform linear array geometry. Spacing is a multiple of the carrier
/// wavelength (half-wavelength by default).
struct UlaSpec {
  int num_elements = 1;
  double element_spacing = 0.5;
};

enum class CombinerMode { Grid, Identity };

/// Fixed analog RF combining stage. In grid mode the columns are unit-norm
/// ULA responses at a uniform angle grid, so every entry has modulus
/// 1/sqrt(N). Identity mode models one RF chain per antenna (fully digital).
struct AnalogCombiner {
  CMatrix matrix;                  // N x N_RF
  std::vector<double> angle_grid;  // radians; empty in identity mode
  CombinerMode mode = CombinerMode::Identity;

  Eigen::Index num_antennas() const { return matrix.rows(); }
  Eigen::Index num_chains() const { return matrix.cols(); }
};

/// Unit-norm ULA response at angle `theta`:
/// element m = exp(-j*2*pi*spacing*m*sin(theta)) / sqrt(N).
CVector ula_response(const UlaSpec& spec, double theta);

/// n_rf angles uniformly spanning [-pi/2, pi/2): theta_i = -pi/2 + pi*i/n_rf.
std::vector<double> build_angle_grid(int n_rf);

/// Grid mode stacks the ULA responses at build_angle_grid(n_rf) as columns
/// (requires n_rf <= n_antennas); identity mode returns the N x N identity
/// (requires n_rf == n_antennas).
AnalogCombiner build_analog_combiner(int n_antennas, int n_rf, CombinerMode mode);

} // namespace mmwavesim
