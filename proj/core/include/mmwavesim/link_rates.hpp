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

#include "mmwavesim/array_geometry.hpp"
#include "mmwavesim/types.hpp"

namespace mmwavesim {

/// Power-normalized data-phase beamformers for all users.
///
/// bs_side[k] (N_BS_RF x M) is the downlink precoder and uplink combiner for
/// user k, scaled so that the radiated powers through the analog stage sum
/// to bs_data_power with equal per-user shares. ms_side[k] (N_MS_RF x M) is
/// the uplink transmitter and downlink combiner, scaled so each user radiates
/// ms_data_power. Combining is insensitive to the scaling (the rate is
/// invariant under right-multiplication of the combiner by any invertible
/// matrix), so the scaled matrices serve both roles.
struct BeamformerSet {
  std::vector<CMatrix> bs_side;
  std::vector<CMatrix> ms_side;
  double bs_power_per_user = 0.0;
  double ms_power_per_user = 0.0;
};

/// Per-user achievable rates for one (estimator, beamforming-mode) choice.
struct RateReport {
  std::vector<double> downlink_bps;
  std::vector<double> uplink_bps;
  Estimator estimator = Estimator::Perfect;
  BfMode bf_mode = BfMode::Hybrid;
};

/// Normalize raw beamforming matrices to the configured transmit powers:
///   sum_k ||D_BS * bs_side[k]||_F^2 = bs_data_power   (equal shares), and
///   ||D_MS * ms_side[k]||_F^2 = ms_data_power for every k.
/// The inputs are per-user estimate matrices (or exact SVD factors for
/// perfect CSI). An all-zero input matrix throws DegenerateStateError.
BeamformerSet make_precoders(const std::vector<CMatrix>& bs_matrices,
                             const std::vector<CMatrix>& ms_matrices,
                             double bs_data_power, double ms_data_power,
                             const AnalogCombiner& d_bs, const AnalogCombiner& d_ms);

/// Multiuser log-det achievable rates, treating inter-user interference as
/// Gaussian noise with its exact covariance:
///   R_k = W * log2 det(I + R_k^-1 * C_k^H H_k Q_k Q_k^H H_k^H C_k),
///   R_k = noise_var * C_k^H D_MS^H D_MS C_k
///         + sum_{j != k} C_k^H H_k Q_j Q_j^H H_k^H C_k,
/// with C_k = ms_side[k] and Q_j = bs_side[j]. A singular noise covariance
/// is regularized by +1e-15*I.
std::vector<double> downlink_rates(const std::vector<CMatrix>& composites,
                                   const BeamformerSet& bf, double noise_var,
                                   double bandwidth_hz, const AnalogCombiner& d_bs,
                                   const AnalogCombiner& d_ms);

/// Uplink counterpart: user k transmits through ms_side[k], the base station
/// combines with bs_side[k]; interference sums over the other users'
/// transmissions through their own channels.
std::vector<double> uplink_rates(const std::vector<CMatrix>& composites,
                                 const BeamformerSet& bf, double noise_var,
                                 double bandwidth_hz, const AnalogCombiner& d_bs,
                                 const AnalogCombiner& d_ms);

} // namespace mmwavesim
