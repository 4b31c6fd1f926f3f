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

#include <numbers>

#include "mmwavesim/array_geometry.hpp"
#include "mmwavesim/random.hpp"
#include "mmwavesim/types.hpp"

namespace mmwavesim {

/// Clustered single-bounce channel: scatterer clusters with random center
/// angles, each spawning rays with small angular offsets and i.i.d. complex
/// Gaussian gains. Large-scale attenuation follows a log-distance law with
/// optional log-normal shadowing.
struct ClusterModelParams {
  int n_clusters = 4;
  int n_rays_per_cluster = 6;
  double angle_spread = 7.5 * std::numbers::pi / 180.0;  // radians
  double carrier_freq = 73e9;                                  // Hz
  double path_loss_exponent = 2.0;
  double ref_loss_db = 69.7;      // free-space dB at 1 m, 73 GHz
  double shadowing_std_db = 0.0;  // 0 disables shadowing
};

/// Thin SVD with a deterministic phase convention: the largest-modulus entry
/// of each right singular vector is real positive.
struct ChannelSvd {
  CMatrix left_vectors;     // U, orthonormal columns
  RVector singular_values;  // descending, nonnegative
  CMatrix right_vectors;    // V, orthonormal columns
};

/// One user's propagation state for a trial: the antenna-domain channel, the
/// channel seen between RF-chain domains, and the latter's SVD.
struct ChannelRealization {
  CMatrix full_channel;       // N_MS x N_BS
  CMatrix composite_channel;  // N_MS_RF x N_BS_RF
  ChannelSvd svd;             // of composite_channel
  double distance = 0.0;      // meters
};

/// Linear power attenuation 10^(-PL/10) with
/// PL = ref_loss_db + 10*path_loss_exponent*log10(d / 1 m) [+ shadowing].
/// `rng` is required when shadowing_std_db > 0.
double path_loss_linear(double distance_m, const ClusterModelParams& params,
                        Rng* rng = nullptr);

/// Draw one clustered channel realization of shape
/// (ms.num_elements x bs.num_elements). All rays of a draw share the
/// distance-driven attenuation.
CMatrix generate_channel(const ClusterModelParams& params, const UlaSpec& ms,
                         const UlaSpec& bs, double distance_m, Rng& rng);

/// D_MS^H * H * D_BS.
CMatrix composite_channel(const CMatrix& full, const AnalogCombiner& d_ms,
                          const AnalogCombiner& d_bs);

ChannelSvd channel_svd(const CMatrix& matrix);

/// generate_channel + composite_channel + channel_svd in one step.
ChannelRealization make_channel_realization(const ClusterModelParams& params,
                                            const UlaSpec& ms, const UlaSpec& bs,
                                            const AnalogCombiner& d_ms,
                                            const AnalogCombiner& d_bs,
                                            double distance_m, Rng& rng);

} // namespace mmwavesim
