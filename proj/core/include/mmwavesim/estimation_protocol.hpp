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
#include "mmwavesim/random.hpp"
#include "mmwavesim/types.hpp"

namespace mmwavesim {

/// Downlink probing stage parameters.
struct ProbingConfig {
  int probe_len = 60;        // number of probing slots
  double probe_power = 1.0;  // total radiated power, watts
  double noise_var = 0.0;    // receiver noise variance, watts
};

/// Per-user uplink pilot matrices (M x P_MS each) with orthogonal
/// unit-energy rows, plus the per-user power coefficient alpha. Pilots of
/// different users need not be orthogonal to each other.
struct PilotBook {
  std::vector<RMatrix> pilots;
  int pilot_len = 0;
  std::vector<double> alpha;

  int num_users() const { return static_cast<int>(pilots.size()); }
};

enum class PilotConstruction {
  Auto,              // BinaryHadamard when pilot_len is a power of two
  BinaryHadamard,    // +/-1/sqrt(P) entries, requires power-of-two length
  RandomOrthonormal, // rows of a Haar-random real orthogonal matrix
};

/// Estimate of the scaled dominant right singular directions of one user's
/// composite channel; column i targets sqrt(alpha)*lambda_i*v_i.
struct ChannelEstimate {
  CMatrix columns;  // N_BS_RF x M
  Estimator kind = Estimator::PilotMatched;
};

/// Per-user pilot decorrelators Z_k (pilot_len x M) satisfying
/// Phi_k Z_k = I and Phi_j Z_k = 0 for j != k.
struct ZfMatrices {
  std::vector<RMatrix> per_user;
  double gram_condition = 0.0;  // condition number of the stacked pilot Gram
};

/// Sylvester-type +/-1 orthogonal matrix; `order` must be a power of two.
RMatrix hadamard_matrix(int order);

/// `probe_len` i.i.d. +/-1 probing vectors of length `dim`, one per column.
/// Identity covariance in expectation.
RMatrix generate_probing_symbols(int probe_len, int dim, Rng& rng);

/// Mobile-side received vector for one probing slot:
///   r = sqrt(probe_power / ||D_BS||_F^2) * H_comp * symbol + D_MS^H g,
/// g white complex Gaussian with noise_var per antenna.
CVector simulate_phase_a_rx(const CMatrix& h_comp, const RVector& symbol,
                            const ProbingConfig& cfg, const AnalogCombiner& d_bs,
                            const AnalogCombiner& d_ms, Rng& rng);

/// Full probing stage for one user: draws the probing symbols, streams the
/// received vectors through the subspace tracker, and returns the estimated
/// dominant-direction matrix (N_MS_RF x order). The tracker only ever sees
/// the received vectors, never the transmitted symbols.
CMatrix run_phase_a(const CMatrix& h_comp, const ProbingConfig& cfg,
                    const AnalogCombiner& d_bs, const AnalogCombiner& d_ms,
                    int order, double beta, Rng& rng);

/// Random pilot book: each user gets `order` distinct Hadamard rows with a
/// per-user random column sign pattern, scaled to unit row energy
/// (or Haar-random orthonormal rows in the fallback construction).
/// alpha_k = ms_power * pilot_len / order, which makes the average radiated
/// power per pilot slot equal to ms_power.
PilotBook generate_pilot_book(int num_users, int order, int pilot_len,
                              double ms_power, Rng& rng,
                              PilotConstruction construction = PilotConstruction::Auto);

/// Base-station observation over the pilot stage:
///   Y = sum_k sqrt(alpha_k) * H_comp_k^H * ms_baseband_k * Phi_k + D_BS^H G,
/// G white complex Gaussian with noise_var per antenna.
CMatrix simulate_phase_b_rx(const std::vector<CMatrix>& composites,
                            const std::vector<CMatrix>& ms_basebands,
                            const PilotBook& book, double noise_var,
                            const AnalogCombiner& d_bs, Rng& rng);

/// Pilot-matched filtering: column i = Y * Phi_k(i,:)^H.
ChannelEstimate pm_estimate(const CMatrix& y, const RMatrix& pilots_k);

/// Right pseudo-inverse of the stacked pilot matrix, split into per-user
/// blocks. Requires pilot_len >= order * num_users and a full-rank stack.
ZfMatrices zf_matrix(const PilotBook& book);

/// Zero-forcing estimate: Y * Z_k.
ChannelEstimate zf_estimate(const CMatrix& y, const RMatrix& z_k);

} // namespace mmwavesim
