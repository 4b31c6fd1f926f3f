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

#include "mmwavesim/link_rates.hpp"

#include <cmath>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "mmwavesim/errors.hpp"

namespace mmwavesim {

namespace {

constexpr double kRidge = 1e-15;

// W * log2 det(I + R_zi^-1 * S), evaluated through the Cholesky factor of
// R_zi so the result is a sum of log2(1 + lambda_i) with lambda_i >= 0.
double logdet_rate(const CMatrix& signal, const CMatrix& noise_plus_interf,
                   double bandwidth_hz) {
  const Eigen::Index m = signal.rows();
  CMatrix r_zi = 0.5 * (noise_plus_interf + noise_plus_interf.adjoint());

  Eigen::LLT<CMatrix> llt(r_zi);
  if (llt.info() != Eigen::Success) {
    r_zi += kRidge * CMatrix::Identity(m, m);
    llt.compute(r_zi);
    if (llt.info() != Eigen::Success) {
      throw NumericalError("logdet_rate: noise covariance is not positive definite");
    }
  }

  // B = L^-1 S L^-H shares the eigenvalues of R_zi^-1 S but is Hermitian.
  const CMatrix half = llt.matrixL().solve(signal);
  CMatrix whitened = llt.matrixL().solve(half.adjoint()).adjoint();
  whitened = 0.5 * (whitened + whitened.adjoint());

  Eigen::SelfAdjointEigenSolver<CMatrix> eig(whitened);
  if (eig.info() != Eigen::Success) {
    throw NumericalError("logdet_rate: eigendecomposition failed");
  }
  double rate = 0.0;
  for (Eigen::Index i = 0; i < m; ++i) {
    rate += std::log2(1.0 + std::max(eig.eigenvalues()(i), 0.0));
  }
  rate *= bandwidth_hz;
  if (!std::isfinite(rate)) {
    throw NumericalError("logdet_rate: non-finite rate");
  }
  return rate;
}

void check_beamformer_shapes(const std::vector<CMatrix>& composites,
                             const BeamformerSet& bf, const AnalogCombiner& d_bs,
                             const AnalogCombiner& d_ms) {
  const std::size_t num_users = composites.size();
  if (bf.bs_side.size() != num_users || bf.ms_side.size() != num_users) {
    throw DimensionError("link_rates: beamformer count does not match user count");
  }
  for (std::size_t k = 0; k < num_users; ++k) {
    if (composites[k].rows() != d_ms.num_chains() ||
        composites[k].cols() != d_bs.num_chains() ||
        bf.bs_side[k].rows() != d_bs.num_chains() ||
        bf.ms_side[k].rows() != d_ms.num_chains()) {
      throw DimensionError("link_rates: shape mismatch");
    }
  }
}

} // namespace

BeamformerSet make_precoders(const std::vector<CMatrix>& bs_matrices,
                             const std::vector<CMatrix>& ms_matrices,
                             double bs_data_power, double ms_data_power,
                             const AnalogCombiner& d_bs, const AnalogCombiner& d_ms) {
  const std::size_t num_users = bs_matrices.size();
  if (num_users == 0 || ms_matrices.size() != num_users) {
    throw DimensionError("make_precoders: per-side matrix counts disagree");
  }
  if (!(bs_data_power > 0.0) || !(ms_data_power > 0.0)) {
    throw std::invalid_argument("make_precoders: powers must be > 0");
  }

  BeamformerSet out;
  out.bs_power_per_user = bs_data_power / static_cast<double>(num_users);
  out.ms_power_per_user = ms_data_power;
  out.bs_side.reserve(num_users);
  out.ms_side.reserve(num_users);
  for (std::size_t k = 0; k < num_users; ++k) {
    if (bs_matrices[k].rows() != d_bs.num_chains() ||
        ms_matrices[k].rows() != d_ms.num_chains() ||
        bs_matrices[k].cols() < 1 || ms_matrices[k].cols() < 1) {
      throw DimensionError("make_precoders: shape mismatch");
    }
    const double bs_norm = (d_bs.matrix * bs_matrices[k]).norm();
    const double ms_norm = (d_ms.matrix * ms_matrices[k]).norm();
    if (!(bs_norm > 0.0) || !(ms_norm > 0.0) || !std::isfinite(bs_norm) ||
        !std::isfinite(ms_norm)) {
      throw DegenerateStateError("make_precoders: zero or non-finite beamformer");
    }
    out.bs_side.push_back(bs_matrices[k] * (std::sqrt(out.bs_power_per_user) / bs_norm));
    out.ms_side.push_back(ms_matrices[k] * (std::sqrt(out.ms_power_per_user) / ms_norm));
  }
  return out;
}

std::vector<double> downlink_rates(const std::vector<CMatrix>& composites,
                                   const BeamformerSet& bf, double noise_var,
                                   double bandwidth_hz, const AnalogCombiner& d_bs,
                                   const AnalogCombiner& d_ms) {
  check_beamformer_shapes(composites, bf, d_bs, d_ms);
  if (noise_var < 0.0 || !(bandwidth_hz > 0.0)) {
    throw std::invalid_argument("downlink_rates: bad noise/bandwidth setting");
  }
  const std::size_t num_users = composites.size();
  const CMatrix ms_gram = d_ms.matrix.adjoint() * d_ms.matrix;

  std::vector<double> rates(num_users);
  for (std::size_t k = 0; k < num_users; ++k) {
    const CMatrix& combiner = bf.ms_side[k];
    CMatrix r_zi = noise_var * (combiner.adjoint() * ms_gram * combiner);
    CMatrix signal;
    for (std::size_t j = 0; j < num_users; ++j) {
      const CMatrix reached = combiner.adjoint() * (composites[k] * bf.bs_side[j]);
      if (j == k) {
        signal = reached * reached.adjoint();
      } else {
        r_zi.noalias() += reached * reached.adjoint();
      }
    }
    rates[k] = logdet_rate(signal, r_zi, bandwidth_hz);
  }
  return rates;
}

std::vector<double> uplink_rates(const std::vector<CMatrix>& composites,
                                 const BeamformerSet& bf, double noise_var,
                                 double bandwidth_hz, const AnalogCombiner& d_bs,
                                 const AnalogCombiner& d_ms) {
  check_beamformer_shapes(composites, bf, d_bs, d_ms);
  if (noise_var < 0.0 || !(bandwidth_hz > 0.0)) {
    throw std::invalid_argument("uplink_rates: bad noise/bandwidth setting");
  }
  const std::size_t num_users = composites.size();
  const CMatrix bs_gram = d_bs.matrix.adjoint() * d_bs.matrix;

  // Uplink interference at the base station aggregates every user's own
  // transmit beam through that user's channel.
  std::vector<CMatrix> arriving(num_users);
  for (std::size_t j = 0; j < num_users; ++j) {
    arriving[j] = composites[j].adjoint() * bf.ms_side[j];
  }

  std::vector<double> rates(num_users);
  for (std::size_t k = 0; k < num_users; ++k) {
    const CMatrix& combiner = bf.bs_side[k];
    CMatrix r_zi = noise_var * (combiner.adjoint() * bs_gram * combiner);
    CMatrix signal;
    for (std::size_t j = 0; j < num_users; ++j) {
      const CMatrix reached = combiner.adjoint() * arriving[j];
      if (j == k) {
        signal = reached * reached.adjoint();
      } else {
        r_zi.noalias() += reached * reached.adjoint();
      }
    }
    rates[k] = logdet_rate(signal, r_zi, bandwidth_hz);
  }
  return rates;
}

} // namespace mmwavesim
