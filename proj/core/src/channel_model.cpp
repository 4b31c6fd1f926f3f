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

#include "mmwavesim/channel_model.hpp"

#include <cmath>

#include <Eigen/SVD>

#include "mmwavesim/errors.hpp"

namespace mmwavesim {

namespace {

void check_params(const ClusterModelParams& params) {
  if (params.n_clusters < 1 || params.n_rays_per_cluster < 1) {
    throw std::invalid_argument("cluster model: counts must be >= 1");
  }
  if (params.angle_spread < 0.0) {
    throw std::invalid_argument("cluster model: angle_spread must be >= 0");
  }
  if (!(params.carrier_freq > 0.0)) {
    throw std::invalid_argument("cluster model: carrier_freq must be > 0");
  }
  if (!(params.path_loss_exponent > 0.0)) {
    throw std::invalid_argument("cluster model: path_loss_exponent must be > 0");
  }
}

} // namespace

double path_loss_linear(double distance_m, const ClusterModelParams& params, Rng* rng) {
  check_params(params);
  if (!(distance_m > 0.0) || !std::isfinite(distance_m)) {
    throw std::invalid_argument("path_loss_linear: distance must be > 0");
  }
  double pl_db = params.ref_loss_db +
                 10.0 * params.path_loss_exponent * std::log10(distance_m);
  if (params.shadowing_std_db > 0.0) {
    if (rng == nullptr) {
      throw std::invalid_argument("path_loss_linear: shadowing requires an rng");
    }
    pl_db += gaussian(*rng, params.shadowing_std_db);
  }
  return std::pow(10.0, -pl_db / 10.0);
}

CMatrix generate_channel(const ClusterModelParams& params, const UlaSpec& ms,
                         const UlaSpec& bs, double distance_m, Rng& rng) {
  check_params(params);
  if (ms.num_elements < 1 || bs.num_elements < 1) {
    throw std::invalid_argument("generate_channel: array sizes must be >= 1");
  }
  const int n_ms = ms.num_elements;
  const int n_bs = bs.num_elements;
  const int n_paths = params.n_clusters * params.n_rays_per_cluster;
  const double gamma = std::sqrt(static_cast<double>(n_ms) * n_bs / n_paths);
  const double half_pi = std::numbers::pi / 2.0;

  // One distance-driven attenuation shared by all rays of this draw.
  const double gain = std::sqrt(path_loss_linear(distance_m, params, &rng));

  CMatrix h = CMatrix::Zero(n_ms, n_bs);
  for (int c = 0; c < params.n_clusters; ++c) {
    const double ms_center = uniform_real(rng, -half_pi, half_pi);
    const double bs_center = uniform_real(rng, -half_pi, half_pi);
    for (int r = 0; r < params.n_rays_per_cluster; ++r) {
      const double ms_angle =
          ms_center + uniform_real(rng, -params.angle_spread, params.angle_spread);
      const double bs_angle =
          bs_center + uniform_real(rng, -params.angle_spread, params.angle_spread);
      const Complex ray_gain = complex_gaussian_vector(rng, 1, 1.0)(0);
      h.noalias() += (ray_gain * gain) * (ula_response(ms, ms_angle) *
                                          ula_response(bs, bs_angle).adjoint());
    }
  }
  return gamma * h;
}

CMatrix composite_channel(const CMatrix& full, const AnalogCombiner& d_ms,
                          const AnalogCombiner& d_bs) {
  if (full.rows() != d_ms.num_antennas() || full.cols() != d_bs.num_antennas()) {
    throw DimensionError("composite_channel: channel/combiner shape mismatch");
  }
  return d_ms.matrix.adjoint() * full * d_bs.matrix;
}

ChannelSvd channel_svd(const CMatrix& matrix) {
  if (!matrix.allFinite()) {
    throw NumericalError("channel_svd: non-finite input");
  }
  Eigen::JacobiSVD<CMatrix> svd(matrix, Eigen::ComputeThinU | Eigen::ComputeThinV);
  ChannelSvd out;
  out.left_vectors = svd.matrixU();
  out.singular_values = svd.singularValues();
  out.right_vectors = svd.matrixV();
  if (!out.left_vectors.allFinite() || !out.singular_values.allFinite() ||
      !out.right_vectors.allFinite()) {
    throw NumericalError("channel_svd: decomposition failed");
  }
  // Phase convention: rotate each singular-vector pair so that the
  // largest-modulus entry of the right vector is real positive.
  for (Eigen::Index i = 0; i < out.right_vectors.cols(); ++i) {
    Eigen::Index peak = 0;
    out.right_vectors.col(i).cwiseAbs().maxCoeff(&peak);
    const Complex entry = out.right_vectors(peak, i);
    if (std::abs(entry) > 0.0) {
      const Complex rotation = std::polar(1.0, -std::arg(entry));
      out.right_vectors.col(i) *= rotation;
      out.left_vectors.col(i) *= rotation;
    }
  }
  return out;
}

ChannelRealization make_channel_realization(const ClusterModelParams& params,
                                            const UlaSpec& ms, const UlaSpec& bs,
                                            const AnalogCombiner& d_ms,
                                            const AnalogCombiner& d_bs,
                                            double distance_m, Rng& rng) {
  ChannelRealization real;
  real.full_channel = generate_channel(params, ms, bs, distance_m, rng);
  real.composite_channel = composite_channel(real.full_channel, d_ms, d_bs);
  real.svd = channel_svd(real.composite_channel);
  real.distance = distance_m;
  return real;
}

} // namespace mmwavesim
