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

#include "mmwavesim/random.hpp"

#include <cmath>

namespace mmwavesim {

Rng make_trial_rng(std::uint64_t master_seed, std::uint64_t trial_idx) {
  std::seed_seq seq{
      static_cast<std::uint32_t>(master_seed & 0xffffffffu),
      static_cast<std::uint32_t>(master_seed >> 32),
      static_cast<std::uint32_t>(trial_idx & 0xffffffffu),
      static_cast<std::uint32_t>(trial_idx >> 32),
  };
  return Rng(seq);
}

double uniform_real(Rng& rng, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(rng);
}

double gaussian(Rng& rng, double stddev) {
  std::normal_distribution<double> dist(0.0, 1.0);
  return stddev * dist(rng);
}

CVector complex_gaussian_vector(Rng& rng, Eigen::Index n, double var_per_dim) {
  std::normal_distribution<double> dist(0.0, 1.0);
  const double comp_std = std::sqrt(var_per_dim / 2.0);
  CVector out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double re = dist(rng);
    const double im = dist(rng);
    out(i) = Complex(comp_std * re, comp_std * im);
  }
  return out;
}

CMatrix complex_gaussian_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols,
                                double var_per_dim) {
  std::normal_distribution<double> dist(0.0, 1.0);
  const double comp_std = std::sqrt(var_per_dim / 2.0);
  CMatrix out(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c) {
    for (Eigen::Index r = 0; r < rows; ++r) {
      const double re = dist(rng);
      const double im = dist(rng);
      out(r, c) = Complex(comp_std * re, comp_std * im);
    }
  }
  return out;
}

RMatrix rademacher_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  std::uniform_int_distribution<int> bit(0, 1);
  RMatrix out(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c) {
    for (Eigen::Index r = 0; r < rows; ++r) {
      out(r, c) = bit(rng) ? 1.0 : -1.0;
    }
  }
  return out;
}

} // namespace mmwavesim
