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

#include <cstdint>
#include <random>

#include "mmwavesim/types.hpp"

namespace mmwavesim {

using Rng = std::mt19937_64;

/// Independent per-trial stream derived from (master_seed, trial_idx).
/// Trials can run in any order or on any thread and still draw the same
/// sequences.
Rng make_trial_rng(std::uint64_t master_seed, std::uint64_t trial_idx);

double uniform_real(Rng& rng, double lo, double hi);

/// Zero-mean real Gaussian draw with the given standard deviation.
double gaussian(Rng& rng, double stddev);

/// Circularly-symmetric complex Gaussian vector; `var_per_dim` is the
/// variance of each complex entry (split evenly between real and imaginary
/// parts). A zero variance still consumes the same number of draws, which
/// keeps downstream draw sequences aligned across noise settings.
CVector complex_gaussian_vector(Rng& rng, Eigen::Index n, double var_per_dim);
CMatrix complex_gaussian_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols,
                                double var_per_dim);

/// Matrix of i.i.d. equiprobable +/-1 entries.
RMatrix rademacher_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols);

} // namespace mmwavesim
