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

/// Streaming state of the deflated projection-approximation subspace
/// tracker. Component m holds a running estimate of the m-th dominant
/// eigenvector of the input covariance together with an exponentially
/// weighted power accumulator. Single writer per instance: updates must be
/// applied sequentially.
struct PastdState {
  int order = 0;   // number of tracked components (M)
  int dim = 0;     // input vector length
  double beta = 1.0;
  double eps_guard = 1e-12;
  std::vector<CVector> vectors;      // u_m, one per component
  std::vector<double> accumulators;  // lambda_m >= 0
};

/// Deterministic start: u_m = m-th canonical basis vector,
/// lambda_m = eps_guard. Requires 1 <= order <= dim and 0 < beta <= 1.
PastdState pastd_init(int order, int dim, double beta, double eps_guard = 1e-12);

/// One streaming update. For m = 1..M, in order:
///   y_m      = u_m^H x_m
///   lambda_m = max(beta*lambda_m + |y_m|^2, eps_guard)
///   u_m     += (x_m - u_m*y_m) * conj(y_m)/lambda_m
///   x_{m+1}  = x_m - u_m*y_m           (with the updated u_m)
/// starting from x_1 = sample. Returns the fully deflated residual x_{M+1}.
CVector pastd_update(PastdState& state, const CVector& sample);

/// Column m is u_m normalized to unit norm. No re-orthogonalization is
/// applied; deflation keeps the vectors near-orthogonal. A zero-norm
/// component throws DegenerateStateError.
CMatrix extract_basis(const PastdState& state);

/// Batch reference: top-`order` eigenvectors of the sample covariance
/// (1/P) * sum_n r(n) r(n)^H, orthonormal columns, descending eigenvalues.
CMatrix batch_dominant_subspace(const std::vector<CVector>& samples, int order);

/// ||P_A - P_B||_F / sqrt(2) between the column spans of `a` and `b`
/// (inputs are orthonormalized first). 0 for identical spans, 1 for
/// orthogonal ones when both have the same column count.
double chordal_distance(const CMatrix& a, const CMatrix& b);

} // namespace mmwavesim
