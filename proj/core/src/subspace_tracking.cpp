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

#include "mmwavesim/subspace_tracking.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "mmwavesim/errors.hpp"

namespace mmwavesim {

PastdState pastd_init(int order, int dim, double beta, double eps_guard) {
  if (order < 1 || dim < 1 || order > dim) {
    throw std::invalid_argument("pastd_init: need 1 <= order <= dim");
  }
  if (!(beta > 0.0) || beta > 1.0) {
    throw std::invalid_argument("pastd_init: need 0 < beta <= 1");
  }
  if (!(eps_guard > 0.0)) {
    throw std::invalid_argument("pastd_init: eps_guard must be > 0");
  }
  PastdState state;
  state.order = order;
  state.dim = dim;
  state.beta = beta;
  state.eps_guard = eps_guard;
  state.vectors.reserve(order);
  for (int m = 0; m < order; ++m) {
    state.vectors.push_back(CVector::Unit(dim, m));
  }
  state.accumulators.assign(order, eps_guard);
  return state;
}

CVector pastd_update(PastdState& state, const CVector& sample) {
  if (sample.size() != state.dim) {
    throw DimensionError("pastd_update: sample length mismatch");
  }
  if (!sample.allFinite()) {
    throw std::invalid_argument("pastd_update: non-finite sample");
  }
  CVector deflated = sample;
  for (int m = 0; m < state.order; ++m) {
    CVector& u = state.vectors[m];
    const Complex y = u.dot(deflated);  // u^H x
    const double lambda =
        std::max(state.beta * state.accumulators[m] + std::norm(y), state.eps_guard);
    state.accumulators[m] = lambda;
    u += (deflated - u * y) * (std::conj(y) / lambda);
    deflated -= u * y;
  }
  return deflated;
}

CMatrix extract_basis(const PastdState& state) {
  CMatrix basis(state.dim, state.order);
  for (int m = 0; m < state.order; ++m) {
    const double norm = state.vectors[m].norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
      throw DegenerateStateError("extract_basis: zero-norm tracked vector");
    }
    basis.col(m) = state.vectors[m] / norm;
  }
  return basis;
}

CMatrix batch_dominant_subspace(const std::vector<CVector>& samples, int order) {
  if (order < 1) {
    throw std::invalid_argument("batch_dominant_subspace: order must be >= 1");
  }
  if (samples.size() < static_cast<std::size_t>(order)) {
    throw std::invalid_argument("batch_dominant_subspace: need at least `order` samples");
  }
  const Eigen::Index dim = samples.front().size();
  CMatrix cov = CMatrix::Zero(dim, dim);
  for (const CVector& r : samples) {
    if (r.size() != dim) {
      throw DimensionError("batch_dominant_subspace: inconsistent sample length");
    }
    cov.noalias() += r * r.adjoint();
  }
  cov /= static_cast<double>(samples.size());

  Eigen::SelfAdjointEigenSolver<CMatrix> solver(cov);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("batch_dominant_subspace: eigendecomposition failed");
  }
  // Eigen sorts ascending; take the trailing columns in reverse.
  CMatrix basis(dim, order);
  for (int m = 0; m < order; ++m) {
    basis.col(m) = solver.eigenvectors().col(dim - 1 - m);
  }
  return basis;
}

double chordal_distance(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows()) {
    throw DimensionError("chordal_distance: row mismatch");
  }
  const auto thin_q = [](const CMatrix& m) {
    Eigen::HouseholderQR<CMatrix> qr(m);
    return CMatrix(qr.householderQ() * CMatrix::Identity(m.rows(), m.cols()));
  };
  const CMatrix qa = thin_q(a);
  const CMatrix qb = thin_q(b);
  const CMatrix pa = qa * qa.adjoint();
  const CMatrix pb = qb * qb.adjoint();
  return (pa - pb).norm() / std::sqrt(2.0);
}

} // namespace mmwavesim
