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

#include "mmwavesim/estimation_protocol.hpp"

#include <bit>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "mmwavesim/errors.hpp"
#include "mmwavesim/subspace_tracking.hpp"

namespace mmwavesim {

namespace {

bool is_power_of_two(int n) {
  return n > 0 && std::has_single_bit(static_cast<unsigned>(n));
}

// Partial Fisher-Yates: the first `count` entries of a random permutation
// of 0..pool-1.
std::vector<int> sample_distinct(Rng& rng, int pool, int count) {
  std::vector<int> indices(pool);
  std::iota(indices.begin(), indices.end(), 0);
  for (int i = 0; i < count; ++i) {
    std::uniform_int_distribution<int> pick(i, pool - 1);
    std::swap(indices[i], indices[pick(rng)]);
  }
  indices.resize(count);
  return indices;
}

} // namespace

RMatrix hadamard_matrix(int order) {
  if (!is_power_of_two(order)) {
    throw std::invalid_argument("hadamard_matrix: order must be a power of two");
  }
  RMatrix h(order, order);
  for (int r = 0; r < order; ++r) {
    for (int c = 0; c < order; ++c) {
      const unsigned overlap = static_cast<unsigned>(r) & static_cast<unsigned>(c);
      h(r, c) = (std::popcount(overlap) % 2 == 0) ? 1.0 : -1.0;
    }
  }
  return h;
}

RMatrix generate_probing_symbols(int probe_len, int dim, Rng& rng) {
  if (probe_len < 1 || dim < 1) {
    throw std::invalid_argument("generate_probing_symbols: counts must be >= 1");
  }
  return rademacher_matrix(rng, dim, probe_len);
}

CVector simulate_phase_a_rx(const CMatrix& h_comp, const RVector& symbol,
                            const ProbingConfig& cfg, const AnalogCombiner& d_bs,
                            const AnalogCombiner& d_ms, Rng& rng) {
  if (h_comp.cols() != symbol.size() || h_comp.cols() != d_bs.num_chains() ||
      h_comp.rows() != d_ms.num_chains()) {
    throw DimensionError("simulate_phase_a_rx: shape mismatch");
  }
  if (!(cfg.probe_power > 0.0) || cfg.noise_var < 0.0) {
    throw std::invalid_argument("simulate_phase_a_rx: bad power/noise setting");
  }
  // trace(D D^H) is the squared Frobenius norm of the analog stage.
  const double tx_scale = std::sqrt(cfg.probe_power / d_bs.matrix.squaredNorm());
  const CVector antenna_noise =
      complex_gaussian_vector(rng, d_ms.num_antennas(), cfg.noise_var);
  return tx_scale * (h_comp * symbol) + d_ms.matrix.adjoint() * antenna_noise;
}

CMatrix run_phase_a(const CMatrix& h_comp, const ProbingConfig& cfg,
                    const AnalogCombiner& d_bs, const AnalogCombiner& d_ms,
                    int order, double beta, Rng& rng) {
  if (order > h_comp.rows()) {
    throw std::invalid_argument("run_phase_a: order exceeds RF-chain dimension");
  }
  const RMatrix symbols =
      generate_probing_symbols(cfg.probe_len, static_cast<int>(h_comp.cols()), rng);
  PastdState tracker = pastd_init(order, static_cast<int>(h_comp.rows()), beta);
  for (int n = 0; n < cfg.probe_len; ++n) {
    pastd_update(tracker, simulate_phase_a_rx(h_comp, symbols.col(n), cfg, d_bs, d_ms, rng));
  }
  return extract_basis(tracker);
}

PilotBook generate_pilot_book(int num_users, int order, int pilot_len,
                              double ms_power, Rng& rng,
                              PilotConstruction construction) {
  if (num_users < 1 || order < 1) {
    throw std::invalid_argument("generate_pilot_book: counts must be >= 1");
  }
  if (pilot_len < order) {
    throw std::invalid_argument("generate_pilot_book: pilot_len must be >= order");
  }
  if (!(ms_power > 0.0)) {
    throw std::invalid_argument("generate_pilot_book: ms_power must be > 0");
  }
  if (construction == PilotConstruction::Auto) {
    construction = is_power_of_two(pilot_len) ? PilotConstruction::BinaryHadamard
                                              : PilotConstruction::RandomOrthonormal;
  }

  PilotBook book;
  book.pilot_len = pilot_len;
  book.pilots.reserve(num_users);
  book.alpha.assign(num_users, ms_power * pilot_len / order);

  if (construction == PilotConstruction::BinaryHadamard) {
    if (!is_power_of_two(pilot_len)) {
      throw std::invalid_argument(
          "generate_pilot_book: binary construction needs a power-of-two pilot_len");
    }
    const RMatrix hadamard = hadamard_matrix(pilot_len);
    const double row_scale = 1.0 / std::sqrt(static_cast<double>(pilot_len));
    for (int k = 0; k < num_users; ++k) {
      const std::vector<int> rows = sample_distinct(rng, pilot_len, order);
      const RMatrix signs = rademacher_matrix(rng, 1, pilot_len);
      RMatrix phi(order, pilot_len);
      for (int i = 0; i < order; ++i) {
        phi.row(i) = row_scale * hadamard.row(rows[i]).cwiseProduct(signs.row(0));
      }
      book.pilots.push_back(std::move(phi));
    }
    return book;
  }

  // Fallback: the first `order` rows of a Haar-random real orthogonal matrix.
  for (int k = 0; k < num_users; ++k) {
    RMatrix gauss(pilot_len, pilot_len);
    for (Eigen::Index c = 0; c < gauss.cols(); ++c) {
      for (Eigen::Index r = 0; r < gauss.rows(); ++r) {
        gauss(r, c) = gaussian(rng, 1.0);
      }
    }
    Eigen::HouseholderQR<RMatrix> qr(gauss);
    const RMatrix q = qr.householderQ() * RMatrix::Identity(pilot_len, pilot_len);
    book.pilots.push_back(q.leftCols(order).transpose());
  }
  return book;
}

CMatrix simulate_phase_b_rx(const std::vector<CMatrix>& composites,
                            const std::vector<CMatrix>& ms_basebands,
                            const PilotBook& book, double noise_var,
                            const AnalogCombiner& d_bs, Rng& rng) {
  const std::size_t num_users = composites.size();
  if (ms_basebands.size() != num_users ||
      book.pilots.size() != num_users || book.alpha.size() != num_users) {
    throw DimensionError("simulate_phase_b_rx: per-user input counts disagree");
  }
  if (noise_var < 0.0) {
    throw std::invalid_argument("simulate_phase_b_rx: noise_var must be >= 0");
  }
  const Eigen::Index n_bs_rf = d_bs.num_chains();
  CMatrix y = CMatrix::Zero(n_bs_rf, book.pilot_len);
  for (std::size_t k = 0; k < num_users; ++k) {
    const CMatrix& h = composites[k];
    if (h.cols() != n_bs_rf || h.rows() != ms_basebands[k].rows() ||
        ms_basebands[k].cols() != book.pilots[k].rows() ||
        book.pilots[k].cols() != book.pilot_len) {
      throw DimensionError("simulate_phase_b_rx: shape mismatch");
    }
    y.noalias() += std::sqrt(book.alpha[k]) * (h.adjoint() * ms_basebands[k]) *
                   book.pilots[k].cast<Complex>();
  }
  const CMatrix antenna_noise =
      complex_gaussian_matrix(rng, d_bs.num_antennas(), book.pilot_len, noise_var);
  y.noalias() += d_bs.matrix.adjoint() * antenna_noise;
  return y;
}

ChannelEstimate pm_estimate(const CMatrix& y, const RMatrix& pilots_k) {
  if (y.cols() != pilots_k.cols()) {
    throw DimensionError("pm_estimate: pilot length mismatch");
  }
  ChannelEstimate est;
  est.columns = y * pilots_k.transpose().cast<Complex>();
  est.kind = Estimator::PilotMatched;
  return est;
}

ZfMatrices zf_matrix(const PilotBook& book) {
  const int num_users = book.num_users();
  if (num_users < 1) {
    throw std::invalid_argument("zf_matrix: empty pilot book");
  }
  const int order = static_cast<int>(book.pilots.front().rows());
  const int stacked_rows = num_users * order;
  if (book.pilot_len < stacked_rows) {
    throw std::invalid_argument("zf_matrix: pilot_len must be >= order * num_users");
  }
  RMatrix stacked(stacked_rows, book.pilot_len);
  for (int k = 0; k < num_users; ++k) {
    if (book.pilots[k].rows() != order || book.pilots[k].cols() != book.pilot_len) {
      throw DimensionError("zf_matrix: inconsistent pilot shapes");
    }
    stacked.middleRows(k * order, order) = book.pilots[k];
  }

  const RMatrix gram = stacked * stacked.transpose();
  Eigen::SelfAdjointEigenSolver<RMatrix> eig(gram);
  if (eig.info() != Eigen::Success) {
    throw NumericalError("zf_matrix: Gram eigendecomposition failed");
  }
  const double eig_min = eig.eigenvalues()(0);
  const double eig_max = eig.eigenvalues()(stacked_rows - 1);
  if (!(eig_min > 1e-10 * eig_max) || !(eig_max > 0.0)) {
    throw DegenerateStateError("zf_matrix: rank-deficient stacked pilot matrix");
  }

  // Z = Phi_all^T (Phi_all Phi_all^T)^-1, solved column-block-wise.
  const RMatrix solved = gram.llt().solve(stacked);  // (MK x P)
  const RMatrix z_all = solved.transpose();          // (P x MK)

  ZfMatrices out;
  out.gram_condition = eig_max / eig_min;
  out.per_user.reserve(num_users);
  for (int k = 0; k < num_users; ++k) {
    out.per_user.push_back(z_all.middleCols(k * order, order));
  }
  return out;
}

ChannelEstimate zf_estimate(const CMatrix& y, const RMatrix& z_k) {
  if (y.cols() != z_k.rows()) {
    throw DimensionError("zf_estimate: pilot length mismatch");
  }
  ChannelEstimate est;
  est.columns = y * z_k.cast<Complex>();
  est.kind = Estimator::ZeroForcing;
  return est;
}

} // namespace mmwavesim
