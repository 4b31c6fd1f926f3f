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

#include <complex>
#include <string>

#include <Eigen/Dense>

namespace mmwavesim {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

enum class Link { Downlink = 0, Uplink = 1 };
enum class Estimator { PilotMatched = 0, ZeroForcing = 1, Perfect = 2 };
enum class BfMode { Hybrid, FullyDigital };

inline constexpr int kNumLinks = 2;
inline constexpr int kNumEstimators = 3;

std::string to_string(Link link);
std::string to_string(Estimator estimator);
std::string to_string(BfMode mode);

} // namespace mmwavesim
