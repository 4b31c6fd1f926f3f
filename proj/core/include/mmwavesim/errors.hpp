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

#include <stdexcept>
#include <string>

namespace mmwavesim {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Incompatible matrix/vector dimensions.
struct DimensionError : Error {
  using Error::Error;
};

/// A decomposition failed or a computation produced non-finite values.
struct NumericalError : Error {
  using Error::Error;
};

/// A state or input that cannot be processed (zero-norm basis vector,
/// all-zero estimate, rank-deficient pilot stack).
struct DegenerateStateError : NumericalError {
  using NumericalError::NumericalError;
};

/// Invalid configuration; `line` > 0 points at the offending config line.
struct ConfigError : Error {
  explicit ConfigError(const std::string& msg, int line_no = 0)
      : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
        line(line_no) {}
  int line = 0;
};

/// Filesystem failure while writing results.
struct IoError : Error {
  using Error::Error;
};

/// Too many trials failed for the campaign to be trusted.
struct CampaignError : Error {
  using Error::Error;
};

} // namespace mmwavesim
