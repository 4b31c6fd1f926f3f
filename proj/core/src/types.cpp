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

#include "mmwavesim/types.hpp"

namespace mmwavesim {

std::string to_string(Link link) {
  return link == Link::Downlink ? "dl" : "ul";
}

std::string to_string(Estimator estimator) {
  switch (estimator) {
    case Estimator::PilotMatched: return "pm";
    case Estimator::ZeroForcing: return "zf";
    case Estimator::Perfect: return "perfect";
  }
  return "?";
}

std::string to_string(BfMode mode) {
  return mode == BfMode::Hybrid ? "hybrid" : "fd";
}

} // namespace mmwavesim
