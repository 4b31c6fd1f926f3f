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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>

#include "mmwavesim/array_geometry.hpp"
#include "mmwavesim/errors.hpp"

using namespace mmwavesim;

namespace {
constexpr double kPi = std::numbers::pi;
} // namespace

TEST_CASE("ula_response matches the plane-wave phase law") {
  const UlaSpec spec{8, 0.5};
  const double theta = 0.3;
  const CVector a = ula_response(spec, theta);
  REQUIRE(a.size() == 8);
  CHECK(a.norm() == doctest::Approx(1.0).epsilon(1e-12));

  // Element m recomputed longhand from the geometry: the wave from angle
  // theta reaches element m with an extra path of m*spacing*sin(theta)
  // wavelengths.
  for (int m = 0; m < 8; ++m) {
    const double phase = -2.0 * kPi * 0.5 * std::sin(theta) * m;
    const Complex expected =
        std::exp(Complex(0.0, phase)) / std::sqrt(8.0);
    CHECK(std::abs(a(m) - expected) < 1e-12);
  }
}

TEST_CASE("ula_response special angles") {
  const UlaSpec spec{5, 0.5};
  SUBCASE("broadside: all elements in phase") {
    const CVector a = ula_response(spec, 0.0);
    for (int m = 0; m < 5; ++m) {
      CHECK(a(m).real() == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-12));
      CHECK(a(m).imag() == doctest::Approx(0.0).epsilon(1e-12));
    }
  }
  SUBCASE("single element") {
    const CVector a = ula_response(UlaSpec{1, 0.5}, 1.1);
    REQUIRE(a.size() == 1);
    CHECK(a(0) == Complex(1.0, 0.0));
  }
  SUBCASE("endfire symmetry: theta and pi - theta alias") {
    // sin(pi - t) == sin(t), so the responses must coincide exactly.
    const CVector a1 = ula_response(spec, 0.4);
    const CVector a2 = ula_response(spec, kPi - 0.4);
    CHECK((a1 - a2).norm() < 1e-12);
  }
}

TEST_CASE("ula_response Dirichlet-kernel orthogonality") {
  // Steering vectors whose sin(theta) values differ by 2k/N are exactly
  // orthogonal for a half-wavelength ULA.
  const int n = 8;
  const UlaSpec spec{n, 0.5};
  const CVector a0 = ula_response(spec, 0.0);
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k / n;
    if (s > 1.0) {
      break;
    }
    const CVector ak = ula_response(spec, std::asin(s));
    CHECK(std::abs(a0.dot(ak)) < 1e-12);
  }
}

TEST_CASE("ula_response input validation") {
  CHECK_THROWS_AS(ula_response(UlaSpec{0, 0.5}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ula_response(UlaSpec{4, 0.0}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ula_response(UlaSpec{4, -0.5}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ula_response(UlaSpec{4, 0.5}, std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS(ula_response(UlaSpec{4, 0.5}, INFINITY), std::invalid_argument);
  // Any finite angle is accepted, including ones outside [-pi/2, pi/2]:
  // clustered ray angles can spill past the ends of the range.
  CHECK_NOTHROW(ula_response(UlaSpec{4, 0.5}, 2.0));
}

TEST_CASE("build_angle_grid spans [-pi/2, pi/2)") {
  SUBCASE("n = 4") {
    const std::vector<double> grid = build_angle_grid(4);
    REQUIRE(grid.size() == 4);
    CHECK(grid[0] == doctest::Approx(-kPi / 2).epsilon(1e-15));
    CHECK(grid[1] == doctest::Approx(-kPi / 4).epsilon(1e-15));
    CHECK(grid[2] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(grid[3] == doctest::Approx(kPi / 4).epsilon(1e-15));
  }
  SUBCASE("n = 1") {
    const std::vector<double> grid = build_angle_grid(1);
    REQUIRE(grid.size() == 1);
    CHECK(grid[0] == doctest::Approx(-kPi / 2));
  }
  SUBCASE("uniform spacing pi/n") {
    const std::vector<double> grid = build_angle_grid(16);
    for (std::size_t i = 1; i < grid.size(); ++i) {
      CHECK(grid[i] - grid[i - 1] == doctest::Approx(kPi / 16).epsilon(1e-12));
    }
  }
  SUBCASE("rejects n < 1") {
    CHECK_THROWS_AS(build_angle_grid(0), std::invalid_argument);
  }
}

TEST_CASE("build_analog_combiner grid mode") {
  const AnalogCombiner d = build_analog_combiner(16, 4, CombinerMode::Grid);
  CHECK(d.mode == CombinerMode::Grid);
  CHECK(d.num_antennas() == 16);
  CHECK(d.num_chains() == 4);
  REQUIRE(d.angle_grid.size() == 4);

  const UlaSpec spec{16, 0.5};
  for (int i = 0; i < 4; ++i) {
    CHECK(d.matrix.col(i).norm() == doctest::Approx(1.0).epsilon(1e-12));
    // every entry of a steering vector has modulus 1/sqrt(N)
    for (int r = 0; r < 16; ++r) {
      CHECK(std::abs(d.matrix(r, i)) == doctest::Approx(1.0 / 4.0).epsilon(1e-12));
    }
    CHECK((d.matrix.col(i) - ula_response(spec, d.angle_grid[i])).norm() < 1e-12);
  }
  // squared Frobenius norm equals the chain count; the probing stage's power
  // normalization divides by it
  CHECK(d.matrix.squaredNorm() == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("build_analog_combiner identity mode") {
  const AnalogCombiner d = build_analog_combiner(3, 3, CombinerMode::Identity);
  CHECK(d.mode == CombinerMode::Identity);
  CHECK(d.angle_grid.empty());
  CHECK((d.matrix - CMatrix::Identity(3, 3)).norm() == 0.0);
}

TEST_CASE("build_analog_combiner validation") {
  CHECK_THROWS_AS(build_analog_combiner(4, 5, CombinerMode::Grid), std::invalid_argument);
  CHECK_THROWS_AS(build_analog_combiner(4, 2, CombinerMode::Identity),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_analog_combiner(0, 0, CombinerMode::Grid), std::invalid_argument);
  CHECK_NOTHROW(build_analog_combiner(4, 4, CombinerMode::Grid));
}
