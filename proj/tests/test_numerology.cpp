// SPDX-License-Identifier: Apache-2.0
//
// prsense: 5G NR PRS-based radar sensing simulation library
// Copyright (C) 2026 the prsense authors
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

#include <doctest.h>

#include <cmath>

#include "prsense/numerology.hpp"

using namespace prsense;

namespace {
double round_us(double seconds, int digits) {
    const double scale = std::pow(10.0, digits);
    return std::round(seconds * 1e6 * scale) / scale;
}
} // namespace

TEST_SUITE("numerology") {

TEST_CASE("mu=3 row: 120 kHz spacing and the 8.92 us total symbol") {
    const numerology_config c = numerology_from_mu(3);
    CHECK(c.delta_f_hz == 120e3);
    CHECK(round_us(c.t_useful_s, 2) == 8.33);
    CHECK(round_us(c.t_symbol_s, 2) == 8.92);
    CHECK(c.n_slot_frame == 80);
}

TEST_CASE("mu=0 row") {
    const numerology_config c = numerology_from_mu(0);
    CHECK(c.delta_f_hz == 15e3);
    CHECK(round_us(c.t_symbol_s, 2) == 71.35);
    CHECK(c.n_slot_frame == 10);
}

TEST_CASE("total symbol durations match the published table at 2 decimals") {
    const double expected_us[5] = {71.35, 35.68, 17.84, 8.92, 4.46};
    for (int mu = 0; mu <= 4; ++mu) {
        CHECK(round_us(numerology_from_mu(mu).t_symbol_s, 2) == expected_us[mu]);
    }
}

TEST_CASE("mu=2 frame has 560 symbols") {
    const numerology_config c = numerology_from_mu(2);
    CHECK(c.n_slot_frame == 40);
    CHECK(c.symbols_per_frame() == 560);
}

TEST_CASE("structural invariants hold for every mu") {
    double prev_symbol = 1.0;
    for (int mu = 0; mu <= 4; ++mu) {
        const numerology_config c = numerology_from_mu(mu);
        CHECK(c.delta_f_hz == (1 << mu) * 15e3);
        CHECK(std::abs(c.t_useful_s * c.delta_f_hz - 1.0) < 1e-6);
        CHECK(c.t_symbol_s == c.t_useful_s + c.t_cp_s);
        CHECK(c.n_slot_frame == 10 * (1 << mu));
        CHECK(c.symbols_per_frame() == 140 * (1 << mu));
        CHECK(c.t_symbol_s < prev_symbol);
        prev_symbol = c.t_symbol_s;
    }
}

TEST_CASE("out-of-range mu is rejected") {
    CHECK_THROWS_AS((void)numerology_from_mu(-1), config_error);
    CHECK_THROWS_AS((void)numerology_from_mu(5), config_error);
}

TEST_CASE("band validation") {
    CHECK(validate_band(24e9, 3));      // advisory FR2 margin covers 24 GHz
    CHECK(band_is_advisory(24e9));
    CHECK_FALSE(band_is_advisory(24.3e9));
    CHECK_FALSE(validate_band(3.5e9, 4));
    CHECK(validate_band(3.5e9, 0));
    CHECK(validate_band(28e9, 4));
    CHECK_FALSE(validate_band(28e9, 0));
    CHECK_THROWS_AS((void)validate_band(10e9, 2), config_error);
    CHECK_THROWS_AS((void)validate_band(100e6, 0), config_error);
    CHECK_THROWS_AS((void)validate_band(-1.0, 0), config_error);
}

} // TEST_SUITE
