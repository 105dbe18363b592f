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

#include "prsense/numerology.hpp"

#include <string>

namespace prsense {

namespace {
constexpr double fr1_low_hz = 450e6;
constexpr double fr1_high_hz = 5.9e9;
constexpr double fr2_low_hz = 24.2e9;
constexpr double fr2_high_hz = 52.6e9;
// Carriers within ~5% below the FR2 floor are accepted as FR2 with a warning.
constexpr double fr2_advisory_low_hz = 23.0e9;
} // namespace

numerology_config numerology_from_mu(int mu) {
    if (mu < 0 || mu > 4) {
        throw config_error("numerology: mu must be in {0,...,4}, got " + std::to_string(mu));
    }
    numerology_config cfg;
    cfg.mu = mu;
    cfg.delta_f_hz = static_cast<double>(1 << mu) * 15e3;
    cfg.n_symb_slot = 14;
    cfg.n_slot_frame = 10 * (1 << mu);
    cfg.t_useful_s = 1.0 / cfg.delta_f_hz;
    cfg.t_cp_s = cfg.t_useful_s * 144.0 / 2048.0;
    cfg.t_symbol_s = cfg.t_useful_s + cfg.t_cp_s;
    cfg.frame_duration_s = 10e-3;
    return cfg;
}

bool band_is_advisory(double carrier_hz) {
    return carrier_hz >= fr2_advisory_low_hz && carrier_hz < fr2_low_hz;
}

bool validate_band(double carrier_hz, int mu) {
    if (mu < 0 || mu > 4) {
        throw config_error("validate_band: mu must be in {0,...,4}");
    }
    if (carrier_hz <= 0.0) {
        throw config_error("validate_band: carrier frequency must be positive");
    }
    const bool fr1 = carrier_hz >= fr1_low_hz && carrier_hz <= fr1_high_hz;
    const bool fr2 =
        (carrier_hz >= fr2_low_hz || band_is_advisory(carrier_hz)) && carrier_hz <= fr2_high_hz;
    if (!fr1 && !fr2) {
        throw config_error("validate_band: carrier outside FR1 and FR2 (unsupported-band)");
    }
    if (fr1) {
        return mu <= 2;
    }
    return mu >= 2;
}

} // namespace prsense
