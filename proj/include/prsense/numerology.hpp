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

#pragma once

#include "prsense/common.hpp"

namespace prsense {

/// 5G NR timing parameters for one subcarrier-spacing configuration mu.
/// Immutable value type; every other module derives durations from it.
struct numerology_config {
    int mu = 0;                   ///< subcarrier spacing configuration, 0..4
    double delta_f_hz = 15e3;     ///< 2^mu * 15 kHz
    int n_symb_slot = 14;         ///< symbols per slot
    int n_slot_frame = 10;        ///< 10 * 2^mu slots per 10 ms frame
    double t_useful_s = 0.0;      ///< OFDM symbol duration without CP, 1/delta_f
    double t_cp_s = 0.0;          ///< normal cyclic prefix duration
    double t_symbol_s = 0.0;      ///< t_useful + t_cp
    double frame_duration_s = 10e-3;

    int symbols_per_frame() const { return n_slot_frame * n_symb_slot; }
};

/// Builds the numerology row for mu in {0,...,4}.
///
/// The normal-CP duration is the exact 38.211 value (144/2048)*T applied
/// uniformly to every symbol; the slot-initial CP extension is ignored. This
/// reproduces the total symbol durations 71.35/35.68/17.84/8.92/4.46 us.
numerology_config numerology_from_mu(int mu);

/// True iff (carrier, mu) is a supported band/numerology combination:
/// FR1 (450 MHz - 5.9 GHz) admits mu 0..2, FR2 (24.2 - 52.6 GHz) admits
/// mu 2..4. Carriers slightly below the FR2 floor (>= 23 GHz) are treated
/// as FR2 with an advisory warning rather than rejected, so that a 24 GHz
/// carrier with 120 kHz spacing validates. Other out-of-band carriers throw.
bool validate_band(double carrier_hz, int mu);

/// Advisory classification used by validate_band; exposed for the CLI to
/// print warnings.
bool band_is_advisory(double carrier_hz);

} // namespace prsense
