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

#include <cstdint>
#include <vector>

#include "prsense/common.hpp"

namespace prsense {

/// Identity of one PRS symbol's sequence: the downlink PRS sequence ID plus
/// the (slot, symbol) position the sequence is generated for.
struct prs_sequence_id {
    int n_id_seq = 0;     ///< downlink PRS sequence ID, 0..4095
    int slot_index = 0;   ///< slot within the frame, 0..n_slot_frame-1
    int symbol_index = 0; ///< OFDM symbol within the slot, 0..13
};

/// Length-31 Gold generator, 38.211 5.2.1 construction:
/// x1 taps {0,3}, x2 taps {0,1,2,3}, warm-up Nc = 1600,
/// x1 fixed init (only bit 0 set), x2 init = binary expansion of c_init.
/// Returns c(0..length-1) as 0/1 bytes.
std::vector<uint8_t> gold_bits(uint32_t c_init, std::size_t length);

/// Initial state for the PRS scrambler:
/// c_init = (2^22 floor(n_id/1024)
///           + 2^10 (14 n_slot + l + 1)(2 (n_id mod 1024) + 1)
///           + (n_id mod 1024)) mod 2^31.
uint32_t prs_c_init(const prs_sequence_id& id);

/// QPSK PRS symbols r(m) = (1-2c(2m))/sqrt2 + j(1-2c(2m+1))/sqrt2.
std::vector<cplx> prs_symbols(const prs_sequence_id& id, std::size_t count);

/// Maps Gold bits to the unit QPSK constellation; shared by PRS and the
/// DMRS baseline.
std::vector<cplx> gold_qpsk(uint32_t c_init, std::size_t count);

enum class baseline_kind {
    ss,   ///< synchronization-signal stand-in: length-127 M sequence, BPSK
    dmrs, ///< demodulation-reference stand-in: Gold QPSK with its own seed
};

/// Simplified reference-signal baselines for the ranging comparison. Only
/// the sequence family and resource footprint matter for that comparison,
/// so no SSB/PBCH block structure is modeled. SS length is capped at the
/// 127-element M sequence; DMRS reuses the PRS c_init recipe with `seed`
/// in place of the sequence ID.
std::vector<cplx> baseline_sequence(baseline_kind kind, std::size_t length, uint32_t seed);

} // namespace prsense
