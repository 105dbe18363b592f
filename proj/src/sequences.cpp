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

#include "prsense/sequences.hpp"

#include <cmath>
#include <string>

namespace prsense {

namespace {

constexpr int gold_warmup = 1600;
constexpr double inv_sqrt2 = 0.70710678118654752440;

void validate_id(const prs_sequence_id& id) {
    if (id.n_id_seq < 0 || id.n_id_seq > 4095) {
        throw config_error("prs_sequence_id: n_id_seq must be in [0, 4095]");
    }
    if (id.slot_index < 0 || id.slot_index >= 160) {
        throw config_error("prs_sequence_id: slot_index must be in [0, 160)");
    }
    if (id.symbol_index < 0 || id.symbol_index >= 14) {
        throw config_error("prs_sequence_id: symbol_index must be in [0, 14)");
    }
}

} // namespace

std::vector<uint8_t> gold_bits(uint32_t c_init, std::size_t length) {
    // 31-bit registers in the low bits of a uint32_t; state word bit i holds
    // x(n+i).
    uint32_t x1 = 1u;
    uint32_t x2 = c_init & 0x7fffffffu;
    std::vector<uint8_t> out(length);
    const std::size_t total = gold_warmup + length;
    for (std::size_t n = 0; n < total; ++n) {
        if (n >= static_cast<std::size_t>(gold_warmup)) {
            out[n - gold_warmup] = static_cast<uint8_t>((x1 ^ x2) & 1u);
        }
        const uint32_t f1 = ((x1 >> 3) ^ x1) & 1u;
        const uint32_t f2 = ((x2 >> 3) ^ (x2 >> 2) ^ (x2 >> 1) ^ x2) & 1u;
        x1 = (x1 >> 1) | (f1 << 30);
        x2 = (x2 >> 1) | (f2 << 30);
    }
    return out;
}

uint32_t prs_c_init(const prs_sequence_id& id) {
    validate_id(id);
    const uint64_t n_id = static_cast<uint64_t>(id.n_id_seq);
    const uint64_t hi = n_id >> 10;         // floor(n_id / 1024)
    const uint64_t lo = n_id & 0x3ffu;      // n_id mod 1024
    const uint64_t slot_term =
        (14ull * static_cast<uint64_t>(id.slot_index) + static_cast<uint64_t>(id.symbol_index) +
         1ull) *
        (2ull * lo + 1ull);
    const uint64_t c = ((hi << 22) + (slot_term << 10) + lo) & 0x7fffffffull;
    return static_cast<uint32_t>(c);
}

std::vector<cplx> gold_qpsk(uint32_t c_init, std::size_t count) {
    const std::vector<uint8_t> c = gold_bits(c_init, 2 * count);
    std::vector<cplx> r(count);
    for (std::size_t m = 0; m < count; ++m) {
        r[m] = {inv_sqrt2 * (1.0 - 2.0 * c[2 * m]), inv_sqrt2 * (1.0 - 2.0 * c[2 * m + 1])};
    }
    return r;
}

std::vector<cplx> prs_symbols(const prs_sequence_id& id, std::size_t count) {
    if (count == 0) {
        throw config_error("prs_symbols: count must be >= 1");
    }
    return gold_qpsk(prs_c_init(id), count);
}

std::vector<cplx> baseline_sequence(baseline_kind kind, std::size_t length, uint32_t seed) {
    if (kind == baseline_kind::ss) {
        if (length > 127) {
            throw config_error("baseline_sequence: SS length exceeds the 127-element M sequence");
        }
        // Degree-7 LFSR x(i+7) = x(i+4) + x(i), BPSK 1-2x. The seed offsets
        // the PSS-style initial state; state must stay nonzero.
        uint8_t x[7] = {0, 1, 1, 0, 1, 1, 1};
        if (seed != 0) {
            uint32_t s = seed % 127 + 1;
            for (int i = 0; i < 7; ++i) {
                x[i] = static_cast<uint8_t>((s >> i) & 1u);
            }
        }
        std::vector<uint8_t> m_seq(127);
        for (int i = 0; i < 127; ++i) {
            m_seq[i] = x[0];
            const uint8_t fb = static_cast<uint8_t>((x[4] + x[0]) & 1u);
            for (int j = 0; j < 6; ++j) {
                x[j] = x[j + 1];
            }
            x[6] = fb;
        }
        std::vector<cplx> out(length);
        for (std::size_t i = 0; i < length; ++i) {
            out[i] = {1.0 - 2.0 * m_seq[i], 0.0};
        }
        return out;
    }
    // DMRS: one Gold->QPSK pipeline for everything pseudo-random; the seed
    // replaces the sequence ID in the PRS c_init recipe.
    prs_sequence_id id;
    id.n_id_seq = static_cast<int>(seed % 4096u);
    return gold_qpsk(prs_c_init(id), length);
}

} // namespace prsense
