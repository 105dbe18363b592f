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
#include "prsense/numerology.hpp"
#include "prsense/sequences.hpp"

namespace prsense {

/// Comb mapping pattern for PRS. Valid (comb, symbols) combinations and the
/// per-symbol subcarrier offsets come from the 38.211 mapping table:
///   comb 2:  2/4/6/12 symbols, offsets cycle 0,1
///   comb 4:  4/12 symbols, offsets cycle 0,2,1,3
///   comb 6:  6/12 symbols, offsets cycle 0,3,1,4,2,5
///   comb 12: 12 symbols, offsets 0,6,3,9,1,7,4,10,2,8,5,11
/// Multi-slot transmissions (num_symbols > 12, multiple of comb size) repeat
/// the base cycle.
struct prs_pattern {
    int comb_size = 4;
    int num_symbols = 4;
    int re_offset = 0; ///< k_offset, shifts the whole comb
    std::vector<int> offset_schedule;
};

prs_pattern make_prs_pattern(int comb_size, int num_symbols, int re_offset = 0);

/// First-subcarrier offset k_0 for (pattern, symbol m), including re_offset.
int k0_for_symbol(const prs_pattern& pattern, int m);

/// Frequency-domain modulation-symbol grid, subcarriers x OFDM symbols.
/// No IFFT/CP time synthesis happens anywhere: the whole processing chain
/// operates on modulation symbols.
struct resource_grid {
    int num_subcarriers = 0;
    int num_symbols = 0;
    std::vector<cplx> cells;      ///< column-major: cells[n + m * num_subcarriers]
    std::vector<uint8_t> prs_mask;
    numerology_config numerology;

    int comb_stride = 1;            ///< K between PRS subcarriers (1 = contiguous)
    int num_prs_symbols = 0;        ///< leading symbols that bear the reference signal
    std::vector<int> k0_of_symbol;  ///< per PRS symbol
    int doppler_symbol_offset = 0;  ///< PRS-symbol ordinal of the first symbol
                                    ///< within a multi-frame transmission
    double carrier_hz = 0.0;        ///< stamped by the channel once known

    cplx& at(int n, int m) { return cells[static_cast<std::size_t>(n) + static_cast<std::size_t>(m) * num_subcarriers]; }
    const cplx& at(int n, int m) const { return cells[static_cast<std::size_t>(n) + static_cast<std::size_t>(m) * num_subcarriers]; }
    bool is_prs(int n, int m) const { return prs_mask[static_cast<std::size_t>(n) + static_cast<std::size_t>(m) * num_subcarriers] != 0; }

    int prs_per_symbol() const { return num_subcarriers / comb_stride; }
};

/// Maps PRS symbols onto the comb. Each PRS symbol m gets its own sequence
/// via the c_init recipe evaluated at the (slot, symbol) position m symbols
/// after `id0`. total_symbols < 0 means the grid holds exactly the PRS
/// symbols; a larger value leaves trailing data-designated symbols at zero.
resource_grid map_prs(const prs_pattern& pattern, const prs_sequence_id& id0, int n_subcarriers,
                      const numerology_config& numerology, int total_symbols = -1,
                      int doppler_symbol_offset = 0);

/// Single-symbol baseline footprints for the ranging comparison:
/// SS occupies `length` contiguous subcarriers; DMRS occupies a comb-4 comb
/// across 4*length subcarriers.
resource_grid map_baseline(baseline_kind kind, std::size_t length, uint32_t seed,
                           const numerology_config& numerology);

/// Fills every cell of the data-designated symbols (those past the PRS
/// block) with seeded random unit QPSK. PRS symbols are left untouched.
resource_grid fill_data(resource_grid grid, uint64_t seed);

/// Advisory 38.214 bandwidth check: n_subcarriers = 12 p with
/// p in {24, 28, ..., 272}. The shipped experiment configs use N = 256,
/// which fails it; callers treat the result as a warning.
bool prb_check(int n_subcarriers);

/// Debug dump, one line per resource element: subcarrier,symbol,re,im,is_prs.
std::string grid_to_csv(const resource_grid& grid);

} // namespace prsense
