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

#include "prsense/grid.hpp"

#include <cstdio>
#include <string>

#include "prsense/rng.hpp"

namespace prsense {

namespace {

const std::vector<int>& base_cycle(int comb_size) {
    static const std::vector<int> comb2 = {0, 1};
    static const std::vector<int> comb4 = {0, 2, 1, 3};
    static const std::vector<int> comb6 = {0, 3, 1, 4, 2, 5};
    static const std::vector<int> comb12 = {0, 6, 3, 9, 1, 7, 4, 10, 2, 8, 5, 11};
    switch (comb_size) {
        case 2: return comb2;
        case 4: return comb4;
        case 6: return comb6;
        case 12: return comb12;
        default: throw config_error("prs_pattern: comb size must be one of {2,4,6,12}");
    }
}

bool table_supported(int comb_size, int num_symbols) {
    switch (comb_size) {
        case 2: return num_symbols == 2 || num_symbols == 4 || num_symbols == 6 || num_symbols == 12;
        case 4: return num_symbols == 4 || num_symbols == 12;
        case 6: return num_symbols == 6 || num_symbols == 12;
        case 12: return num_symbols == 12;
        default: return false;
    }
}

} // namespace

prs_pattern make_prs_pattern(int comb_size, int num_symbols, int re_offset) {
    const std::vector<int>& cycle = base_cycle(comb_size);
    // Beyond one slot the per-slot schedule repeats cyclically, so any
    // multiple of the comb size keeps the full-comb-fill property.
    const bool multi_slot = num_symbols > 12 && num_symbols % comb_size == 0;
    if (!table_supported(comb_size, num_symbols) && !multi_slot) {
        throw config_error("prs_pattern: comb " + std::to_string(comb_size) + " with " +
                           std::to_string(num_symbols) + " symbols is not a supported mapping");
    }
    if (re_offset < 0 || re_offset >= comb_size) {
        throw config_error("prs_pattern: re_offset must be in [0, comb_size)");
    }
    prs_pattern p;
    p.comb_size = comb_size;
    p.num_symbols = num_symbols;
    p.re_offset = re_offset;
    p.offset_schedule.resize(num_symbols);
    for (int m = 0; m < num_symbols; ++m) {
        p.offset_schedule[m] = cycle[m % cycle.size()];
    }
    return p;
}

int k0_for_symbol(const prs_pattern& pattern, int m) {
    if (m < 0) {
        throw config_error("k0_for_symbol: symbol index must be >= 0");
    }
    const std::vector<int>& cycle = base_cycle(pattern.comb_size);
    return (cycle[m % cycle.size()] + pattern.re_offset) % pattern.comb_size;
}

resource_grid map_prs(const prs_pattern& pattern, const prs_sequence_id& id0, int n_subcarriers,
                      const numerology_config& numerology, int total_symbols,
                      int doppler_symbol_offset) {
    if (n_subcarriers <= 0 || n_subcarriers % pattern.comb_size != 0) {
        throw config_error("map_prs: subcarrier count must be a positive multiple of the comb size");
    }
    if (id0.slot_index >= numerology.n_slot_frame) {
        throw config_error("map_prs: slot index exceeds slots per frame for this numerology");
    }
    const int n_prs = pattern.num_symbols;
    const int n_total = total_symbols < 0 ? n_prs : total_symbols;
    if (n_total < n_prs) {
        throw config_error("map_prs: total symbol count smaller than the PRS block");
    }

    resource_grid g;
    g.num_subcarriers = n_subcarriers;
    g.num_symbols = n_total;
    g.cells.assign(static_cast<std::size_t>(n_subcarriers) * n_total, cplx{0.0, 0.0});
    g.prs_mask.assign(g.cells.size(), 0);
    g.numerology = numerology;
    g.comb_stride = pattern.comb_size;
    g.num_prs_symbols = n_prs;
    g.k0_of_symbol.resize(n_prs);
    g.doppler_symbol_offset = doppler_symbol_offset;

    const int n_j = n_subcarriers / pattern.comb_size;
    for (int m = 0; m < n_prs; ++m) {
        const int k0 = k0_for_symbol(pattern, m);
        g.k0_of_symbol[m] = k0;

        // Sequence identity advances symbol by symbol through consecutive
        // slots, wrapping at the frame boundary.
        const int abs_symbol = id0.symbol_index + m;
        prs_sequence_id id = id0;
        id.symbol_index = abs_symbol % numerology.n_symb_slot;
        id.slot_index = (id0.slot_index + abs_symbol / numerology.n_symb_slot) %
                        numerology.n_slot_frame;
        const std::vector<cplx> seq = prs_symbols(id, static_cast<std::size_t>(n_j));
        for (int k = 0; k < n_j; ++k) {
            const int n = pattern.comb_size * k + k0;
            g.at(n, m) = seq[static_cast<std::size_t>(k)];
            g.prs_mask[static_cast<std::size_t>(n) + static_cast<std::size_t>(m) * n_subcarriers] = 1;
        }
    }
    return g;
}

resource_grid map_baseline(baseline_kind kind, std::size_t length, uint32_t seed,
                           const numerology_config& numerology) {
    const int stride = kind == baseline_kind::ss ? 1 : 4;
    const int n_subcarriers = stride * static_cast<int>(length);
    const std::vector<cplx> seq = baseline_sequence(kind, length, seed);

    resource_grid g;
    g.num_subcarriers = n_subcarriers;
    g.num_symbols = 1;
    g.cells.assign(static_cast<std::size_t>(n_subcarriers), cplx{0.0, 0.0});
    g.prs_mask.assign(g.cells.size(), 0);
    g.numerology = numerology;
    g.comb_stride = stride;
    g.num_prs_symbols = 1;
    g.k0_of_symbol = {0};
    for (std::size_t k = 0; k < length; ++k) {
        g.cells[k * stride] = seq[k];
        g.prs_mask[k * stride] = 1;
    }
    return g;
}

resource_grid fill_data(resource_grid grid, uint64_t seed) {
    rng64 rng(seed);
    const double a = 0.70710678118654752440;
    static const cplx constellation[4] = {{a, a}, {a, -a}, {-a, a}, {-a, -a}};
    for (int m = grid.num_prs_symbols; m < grid.num_symbols; ++m) {
        for (int n = 0; n < grid.num_subcarriers; ++n) {
            grid.at(n, m) = constellation[rng.next_u64() & 3u];
        }
    }
    return grid;
}

bool prb_check(int n_subcarriers) {
    if (n_subcarriers <= 0 || n_subcarriers % 12 != 0) {
        return false;
    }
    const int prbs = n_subcarriers / 12;
    return prbs >= 24 && prbs <= 272 && prbs % 4 == 0;
}

std::string grid_to_csv(const resource_grid& grid) {
    std::string out = "subcarrier,symbol,re,im,is_prs\n";
    char line[128];
    for (int m = 0; m < grid.num_symbols; ++m) {
        for (int n = 0; n < grid.num_subcarriers; ++n) {
            const cplx v = grid.at(n, m);
            std::snprintf(line, sizeof(line), "%d,%d,%.17g,%.17g,%d\n", n, m, v.real(), v.imag(),
                          grid.is_prs(n, m) ? 1 : 0);
            out += line;
        }
    }
    return out;
}

} // namespace prsense
