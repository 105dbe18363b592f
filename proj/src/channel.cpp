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

#include "prsense/channel.hpp"

#include <cmath>

#include "prsense/rng.hpp"

namespace prsense {

double doppler_shift_hz(double velocity_mps, double carrier_hz) {
    return 2.0 * velocity_mps * carrier_hz / speed_of_light;
}

resource_grid apply_echo(const resource_grid& tx, const target_scenario& scenario,
                         phase_mode mode, uint64_t rng_seed) {
    if (scenario.attenuation <= 0.0) {
        throw config_error("apply_echo: attenuation must be positive");
    }
    if (tx.num_prs_symbols <= 0) {
        throw config_error("apply_echo: grid carries no reference-signal symbols");
    }

    resource_grid rx = tx;
    rx.carrier_hz = scenario.carrier_hz;

    const double xi = scenario.attenuation;
    const double df = tx.numerology.delta_f_hz;
    const double ts = tx.numerology.t_symbol_s;
    const double k_stride = static_cast<double>(tx.comb_stride);
    const double delay_cycles = 2.0 * scenario.range_m / speed_of_light * df;
    const double fd = doppler_shift_hz(scenario.velocity_mps, scenario.carrier_hz);
    const int n_j = tx.prs_per_symbol();

    for (int m = 0; m < tx.num_prs_symbols; ++m) {
        const int k0 = tx.k0_of_symbol[static_cast<std::size_t>(m)];
        const double doppler_ordinal = static_cast<double>(tx.doppler_symbol_offset + m);
        const double doppler_phase = 2.0 * pi * k_stride * doppler_ordinal * ts * fd;
        for (int k = 0; k < n_j; ++k) {
            const int n = tx.comb_stride * k + k0;
            const double sub = mode == phase_mode::paper
                                   ? k_stride * static_cast<double>(k)
                                   : k_stride * static_cast<double>(k) + static_cast<double>(k0);
            const double phase = doppler_phase - 2.0 * pi * sub * delay_cycles;
            rx.at(n, m) = tx.at(n, m) * xi * cplx{std::cos(phase), std::sin(phase)};
        }
    }

    if (scenario.snr_db.has_value()) {
        const double snr = db_to_linear(*scenario.snr_db);
        const double sigma2 = xi * xi / snr; // E|s|^2 = 1 on reference cells
        rng64 rng(rng_seed);
        for (cplx& cell : rx.cells) {
            cell += rng.next_cnormal(sigma2);
        }
    }
    return rx;
}

quotient_matrix quotient(const resource_grid& received, const resource_grid& transmitted) {
    if (received.num_subcarriers != transmitted.num_subcarriers ||
        received.num_symbols != transmitted.num_symbols ||
        received.num_prs_symbols != transmitted.num_prs_symbols ||
        received.comb_stride != transmitted.comb_stride ||
        received.prs_mask != transmitted.prs_mask) {
        throw config_error("quotient: received and transmitted grids do not share layout");
    }
    const int n_j = transmitted.prs_per_symbol();
    quotient_matrix q;
    q.n_rows = n_j;
    q.n_cols = transmitted.num_prs_symbols;
    q.values.resize(static_cast<std::size_t>(n_j) * q.n_cols);
    q.comb_stride = transmitted.comb_stride;
    q.grid_subcarriers = transmitted.num_subcarriers;
    q.numerology = transmitted.numerology;
    q.carrier_hz = received.carrier_hz;

    for (int m = 0; m < q.n_cols; ++m) {
        const int k0 = transmitted.k0_of_symbol[static_cast<std::size_t>(m)];
        for (int k = 0; k < n_j; ++k) {
            const int n = transmitted.comb_stride * k + k0;
            const cplx s_tx = transmitted.at(n, m);
            if (std::abs(s_tx) < 1e-9) {
                throw numeric_error("quotient: transmitted reference cell below 1e-9 "
                                    "(division hazard)");
            }
            q.at(k, m) = received.at(n, m) / s_tx;
        }
    }
    return q;
}

} // namespace prsense
