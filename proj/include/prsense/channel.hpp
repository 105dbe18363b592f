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
#include <optional>
#include <vector>

#include "prsense/grid.hpp"

namespace prsense {

/// Single point target plus link parameters. SNR is defined on the received
/// PRS resource elements: noise variance is set so that
/// attenuation^2 * E|s|^2 / sigma^2 equals the linear SNR. Absent snr_db
/// means a noiseless channel.
struct target_scenario {
    double range_m = 0.0;
    double velocity_mps = 0.0;
    double attenuation = 1.0; ///< amplitude factor xi
    std::optional<double> snr_db;
    double carrier_hz = 24e9;
};

/// Phase model applied to PRS cells.
/// `paper`: delay phase exp(-j2pi (K k df)(2R/c)) over the PRS subcarrier
/// ordinal k and Doppler phase exp(+j2pi (K m Ts) fd) over the PRS symbol
/// ordinal m, i.e. the k_0 term is dropped from the delay phase.
/// `physical`: the delay phase uses the true subcarrier frequency
/// f_k = (K k + k_0(m)) df. Both modes agree when k_0 is constant.
enum class phase_mode {
    paper,
    physical,
};

/// Applies the point-target echo to every PRS cell and then adds
/// circularly-symmetric complex Gaussian noise to every cell of the grid.
/// Scenarios beyond the unambiguous limits are legal (aliasing experiments).
resource_grid apply_echo(const resource_grid& tx, const target_scenario& scenario,
                         phase_mode mode, uint64_t rng_seed);

/// Doppler shift f_d = 2 v f_c / c.
double doppler_shift_hz(double velocity_mps, double carrier_hz);

/// Element-wise received/transmitted ratio over the PRS-bearing resource
/// elements only, N_J x M_prs, indexed (PRS subcarrier ordinal k, PRS symbol
/// ordinal m). In the noiseless single-target case this is a rank-1 outer
/// product of the range and Doppler phase vectors.
struct quotient_matrix {
    int n_rows = 0; ///< N_J
    int n_cols = 0; ///< number of PRS-bearing symbols
    std::vector<cplx> values; ///< column-major: values[k + m * n_rows]
    int comb_stride = 1;
    int grid_subcarriers = 0;
    numerology_config numerology;
    double carrier_hz = 0.0;

    cplx& at(int k, int m) { return values[static_cast<std::size_t>(k) + static_cast<std::size_t>(m) * n_rows]; }
    const cplx& at(int k, int m) const { return values[static_cast<std::size_t>(k) + static_cast<std::size_t>(m) * n_rows]; }
};

quotient_matrix quotient(const resource_grid& received, const resource_grid& transmitted);

} // namespace prsense
