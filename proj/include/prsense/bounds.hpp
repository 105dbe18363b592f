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

#include <span>
#include <vector>

#include "prsense/grid.hpp"
#include "prsense/numerology.hpp"

namespace prsense {

struct crlb_inputs {
    double xi = 1.0;
    double snr_linear = 1.0;
    double t_useful_s = 0.0;
    double t_symbol_s = 0.0;
    int n_subcarriers = 0;
    int m_symbols = 0;
    int n_j = 0;
    int m_j = 0;
    double carrier_hz = 0.0;
};

/// Closed-form radar bounds. All four views of the same bound are carried:
/// CRLB(R) = c^2/4 CRLB(tau) and CRLB(v) = c^2/(4 fc^2) CRLB(fd) hold
/// exactly by construction.
struct crlb_report {
    double crlb_range_m2 = 0.0;
    double crlb_velocity_mps2 = 0.0;
    double crlb_delay_s2 = 0.0;
    double crlb_doppler_hz2 = 0.0;
    crlb_inputs inputs;
};

/// Large-M, large-N closed forms:
///   CRLB(tau) = T^2/(xi^2 SNR (2pi)^2) * 48/(M N (N_J-1)(7 N_J+1))
///   CRLB(fd)  = 1/(xi^2 SNR (2pi)^2 Ts^2) * 48/(N M (M_J-1)(7 M_J+1))
/// The asymptotic forms lose accuracy below roughly M, N = 16; the Fisher
/// oracle below carries no such approximation.
crlb_report crlb_radar(double snr_linear, double xi, const numerology_config& numerology,
                       int n_subcarriers, int m_symbols, int comb_size, double carrier_hz);

/// True when the closed form's asymptotic assumption is comfortable.
bool crlb_asymptotic_ok(int n_subcarriers, int m_symbols);

/// Numerical Fisher-information oracle: builds the 2x2 matrix by explicit
/// summation of the derivative products of
///   s_{m,n} = xi e^{j2pi K m Ts fd} e^{-j2pi n K df tau}
/// over m in [0, M_J), n in [0, N_J), with 1/sigma^2 identified with the
/// linear SNR, then inverts. comb_size = 1 degenerates to the plain OFDM
/// radar summation.
struct fisher_result {
    double crlb_delay_s2 = 0.0;
    double crlb_doppler_hz2 = 0.0;
    double f_tau_tau = 0.0;
    double f_fd_fd = 0.0;
    double f_tau_fd = 0.0;
    double f_fd_tau = 0.0;
};

fisher_result fisher_oracle(double snr_linear, double xi, const numerology_config& numerology,
                            int n_subcarriers, int m_symbols, int comb_size);

/// Positioning bound with equal per-subcarrier power weights sqrt(K):
///   CRLB(R) = c^2 T^2 / ((4 pi^2 / 3) SNR N (N_J - 1)(2 N_J - 1)).
double crlb_positioning_m2(double snr_linear, const numerology_config& numerology,
                           int n_subcarriers, int comb_size);

/// Delay/Doppler response surface of the mapped signal.
struct ambiguity_surface {
    std::vector<double> delays_s;
    std::vector<double> dopplers_hz;
    std::vector<cplx> values; ///< values[d + f * delays.size()]
    double normalization = 0.0; ///< |chi(0,0)|

    const cplx& at(std::size_t d, std::size_t f) const { return values[d + f * delays_s.size()]; }
};

/// Closed-form evaluation of the ambiguity function: quadruple sum over
/// symbol/subcarrier pairs with the sinc overlap kernel, skipping pairs
/// whose rectangles do not overlap. Cost is O(M^2 N_J) per surface sample
/// after per-delay correlation tables are formed.
ambiguity_surface ambiguity(const resource_grid& grid, std::span<const double> delays_s,
                            std::span<const double> dopplers_hz);

/// One closed-form sample (used by the surface and convenient in tests).
cplx ambiguity_point(const resource_grid& grid, double delay_s, double doppler_hz);

} // namespace prsense
