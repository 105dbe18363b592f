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

#include "prsense/channel.hpp"

namespace prsense {

/// How the per-column (or per-row) results are combined.
/// `per_estimate`: argmax each column, average the peak indices circularly
/// (modulo the unambiguous span), round to the consensus index.
/// `averaged_spectrum`: non-coherently average the magnitude spectra across
/// columns first, then take one argmax. Exposed for comparison; the default
/// follows the per-estimate averaging description.
enum class averaging_mode {
    per_estimate,
    averaged_spectrum,
};

struct range_estimate {
    double range_m = 0.0;      ///< peak_index * c / (2 m_a N df), exactly
    int peak_index = 0;        ///< 0-based consensus index on the m_a * N_J grid
    int oversampling = 1;      ///< fractional factor m_a
    double spectrum_peak_mag = 0.0; ///< unnormalized magnitude at the peak
};

struct velocity_estimate {
    double velocity_mps = 0.0; ///< single frame: peak_index * c / (2 m_a M Ts fc)
    int peak_index = 0;        ///< 0-based consensus index on the m_a * M_J grid
    int oversampling = 1;
    int frames_used = 1;
    std::vector<int> symbols_per_frame;
    double spectrum_peak_mag = 0.0;
};

/// Per-column zero-padded inverse transforms (positive-exponent kernel,
/// m_a * N_J points), magnitude argmax, consensus across columns.
range_estimate estimate_range(const quotient_matrix& q, int m_a,
                              averaging_mode mode = averaging_mode::per_estimate);

/// Per-row forward transforms over the M_J = M/K leading PRS symbols
/// (m_a * M_J points), magnitude argmax, consensus across rows.
velocity_estimate estimate_velocity(const quotient_matrix& q, int m_a,
                                    averaging_mode mode = averaging_mode::per_estimate);

/// Multi-frame variant: concatenates the extracted per-frame symbol rows
/// into one uniformly spaced sequence of S_J = sum(S_i)/K samples (the
/// inter-frame gap is idealized away) and transforms at m_a * S_J points.
velocity_estimate estimate_velocity_multiframe(std::span<const quotient_matrix> frames, int m_a,
                                               averaging_mode mode = averaging_mode::per_estimate);

/// Averaged magnitude spectra, for peak plots.
std::vector<double> range_spectrum(const quotient_matrix& q, int m_a);
std::vector<double> velocity_spectrum(const quotient_matrix& q, int m_a);

// Resolution and unambiguous-limit calculators.
double range_resolution_m(int n_subcarriers, double delta_f_hz);
double max_unambiguous_range_m(int comb_size, double delta_f_hz);
double velocity_resolution_mps(int m_symbols, double t_symbol_s, double carrier_hz);
double max_unambiguous_velocity_mps(int comb_size, double t_symbol_s, double carrier_hz);
double multiframe_velocity_resolution_mps(int total_prs_symbols, double t_symbol_s,
                                          double carrier_hz);

/// Frame-level bookkeeping: PRS overhead within a frame, sensing refresh
/// time, and the data rate left for communication.
struct frame_metrics_result {
    double overhead = 0.0;      ///< eta_i = S_i / (slots * symbols-per-slot)
    double refresh_s = 0.0;     ///< rho = N_f * T_f
    double data_rate_bps = 0.0; ///< R_d = M_d * N * log2(P) / T_f
};

frame_metrics_result frame_metrics(int prs_symbols_per_frame, const numerology_config& numerology,
                                   int frame_count, int data_symbols, int bits_per_symbol,
                                   int n_subcarriers);

} // namespace prsense
