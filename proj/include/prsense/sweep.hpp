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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "prsense/bounds.hpp"
#include "prsense/estimators.hpp"

namespace prsense {

enum class signal_kind {
    prs,        ///< comb-mapped PRS per the configured pattern
    prs_narrow, ///< PRS confined to the SS bandwidth (second reading of the
                ///< sequence-length-matched comparison)
    ss,         ///< 127 contiguous subcarriers, one symbol, BPSK M sequence
    dmrs,       ///< comb-4 over a 240-subcarrier footprint, one symbol
};

std::string to_string(signal_kind kind);

/// Monte Carlo sweep description. Trials are seeded per
/// (snr index, m_a index, trial index) from master_seed, so execution order
/// cannot change results.
struct sweep_spec {
    target_scenario scenario;   ///< ground truth; scenario.snr_db is ignored here
    prs_pattern pattern;        ///< used when kind == prs
    numerology_config numerology;
    int n_subcarriers = 256;
    std::vector<double> snr_grid_db = {5.0};
    int trials = 1000;
    std::vector<int> m_a_values = {1};
    signal_kind kind = signal_kind::prs;
    int frames = 1;             ///< N_f frames for multi-frame velocity
    uint64_t master_seed = 1;
    averaging_mode mode = averaging_mode::per_estimate;
    phase_mode phase = phase_mode::paper;
    bool with_velocity = true;
    /// When positive, each trial draws its true velocity uniformly from
    /// velocity +- span/2 (common draws across configurations sharing the
    /// master seed). Used for the multi-frame accuracy study so RMSE is not
    /// dominated by where one fixed velocity happens to sit on each grid.
    double velocity_span_mps = 0.0;
    std::size_t baseline_length = 127; ///< sequence length for ss/dmrs/prs kinds
    uint32_t baseline_seed = 0;
};

struct sweep_row {
    double snr_db = 0.0;
    int m_a = 1;
    double rmse_range_m = 0.0;
    double rmse_velocity_mps = 0.0;         ///< NaN when velocity not estimated
    double root_crlb_range_m = 0.0;         ///< NaN when the bound is undefined
    double root_crlb_velocity_mps = 0.0;
    int trials = 0;
    double wall_time_s = 0.0;
};

struct trial_record {
    int trial = 0;
    double snr_db = 0.0;
    int m_a = 1;
    double est_range_m = 0.0;
    double est_velocity_mps = 0.0;
    int range_peak_index = 0;
    int velocity_peak_index = 0;
    double true_range_m = 0.0;
    double true_velocity_mps = 0.0;
};

struct sweep_result {
    std::vector<sweep_row> rows;
    std::vector<trial_record> records; ///< filled when keep_records
};

sweep_result run_sweep(const sweep_spec& spec, bool keep_records = false);

/// Matched-SNR ranging comparison across reference signals: PRS with the
/// sequence length matched to SS (both bandwidth readings), SS itself, and
/// the DMRS footprint.
std::vector<std::pair<std::string, sweep_result>> compare_signals(const sweep_spec& base);

/// Frame-design trade-off tables.
struct overhead_row {
    int s_i = 0;
    int n_f = 0;
    double overhead = 0.0;
    double refresh_s = 0.0;
    double dv_multi_mps = 0.0;
};

struct crlb_tradeoff_row {
    int mu = 0;
    double snr_db = 0.0;
    double crlb_range_m2 = 0.0;
    double crlb_velocity_mps2 = 0.0;
};

struct tradeoff_tables_result {
    std::vector<overhead_row> overhead_rows;
    std::vector<crlb_tradeoff_row> crlb_rows;
};

tradeoff_tables_result tradeoff_tables(std::span<const int> mus, std::span<const int> s_i_grid,
                                       std::span<const int> n_f_grid,
                                       std::span<const double> snr_grid_db, int n_subcarriers,
                                       int m_symbols, int comb_size, double carrier_hz);

} // namespace prsense
