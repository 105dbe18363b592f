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

#include "prsense/sweep.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include "prsense/rng.hpp"

namespace prsense {

namespace {

constexpr double nan_value = std::numeric_limits<double>::quiet_NaN();

/// One comb-mapped symbol, offset 0. Not a standalone standard mapping (the
/// table starts at comb 2 / 2 symbols), used only by the single-symbol
/// ranging comparisons.
prs_pattern single_symbol_comb_pattern(int comb_size) {
    prs_pattern p = make_prs_pattern(comb_size, comb_size == 2 ? 2 : comb_size);
    p.num_symbols = 1;
    p.offset_schedule = {0};
    return p;
}

std::vector<resource_grid> build_tx_frames(const sweep_spec& spec) {
    std::vector<resource_grid> frames;
    const prs_sequence_id id0{0, 0, 0};
    switch (spec.kind) {
        case signal_kind::prs: {
            const int extracted = spec.pattern.num_symbols / spec.pattern.comb_size;
            for (int f = 0; f < spec.frames; ++f) {
                frames.push_back(map_prs(spec.pattern, id0, spec.n_subcarriers, spec.numerology,
                                         -1, f * extracted));
            }
            break;
        }
        case signal_kind::prs_narrow: {
            // PRS comb-4 confined to the SS bandwidth; span rounded up to a
            // comb multiple.
            const int span = static_cast<int>((spec.baseline_length + 3) / 4) * 4;
            frames.push_back(
                map_prs(single_symbol_comb_pattern(4), id0, span, spec.numerology));
            break;
        }
        case signal_kind::ss:
            frames.push_back(
                map_baseline(baseline_kind::ss, spec.baseline_length, spec.baseline_seed,
                             spec.numerology));
            break;
        case signal_kind::dmrs:
            frames.push_back(
                map_baseline(baseline_kind::dmrs, spec.baseline_length, spec.baseline_seed,
                             spec.numerology));
            break;
    }
    return frames;
}

} // namespace

std::string to_string(signal_kind kind) {
    switch (kind) {
        case signal_kind::prs: return "prs";
        case signal_kind::prs_narrow: return "prs_narrow";
        case signal_kind::ss: return "ss";
        case signal_kind::dmrs: return "dmrs";
    }
    return "unknown";
}

sweep_result run_sweep(const sweep_spec& spec, bool keep_records) {
    if (spec.trials < 1) {
        throw config_error("run_sweep: trials must be >= 1");
    }
    if (spec.snr_grid_db.empty() || spec.m_a_values.empty()) {
        throw config_error("run_sweep: SNR grid and m_a list must be nonempty");
    }
    if (spec.frames < 1) {
        throw config_error("run_sweep: frame count must be >= 1");
    }

    // Transmitted grids are deterministic; build once, outside the trials.
    const std::vector<resource_grid> tx_frames = build_tx_frames(spec);

    int total_symbols = 0;
    for (const resource_grid& g : tx_frames) {
        total_symbols += g.num_prs_symbols;
    }

    sweep_result out;
    out.rows.reserve(spec.snr_grid_db.size() * spec.m_a_values.size());

    for (std::size_t si = 0; si < spec.snr_grid_db.size(); ++si) {
        for (std::size_t mi = 0; mi < spec.m_a_values.size(); ++mi) {
            const auto t0 = std::chrono::steady_clock::now();
            const int m_a = spec.m_a_values[mi];
            double sq_range = 0.0;
            double sq_vel = 0.0;
            bool velocity_ok =
                spec.with_velocity && tx_frames[0].num_prs_symbols >= tx_frames[0].comb_stride;

            for (int trial = 0; trial < spec.trials; ++trial) {
                const uint64_t trial_seed = mix_seed(spec.master_seed, si, mi, trial);
                target_scenario sc = spec.scenario;
                sc.snr_db = spec.snr_grid_db[si];
                if (spec.velocity_span_mps > 0.0) {
                    rng64 draw(trial_seed ^ 0xa5a5a5a5a5a5a5a5ull);
                    sc.velocity_mps = spec.scenario.velocity_mps +
                                      spec.velocity_span_mps * (draw.next_uniform() - 0.5);
                }

                try {
                    std::vector<quotient_matrix> frames;
                    frames.reserve(tx_frames.size());
                    for (std::size_t f = 0; f < tx_frames.size(); ++f) {
                        const uint64_t frame_seed = mix_seed(trial_seed, f, 0, 0);
                        const resource_grid rx =
                            apply_echo(tx_frames[f], sc, spec.phase, frame_seed);
                        frames.push_back(quotient(rx, tx_frames[f]));
                    }

                    const range_estimate re = estimate_range(frames[0], m_a, spec.mode);
                    const double range_err = re.range_m - sc.range_m;
                    sq_range += range_err * range_err;

                    double est_v = nan_value;
                    int vel_peak = 0;
                    if (velocity_ok) {
                        const velocity_estimate ve =
                            frames.size() == 1
                                ? estimate_velocity(frames[0], m_a, spec.mode)
                                : estimate_velocity_multiframe(frames, m_a, spec.mode);
                        est_v = ve.velocity_mps;
                        vel_peak = ve.peak_index;
                        const double vel_err = ve.velocity_mps - sc.velocity_mps;
                        sq_vel += vel_err * vel_err;
                    }

                    if (keep_records) {
                        out.records.push_back({trial, spec.snr_grid_db[si], m_a, re.range_m,
                                               est_v, re.peak_index, vel_peak, sc.range_m,
                                               sc.velocity_mps});
                    }
                } catch (const numeric_error& e) {
                    // abort the sweep with the offending trial identified
                    throw numeric_error(std::string(e.what()) + " [trial " +
                                        std::to_string(trial) + ", seed " +
                                        std::to_string(trial_seed) + "]");
                }
            }

            sweep_row row;
            row.snr_db = spec.snr_grid_db[si];
            row.m_a = m_a;
            row.trials = spec.trials;
            row.rmse_range_m = std::sqrt(sq_range / spec.trials);
            row.rmse_velocity_mps = velocity_ok ? std::sqrt(sq_vel / spec.trials) : nan_value;

            try {
                const crlb_report b = crlb_radar(
                    db_to_linear(spec.snr_grid_db[si]), spec.scenario.attenuation,
                    tx_frames[0].numerology, tx_frames[0].num_subcarriers, total_symbols,
                    tx_frames[0].comb_stride, spec.scenario.carrier_hz);
                row.root_crlb_range_m = std::sqrt(b.crlb_range_m2);
                row.root_crlb_velocity_mps = std::sqrt(b.crlb_velocity_mps2);
            } catch (const config_error&) {
                row.root_crlb_range_m = nan_value;
                row.root_crlb_velocity_mps = nan_value;
            }
            row.wall_time_s =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            out.rows.push_back(row);
        }
    }
    return out;
}

std::vector<std::pair<std::string, sweep_result>> compare_signals(const sweep_spec& base) {
    std::vector<std::pair<std::string, sweep_result>> curves;
    for (signal_kind kind :
         {signal_kind::prs, signal_kind::prs_narrow, signal_kind::ss, signal_kind::dmrs}) {
        sweep_spec s = base;
        s.kind = kind;
        s.with_velocity = false;
        s.frames = 1;
        if (kind == signal_kind::prs) {
            // sequence length matched to SS on comb 4: the wide reading,
            // 127 PRS subcarriers spanning 4x127 = 508 subcarriers
            s.pattern = single_symbol_comb_pattern(4);
            s.n_subcarriers = 4 * static_cast<int>(base.baseline_length);
        } else if (kind == signal_kind::dmrs) {
            s.baseline_length = 60; // comb 4 across 240 subcarriers
        }
        curves.emplace_back(to_string(kind), run_sweep(s));
    }
    return curves;
}

tradeoff_tables_result tradeoff_tables(std::span<const int> mus, std::span<const int> s_i_grid,
                                       std::span<const int> n_f_grid,
                                       std::span<const double> snr_grid_db, int n_subcarriers,
                                       int m_symbols, int comb_size, double carrier_hz) {
    if (mus.empty()) {
        throw config_error("tradeoff_tables: numerology list must be nonempty");
    }
    tradeoff_tables_result out;
    for (int mu : mus) {
        const numerology_config num = numerology_from_mu(mu);
        for (double snr_db : snr_grid_db) {
            const crlb_report b = crlb_radar(db_to_linear(snr_db), 1.0, num, n_subcarriers,
                                             m_symbols, comb_size, carrier_hz);
            out.crlb_rows.push_back({mu, snr_db, b.crlb_range_m2, b.crlb_velocity_mps2});
        }
    }
    const numerology_config num = numerology_from_mu(mus[0]);
    for (int s_i : s_i_grid) {
        if (s_i > num.symbols_per_frame()) {
            continue; // infeasible for this numerology
        }
        for (int n_f : n_f_grid) {
            const frame_metrics_result fm = frame_metrics(s_i, num, n_f, 0, 2, n_subcarriers);
            const double dv =
                multiframe_velocity_resolution_mps(s_i * n_f, num.t_symbol_s, carrier_hz);
            out.overhead_rows.push_back({s_i, n_f, fm.overhead, fm.refresh_s, dv});
        }
    }
    return out;
}

} // namespace prsense
