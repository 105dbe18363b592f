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

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "prsense/config.hpp"
#include "prsense/io.hpp"
#include "prsense/sweep.hpp"

using namespace prsense;
using nlohmann::json;

namespace {

struct cli_options {
    std::string config_path;
    std::string out_dir = "out";
    std::string format = "csv";
    uint64_t seed = 1;
    int trials = 1000;
    std::vector<double> snr_db;
    std::vector<int> m_a;
    bool svg = false;
    bool dump_grid = false;
    std::string phase = "paper";
    std::string averaging = "estimates";

    // scenario / waveform, overridable by --config
    int mu = 3;
    int n_subcarriers = 256;
    int comb = 4;
    int symbols = 128;
    int n_id = 0;
    double range_m = 50.0;
    double velocity_mps = 15.0;
    double attenuation = 1.0;
    double carrier_hz = 24e9;
    int frames = 1;
};

/// --config values fill anything the command line left untouched; explicit
/// flags win because they are merged after parsing only when still default.
void merge_config(cli_options& o, const config_file& cfg, const CLI::App* cmd) {
    auto defaulted = [&](const std::string& flag) {
        const CLI::Option* opt = cmd->get_option_no_throw(flag);
        return opt == nullptr || opt->count() == 0;
    };
    if (defaulted("--mu")) o.mu = static_cast<int>(cfg.integer_or("numerology", "mu", o.mu));
    if (defaulted("--comb")) o.comb = static_cast<int>(cfg.integer_or("prs", "comb", o.comb));
    if (defaulted("--symbols"))
        o.symbols = static_cast<int>(cfg.integer_or("prs", "symbols", o.symbols));
    if (defaulted("--n-id")) o.n_id = static_cast<int>(cfg.integer_or("prs", "n_id", o.n_id));
    if (defaulted("--subcarriers"))
        o.n_subcarriers = static_cast<int>(cfg.integer_or("grid", "subcarriers", o.n_subcarriers));
    if (defaulted("--range")) o.range_m = cfg.number_or("target", "range_m", o.range_m);
    if (defaulted("--velocity"))
        o.velocity_mps = cfg.number_or("target", "velocity_mps", o.velocity_mps);
    if (defaulted("--attenuation"))
        o.attenuation = cfg.number_or("target", "attenuation", o.attenuation);
    if (defaulted("--fc")) o.carrier_hz = cfg.number_or("target", "carrier_hz", o.carrier_hz);
    // single-shot commands prefer the scalar target SNR; grid commands
    // prefer the sweep list
    const bool single_shot = cmd->get_name() == "simulate";
    if (o.snr_db.empty() && cfg.has("target", "snr_db") && single_shot) {
        o.snr_db = {cfg.number("target", "snr_db")};
    }
    if (o.snr_db.empty() && cfg.has("sweep", "snr_db")) {
        o.snr_db = cfg.list_or("sweep", "snr_db", {});
    }
    if (o.snr_db.empty() && cfg.has("target", "snr_db")) {
        o.snr_db = {cfg.number("target", "snr_db")};
    }
    if (o.m_a.empty()) {
        for (double v : cfg.list_or("sweep", "ma", {})) {
            o.m_a.push_back(static_cast<int>(v));
        }
    }
    if (defaulted("--trials"))
        o.trials = static_cast<int>(cfg.integer_or("sweep", "trials", o.trials));
    if (defaulted("--seed"))
        o.seed = static_cast<uint64_t>(cfg.integer_or("sweep", "seed", static_cast<long>(o.seed)));
    if (defaulted("--frames"))
        o.frames = static_cast<int>(cfg.integer_or("sweep", "frames", o.frames));
}

target_scenario make_scenario(const cli_options& o) {
    target_scenario t;
    t.range_m = o.range_m;
    t.velocity_mps = o.velocity_mps;
    t.attenuation = o.attenuation;
    t.carrier_hz = o.carrier_hz;
    if (!o.snr_db.empty()) {
        t.snr_db = o.snr_db.front();
    }
    return t;
}

sweep_spec make_spec(const cli_options& o) {
    sweep_spec s;
    s.scenario = make_scenario(o);
    s.pattern = make_prs_pattern(o.comb, o.symbols);
    s.numerology = numerology_from_mu(o.mu);
    s.n_subcarriers = o.n_subcarriers;
    s.snr_grid_db = o.snr_db.empty() ? std::vector<double>{5.0} : o.snr_db;
    s.trials = o.trials;
    s.m_a_values = o.m_a.empty() ? std::vector<int>{1} : o.m_a;
    s.frames = o.frames;
    s.master_seed = o.seed;
    s.phase = o.phase == "physical" ? phase_mode::physical : phase_mode::paper;
    s.mode = o.averaging == "spectrum" ? averaging_mode::averaged_spectrum
                                       : averaging_mode::per_estimate;
    return s;
}

void print_warnings(const cli_options& o) {
    try {
        if (!validate_band(o.carrier_hz, o.mu)) {
            std::fprintf(stderr, "warning: carrier/numerology pair outside the supported table\n");
        } else if (band_is_advisory(o.carrier_hz)) {
            std::fprintf(stderr,
                         "warning: carrier %.3g GHz is below the 24.2 GHz FR2 floor; "
                         "accepted as FR2\n",
                         o.carrier_hz / 1e9);
        }
    } catch (const config_error& e) {
        std::fprintf(stderr, "warning: %s\n", e.what());
    }
    if (!prb_check(o.n_subcarriers)) {
        std::fprintf(stderr,
                     "warning: %d subcarriers is not a 24..272 PRB allocation on the 4-PRB "
                     "raster (advisory)\n",
                     o.n_subcarriers);
    }
    const numerology_config num = numerology_from_mu(o.mu);
    const double r_max = max_unambiguous_range_m(o.comb, num.delta_f_hz);
    if (o.range_m < 0.0 || o.range_m >= r_max) {
        std::fprintf(stderr, "warning: range %.2f m is outside the unambiguous span [0, %.2f) m\n",
                     o.range_m, r_max);
    }
    const double v_max = max_unambiguous_velocity_mps(o.comb, num.t_symbol_s, o.carrier_hz);
    if (std::abs(o.velocity_mps) >= v_max) {
        std::fprintf(stderr, "warning: velocity %.2f m/s exceeds the unambiguous limit %.2f m/s\n",
                     o.velocity_mps, v_max);
    }
}

std::filesystem::path ensure_out_dir(const cli_options& o) {
    std::filesystem::path dir(o.out_dir);
    std::filesystem::create_directories(dir);
    return dir;
}

void write_manifest(const cli_options& o, const std::string& command,
                    const std::vector<std::string>& outputs) {
    json m;
    m["command"] = command;
    m["seed"] = o.seed;
    m["trials"] = o.trials;
    m["numerology"] = {{"mu", o.mu}};
    m["prs"] = {{"comb", o.comb}, {"symbols", o.symbols}, {"n_id", o.n_id}};
    m["grid"] = {{"subcarriers", o.n_subcarriers}};
    m["target"] = {{"range_m", o.range_m},
                   {"velocity_mps", o.velocity_mps},
                   {"attenuation", o.attenuation},
                   {"carrier_hz", o.carrier_hz}};
    m["snr_db"] = o.snr_db;
    m["ma"] = o.m_a;
    m["frames"] = o.frames;
    m["phase"] = o.phase;
    m["averaging"] = o.averaging;
    m["outputs"] = outputs;
    write_text_file((ensure_out_dir(o) / "run_manifest.json").string(), m.dump(2) + "\n");
}

void maybe_svg(const cli_options& o, const std::string& stem, const std::string& title,
               const std::string& x_label, const std::string& y_label,
               const std::vector<plot_series>& series, bool log_y) {
    if (!o.svg) {
        return;
    }
    write_text_file((ensure_out_dir(o) / (stem + ".svg")).string(),
                    svg_line_plot(title, x_label, y_label, series, log_y));
}

int cmd_simulate(const cli_options& o) {
    print_warnings(o);
    const sweep_spec spec = make_spec(o);
    const resource_grid tx =
        map_prs(spec.pattern, {o.n_id, 0, 0}, o.n_subcarriers, spec.numerology);
    const resource_grid rx = apply_echo(tx, spec.scenario, spec.phase, o.seed);
    const quotient_matrix q = quotient(rx, tx);
    const numerology_config& num = spec.numerology;

    std::printf("scenario: R=%.3f m, v=%.3f m/s, fc=%.3f GHz, mu=%d, N=%d, comb %d, %d symbols\n",
                o.range_m, o.velocity_mps, o.carrier_hz / 1e9, o.mu, o.n_subcarriers, o.comb,
                o.symbols);
    std::printf("resolution: dR=%.3f m, dv=%.3f m/s | unambiguous: R<%.2f m, |v|<%.2f m/s\n",
                range_resolution_m(o.n_subcarriers, num.delta_f_hz),
                velocity_resolution_mps(o.symbols, num.t_symbol_s, o.carrier_hz),
                max_unambiguous_range_m(o.comb, num.delta_f_hz),
                max_unambiguous_velocity_mps(o.comb, num.t_symbol_s, o.carrier_hz));

    sweep_result one_shot;
    for (int m_a : spec.m_a_values) {
        const range_estimate re = estimate_range(q, m_a, spec.mode);
        std::printf("range    (m_a=%2d): %9.3f m    peak index %d\n", m_a, re.range_m,
                    re.peak_index);
        trial_record rec{};
        rec.m_a = m_a;
        rec.snr_db = spec.scenario.snr_db.value_or(std::nan(""));
        rec.est_range_m = re.range_m;
        rec.range_peak_index = re.peak_index;
        rec.true_range_m = o.range_m;
        rec.true_velocity_mps = o.velocity_mps;
        if (q.n_cols >= q.comb_stride) {
            const velocity_estimate ve = estimate_velocity(q, m_a, spec.mode);
            std::printf("velocity (m_a=%2d): %9.3f m/s  peak index %d\n", m_a, ve.velocity_mps,
                        ve.peak_index);
            rec.est_velocity_mps = ve.velocity_mps;
            rec.velocity_peak_index = ve.peak_index;
        }
        one_shot.records.push_back(rec);
    }

    const auto dir = ensure_out_dir(o);
    std::vector<std::string> outputs;
    const int m_a_plot = spec.m_a_values.front();
    const std::string range_csv = spectrum_to_csv(
        range_spectrum(q, m_a_plot),
        speed_of_light / (2.0 * m_a_plot * o.n_subcarriers * num.delta_f_hz), "range_m");
    write_text_file((dir / "fig06_range_peak.csv").string(), range_csv);
    outputs.push_back("fig06_range_peak.csv");
    if (q.n_cols >= q.comb_stride) {
        const int m_total = (q.n_cols / q.comb_stride) * q.comb_stride;
        const std::string vel_csv = spectrum_to_csv(
            velocity_spectrum(q, m_a_plot),
            speed_of_light / (2.0 * m_a_plot * m_total * num.t_symbol_s * o.carrier_hz),
            "velocity_mps");
        write_text_file((dir / "fig11_velocity_peak.csv").string(), vel_csv);
        outputs.push_back("fig11_velocity_peak.csv");
    }
    if (o.format == "json") {
        write_text_file((dir / "simulate_records.json").string(), records_to_json(one_shot));
        outputs.push_back("simulate_records.json");
    }
    if (o.dump_grid) {
        write_text_file((dir / "grid_dump.csv").string(), grid_to_csv(tx));
        outputs.push_back("grid_dump.csv");
    }
    write_manifest(o, "simulate", outputs);
    return 0;
}

int cmd_sweep(const cli_options& o) {
    print_warnings(o);
    sweep_spec spec = make_spec(o);
    if (o.snr_db.empty()) {
        spec.snr_grid_db = {-10, -5, 0, 5, 10, 15, 20};
    }
    const bool keep_records = o.format == "json";
    const sweep_result result = run_sweep(spec, keep_records);

    const auto dir = ensure_out_dir(o);
    std::vector<std::string> outputs;
    write_text_file((dir / "sweep.csv").string(), sweep_to_csv(result));
    outputs.push_back("sweep.csv");

    std::string fig09 = "snr_db,m_a,rmse_range_m,root_crlb_range_m,trials\n";
    std::string fig13 = "snr_db,m_a,rmse_velocity_mps,root_crlb_velocity_mps,trials\n";
    std::string fig10 = "m_a,snr_db,rmse_range_m,trials\n";
    for (const sweep_row& r : result.rows) {
        fig09 += format_double(r.snr_db) + "," + std::to_string(r.m_a) + "," +
                 format_double(r.rmse_range_m) + "," + format_double(r.root_crlb_range_m) + "," +
                 std::to_string(r.trials) + "\n";
        fig13 += format_double(r.snr_db) + "," + std::to_string(r.m_a) + "," +
                 format_double(r.rmse_velocity_mps) + "," +
                 format_double(r.root_crlb_velocity_mps) + "," + std::to_string(r.trials) + "\n";
        fig10 += std::to_string(r.m_a) + "," + format_double(r.snr_db) + "," +
                 format_double(r.rmse_range_m) + "," + std::to_string(r.trials) + "\n";
    }
    write_text_file((dir / "fig09_range_rmse_snr.csv").string(), fig09);
    write_text_file((dir / "fig13_velocity_rmse_snr.csv").string(), fig13);
    outputs.push_back("fig09_range_rmse_snr.csv");
    outputs.push_back("fig13_velocity_rmse_snr.csv");
    if (spec.m_a_values.size() > 1) {
        write_text_file((dir / "fig10_range_rmse_ma.csv").string(), fig10);
        outputs.push_back("fig10_range_rmse_ma.csv");
    }
    if (keep_records) {
        write_text_file((dir / "sweep_records.json").string(), records_to_json(result));
        outputs.push_back("sweep_records.json");
    }

    std::vector<plot_series> series;
    for (int m_a : spec.m_a_values) {
        plot_series rmse{"rmse m_a=" + std::to_string(m_a), {}, {}};
        for (const sweep_row& r : result.rows) {
            if (r.m_a == m_a) {
                rmse.x.push_back(r.snr_db);
                rmse.y.push_back(r.rmse_range_m);
            }
        }
        series.push_back(rmse);
    }
    plot_series crlb{"root crlb", {}, {}};
    for (const sweep_row& r : result.rows) {
        if (r.m_a == spec.m_a_values.front()) {
            crlb.x.push_back(r.snr_db);
            crlb.y.push_back(r.root_crlb_range_m);
        }
    }
    series.push_back(crlb);
    maybe_svg(o, "fig09_range_rmse_snr", "range RMSE vs SNR", "SNR (dB)", "RMSE (m)", series,
              true);

    for (const sweep_row& r : result.rows) {
        std::printf("snr=%6.1f dB m_a=%2d  rmse(R)=%9.4f m  rmse(v)=%9.4f m/s  "
                    "rootCRLB(R)=%9.5f m  rootCRLB(v)=%9.5f m/s\n",
                    r.snr_db, r.m_a, r.rmse_range_m, r.rmse_velocity_mps, r.root_crlb_range_m,
                    r.root_crlb_velocity_mps);
    }
    write_manifest(o, "sweep", outputs);
    return 0;
}

int cmd_compare(const cli_options& o, const std::string& what) {
    print_warnings(o);
    sweep_spec spec = make_spec(o);
    if (o.snr_db.empty()) {
        spec.snr_grid_db = {-10, -5, 0, 5};
    }
    if (o.m_a.empty()) {
        spec.m_a_values = {10};
    }
    const auto dir = ensure_out_dir(o);
    std::vector<std::string> outputs;

    if (what == "signals") {
        const auto curves = compare_signals(spec);
        write_text_file((dir / "fig07_signal_compare.csv").string(), compare_to_csv(curves));
        outputs.push_back("fig07_signal_compare.csv");
        std::vector<plot_series> series;
        for (const auto& [name, result] : curves) {
            plot_series s{name, {}, {}};
            for (const sweep_row& r : result.rows) {
                s.x.push_back(r.snr_db);
                s.y.push_back(r.rmse_range_m);
                std::printf("%-11s snr=%6.1f dB  rmse(R)=%9.4f m\n", name.c_str(), r.snr_db,
                            r.rmse_range_m);
            }
            series.push_back(s);
        }
        maybe_svg(o, "fig07_signal_compare", "ranging RMSE by reference signal", "SNR (dB)",
                  "RMSE (m)", series, true);
    } else if (what == "combs") {
        std::vector<std::pair<std::string, sweep_result>> curves;
        for (int comb : {2, 4}) {
            sweep_spec s = spec;
            s.pattern = make_prs_pattern(comb, 12);
            s.with_velocity = false;
            curves.emplace_back("comb" + std::to_string(comb), run_sweep(s));
        }
        write_text_file((dir / "fig08_comb_compare.csv").string(), compare_to_csv(curves));
        outputs.push_back("fig08_comb_compare.csv");
        for (const auto& [name, result] : curves) {
            for (const sweep_row& r : result.rows) {
                std::printf("%-6s snr=%6.1f dB  rmse(R)=%9.4f m\n", name.c_str(), r.snr_db,
                            r.rmse_range_m);
            }
        }
    } else if (what == "scs") {
        std::string csv = "delta_f_khz,snr_db,m_a,rmse_velocity_mps,trials\n";
        for (int mu : {3, 4}) {
            sweep_spec s = spec;
            s.numerology = numerology_from_mu(mu);
            const sweep_result r = run_sweep(s);
            for (const sweep_row& row : r.rows) {
                csv += format_double(s.numerology.delta_f_hz / 1e3) + "," +
                       format_double(row.snr_db) + "," + std::to_string(row.m_a) + "," +
                       format_double(row.rmse_velocity_mps) + "," + std::to_string(row.trials) +
                       "\n";
                std::printf("df=%3.0f kHz snr=%6.1f dB  rmse(v)=%9.4f m/s\n",
                            s.numerology.delta_f_hz / 1e3, row.snr_db, row.rmse_velocity_mps);
            }
        }
        write_text_file((dir / "fig12_velocity_scs_compare.csv").string(), csv);
        outputs.push_back("fig12_velocity_scs_compare.csv");
    } else { // frames
        std::string csv = "n_f,snr_db,m_a,rmse_velocity_mps,trials\n";
        for (int n_f : {1, 2, 3, 4}) {
            sweep_spec s = spec;
            s.frames = n_f;
            const sweep_result r = run_sweep(s);
            for (const sweep_row& row : r.rows) {
                csv += std::to_string(n_f) + "," + format_double(row.snr_db) + "," +
                       std::to_string(row.m_a) + "," + format_double(row.rmse_velocity_mps) +
                       "," + std::to_string(row.trials) + "\n";
                std::printf("N_f=%d snr=%6.1f dB  rmse(v)=%9.4f m/s\n", n_f, row.snr_db,
                            row.rmse_velocity_mps);
            }
        }
        write_text_file((dir / "fig15_multiframe_rmse.csv").string(), csv);
        outputs.push_back("fig15_multiframe_rmse.csv");
    }
    write_manifest(o, "compare " + what, outputs);
    return 0;
}

int cmd_ambiguity(const cli_options& o, int grid_points, double delay_span_us,
                  double doppler_span_khz) {
    print_warnings(o);
    const numerology_config num = numerology_from_mu(o.mu);
    const resource_grid tx =
        map_prs(make_prs_pattern(o.comb, o.symbols), {o.n_id, 0, 0}, o.n_subcarriers, num);
    std::vector<double> delays, dopplers;
    for (int i = 0; i < grid_points; ++i) {
        const double f = grid_points == 1 ? 0.0
                                          : -1.0 + 2.0 * static_cast<double>(i) /
                                                       static_cast<double>(grid_points - 1);
        delays.push_back(f * delay_span_us * 1e-6);
        dopplers.push_back(f * doppler_span_khz * 1e3);
    }
    const ambiguity_surface surf = ambiguity(tx, delays, dopplers);
    const auto dir = ensure_out_dir(o);
    write_text_file((dir / "fig05_ambiguity.csv").string(), ambiguity_to_csv(surf));
    std::printf("ambiguity surface: %dx%d samples, |chi(0,0)| = %s\n", grid_points, grid_points,
                format_double(surf.normalization).c_str());
    write_manifest(o, "ambiguity", {"fig05_ambiguity.csv"});
    return 0;
}

int cmd_crlb(const cli_options& o, std::vector<int> mus) {
    print_warnings(o);
    const std::vector<double> snrs =
        o.snr_db.empty() ? std::vector<double>{-10, -5, 0, 5, 10, 15, 20} : o.snr_db;
    const numerology_config num = numerology_from_mu(o.mu);
    const auto dir = ensure_out_dir(o);
    std::vector<std::string> outputs;

    if (!crlb_asymptotic_ok(o.n_subcarriers, o.symbols)) {
        std::fprintf(stderr, "warning: closed-form bounds assume large N and M; "
                             "N=%d, M=%d is below the comfortable range\n",
                     o.n_subcarriers, o.symbols);
    }
    write_text_file((dir / "crlb_bounds.csv").string(),
                    bounds_table_csv(snrs, num, o.n_subcarriers, o.symbols, o.comb, o.carrier_hz));
    outputs.push_back("crlb_bounds.csv");

    if (mus.empty()) {
        mus = {0, 1, 2, 3, 4};
    }
    const int s_i_grid[] = {32, 64, 128, 256, 512};
    const int n_f_grid[] = {1, 2, 3, 4, 5};
    const tradeoff_tables_result t = tradeoff_tables(mus, s_i_grid, n_f_grid, snrs,
                                                     o.n_subcarriers, o.symbols, o.comb,
                                                     o.carrier_hz);
    write_text_file((dir / "fig16_crlb_tradeoff.csv").string(), crlb_tradeoff_csv(t));
    outputs.push_back("fig16_crlb_tradeoff.csv");

    std::vector<plot_series> series;
    for (double snr_db : snrs) {
        plot_series s{"snr " + format_double(snr_db) + " dB", {}, {}};
        for (const crlb_tradeoff_row& r : t.crlb_rows) {
            if (r.snr_db == snr_db) {
                s.x.push_back(std::sqrt(r.crlb_range_m2));
                s.y.push_back(std::sqrt(r.crlb_velocity_mps2));
            }
        }
        series.push_back(s);
    }
    maybe_svg(o, "fig16_crlb_tradeoff", "range/velocity bound trade-off across numerologies",
              "root CRLB range (m)", "root CRLB velocity (m/s)", series, true);

    for (double snr_db : snrs) {
        const crlb_report b = crlb_radar(db_to_linear(snr_db), o.attenuation, num,
                                         o.n_subcarriers, o.symbols, o.comb, o.carrier_hz);
        const double pos = crlb_positioning_m2(db_to_linear(snr_db), num, o.n_subcarriers, o.comb);
        std::printf("snr=%6.1f dB  rootCRLB(R)=%11.5g m  rootCRLB(v)=%11.5g m/s  "
                    "rootCRLB(R,pos)=%11.5g m\n",
                    snr_db, std::sqrt(b.crlb_range_m2), std::sqrt(b.crlb_velocity_mps2),
                    std::sqrt(pos));
    }
    write_manifest(o, "crlb", outputs);
    return 0;
}

int cmd_plan(const cli_options& o, int s_i, int bits_per_symbol) {
    print_warnings(o);
    const numerology_config num = numerology_from_mu(o.mu);
    const int frame_symbols = num.symbols_per_frame();
    const int data_symbols = frame_symbols - s_i;
    const frame_metrics_result fm =
        frame_metrics(s_i, num, o.frames, data_symbols, bits_per_symbol, o.n_subcarriers);

    std::printf("numerology mu=%d: df=%.0f kHz, Ts=%.4f us, %d symbols per frame\n", o.mu,
                num.delta_f_hz / 1e3, num.t_symbol_s * 1e6, frame_symbols);
    std::printf("range:    dR=%.4f m, unambiguous %.2f m\n",
                range_resolution_m(o.n_subcarriers, num.delta_f_hz),
                max_unambiguous_range_m(o.comb, num.delta_f_hz));
    std::printf("velocity: dv=%.4f m/s (M=%d), unambiguous %.2f m/s\n",
                velocity_resolution_mps(o.symbols, num.t_symbol_s, o.carrier_hz), o.symbols,
                max_unambiguous_velocity_mps(o.comb, num.t_symbol_s, o.carrier_hz));
    std::printf("multi-frame: N_f=%d, S_i=%d -> dv_multi=%.4f m/s, overhead=%.1f%%, "
                "refresh=%.3f s\n",
                o.frames, s_i,
                multiframe_velocity_resolution_mps(s_i * o.frames, num.t_symbol_s, o.carrier_hz),
                100.0 * fm.overhead, fm.refresh_s);
    std::printf("communication: %d data symbols -> %.4g Mbit/s at %d bits per symbol\n",
                data_symbols, fm.data_rate_bps / 1e6, bits_per_symbol);

    const auto dir = ensure_out_dir(o);
    const int s_i_grid[] = {32, 64, 96, 128, 192, 256, 384, 512};
    const int n_f_grid[] = {1, 2, 3, 4, 5, 6, 8, 10};
    const int mus[] = {o.mu};
    const double snrs[] = {5.0};
    const tradeoff_tables_result t = tradeoff_tables(mus, s_i_grid, n_f_grid, snrs,
                                                     o.n_subcarriers, o.symbols, o.comb,
                                                     o.carrier_hz);
    write_text_file((dir / "fig14_overhead_tradeoff.csv").string(), overhead_csv(t));
    write_manifest(o, "plan", {"fig14_overhead_tradeoff.csv"});
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"PRS-based OFDM radar sensing simulator"};
    app.require_subcommand(1);

    cli_options o;
    std::string what = "signals";
    int grid_points = 64;
    double delay_span_us = 2.2;
    double doppler_span_khz = 60.0;
    std::vector<int> mus;
    int s_i = 128;
    int bits_per_symbol = 2;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", o.config_path, "configuration file");
        cmd->add_option("--seed", o.seed, "master seed");
        cmd->add_option("--trials", o.trials, "Monte Carlo trials per grid point");
        cmd->add_option("--snr-db", o.snr_db, "SNR grid in dB")->delimiter(',');
        cmd->add_option("--ma", o.m_a, "oversampling factors")->delimiter(',');
        cmd->add_option("--out", o.out_dir, "output directory");
        cmd->add_option("--format", o.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--mu", o.mu, "subcarrier spacing configuration");
        cmd->add_option("--subcarriers", o.n_subcarriers, "grid width N");
        cmd->add_option("--comb", o.comb, "PRS comb size");
        cmd->add_option("--symbols", o.symbols, "PRS symbols M");
        cmd->add_option("--n-id", o.n_id, "PRS sequence ID");
        cmd->add_option("--range", o.range_m, "target range in meters");
        cmd->add_option("--velocity", o.velocity_mps, "target velocity in m/s");
        cmd->add_option("--attenuation", o.attenuation, "amplitude factor");
        cmd->add_option("--fc", o.carrier_hz, "carrier frequency in Hz");
        cmd->add_option("--frames", o.frames, "frames per velocity measurement");
        cmd->add_option("--phase", o.phase, "echo phase model")
            ->check(CLI::IsMember({"paper", "physical"}));
        cmd->add_option("--averaging", o.averaging, "peak averaging mode")
            ->check(CLI::IsMember({"estimates", "spectrum"}));
        cmd->add_flag("--svg", o.svg, "also render SVG plots");
    };
    auto add_simulate_only = [&](CLI::App* cmd) {
        cmd->add_flag("--dump-grid", o.dump_grid, "write the transmitted grid as CSV");
    };

    CLI::App* simulate = app.add_subcommand("simulate", "one scenario, estimates and peaks");
    add_common(simulate);
    add_simulate_only(simulate);
    CLI::App* sweep = app.add_subcommand("sweep", "Monte Carlo RMSE vs SNR");
    add_common(sweep);
    CLI::App* compare = app.add_subcommand("compare", "reference-signal and comb comparisons");
    add_common(compare);
    compare->add_option("--what", what, "signals, combs, scs or frames")
        ->check(CLI::IsMember({"signals", "combs", "scs", "frames"}));
    CLI::App* ambiguity_cmd = app.add_subcommand("ambiguity", "delay/Doppler surface CSV");
    add_common(ambiguity_cmd);
    ambiguity_cmd->add_option("--grid", grid_points, "samples per axis");
    ambiguity_cmd->add_option("--delay-span", delay_span_us, "half span in microseconds");
    ambiguity_cmd->add_option("--doppler-span", doppler_span_khz, "half span in kHz");
    CLI::App* crlb_cmd = app.add_subcommand("crlb", "bound tables and trade-off curves");
    add_common(crlb_cmd);
    crlb_cmd->add_option("--mus", mus, "numerologies for the trade-off table")->delimiter(',');
    CLI::App* plan = app.add_subcommand("plan", "resolutions, limits, overhead and data rate");
    add_common(plan);
    plan->add_option("--si", s_i, "PRS symbols per frame");
    plan->add_option("--bits-per-symbol", bits_per_symbol, "log2 of the QAM order");

    CLI11_PARSE(app, argc, argv);

    try {
        CLI::App* active = app.get_subcommands().front();
        if (!o.config_path.empty()) {
            merge_config(o, config_file::load(o.config_path), active);
        }
        if (simulate->parsed()) {
            return cmd_simulate(o);
        }
        if (sweep->parsed()) {
            return cmd_sweep(o);
        }
        if (compare->parsed()) {
            return cmd_compare(o, what);
        }
        if (ambiguity_cmd->parsed()) {
            return cmd_ambiguity(o, grid_points, delay_span_us, doppler_span_khz);
        }
        if (crlb_cmd->parsed()) {
            return cmd_crlb(o, mus);
        }
        if (plan->parsed()) {
            return cmd_plan(o, s_i, bits_per_symbol);
        }
    } catch (const config_error& e) {
        std::fprintf(stderr, "{\"error\": {\"type\": \"configuration\", \"message\": \"%s\"}}\n",
                     e.what());
        return 2;
    } catch (const numeric_error& e) {
        std::fprintf(stderr, "{\"error\": {\"type\": \"numeric\", \"message\": \"%s\"}}\n",
                     e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "{\"error\": {\"type\": \"internal\", \"message\": \"%s\"}}\n",
                     e.what());
        return 1;
    }
    return 0;
}
