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

// End-to-end acceptance suite. Each numbered criterion prints one PASS/FAIL
// line (sub-criteria get letter suffixes); the exit code is the number of
// failures. Expected values, tolerances and runtime budgets are pinned in
// code, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "prsense/io.hpp"
#include "prsense/sweep.hpp"
#include "support/ambiguity_oracle.hpp"

using namespace prsense;

namespace {

int g_failures = 0;

void report(const std::string& id, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %s: %s\n", pass ? "PASS" : "FAIL", id.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!pass) {
        ++g_failures;
    }
}

void report_runtime(const std::string& id, double seconds, double budget_s) {
    report(id, seconds < budget_s,
           "runtime " + format_double(seconds) + " s within " + format_double(budget_s) + " s");
}

class stopwatch {
  public:
    stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

double round2(double v) { return std::round(v * 100.0) / 100.0; }

std::string fmt(double v) { return format_double(v); }

// Reference configuration: fc = 24 GHz, df = 120 kHz, N = 256, comb 4,
// target at 50 m / 15 m/s. The ranging experiment uses the 12-symbol
// single-slot pattern; the velocity experiment uses 128 contiguous symbols.
constexpr double fc = 24e9;

quotient_matrix reference_quotient(int num_symbols, std::optional<double> snr_db,
                                   uint64_t seed) {
    const resource_grid tx =
        map_prs(make_prs_pattern(4, num_symbols), {0, 0, 0}, 256, numerology_from_mu(3));
    target_scenario t;
    t.range_m = 50.0;
    t.velocity_mps = 15.0;
    t.carrier_hz = fc;
    t.snr_db = snr_db;
    return quotient(apply_echo(tx, t, phase_mode::paper, seed), tx);
}

sweep_spec reference_spec(int num_symbols) {
    sweep_spec spec;
    spec.scenario.range_m = 50.0;
    spec.scenario.velocity_mps = 15.0;
    spec.scenario.carrier_hz = fc;
    spec.pattern = make_prs_pattern(4, num_symbols);
    spec.numerology = numerology_from_mu(3);
    spec.n_subcarriers = 256;
    spec.master_seed = 20260808;
    return spec;
}

void criterion_1_deterministic_ranging() {
    stopwatch sw;
    const quotient_matrix q = reference_quotient(12, std::nullopt, 1);
    const range_estimate e1 = estimate_range(q, 1);
    report("1a", e1.peak_index == 10 && round2(e1.range_m) == 48.83,
           "noiseless m_a=1 peak index 10 -> 48.83 m (achieved " +
               std::to_string(e1.peak_index) + " -> " + fmt(e1.range_m) + " m)");
    const range_estimate e10 = estimate_range(q, 10);
    report("1b", e10.peak_index == 102 && round2(e10.range_m) == 49.80,
           "noiseless m_a=10 peak index 102 -> 49.80 m (achieved " +
               std::to_string(e10.peak_index) + " -> " + fmt(e10.range_m) + " m)");

    std::map<int, int> hist1, hist10;
    for (int trial = 0; trial < 100; ++trial) {
        const quotient_matrix qn = reference_quotient(12, 5.0, 1000 + trial);
        ++hist1[estimate_range(qn, 1).peak_index];
        ++hist10[estimate_range(qn, 10).peak_index];
    }
    auto modal = [](const std::map<int, int>& h) {
        int best = -1, count = -1;
        for (const auto& [idx, c] : h) {
            if (c > count) {
                best = idx;
                count = c;
            }
        }
        return std::make_pair(best, count);
    };
    const auto [m1, c1] = modal(hist1);
    const auto [m10, c10] = modal(hist10);
    report("1c", m1 == 10,
           "modal m_a=1 peak index over 100 trials at 5 dB is 10 (achieved " +
               std::to_string(m1) + ", " + std::to_string(c1) + "/100)");
    report("1d", m10 == 102,
           "modal m_a=10 peak index over 100 trials at 5 dB is 102 (achieved " +
               std::to_string(m10) + ", " + std::to_string(c10) + "/100)");
    report_runtime("1e", sw.seconds(), 1.0);
}

void criterion_2_deterministic_velocity() {
    stopwatch sw;
    const quotient_matrix q = reference_quotient(128, std::nullopt, 1);
    const velocity_estimate e1 = estimate_velocity(q, 1);
    report("2a", round2(e1.velocity_mps) == 16.42,
           "noiseless m_a=1 velocity 16.42 m/s (achieved index " + std::to_string(e1.peak_index) +
               " -> " + fmt(e1.velocity_mps) + " m/s)");
    const velocity_estimate e10 = estimate_velocity(q, 10);
    // The 15.33 m/s figure corresponds to dense-grid index 28, but the tone
    // for 15 m/s sits at 27.40 bins, so the noiseless argmax is 27
    // (14.78 m/s). See the acceptance notes; implemented faithfully and
    // asserted as specified.
    report("2b", round2(e10.velocity_mps) == 15.33,
           "noiseless m_a=10 velocity 15.33 m/s (achieved index " + std::to_string(e10.peak_index) +
               " -> " + fmt(e10.velocity_mps) + " m/s)");
    report_runtime("2c", sw.seconds(), 1.0);
}

void criterion_3_monte_carlo_rmse() {
    stopwatch sw;
    std::printf("       noise convention: circularly-symmetric complex AWGN, total variance "
                "sigma^2 = xi^2/SNR per resource element\n");

    sweep_spec range_spec = reference_spec(12);
    range_spec.snr_grid_db = {5.0};
    range_spec.trials = 1000;
    range_spec.m_a_values = {1, 10};
    range_spec.with_velocity = false;
    const sweep_result rr = run_sweep(range_spec);
    const double r1 = rr.rows[0].rmse_range_m;
    const double r10 = rr.rows[1].rmse_range_m;

    sweep_spec vel_spec = reference_spec(128);
    vel_spec.snr_grid_db = {5.0};
    vel_spec.trials = 1000;
    vel_spec.m_a_values = {1, 10};
    const sweep_result vr = run_sweep(vel_spec);
    const double v1 = vr.rows[0].rmse_velocity_mps;
    const double v10 = vr.rows[1].rmse_velocity_mps;

    report("3a", r1 >= 1.17 * 0.8 && r1 <= 1.17 * 1.2,
           "RMSE(range, m_a=1) = 1.17 m +-20% (achieved " + fmt(r1) + " m)");
    report("3b", r10 >= 0.33 * 0.7 && r10 <= 0.33 * 1.3,
           "RMSE(range, m_a=10) = 0.33 m +-30% (achieved " + fmt(r10) + " m)");
    report("3c", v1 >= 2.24 * 0.8 && v1 <= 2.24 * 1.2,
           "RMSE(velocity, m_a=1) = 2.24 m/s +-20% (achieved " + fmt(v1) + " m/s)");
    report("3d", v10 >= 0.69 * 0.7 && v10 <= 0.69 * 1.3,
           "RMSE(velocity, m_a=10) = 0.69 m/s +-30% (achieved " + fmt(v10) + " m/s)");

    // reported for comparison: the non-coherent spectrum-averaging variant
    range_spec.mode = averaging_mode::averaged_spectrum;
    vel_spec.mode = averaging_mode::averaged_spectrum;
    const sweep_result rs = run_sweep(range_spec);
    const sweep_result vs = run_sweep(vel_spec);
    std::printf("       spectrum-averaging variant: range %s / %s m, velocity %s / %s m/s "
                "(m_a = 1 / 10)\n",
                fmt(rs.rows[0].rmse_range_m).c_str(), fmt(rs.rows[1].rmse_range_m).c_str(),
                fmt(vs.rows[0].rmse_velocity_mps).c_str(),
                fmt(vs.rows[1].rmse_velocity_mps).c_str());
    report_runtime("3e", sw.seconds(), 120.0);
}

void criterion_4_resolutions() {
    const numerology_config num = numerology_from_mu(3);
    const double dr = range_resolution_m(256, num.delta_f_hz);
    const double dv = velocity_resolution_mps(128, num.t_symbol_s, fc);
    auto sig3 = [](double v) {
        const double scale = std::pow(10.0, 2 - std::floor(std::log10(std::abs(v))));
        return std::round(v * scale) / scale;
    };
    report("4a", sig3(dr) == 4.88, "range resolution 4.88 m (achieved " + fmt(dr) + " m)");
    report("4b", sig3(dv) == 5.47, "velocity resolution 5.47 m/s (achieved " + fmt(dv) + " m/s)");
}

void criterion_5_crlb_consistency() {
    stopwatch sw;
    const numerology_config num = numerology_from_mu(3);
    const double snr = db_to_linear(5.0);

    auto gap = [](double closed, double oracle) {
        return std::abs(closed - oracle) / std::max(closed, oracle);
    };
    const crlb_report big = crlb_radar(snr, 1.0, num, 256, 128, 4, fc);
    const fisher_result big_f = fisher_oracle(snr, 1.0, num, 256, 128, 4);
    const double big_gap =
        std::max(gap(big.crlb_delay_s2, big_f.crlb_delay_s2),
                 gap(big.crlb_doppler_hz2, big_f.crlb_doppler_hz2));
    report("5a", big_gap < 0.02,
           "closed form vs Fisher oracle within 2% at N=256, M=128 (achieved " +
               fmt(100.0 * big_gap) + "%)");

    const crlb_report small = crlb_radar(snr, 1.0, num, 64, 32, 4, fc);
    const fisher_result small_f = fisher_oracle(snr, 1.0, num, 64, 32, 4);
    const double small_gap =
        std::max(gap(small.crlb_delay_s2, small_f.crlb_delay_s2),
                 gap(small.crlb_doppler_hz2, small_f.crlb_doppler_hz2));
    report("5b", small_gap < 0.10,
           "closed form vs Fisher oracle within 10% at N=64, M=32 (achieved " +
               fmt(100.0 * small_gap) + "%)");

    sweep_spec spec = reference_spec(128);
    spec.snr_grid_db = {-5, 0, 5, 10, 15, 20};
    spec.trials = 1000;
    spec.m_a_values = {10};
    const sweep_result r = run_sweep(spec);
    int soft = 0;
    int hard = 0;
    int points = 0;
    for (const sweep_row& row : r.rows) {
        for (const auto& [crlb, rmse] :
             {std::pair{row.root_crlb_range_m, row.rmse_range_m},
              std::pair{row.root_crlb_velocity_mps, row.rmse_velocity_mps}}) {
            ++points;
            if (crlb > rmse) {
                ++soft;
                if (crlb > 1.10 * rmse) {
                    ++hard;
                }
            }
        }
    }
    report("5c", hard == 0 && soft <= points / 20,
           "root-CRLB below Monte Carlo RMSE over -5..20 dB (" + std::to_string(soft) + "/" +
               std::to_string(points) + " soft violations, " + std::to_string(hard) + " beyond 10%)");
    report_runtime("5d", sw.seconds(), 300.0);
}

void criterion_6_ambiguity() {
    stopwatch sw;
    const numerology_config num = numerology_from_mu(3);

    // closed form vs independent numerical integration on N=64, M=4
    const resource_grid small = map_prs(make_prs_pattern(4, 4), {0, 0, 0}, 64, num);
    const double peak = std::abs(ambiguity_point(small, 0.0, 0.0));
    const double ts = num.t_symbol_s;
    const double taus[] = {0.0, 0.3 * ts, -0.4 * ts, 0.7 * ts, 1.3 * ts, 2.5 * ts};
    const double fds[] = {0.0, 30e3, -20e3, 50e3, 10e3, -45e3};
    double worst = 0.0;
    for (int i = 0; i < 6; ++i) {
        const cplx closed = ambiguity_point(small, taus[i], fds[i]);
        const cplx numeric = prsense::testing::integrate_response(small, taus[i], fds[i]);
        worst = std::max(worst, std::abs(closed - numeric) / peak);
    }
    report("6a", worst <= 1e-6,
           "closed form within 1e-6 of direct integration on N=64, M=4 (worst " + fmt(worst) + ")");

    // pushpin property on the N=1024, N_J=256 configuration
    const resource_grid big = map_prs(make_prs_pattern(4, 4), {0, 0, 0}, 1024, num);
    std::vector<double> delays, dopplers;
    for (int i = -32; i <= 32; ++i) {
        delays.push_back(i * (2.2e-6 / 32.0));
        dopplers.push_back(i * (60e3 / 32.0));
    }
    const ambiguity_surface surf = ambiguity(big, delays, dopplers);
    const double tau_res = 1.0 / (1024 * num.delta_f_hz);
    const double fd_res = 1.0 / (4 * num.t_symbol_s);
    double origin_mag = 0.0;
    double worst_outside = 0.0;
    double second = 0.0;
    for (std::size_t d = 0; d < delays.size(); ++d) {
        for (std::size_t f = 0; f < dopplers.size(); ++f) {
            const double mag = std::abs(surf.at(d, f));
            const bool at_origin = delays[d] == 0.0 && dopplers[f] == 0.0;
            const bool in_mainlobe =
                std::abs(delays[d]) < tau_res && std::abs(dopplers[f]) < fd_res;
            if (at_origin) {
                origin_mag = mag;
            } else {
                second = std::max(second, mag);
                if (!in_mainlobe) {
                    worst_outside = std::max(worst_outside, mag);
                }
            }
        }
    }
    report("6b", origin_mag > second,
           "origin is the unique global maximum on the 65x65 grid (origin " + fmt(origin_mag) +
               ", next " + fmt(second) + ")");
    report("6c", worst_outside < 0.5 * origin_mag,
           "all samples outside the mainlobe cell below 0.5 of peak (worst " +
               fmt(worst_outside / origin_mag) + ")");
    report_runtime("6d", sw.seconds(), 600.0);
}

void criterion_7_orderings() {
    stopwatch sw;

    // reference-signal comparison, 500 trials, m_a = 10
    sweep_spec cmp = reference_spec(12);
    cmp.snr_grid_db = {-10, -5, 0, 5};
    cmp.trials = 500;
    cmp.m_a_values = {10};
    const auto curves = compare_signals(cmp);
    const sweep_result* prs = nullptr;
    const sweep_result* ss = nullptr;
    const sweep_result* dmrs = nullptr;
    for (const auto& [name, result] : curves) {
        if (name == "prs") prs = &result;
        if (name == "ss") ss = &result;
        if (name == "dmrs") dmrs = &result;
    }
    bool prs_wins = true;
    std::string detail;
    for (std::size_t i = 0; i < prs->rows.size(); ++i) {
        prs_wins &= prs->rows[i].rmse_range_m <= ss->rows[i].rmse_range_m;
        prs_wins &= prs->rows[i].rmse_range_m <= dmrs->rows[i].rmse_range_m;
        detail += fmt(prs->rows[i].snr_db) + "dB:" + fmt(prs->rows[i].rmse_range_m) + "/" +
                  fmt(ss->rows[i].rmse_range_m) + "/" + fmt(dmrs->rows[i].rmse_range_m) + " ";
    }
    report("7a", prs_wins, "PRS RMSE <= SS and DMRS at every SNR (prs/ss/dmrs: " + detail + ")");

    // comb comparison at low SNR, 1000 trials
    bool comb2_wins = true;
    std::string comb_detail;
    {
        sweep_spec base = reference_spec(12);
        base.snr_grid_db = {-10, -5, 0};
        base.trials = 1000;
        base.m_a_values = {1};
        base.with_velocity = false;
        sweep_spec c2 = base;
        c2.pattern = make_prs_pattern(2, 12);
        const sweep_result r2 = run_sweep(c2);
        const sweep_result r4 = run_sweep(base);
        for (std::size_t i = 0; i < r2.rows.size(); ++i) {
            comb2_wins &= r2.rows[i].rmse_range_m <= r4.rows[i].rmse_range_m;
            comb_detail += fmt(r2.rows[i].snr_db) + "dB:" + fmt(r2.rows[i].rmse_range_m) + "<=" +
                           fmt(r4.rows[i].rmse_range_m) + " ";
        }
    }
    report("7b", comb2_wins, "comb 2 RMSE <= comb 4 RMSE for SNR <= 0 dB (" + comb_detail + ")");

    // multi-frame velocity accuracy strictly improves with N_f, 500 trials.
    // The per-trial true velocity is drawn uniformly from 15 +- 5 m/s so the
    // comparison is not dominated by where one fixed velocity sits on each
    // N_f grid.
    bool decreasing = true;
    std::string mf_detail;
    double prev = 0.0;
    for (int n_f : {1, 2, 3, 4}) {
        sweep_spec spec = reference_spec(128);
        spec.numerology = numerology_from_mu(2);
        spec.snr_grid_db = {5.0};
        spec.trials = 500;
        spec.m_a_values = {1};
        spec.frames = n_f;
        spec.velocity_span_mps = 10.0;
        const sweep_result r = run_sweep(spec);
        const double rmse = r.rows[0].rmse_velocity_mps;
        if (n_f > 1) {
            decreasing &= rmse < prev;
        }
        prev = rmse;
        mf_detail += "N_f=" + std::to_string(n_f) + ":" + fmt(rmse) + " ";
    }
    report("7c", decreasing,
           "velocity RMSE strictly decreasing in N_f at 5 dB (" + mf_detail + "m/s)");
    report_runtime("7d", sw.seconds(), 600.0);
}

void criterion_8_overhead() {
    const numerology_config num = numerology_from_mu(2);
    const frame_metrics_result m = frame_metrics(128, num, 3, 432, 2, 256);
    report("8a", std::round(m.overhead * 1000.0) / 10.0 == 22.9,
           "overhead for S_i=128 at mu=2 is 22.9% (achieved " + fmt(100.0 * m.overhead) + "%)");
    report("8b", m.refresh_s == 0.03,
           "sensing refresh for N_f=3 is 0.03 s (achieved " + fmt(m.refresh_s) + " s)");
}

void criterion_9_oracle_equivalence() {
    // N_J = 8, M_J = 4 (comb 4 over 32 subcarriers, 16 symbols), noiseless,
    // 16 x 16 discrete scenarios including wrap-around.
    const numerology_config num = numerology_from_mu(3);
    const resource_grid tx = map_prs(make_prs_pattern(4, 16), {0, 0, 0}, 32, num);
    const double range_step = speed_of_light / (2.0 * 32 * num.delta_f_hz);
    const double vel_step = speed_of_light / (2.0 * 16 * num.t_symbol_s * fc);

    int mismatches = 0;
    int scenarios = 0;
    for (int ri = 0; ri < 16; ++ri) {
        for (int vi = 0; vi < 16; ++vi) {
            target_scenario t;
            t.range_m = ri * range_step;
            t.velocity_mps = vi * vel_step;
            t.carrier_hz = fc;
            const quotient_matrix q = quotient(apply_echo(tx, t, phase_mode::paper, 1), tx);
            const range_estimate re = estimate_range(q, 1);
            const velocity_estimate ve = estimate_velocity(q, 1);

            // exhaustive correlation search from the physical phase model
            int best_r = 0;
            double best_r_mag = -1.0;
            for (int l = 0; l < 8; ++l) {
                double mag = 0.0;
                for (int m = 0; m < q.n_cols; ++m) {
                    cplx acc{0.0, 0.0};
                    for (int k = 0; k < q.n_rows; ++k) {
                        const double ph = -2.0 * pi * (4.0 * k * num.delta_f_hz) *
                                          (2.0 * (l * range_step) / speed_of_light);
                        acc += q.at(k, m) * std::conj(cplx{std::cos(ph), std::sin(ph)});
                    }
                    mag += std::abs(acc);
                }
                if (mag > best_r_mag * (1.0 + 1e-12)) {
                    best_r_mag = mag;
                    best_r = l;
                }
            }
            int best_v = 0;
            double best_v_mag = -1.0;
            for (int d = 0; d < 4; ++d) {
                const double fd = 2.0 * (d * vel_step) * fc / speed_of_light;
                double mag = 0.0;
                for (int k = 0; k < q.n_rows; ++k) {
                    cplx acc{0.0, 0.0};
                    for (int m = 0; m < 4; ++m) {
                        const double ph = 2.0 * pi * (4.0 * m * num.t_symbol_s) * fd;
                        acc += q.at(k, m) * std::conj(cplx{std::cos(ph), std::sin(ph)});
                    }
                    mag += std::abs(acc);
                }
                if (mag > best_v_mag * (1.0 + 1e-12)) {
                    best_v_mag = mag;
                    best_v = d;
                }
            }
            mismatches += re.peak_index != best_r ? 1 : 0;
            mismatches += ve.peak_index != best_v ? 1 : 0;
            mismatches += re.peak_index != ri % 8 ? 1 : 0;
            mismatches += ve.peak_index != vi % 4 ? 1 : 0;
            ++scenarios;
        }
    }
    report("9", scenarios == 256 && mismatches == 0,
           "FFT estimates equal exhaustive search on all 256 scenarios (" +
               std::to_string(mismatches) + " mismatches)");
}

void criterion_10_determinism() {
    sweep_spec spec = reference_spec(12);
    spec.snr_grid_db = {0.0, 5.0};
    spec.trials = 50;
    spec.m_a_values = {1, 10};
    const std::string a = sweep_to_csv(run_sweep(spec));
    const std::string b = sweep_to_csv(run_sweep(spec));
    report("10", !a.empty() && a == b,
           "equal master seeds produce byte-identical sweep CSV (" +
               std::to_string(a.size()) + " bytes)");
}

} // namespace

int main() {
    std::printf("prsense acceptance suite\n");
    std::printf("reference setup: fc=24 GHz, df=120 kHz, N=256, comb 4, target 50 m / 15 m/s\n\n");
    criterion_1_deterministic_ranging();
    criterion_2_deterministic_velocity();
    criterion_3_monte_carlo_rmse();
    criterion_4_resolutions();
    criterion_5_crlb_consistency();
    criterion_6_ambiguity();
    criterion_7_orderings();
    criterion_8_overhead();
    criterion_9_oracle_equivalence();
    criterion_10_determinism();
    std::printf("\n%d failing check(s)\n", g_failures);
    return g_failures > 125 ? 125 : g_failures;
}
