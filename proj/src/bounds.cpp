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

#include "prsense/bounds.hpp"

#include <cmath>
#include <string>

namespace prsense {

namespace {

void check_common(double snr_linear, double xi, int n, int m, int comb) {
    if (snr_linear <= 0.0) {
        throw config_error("bounds: linear SNR must be positive");
    }
    if (xi <= 0.0) {
        throw config_error("bounds: attenuation must be positive");
    }
    if (comb < 1) {
        throw config_error("bounds: comb size must be >= 1");
    }
    if (n < comb || m < comb) {
        throw config_error("bounds: N and M must be at least the comb size");
    }
}

} // namespace

bool crlb_asymptotic_ok(int n_subcarriers, int m_symbols) {
    return n_subcarriers >= 16 && m_symbols >= 16;
}

crlb_report crlb_radar(double snr_linear, double xi, const numerology_config& numerology,
                       int n_subcarriers, int m_symbols, int comb_size, double carrier_hz) {
    check_common(snr_linear, xi, n_subcarriers, m_symbols, comb_size);
    if (carrier_hz <= 0.0) {
        throw config_error("crlb_radar: carrier frequency must be positive");
    }
    const int n_j = n_subcarriers / comb_size;
    const int m_j = m_symbols / comb_size;
    if (n_j <= 1 || m_j <= 1) {
        throw config_error("crlb_radar: N_J and M_J must exceed 1 (undefined-bound)");
    }
    const double t = numerology.t_useful_s;
    const double ts = numerology.t_symbol_s;
    const double four_pi2 = (2.0 * pi) * (2.0 * pi);
    const double gain = xi * xi * snr_linear * four_pi2;
    const double mn = static_cast<double>(m_symbols) * static_cast<double>(n_subcarriers);

    crlb_report r;
    r.crlb_delay_s2 =
        t * t / gain * 48.0 / (mn * (n_j - 1.0) * (7.0 * n_j + 1.0));
    r.crlb_doppler_hz2 =
        1.0 / (gain * ts * ts) * 48.0 / (mn * (m_j - 1.0) * (7.0 * m_j + 1.0));
    r.crlb_range_m2 = speed_of_light * speed_of_light / 4.0 * r.crlb_delay_s2;
    r.crlb_velocity_mps2 =
        speed_of_light * speed_of_light / (4.0 * carrier_hz * carrier_hz) * r.crlb_doppler_hz2;
    r.inputs = {xi, snr_linear, t, ts, n_subcarriers, m_symbols, n_j, m_j, carrier_hz};
    return r;
}

fisher_result fisher_oracle(double snr_linear, double xi, const numerology_config& numerology,
                            int n_subcarriers, int m_symbols, int comb_size) {
    check_common(snr_linear, xi, n_subcarriers, m_symbols, comb_size);
    const int n_j = n_subcarriers / comb_size;
    const int m_j = m_symbols / comb_size;
    if (static_cast<long long>(n_j) * m_j > 10'000'000ll) {
        throw config_error("fisher_oracle: more than 1e7 summation terms");
    }

    // d s / d tau = -j 2pi n K df * s, d s / d fd = +j 2pi K m Ts * s, so the
    // products reduce to real quantities in |s|^2 = xi^2; the explicit loop
    // keeps the oracle free of any closed-form simplification.
    const double k = static_cast<double>(comb_size);
    const double df = numerology.delta_f_hz;
    const double ts = numerology.t_symbol_s;
    const double amp2 = xi * xi;
    double f_tt = 0.0;
    double f_ff = 0.0;
    double f_tf = 0.0;
    for (int m = 0; m < m_j; ++m) {
        for (int n = 0; n < n_j; ++n) {
            const double dtau = 2.0 * pi * n * k * df;  // magnitude of the tau derivative factor
            const double dfd = 2.0 * pi * k * m * ts;   // magnitude of the fd derivative factor
            f_tt += dtau * dtau * amp2;
            f_ff += dfd * dfd * amp2;
            // (-j dtau s)(+j dfd s)* = -dtau dfd |s|^2
            f_tf += -dtau * dfd * amp2;
        }
    }
    f_tt *= snr_linear;
    f_ff *= snr_linear;
    f_tf *= snr_linear;

    const double det = f_tt * f_ff - f_tf * f_tf;
    if (!(det > 0.0) || f_tt <= 0.0 || f_ff <= 0.0) {
        throw numeric_error("fisher_oracle: singular Fisher matrix (degenerate configuration)");
    }
    fisher_result r;
    r.f_tau_tau = f_tt;
    r.f_fd_fd = f_ff;
    r.f_tau_fd = f_tf;
    r.f_fd_tau = f_tf;
    r.crlb_delay_s2 = f_ff / det;
    r.crlb_doppler_hz2 = f_tt / det;
    return r;
}

double crlb_positioning_m2(double snr_linear, const numerology_config& numerology,
                           int n_subcarriers, int comb_size) {
    check_common(snr_linear, 1.0, n_subcarriers, comb_size, comb_size);
    const int n_j = n_subcarriers / comb_size;
    if (n_j <= 1) {
        throw config_error("crlb_positioning: N_J must exceed 1 (undefined-bound)");
    }
    const double t = numerology.t_useful_s;
    const double c2t2 = speed_of_light * speed_of_light * t * t;
    return c2t2 / ((4.0 * pi * pi / 3.0) * snr_linear * static_cast<double>(n_subcarriers) *
                   (n_j - 1.0) * (2.0 * n_j - 1.0));
}

namespace {

double sinc(double x) {
    if (x == 0.0) {
        return 1.0;
    }
    const double px = pi * x;
    return std::sin(px) / px;
}

} // namespace

cplx ambiguity_point(const resource_grid& grid, double delay_s, double doppler_hz) {
    const double ts = grid.numerology.t_symbol_s;
    const double df = grid.numerology.delta_f_hz;
    const int m_total = grid.num_prs_symbols;
    const int n_j = grid.prs_per_symbol();
    const int k_comb = grid.comb_stride;

    cplx acc{0.0, 0.0};
    for (int m1 = 0; m1 < m_total; ++m1) {
        for (int m2 = 0; m2 < m_total; ++m2) {
            const double t_max = std::min((m1 + 1) * ts, delay_s + (m2 + 1) * ts);
            const double t_min = std::max(m1 * ts, delay_s + m2 * ts);
            const double t_mm = t_max - t_min;
            if (t_mm <= 0.0) {
                continue;
            }
            const double t_avg = 0.5 * (t_max + t_min);
            const int k0_1 = grid.k0_of_symbol[static_cast<std::size_t>(m1)];
            const int k0_2 = grid.k0_of_symbol[static_cast<std::size_t>(m2)];
            for (int k1 = 0; k1 < n_j; ++k1) {
                const double f1 = (k_comb * k1 + k0_1) * df;
                const cplx s1 = grid.at(k_comb * k1 + k0_1, m1);
                for (int k2 = 0; k2 < n_j; ++k2) {
                    const double f2 = (k_comb * k2 + k0_2) * df;
                    const double fdiff = f1 - f2 + doppler_hz;
                    const cplx s2 = grid.at(k_comb * k2 + k0_2, m2);
                    const double ph2 = 2.0 * pi * f2 * delay_s;
                    const double pha = 2.0 * pi * fdiff * t_avg;
                    acc += s1 * std::conj(s2) * cplx{std::cos(ph2), std::sin(ph2)} * t_mm *
                           sinc(fdiff * t_mm) * cplx{std::cos(pha), std::sin(pha)};
                }
            }
        }
    }
    return acc;
}

ambiguity_surface ambiguity(const resource_grid& grid, std::span<const double> delays_s,
                            std::span<const double> dopplers_hz) {
    if (delays_s.empty() || dopplers_hz.empty()) {
        throw config_error("ambiguity: empty delay or Doppler grid");
    }
    if (grid.num_prs_symbols <= 0) {
        throw config_error("ambiguity: grid carries no reference-signal symbols");
    }
    const double span = grid.num_prs_symbols * grid.numerology.t_symbol_s;
    for (double d : delays_s) {
        if (std::abs(d) > span) {
            throw config_error("ambiguity: delay grid exceeds the signal duration");
        }
    }

    const double ts = grid.numerology.t_symbol_s;
    const double df = grid.numerology.delta_f_hz;
    const int m_total = grid.num_prs_symbols;
    const int n_j = grid.prs_per_symbol();
    const int k_comb = grid.comb_stride;

    ambiguity_surface surf;
    surf.delays_s.assign(delays_s.begin(), delays_s.end());
    surf.dopplers_hz.assign(dopplers_hz.begin(), dopplers_hz.end());
    surf.values.assign(delays_s.size() * dopplers_hz.size(), cplx{0.0, 0.0});

    // For a fixed delay the inner double sum over (k1, k2) depends on f only
    // through k1 - k2, so per (m1, m2, diff) correlation coefficients are
    // formed once, and each Doppler sample costs O(M^2 N_J).
    struct pair_entry {
        int m1, m2;
        double t_mm, t_avg;
        int k0_1, k0_2;
        std::vector<cplx> corr; // indexed diff + (n_j - 1)
    };

    for (std::size_t di = 0; di < delays_s.size(); ++di) {
        const double tau = delays_s[di];
        std::vector<pair_entry> pairs;
        for (int m1 = 0; m1 < m_total; ++m1) {
            for (int m2 = 0; m2 < m_total; ++m2) {
                const double t_max = std::min((m1 + 1) * ts, tau + (m2 + 1) * ts);
                const double t_min = std::max(m1 * ts, tau + m2 * ts);
                if (t_max - t_min <= 0.0) {
                    continue;
                }
                pair_entry e;
                e.m1 = m1;
                e.m2 = m2;
                e.t_mm = t_max - t_min;
                e.t_avg = 0.5 * (t_max + t_min);
                e.k0_1 = grid.k0_of_symbol[static_cast<std::size_t>(m1)];
                e.k0_2 = grid.k0_of_symbol[static_cast<std::size_t>(m2)];
                e.corr.assign(2 * n_j - 1, cplx{0.0, 0.0});
                for (int k2 = 0; k2 < n_j; ++k2) {
                    const double f2 = (k_comb * k2 + e.k0_2) * df;
                    const double ph2 = 2.0 * pi * f2 * tau;
                    const cplx rot =
                        std::conj(grid.at(k_comb * k2 + e.k0_2, m2)) * cplx{std::cos(ph2), std::sin(ph2)};
                    for (int k1 = 0; k1 < n_j; ++k1) {
                        e.corr[static_cast<std::size_t>(k1 - k2 + n_j - 1)] +=
                            grid.at(k_comb * k1 + e.k0_1, m1) * rot;
                    }
                }
                pairs.push_back(std::move(e));
            }
        }
        for (std::size_t fi = 0; fi < dopplers_hz.size(); ++fi) {
            const double fd = dopplers_hz[fi];
            cplx acc{0.0, 0.0};
            for (const pair_entry& e : pairs) {
                for (int diff = -(n_j - 1); diff <= n_j - 1; ++diff) {
                    const cplx c = e.corr[static_cast<std::size_t>(diff + n_j - 1)];
                    if (c == cplx{0.0, 0.0}) {
                        continue;
                    }
                    const double fdiff = (k_comb * diff + e.k0_1 - e.k0_2) * df + fd;
                    const double pha = 2.0 * pi * fdiff * e.t_avg;
                    acc += c * e.t_mm * sinc(fdiff * e.t_mm) * cplx{std::cos(pha), std::sin(pha)};
                }
            }
            surf.values[di + fi * delays_s.size()] = acc;
        }
    }
    surf.normalization = std::abs(ambiguity_point(grid, 0.0, 0.0));
    return surf;
}

} // namespace prsense
