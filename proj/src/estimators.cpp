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

#include "prsense/estimators.hpp"

#include <cmath>
#include <string>

#include "prsense/fft.hpp"

namespace prsense {

namespace {

bool all_zero(std::span<const cplx> v) {
    for (const cplx& x : v) {
        if (x != cplx{0.0, 0.0}) {
            return false;
        }
    }
    return true;
}

/// Circular mean of peak indices on a grid of `length` bins, rounded to the
/// consensus integer bin. Keeps averages honest when peaks straddle the
/// wrap-around point.
int consensus_index(const std::vector<int>& indices, std::size_t length) {
    double re = 0.0;
    double im = 0.0;
    for (int idx : indices) {
        const double ang = 2.0 * pi * static_cast<double>(idx) / static_cast<double>(length);
        re += std::cos(ang);
        im += std::sin(ang);
    }
    double ang = std::atan2(im, re);
    if (ang < 0.0) {
        ang += 2.0 * pi;
    }
    const long idx = std::lround(ang * static_cast<double>(length) / (2.0 * pi));
    return static_cast<int>(idx % static_cast<long>(length));
}

struct peak_search {
    int index = 0;
    double mag = 0.0;
};

/// Runs the per-vector transform + argmax over every column (range axis) or
/// every row truncated to its leading `samples` symbols (velocity axis) and
/// combines per `mode`.
peak_search search(const quotient_matrix& q, int m_a, bool range_axis, int samples,
                   averaging_mode mode) {
    const std::size_t length = static_cast<std::size_t>(m_a) * samples;
    const int vectors = range_axis ? q.n_cols : q.n_rows;
    std::vector<cplx> buf(static_cast<std::size_t>(samples));
    std::vector<int> indices;
    indices.reserve(static_cast<std::size_t>(vectors));
    std::vector<double> avg_mag;
    double peak_mag_acc = 0.0;

    for (int v = 0; v < vectors; ++v) {
        for (int s = 0; s < samples; ++s) {
            buf[static_cast<std::size_t>(s)] = range_axis ? q.at(s, v) : q.at(v, s);
        }
        if (all_zero(buf)) {
            throw numeric_error(range_axis ? "estimate_range: all-zero column (degenerate input)"
                                           : "estimate_velocity: all-zero row (degenerate input)");
        }
        const std::vector<cplx> spec = zero_padded_transform(buf, length, range_axis);
        if (mode == averaging_mode::averaged_spectrum) {
            if (avg_mag.empty()) {
                avg_mag.assign(length, 0.0);
            }
            for (std::size_t i = 0; i < length; ++i) {
                avg_mag[i] += std::abs(spec[i]);
            }
        } else {
            const std::size_t idx = argmax_magnitude(spec);
            indices.push_back(static_cast<int>(idx));
            peak_mag_acc += std::abs(spec[idx]);
        }
    }

    peak_search out;
    if (mode == averaging_mode::averaged_spectrum) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < avg_mag.size(); ++i) {
            if (avg_mag[i] > avg_mag[best]) {
                best = i;
            }
        }
        out.index = static_cast<int>(best);
        out.mag = avg_mag[best] / static_cast<double>(vectors);
    } else {
        out.index = consensus_index(indices, length);
        out.mag = peak_mag_acc / static_cast<double>(vectors);
    }
    return out;
}

} // namespace

range_estimate estimate_range(const quotient_matrix& q, int m_a, averaging_mode mode) {
    if (m_a < 1) {
        throw config_error("estimate_range: oversampling factor must be >= 1");
    }
    if (q.n_rows == 0 || q.n_cols == 0) {
        throw config_error("estimate_range: empty quotient matrix");
    }
    const peak_search p = search(q, m_a, true, q.n_rows, mode);
    range_estimate est;
    est.peak_index = p.index;
    est.oversampling = m_a;
    est.spectrum_peak_mag = p.mag;
    est.range_m = static_cast<double>(p.index) * speed_of_light /
                  (2.0 * m_a * static_cast<double>(q.grid_subcarriers) * q.numerology.delta_f_hz);
    return est;
}

velocity_estimate estimate_velocity(const quotient_matrix& q, int m_a, averaging_mode mode) {
    if (m_a < 1) {
        throw config_error("estimate_velocity: oversampling factor must be >= 1");
    }
    if (q.carrier_hz <= 0.0) {
        throw config_error("estimate_velocity: quotient matrix carries no carrier frequency");
    }
    const int m_j = q.n_cols / q.comb_stride;
    if (m_j < 1) {
        throw config_error("estimate_velocity: fewer PRS symbols than the comb size");
    }
    // The Doppler rotation between adjacent PRS symbols already spans
    // K_comb * Ts, so the M_J leading symbols cover the block duration.
    const peak_search p = search(q, m_a, false, m_j, mode);
    const int m_total = m_j * q.comb_stride;
    velocity_estimate est;
    est.peak_index = p.index;
    est.oversampling = m_a;
    est.frames_used = 1;
    est.symbols_per_frame = {q.n_cols};
    est.spectrum_peak_mag = p.mag;
    est.velocity_mps = static_cast<double>(p.index) * speed_of_light /
                       (2.0 * m_a * static_cast<double>(m_total) * q.numerology.t_symbol_s *
                        q.carrier_hz);
    return est;
}

velocity_estimate estimate_velocity_multiframe(std::span<const quotient_matrix> frames, int m_a,
                                               averaging_mode mode) {
    if (frames.empty()) {
        throw config_error("estimate_velocity_multiframe: no frames");
    }
    if (m_a < 1) {
        throw config_error("estimate_velocity_multiframe: oversampling factor must be >= 1");
    }
    const quotient_matrix& first = frames[0];
    int total_prs_symbols = 0;
    int s_j = 0;
    for (const quotient_matrix& f : frames) {
        if (f.n_rows != first.n_rows || f.comb_stride != first.comb_stride ||
            f.numerology.mu != first.numerology.mu || f.carrier_hz != first.carrier_hz) {
            throw config_error("estimate_velocity_multiframe: frames do not share pattern and "
                               "numerology");
        }
        const int frame_m_j = f.n_cols / f.comb_stride;
        if (frame_m_j < 1) {
            throw config_error("estimate_velocity_multiframe: frame with fewer PRS symbols than "
                               "the comb size");
        }
        s_j += frame_m_j;
        total_prs_symbols += frame_m_j * f.comb_stride;
    }
    if (first.carrier_hz <= 0.0) {
        throw config_error("estimate_velocity_multiframe: no carrier frequency");
    }

    const std::size_t length = static_cast<std::size_t>(m_a) * s_j;
    std::vector<cplx> row(static_cast<std::size_t>(s_j));
    std::vector<int> indices;
    std::vector<double> avg_mag;
    double peak_mag_acc = 0.0;
    for (int k = 0; k < first.n_rows; ++k) {
        std::size_t pos = 0;
        for (const quotient_matrix& f : frames) {
            const int frame_m_j = f.n_cols / f.comb_stride;
            for (int m = 0; m < frame_m_j; ++m) {
                row[pos++] = f.at(k, m);
            }
        }
        if (all_zero(row)) {
            throw numeric_error("estimate_velocity_multiframe: all-zero row (degenerate input)");
        }
        const std::vector<cplx> spec = zero_padded_transform(row, length, false);
        if (mode == averaging_mode::averaged_spectrum) {
            if (avg_mag.empty()) {
                avg_mag.assign(length, 0.0);
            }
            for (std::size_t i = 0; i < length; ++i) {
                avg_mag[i] += std::abs(spec[i]);
            }
        } else {
            const std::size_t idx = argmax_magnitude(spec);
            indices.push_back(static_cast<int>(idx));
            peak_mag_acc += std::abs(spec[idx]);
        }
    }

    velocity_estimate est;
    est.oversampling = m_a;
    est.frames_used = static_cast<int>(frames.size());
    for (const quotient_matrix& f : frames) {
        est.symbols_per_frame.push_back(f.n_cols);
    }
    if (mode == averaging_mode::averaged_spectrum) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < avg_mag.size(); ++i) {
            if (avg_mag[i] > avg_mag[best]) {
                best = i;
            }
        }
        est.peak_index = static_cast<int>(best);
        est.spectrum_peak_mag = avg_mag[best] / first.n_rows;
    } else {
        est.peak_index = consensus_index(indices, length);
        est.spectrum_peak_mag = peak_mag_acc / first.n_rows;
    }
    est.velocity_mps = static_cast<double>(est.peak_index) * speed_of_light /
                       (2.0 * m_a * first.numerology.t_symbol_s * first.carrier_hz *
                        static_cast<double>(total_prs_symbols));
    return est;
}

std::vector<double> range_spectrum(const quotient_matrix& q, int m_a) {
    const std::size_t length = static_cast<std::size_t>(m_a) * q.n_rows;
    std::vector<double> mag(length, 0.0);
    std::vector<cplx> buf(static_cast<std::size_t>(q.n_rows));
    for (int m = 0; m < q.n_cols; ++m) {
        for (int k = 0; k < q.n_rows; ++k) {
            buf[static_cast<std::size_t>(k)] = q.at(k, m);
        }
        const std::vector<cplx> spec = zero_padded_transform(buf, length, true);
        for (std::size_t i = 0; i < length; ++i) {
            mag[i] += std::abs(spec[i]);
        }
    }
    for (double& v : mag) {
        v /= static_cast<double>(q.n_cols);
    }
    return mag;
}

std::vector<double> velocity_spectrum(const quotient_matrix& q, int m_a) {
    const int m_j = q.n_cols / q.comb_stride;
    const std::size_t length = static_cast<std::size_t>(m_a) * m_j;
    std::vector<double> mag(length, 0.0);
    std::vector<cplx> buf(static_cast<std::size_t>(m_j));
    for (int k = 0; k < q.n_rows; ++k) {
        for (int m = 0; m < m_j; ++m) {
            buf[static_cast<std::size_t>(m)] = q.at(k, m);
        }
        const std::vector<cplx> spec = zero_padded_transform(buf, length, false);
        for (std::size_t i = 0; i < length; ++i) {
            mag[i] += std::abs(spec[i]);
        }
    }
    for (double& v : mag) {
        v /= static_cast<double>(q.n_rows);
    }
    return mag;
}

double range_resolution_m(int n_subcarriers, double delta_f_hz) {
    if (n_subcarriers <= 0 || delta_f_hz <= 0.0) {
        throw config_error("range_resolution: arguments must be positive");
    }
    return speed_of_light / (2.0 * n_subcarriers * delta_f_hz);
}

double max_unambiguous_range_m(int comb_size, double delta_f_hz) {
    if (comb_size <= 0 || delta_f_hz <= 0.0) {
        throw config_error("max_unambiguous_range: arguments must be positive");
    }
    return speed_of_light / (2.0 * comb_size * delta_f_hz);
}

double velocity_resolution_mps(int m_symbols, double t_symbol_s, double carrier_hz) {
    if (m_symbols <= 0 || t_symbol_s <= 0.0 || carrier_hz <= 0.0) {
        throw config_error("velocity_resolution: arguments must be positive");
    }
    return speed_of_light / (2.0 * m_symbols * t_symbol_s * carrier_hz);
}

double max_unambiguous_velocity_mps(int comb_size, double t_symbol_s, double carrier_hz) {
    if (comb_size <= 0 || t_symbol_s <= 0.0 || carrier_hz <= 0.0) {
        throw config_error("max_unambiguous_velocity: arguments must be positive");
    }
    return speed_of_light / (2.0 * comb_size * t_symbol_s * carrier_hz);
}

double multiframe_velocity_resolution_mps(int total_prs_symbols, double t_symbol_s,
                                          double carrier_hz) {
    if (total_prs_symbols <= 0 || t_symbol_s <= 0.0 || carrier_hz <= 0.0) {
        throw config_error("multiframe_velocity_resolution: arguments must be positive");
    }
    return speed_of_light / (2.0 * t_symbol_s * carrier_hz * total_prs_symbols);
}

frame_metrics_result frame_metrics(int prs_symbols_per_frame, const numerology_config& numerology,
                                   int frame_count, int data_symbols, int bits_per_symbol,
                                   int n_subcarriers) {
    const int frame_capacity = numerology.symbols_per_frame();
    if (prs_symbols_per_frame < 0 || prs_symbols_per_frame > frame_capacity) {
        throw config_error("frame_metrics: PRS symbols exceed the " +
                           std::to_string(frame_capacity) + "-symbol frame");
    }
    if (frame_count < 1 || data_symbols < 0 || bits_per_symbol < 1 || n_subcarriers < 1) {
        throw config_error("frame_metrics: invalid arguments");
    }
    frame_metrics_result r;
    r.overhead = static_cast<double>(prs_symbols_per_frame) / static_cast<double>(frame_capacity);
    r.refresh_s = static_cast<double>(frame_count) * numerology.frame_duration_s;
    r.data_rate_bps = static_cast<double>(data_symbols) * n_subcarriers * bits_per_symbol /
                      numerology.frame_duration_s;
    return r;
}

} // namespace prsense
