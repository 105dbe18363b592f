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

#include "prsense/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace prsense {

std::string format_double(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw numeric_error("cannot write " + path);
    }
    out << content;
}

std::string sweep_to_csv(const sweep_result& result) {
    // wall time stays out of the file so equal-seed runs are byte-identical
    std::string out =
        "snr_db,m_a,rmse_range_m,rmse_velocity_mps,root_crlb_range_m,root_crlb_velocity_mps,"
        "trials\n";
    for (const sweep_row& r : result.rows) {
        out += format_double(r.snr_db) + "," + std::to_string(r.m_a) + "," +
               format_double(r.rmse_range_m) + "," + format_double(r.rmse_velocity_mps) + "," +
               format_double(r.root_crlb_range_m) + "," +
               format_double(r.root_crlb_velocity_mps) + "," + std::to_string(r.trials) + "\n";
    }
    return out;
}

std::string records_to_json(const sweep_result& result) {
    // flat array of per-trial estimation records
    std::string out = "[\n";
    bool first = true;
    for (const trial_record& r : result.records) {
        if (!first) {
            out += ",\n";
        }
        first = false;
        out += "  {\"trial\": " + std::to_string(r.trial) + ", \"snr_db\": " +
               format_double(r.snr_db) + ", \"m_a\": " + std::to_string(r.m_a) +
               ", \"est_range_m\": " + format_double(r.est_range_m) +
               ", \"est_velocity_mps\": " + format_double(r.est_velocity_mps) +
               ", \"peak_indices\": [" + std::to_string(r.range_peak_index) + ", " +
               std::to_string(r.velocity_peak_index) + "]}";
    }
    out += "\n]\n";
    return out;
}

std::string compare_to_csv(const std::vector<std::pair<std::string, sweep_result>>& curves) {
    std::string out = "signal,snr_db,m_a,rmse_range_m,trials\n";
    for (const auto& [name, result] : curves) {
        for (const sweep_row& r : result.rows) {
            out += name + "," + format_double(r.snr_db) + "," + std::to_string(r.m_a) + "," +
                   format_double(r.rmse_range_m) + "," + std::to_string(r.trials) + "\n";
        }
    }
    return out;
}

std::string bounds_table_csv(const std::vector<double>& snr_grid_db,
                             const numerology_config& numerology, int n_subcarriers,
                             int m_symbols, int comb_size, double carrier_hz) {
    std::string out = "snr_db,crlb_range_m2,crlb_velocity_mps2,source\n";
    const double c2_4 = speed_of_light * speed_of_light / 4.0;
    for (double snr_db : snr_grid_db) {
        const double snr = db_to_linear(snr_db);
        const crlb_report b =
            crlb_radar(snr, 1.0, numerology, n_subcarriers, m_symbols, comb_size, carrier_hz);
        out += format_double(snr_db) + "," + format_double(b.crlb_range_m2) + "," +
               format_double(b.crlb_velocity_mps2) + ",closed_form\n";
        const fisher_result f =
            fisher_oracle(snr, 1.0, numerology, n_subcarriers, m_symbols, comb_size);
        out += format_double(snr_db) + "," + format_double(c2_4 * f.crlb_delay_s2) + "," +
               format_double(c2_4 / (carrier_hz * carrier_hz) * f.crlb_doppler_hz2) +
               ",fisher_oracle\n";
    }
    return out;
}

std::string crlb_tradeoff_csv(const tradeoff_tables_result& t) {
    std::string out = "mu,snr_db,crlb_range_m2,crlb_velocity_mps2\n";
    for (const crlb_tradeoff_row& r : t.crlb_rows) {
        out += std::to_string(r.mu) + "," + format_double(r.snr_db) + "," +
               format_double(r.crlb_range_m2) + "," + format_double(r.crlb_velocity_mps2) + "\n";
    }
    return out;
}

std::string overhead_csv(const tradeoff_tables_result& t) {
    std::string out = "s_i,n_f,overhead,refresh_s,dv_multi_mps\n";
    for (const overhead_row& r : t.overhead_rows) {
        out += std::to_string(r.s_i) + "," + std::to_string(r.n_f) + "," +
               format_double(r.overhead) + "," + format_double(r.refresh_s) + "," +
               format_double(r.dv_multi_mps) + "\n";
    }
    return out;
}

std::string ambiguity_to_csv(const ambiguity_surface& surface) {
    std::string out = "delay_s,doppler_hz,magnitude,normalized\n";
    for (std::size_t fi = 0; fi < surface.dopplers_hz.size(); ++fi) {
        for (std::size_t di = 0; di < surface.delays_s.size(); ++di) {
            const double mag = std::abs(surface.at(di, fi));
            out += format_double(surface.delays_s[di]) + "," +
                   format_double(surface.dopplers_hz[fi]) + "," + format_double(mag) + "," +
                   format_double(surface.normalization > 0 ? mag / surface.normalization : 0.0) +
                   "\n";
        }
    }
    return out;
}

std::string spectrum_to_csv(const std::vector<double>& magnitudes, double axis_step,
                            const std::string& axis_name) {
    std::string out = "index," + axis_name + ",magnitude\n";
    for (std::size_t i = 0; i < magnitudes.size(); ++i) {
        out += std::to_string(i) + "," + format_double(axis_step * static_cast<double>(i)) + "," +
               format_double(magnitudes[i]) + "\n";
    }
    return out;
}

namespace {

const char* series_colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                               "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

} // namespace

std::string svg_line_plot(const std::string& title, const std::string& x_label,
                          const std::string& y_label, const std::vector<plot_series>& series,
                          bool log_y) {
    constexpr double width = 720.0;
    constexpr double height = 480.0;
    constexpr double ml = 80.0, mr = 24.0, mt = 48.0, mb = 64.0;

    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const plot_series& s : series) {
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            double y = s.y[i];
            if (std::isnan(y) || (log_y && y <= 0.0)) {
                continue;
            }
            if (log_y) {
                y = std::log10(y);
            }
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
    if (xmin > xmax) {
        xmin = 0.0;
        xmax = 1.0;
    }
    if (ymin > ymax) {
        ymin = 0.0;
        ymax = 1.0;
    }
    if (xmax == xmin) {
        xmax = xmin + 1.0;
    }
    if (ymax == ymin) {
        ymax = ymin + 1.0;
    }

    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (width - ml - mr); };
    auto py = [&](double yv) {
        const double y = log_y ? std::log10(yv) : yv;
        return height - mb - (y - ymin) / (ymax - ymin) * (height - mt - mb);
    };

    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      format_double(width) + "\" height=\"" + format_double(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + format_double(width / 2) + "\" y=\"24\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"16\">" + title + "</text>\n";
    // axes
    svg += "<line x1=\"" + format_double(ml) + "\" y1=\"" + format_double(height - mb) +
           "\" x2=\"" + format_double(width - mr) + "\" y2=\"" + format_double(height - mb) +
           "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + format_double(ml) + "\" y1=\"" + format_double(mt) + "\" x2=\"" +
           format_double(ml) + "\" y2=\"" + format_double(height - mb) +
           "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        const double fx = xmin + (xmax - xmin) * i / 5.0;
        const double fy = ymin + (ymax - ymin) * i / 5.0;
        svg += "<text x=\"" + format_double(px(fx)) + "\" y=\"" + format_double(height - mb + 20) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
               format_double(fx) + "</text>\n";
        svg += "<text x=\"" + format_double(ml - 8) + "\" y=\"" +
               format_double(height - mb - (height - mt - mb) * i / 5.0 + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
               format_double(log_y ? std::pow(10.0, fy) : fy) + "</text>\n";
    }
    svg += "<text x=\"" + format_double((ml + width - mr) / 2) + "\" y=\"" +
           format_double(height - 16) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" + x_label +
           "</text>\n";
    svg += "<text x=\"20\" y=\"" + format_double((mt + height - mb) / 2) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 20 " + format_double((mt + height - mb) / 2) + ")\">" +
           y_label + "</text>\n";

    for (std::size_t si = 0; si < series.size(); ++si) {
        const plot_series& s = series[si];
        const char* color = series_colors[si % 8];
        std::string pts;
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (std::isnan(s.y[i]) || (log_y && s.y[i] <= 0.0)) {
                continue;
            }
            pts += format_double(px(s.x[i])) + "," + format_double(py(s.y[i])) + " ";
        }
        svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
               "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
        svg += "<text x=\"" + format_double(width - mr - 8) + "\" y=\"" +
               format_double(mt + 16.0 * static_cast<double>(si)) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" +
               color + "\">" + s.label + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace prsense
