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

#include <string>
#include <utility>
#include <vector>

#include "prsense/bounds.hpp"
#include "prsense/sweep.hpp"

namespace prsense {

/// Deterministic double formatting shared by every writer, so identical
/// runs produce byte-identical files.
std::string format_double(double v);

void write_text_file(const std::string& path, const std::string& content);

std::string sweep_to_csv(const sweep_result& result);
std::string records_to_json(const sweep_result& result);
std::string compare_to_csv(const std::vector<std::pair<std::string, sweep_result>>& curves);

/// (snr_db, crlb_range_m2, crlb_velocity_mps2, source) rows with both the
/// closed form and the Fisher oracle.
std::string bounds_table_csv(const std::vector<double>& snr_grid_db,
                             const numerology_config& numerology, int n_subcarriers,
                             int m_symbols, int comb_size, double carrier_hz);

std::string crlb_tradeoff_csv(const tradeoff_tables_result& t);
std::string overhead_csv(const tradeoff_tables_result& t);

std::string ambiguity_to_csv(const ambiguity_surface& surface);

/// Spectrum dump: index, axis value, magnitude.
std::string spectrum_to_csv(const std::vector<double>& magnitudes, double axis_step,
                            const std::string& axis_name);

/// Simple standalone line plot (log-y optional); one polyline per series.
struct plot_series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

std::string svg_line_plot(const std::string& title, const std::string& x_label,
                          const std::string& y_label, const std::vector<plot_series>& series,
                          bool log_y);

} // namespace prsense
