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

#include <doctest.h>

#include <cmath>

#include "prsense/config.hpp"
#include "prsense/io.hpp"
#include "prsense/sweep.hpp"

using namespace prsense;

namespace {

sweep_spec small_spec() {
    sweep_spec spec;
    spec.scenario.range_m = 50.0;
    spec.scenario.velocity_mps = 15.0;
    spec.scenario.carrier_hz = 24e9;
    spec.pattern = make_prs_pattern(4, 12);
    spec.numerology = numerology_from_mu(3);
    spec.n_subcarriers = 256;
    spec.snr_grid_db = {0.0, 5.0};
    spec.trials = 25;
    spec.m_a_values = {1, 10};
    spec.master_seed = 12345;
    return spec;
}

} // namespace

TEST_SUITE("harness") {

TEST_CASE("config parser reads blocks, scalars, lists and comments") {
    const std::string text = R"(
# scenario description
numerology { mu = 3 }
prs { comb = 4, symbols = 12, n_id = 0 }
target {
  range_m = 50
  velocity_mps = 15.0
  snr_db = 5
  carrier_hz = 24e9
}
sweep { snr_db = [-5, 0, 5], ma = [1, 10], trials = 100, out = "results" }
)";
    const config_file cfg = config_file::parse(text);
    CHECK(cfg.has_block("numerology"));
    CHECK(cfg.integer("numerology", "mu") == 3);
    CHECK(cfg.integer("prs", "comb") == 4);
    CHECK(cfg.number("target", "range_m") == 50.0);
    CHECK(cfg.number("target", "carrier_hz") == 24e9);
    CHECK(cfg.str_or("sweep", "out", "") == "results");
    CHECK(cfg.list_or("sweep", "snr_db", {}) == std::vector<double>{-5.0, 0.0, 5.0});
    CHECK(cfg.list_or("sweep", "ma", {}) == std::vector<double>{1.0, 10.0});
    CHECK(cfg.integer_or("sweep", "missing", 7) == 7);
    CHECK_FALSE(cfg.has("target", "attenuation"));
}

TEST_CASE("config parser rejects malformed input") {
    CHECK_THROWS_AS((void)config_file::parse("target { range_m = }"), config_error);
    CHECK_THROWS_AS((void)config_file::parse("target { range_m 50 }"), config_error);
    CHECK_THROWS_AS((void)config_file::parse("target { range_m = 50"), config_error);
    CHECK_THROWS_AS((void)config_file::parse("sweep { snr = [1, 2 }"), config_error);
    const config_file cfg = config_file::parse("a { b = x }");
    CHECK_THROWS_AS((void)cfg.number("a", "b"), config_error);
    CHECK_THROWS_AS((void)cfg.number("a", "missing"), config_error);
}

TEST_CASE("equal seeds give byte-identical sweep CSV") {
    const sweep_spec spec = small_spec();
    const std::string a = sweep_to_csv(run_sweep(spec));
    const std::string b = sweep_to_csv(run_sweep(spec));
    CHECK(a == b);
}

TEST_CASE("different seeds give different trials") {
    sweep_spec spec = small_spec();
    const sweep_result a = run_sweep(spec);
    spec.master_seed = 999;
    const sweep_result b = run_sweep(spec);
    bool any_diff = false;
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        any_diff |= a.rows[i].rmse_range_m != b.rows[i].rmse_range_m;
    }
    CHECK(any_diff);
}

TEST_CASE("sweep rows cover the full snr x m_a grid") {
    const sweep_result r = run_sweep(small_spec());
    REQUIRE(r.rows.size() == 4);
    CHECK(r.rows[0].snr_db == 0.0);
    CHECK(r.rows[0].m_a == 1);
    CHECK(r.rows[3].snr_db == 5.0);
    CHECK(r.rows[3].m_a == 10);
    for (const sweep_row& row : r.rows) {
        CHECK(std::isfinite(row.rmse_range_m));
        CHECK(row.rmse_range_m >= 0.0);
        CHECK(row.root_crlb_range_m > 0.0);
        CHECK(row.trials == 25);
    }
}

TEST_CASE("per-trial records serialize to JSON") {
    sweep_spec spec = small_spec();
    spec.snr_grid_db = {5.0};
    spec.m_a_values = {1};
    spec.trials = 3;
    const sweep_result r = run_sweep(spec, true);
    REQUIRE(r.records.size() == 3);
    const std::string json = records_to_json(r);
    CHECK(json.find("\"est_range_m\"") != std::string::npos);
    CHECK(json.find("\"peak_indices\"") != std::string::npos);
}

TEST_CASE("signal comparison produces all four curves") {
    sweep_spec spec = small_spec();
    spec.snr_grid_db = {0.0};
    spec.trials = 10;
    spec.m_a_values = {10};
    const auto curves = compare_signals(spec);
    REQUIRE(curves.size() == 4);
    CHECK(curves[0].first == "prs");
    CHECK(curves[1].first == "prs_narrow");
    CHECK(curves[2].first == "ss");
    CHECK(curves[3].first == "dmrs");
    for (const auto& [name, result] : curves) {
        REQUIRE(result.rows.size() == 1);
        CHECK(std::isfinite(result.rows[0].rmse_range_m));
        // single-symbol footprints cannot estimate velocity
        CHECK(std::isnan(result.rows[0].rmse_velocity_mps));
    }
    const std::string csv = compare_to_csv(curves);
    CHECK(csv.find("prs_narrow,0,") != std::string::npos);
}

TEST_CASE("trade-off tables carry the frame-design figures") {
    const int mus[] = {2};
    const int s_i[] = {128};
    const int n_f[] = {1, 3};
    const double snrs[] = {5.0};
    const tradeoff_tables_result t = tradeoff_tables(mus, s_i, n_f, snrs, 256, 128, 4, 24e9);
    REQUIRE(t.overhead_rows.size() == 2);
    CHECK(t.overhead_rows[0].overhead == doctest::Approx(128.0 / 560.0).epsilon(1e-12));
    CHECK(t.overhead_rows[1].refresh_s == doctest::Approx(0.03).epsilon(1e-12));
    CHECK(t.overhead_rows[1].dv_multi_mps == doctest::Approx(0.9124).epsilon(2e-3));
    REQUIRE(t.crlb_rows.size() == 1);
    CHECK(t.crlb_rows[0].mu == 2);
}

TEST_CASE("bounds table carries both sources") {
    const std::string csv = bounds_table_csv({0.0, 5.0}, numerology_from_mu(3), 64, 32, 4, 24e9);
    CHECK(csv.find("closed_form") != std::string::npos);
    CHECK(csv.find("fisher_oracle") != std::string::npos);
}

TEST_CASE("svg plot renders a polyline per series") {
    plot_series s1{"a", {0.0, 1.0, 2.0}, {1.0, 0.5, 0.25}};
    plot_series s2{"b", {0.0, 1.0, 2.0}, {2.0, 1.0, 0.5}};
    const std::string svg = svg_line_plot("t", "x", "y", {s1, s2}, true);
    CHECK(svg.find("<svg") != std::string::npos);
    std::size_t count = 0;
    std::size_t pos = 0;
    while ((pos = svg.find("<polyline", pos)) != std::string::npos) {
        ++count;
        pos += 1;
    }
    CHECK(count == 2);
}

TEST_CASE("sweep validates its inputs") {
    sweep_spec spec = small_spec();
    spec.trials = 0;
    CHECK_THROWS_AS((void)run_sweep(spec), config_error);
    spec = small_spec();
    spec.snr_grid_db = {};
    CHECK_THROWS_AS((void)run_sweep(spec), config_error);
    spec = small_spec();
    spec.frames = 0;
    CHECK_THROWS_AS((void)run_sweep(spec), config_error);
}

} // TEST_SUITE
