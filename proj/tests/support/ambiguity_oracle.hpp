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

// Test-only oracle: the matched-filter response integrated numerically in
// the time domain, independent of the closed-form evaluation under test.

#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "prsense/grid.hpp"

namespace prsense::testing {

/// One symbol of the transmitted baseband signal, evaluated in the time
/// domain straight from its definition (sum of complex exponentials).
inline cplx symbol_signal_at(const resource_grid& g, int m, double t) {
    const int k0 = g.k0_of_symbol[static_cast<std::size_t>(m)];
    cplx acc{0.0, 0.0};
    for (int k = 0; k < g.prs_per_symbol(); ++k) {
        const double f = (g.comb_stride * k + k0) * g.numerology.delta_f_hz;
        const double ph = 2.0 * pi * f * t;
        acc += g.at(g.comb_stride * k + k0, m) * cplx{std::cos(ph), std::sin(ph)};
    }
    return acc;
}

/// Direct numerical integration of the matched-filter response. The
/// integration domain is split at every rectangle edge; inside a piece both
/// active symbols are fixed (decided at the piece midpoint), so composite
/// Simpson sees a smooth integrand and converges at fourth order.
inline cplx integrate_response(const resource_grid& g, double tau, double fd, int nodes = 8001) {
    const double ts = g.numerology.t_symbol_s;
    std::vector<double> bps;
    for (int m = 0; m <= g.num_prs_symbols; ++m) {
        bps.push_back(m * ts);
        bps.push_back(tau + m * ts);
    }
    std::sort(bps.begin(), bps.end());
    cplx total{0.0, 0.0};
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
        const double a = bps[i];
        const double b = bps[i + 1];
        if (b - a <= 1e-18) {
            continue;
        }
        const double mid = 0.5 * (a + b);
        const int m1 = static_cast<int>(std::floor(mid / ts));
        const int m2 = static_cast<int>(std::floor((mid - tau) / ts));
        if (m1 < 0 || m1 >= g.num_prs_symbols || m2 < 0 || m2 >= g.num_prs_symbols) {
            continue;
        }
        const double h = (b - a) / (nodes - 1);
        cplx acc{0.0, 0.0};
        for (int j = 0; j < nodes; ++j) {
            const double t = a + h * j;
            const double w = (j == 0 || j == nodes - 1) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
            const double ph = 2.0 * pi * fd * t;
            acc += w * symbol_signal_at(g, m1, t) * std::conj(symbol_signal_at(g, m2, t - tau)) *
                   cplx{std::cos(ph), std::sin(ph)};
        }
        total += acc * (h / 3.0);
    }
    return total;
}

} // namespace prsense::testing
