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

#include <cmath>
#include <cstdint>

#include "prsense/common.hpp"

namespace prsense {

/// Small deterministic generator (splitmix64 core). Used instead of
/// std::mt19937 + distributions so that seeded runs are bit-identical
/// across standard libraries and platforms.
class rng64 {
  public:
    explicit rng64(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double next_uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller (one value per call, second cached).
    double next_normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_uniform();
        double u2 = next_uniform();
        while (u1 <= 0.0) {
            u1 = next_uniform();
        }
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double th = 2.0 * pi * u2;
        spare_ = r * std::sin(th);
        have_spare_ = true;
        return r * std::cos(th);
    }

    /// Circularly-symmetric complex normal with total variance `variance`.
    cplx next_cnormal(double variance) {
        const double s = std::sqrt(variance / 2.0);
        const double re = next_normal();
        const double im = next_normal();
        return {s * re, s * im};
    }

  private:
    uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// Order-independent trial seeding: hash(master, snr index, m_a index, trial).
inline uint64_t mix_seed(uint64_t master, uint64_t a, uint64_t b, uint64_t c) {
    rng64 g(master ^ (a * 0x9e3779b97f4a7c15ull) ^ (b * 0xc2b2ae3d27d4eb4full) ^
            (c * 0x165667b19e3779f9ull));
    g.next_u64();
    return g.next_u64();
}

} // namespace prsense
