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

#include "prsense/fft.hpp"

#include <bit>
#include <cmath>
#include <unordered_map>

namespace prsense {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Per-size twiddle tables, forward sign. Cached per thread; transforms stay
// pure from the caller's point of view.
const std::vector<cplx>& twiddles(std::size_t n) {
    thread_local std::unordered_map<std::size_t, std::vector<cplx>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) {
        return it->second;
    }
    std::vector<cplx> w(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
        const double ang = -2.0 * pi * static_cast<double>(k) / static_cast<double>(n);
        w[k] = {std::cos(ang), std::sin(ang)};
    }
    return cache.emplace(n, std::move(w)).first->second;
}

void fft_pow2(std::vector<cplx>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n <= 1) {
        return;
    }
    // bit reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) {
            j ^= bit;
        }
        j ^= bit;
        if (i < j) {
            std::swap(a[i], a[j]);
        }
    }
    const auto& w = twiddles(n);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t step = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                cplx tw = w[k * step];
                if (inverse) {
                    tw = std::conj(tw);
                }
                const cplx u = a[i + k];
                const cplx v = a[i + k + len / 2] * tw;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
            }
        }
    }
}

// Bluestein chirp-z for arbitrary n, expressed through a power-of-two
// convolution. k^2 is reduced mod 2n before the angle is formed to keep the
// chirp phases accurate for large n.
void fft_bluestein(std::vector<cplx>& a, bool inverse) {
    const std::size_t n = a.size();
    const double sign = inverse ? 1.0 : -1.0;
    std::vector<cplx> w(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t k2 = (k * k) % (2 * n);
        const double ang = sign * pi * static_cast<double>(k2) / static_cast<double>(n);
        w[k] = {std::cos(ang), std::sin(ang)};
    }
    std::size_t m = 1;
    while (m < 2 * n - 1) {
        m <<= 1;
    }
    std::vector<cplx> fa(m), fb(m);
    for (std::size_t k = 0; k < n; ++k) {
        fa[k] = a[k] * w[k];
        fb[k] = std::conj(w[k]);
    }
    for (std::size_t k = 1; k < n; ++k) {
        fb[m - k] = std::conj(w[k]);
    }
    fft_pow2(fa, false);
    fft_pow2(fb, false);
    for (std::size_t k = 0; k < m; ++k) {
        fa[k] *= fb[k];
    }
    fft_pow2(fa, true);
    const double scale = 1.0 / static_cast<double>(m);
    for (std::size_t k = 0; k < n; ++k) {
        a[k] = fa[k] * scale * w[k];
    }
}

} // namespace

void fft(std::vector<cplx>& data, bool inverse) {
    if (is_pow2(data.size())) {
        fft_pow2(data, inverse);
    } else {
        fft_bluestein(data, inverse);
    }
}

std::vector<cplx> zero_padded_transform(std::span<const cplx> x, std::size_t length,
                                        bool positive_exponent) {
    if (length == 0 || x.size() > length) {
        throw config_error("zero_padded_transform: output length must cover the input");
    }
    // Direct evaluation with a tabulated kernel beats Bluestein while
    // n_in * length stays small, which covers every estimator size here.
    constexpr std::size_t direct_budget = 1u << 21;
    if (!is_pow2(length) && x.size() * length <= direct_budget) {
        std::vector<cplx> table(length);
        const double s = positive_exponent ? 1.0 : -1.0;
        for (std::size_t t = 0; t < length; ++t) {
            const double ang = s * 2.0 * pi * static_cast<double>(t) / static_cast<double>(length);
            table[t] = {std::cos(ang), std::sin(ang)};
        }
        std::vector<cplx> out(length);
        for (std::size_t l = 0; l < length; ++l) {
            cplx acc = 0.0;
            std::size_t idx = 0;
            for (std::size_t k = 0; k < x.size(); ++k) {
                acc += x[k] * table[idx];
                idx += l;
                if (idx >= length) {
                    idx -= length;
                }
            }
            out[l] = acc;
        }
        return out;
    }
    std::vector<cplx> buf(length, cplx{0.0, 0.0});
    std::copy(x.begin(), x.end(), buf.begin());
    fft(buf, positive_exponent);
    return buf;
}

std::size_t argmax_magnitude(std::span<const cplx> spectrum) {
    std::size_t best = 0;
    double best_mag = -1.0;
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        const double m = std::norm(spectrum[i]);
        if (m > best_mag) {
            best_mag = m;
            best = i;
        }
    }
    return best;
}

} // namespace prsense
