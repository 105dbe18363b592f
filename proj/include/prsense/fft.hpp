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

#include <span>
#include <vector>

#include "prsense/common.hpp"

namespace prsense {

/// In-place DFT of arbitrary length. Radix-2 Cooley-Tukey for power-of-two
/// sizes, Bluestein's chirp-z otherwise. `inverse` selects kernel sign
/// e^{+j2pi lk/N}; no 1/N normalization is applied either way (peak search
/// does not care, and the spec of the estimators keeps magnitudes raw).
void fft(std::vector<cplx>& data, bool inverse);

/// Zero-padded transform of `x` to `length` output bins.
/// positive_exponent=true evaluates X(l) = sum_k x_k e^{+j2pi lk/length}
/// (the unnormalized IFFT kernel used for ranging), otherwise the forward
/// e^{-j2pi lk/length} kernel. Picks radix-2 / direct tabulated / Bluestein
/// depending on size; all paths agree to ~1e-13.
std::vector<cplx> zero_padded_transform(std::span<const cplx> x, std::size_t length,
                                        bool positive_exponent);

/// Index of the largest magnitude; ties resolved to the lowest index.
std::size_t argmax_magnitude(std::span<const cplx> spectrum);

} // namespace prsense
