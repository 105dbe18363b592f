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
#include <complex>
#include <stdexcept>
#include <string>

namespace prsense {

using cplx = std::complex<double>;

/// Propagation speed. The rounded radar convention (3.0e8 m/s) is used so
/// that range/velocity grid values come out on round numbers.
inline constexpr double speed_of_light = 3.0e8;

inline constexpr double pi = 3.14159265358979323846;

/// Thrown when a requested configuration violates a standards constraint or
/// a precondition (unsupported band, Table IV violation, indivisible grid...).
class config_error : public std::invalid_argument {
  public:
    explicit config_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when an operation receives numerically unusable input
/// (all-zero column, division hazard, singular Fisher matrix...).
class numeric_error : public std::runtime_error {
  public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

} // namespace prsense
