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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prsense/common.hpp"

namespace prsense {

/// Minimal block-structured configuration format:
///
///   numerology { mu = 3 }
///   prs { comb = 4, symbols = 12, n_id = 0 }
///   target { range_m = 50, velocity_mps = 15, snr_db = 5, carrier_hz = 24e9 }
///   sweep { snr_db = [-5, 0, 5], ma = [1, 10], trials = 1000, seed = 1 }
///
/// Values are numbers, identifiers/strings, or flat lists of numbers.
/// '#' starts a comment. Keys are separated by commas or newlines.
class config_file {
  public:
    static config_file parse(const std::string& text);
    static config_file load(const std::string& path);

    bool has_block(const std::string& block) const;
    bool has(const std::string& block, const std::string& key) const;

    double number(const std::string& block, const std::string& key) const;
    double number_or(const std::string& block, const std::string& key, double fallback) const;
    long integer(const std::string& block, const std::string& key) const;
    long integer_or(const std::string& block, const std::string& key, long fallback) const;
    std::string str_or(const std::string& block, const std::string& key,
                       const std::string& fallback) const;
    std::vector<double> list_or(const std::string& block, const std::string& key,
                                std::vector<double> fallback) const;

  private:
    struct value {
        std::string text;           // raw scalar (identifier/number/string)
        std::vector<double> items;  // list payload
        bool is_list = false;
    };
    std::map<std::string, std::map<std::string, value>> blocks_;

    const value* find(const std::string& block, const std::string& key) const;
};

} // namespace prsense
