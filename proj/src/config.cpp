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

#include "prsense/config.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace prsense {

namespace {

struct lexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < s.size()) {
            const char c = s[pos];
            if (c == '#') {
                while (pos < s.size() && s[pos] != '\n') {
                    ++pos;
                }
            } else if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
                ++pos;
            } else {
                break;
            }
        }
    }

    bool eof() {
        skip_space();
        return pos >= s.size();
    }

    char peek() {
        skip_space();
        return pos < s.size() ? s[pos] : '\0';
    }

    bool accept(char c) {
        skip_space();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string token() {
        skip_space();
        if (pos >= s.size()) {
            throw config_error("config: unexpected end of input");
        }
        if (s[pos] == '"') {
            ++pos;
            std::string out;
            while (pos < s.size() && s[pos] != '"') {
                out += s[pos++];
            }
            if (pos >= s.size()) {
                throw config_error("config: unterminated string");
            }
            ++pos;
            return out;
        }
        std::string out;
        while (pos < s.size()) {
            const char c = s[pos];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-' ||
                c == '+' || c == 'e' || c == 'E') {
                out += c;
                ++pos;
            } else {
                break;
            }
        }
        if (out.empty()) {
            throw config_error("config: unexpected character '" + std::string(1, s[pos]) + "'");
        }
        return out;
    }
};

double to_number(const std::string& t, const std::string& where) {
    try {
        std::size_t used = 0;
        const double v = std::stod(t, &used);
        if (used != t.size()) {
            throw std::invalid_argument(t);
        }
        return v;
    } catch (const std::exception&) {
        throw config_error("config: '" + where + "' is not a number: " + t);
    }
}

} // namespace

config_file config_file::parse(const std::string& text) {
    config_file cfg;
    lexer lx{text};
    while (!lx.eof()) {
        const std::string block = lx.token();
        if (!lx.accept('{')) {
            throw config_error("config: expected '{' after block '" + block + "'");
        }
        auto& kv = cfg.blocks_[block];
        while (!lx.accept('}')) {
            if (lx.eof()) {
                throw config_error("config: unterminated block '" + block + "'");
            }
            const std::string key = lx.token();
            if (!lx.accept('=')) {
                throw config_error("config: expected '=' after key '" + key + "'");
            }
            value v;
            if (lx.accept('[')) {
                v.is_list = true;
                while (!lx.accept(']')) {
                    if (lx.eof()) {
                        throw config_error("config: unterminated list for key '" + key + "'");
                    }
                    v.items.push_back(to_number(lx.token(), block + "." + key));
                }
            } else {
                v.text = lx.token();
            }
            kv[key] = std::move(v);
        }
    }
    return cfg;
}

config_file config_file::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw config_error("config: cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

const config_file::value* config_file::find(const std::string& block,
                                            const std::string& key) const {
    auto b = blocks_.find(block);
    if (b == blocks_.end()) {
        return nullptr;
    }
    auto k = b->second.find(key);
    return k == b->second.end() ? nullptr : &k->second;
}

bool config_file::has_block(const std::string& block) const { return blocks_.count(block) != 0; }

bool config_file::has(const std::string& block, const std::string& key) const {
    return find(block, key) != nullptr;
}

double config_file::number(const std::string& block, const std::string& key) const {
    const value* v = find(block, key);
    if (v == nullptr) {
        throw config_error("config: missing " + block + "." + key);
    }
    if (v->is_list) {
        throw config_error("config: " + block + "." + key + " is a list, expected scalar");
    }
    return to_number(v->text, block + "." + key);
}

double config_file::number_or(const std::string& block, const std::string& key,
                              double fallback) const {
    return has(block, key) ? number(block, key) : fallback;
}

long config_file::integer(const std::string& block, const std::string& key) const {
    const double v = number(block, key);
    const long i = static_cast<long>(v);
    if (static_cast<double>(i) != v) {
        throw config_error("config: " + block + "." + key + " must be an integer");
    }
    return i;
}

long config_file::integer_or(const std::string& block, const std::string& key,
                             long fallback) const {
    return has(block, key) ? integer(block, key) : fallback;
}

std::string config_file::str_or(const std::string& block, const std::string& key,
                                const std::string& fallback) const {
    const value* v = find(block, key);
    if (v == nullptr) {
        return fallback;
    }
    if (v->is_list) {
        throw config_error("config: " + block + "." + key + " is a list, expected string");
    }
    return v->text;
}

std::vector<double> config_file::list_or(const std::string& block, const std::string& key,
                                         std::vector<double> fallback) const {
    const value* v = find(block, key);
    if (v == nullptr) {
        return fallback;
    }
    if (!v->is_list) {
        return {to_number(v->text, block + "." + key)};
    }
    return v->items;
}

} // namespace prsense
