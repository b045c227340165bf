// Copyright 2026 crossin authors
//
// Licensed under the Apache License, Version 2.0 http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace crossin {

inline constexpr const char* kToolkitVersion = "0.1.0";

// Sentinel for an unparseable model response. Compares unequal to every
// option index and to itself, and always scores incorrect.
inline constexpr int8_t kAbstain = -1;

inline constexpr int kChoicesPerItem = 4;

// ASCII whitespace trim. Corpus and benchmark text is UTF-8; multi-byte
// whitespace is left alone on purpose.
inline std::string_view trim(std::string_view s) {
    const char* ws = " \t\n\r\f\v";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

// Collapses runs of ASCII whitespace to one space and trims the ends.
// Used for "distinct after whitespace normalization" checks.
inline std::string normalize_whitespace(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool in_ws = true;  // leading whitespace is dropped
    for (char c : s) {
        bool ws = c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
        if (ws) {
            if (!in_ws) out.push_back(' ');
            in_ws = true;
        } else {
            out.push_back(c);
            in_ws = false;
        }
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

// ASCII-only lowercase; multi-byte UTF-8 sequences pass through unchanged.
inline std::string ascii_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return out;
}

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.emplace_back(s.substr(start));
            break;
        }
        parts.emplace_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return parts;
}

// Renders a fraction as a percentage with one decimal, e.g. 0.906 -> "90.6".
std::string percent(double fraction);

// FNV-1a, 64-bit. Stable across platforms; used for transcript cache keys.
inline uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(uint64_t v);

}  // namespace crossin
