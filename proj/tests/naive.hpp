// Copyright 2026 The mustab Authors
// SPDX-License-Identifier: Apache-2.0

// Test-only reference implementations. Nothing here touches the library's
// suffix structures; everything is direct scanning and sorting.

#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mustab::naive {

inline std::size_t occ(std::string_view t, std::string_view w) {
    if (w.empty()) {
        return t.size() + 1;
    }
    std::size_t c = 0;
    for (std::size_t k = 0; k + w.size() <= t.size(); ++k) {
        c += t.substr(k, w.size()) == w;
    }
    return c;
}

/// 1-based suffix starts in lexicographic order.
inline std::vector<std::size_t> suffix_array(std::string_view t) {
    std::vector<std::size_t> sa(t.size());
    std::iota(sa.begin(), sa.end(), std::size_t{0});
    std::sort(sa.begin(), sa.end(), [&](std::size_t a, std::size_t b) { return t.substr(a) < t.substr(b); });
    for (auto& s : sa) {
        ++s;
    }
    return sa;
}

inline std::size_t common_prefix(std::string_view a, std::string_view b) {
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) {
        ++k;
    }
    return k;
}

inline std::vector<std::size_t> lcp(std::string_view t) {
    const auto sa = suffix_array(t);
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r + 1 < sa.size(); ++r) {
        out.push_back(common_prefix(t.substr(sa[r] - 1), t.substr(sa[r + 1] - 1)));
    }
    return out;
}

/// Shortest unique length at each 1-based position, by occurrence counting.
inline std::vector<std::optional<std::size_t>> unique_len(std::string_view t) {
    std::vector<std::optional<std::size_t>> out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        std::optional<std::size_t> found;
        for (std::size_t len = 1; i + len <= t.size(); ++len) {
            if (occ(t, t.substr(i, len)) == 1) {
                found = len;
                break;
            }
        }
        out.push_back(found);
    }
    return out;
}

/// (start, end) pairs of every MUS, straight from the definition, O(n^4).
inline std::vector<std::pair<std::size_t, std::size_t>> mus(std::string_view t) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t j = i; j < t.size(); ++j) {
            const auto w = t.substr(i, j - i + 1);
            if (occ(t, w) == 1 && occ(t, w.substr(0, w.size() - 1)) >= 2 && occ(t, w.substr(1)) >= 2) {
                out.emplace_back(i + 1, j + 1);
            }
        }
    }
    return out;
}

/// Every text over {'a', ...} of exactly `len` symbols.
inline std::vector<std::string> all_texts(std::size_t alphabet, std::size_t len) {
    std::vector<std::string> out{""};
    for (std::size_t pos = 0; pos < len; ++pos) {
        std::vector<std::string> next;
        for (const auto& s : out) {
            for (std::size_t c = 0; c < alphabet; ++c) {
                next.push_back(s + static_cast<char>('a' + c));
            }
        }
        out = std::move(next);
    }
    return out;
}

}  // namespace mustab::naive
