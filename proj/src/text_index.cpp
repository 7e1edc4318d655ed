// Copyright 2026 The mustab Authors
// SPDX-License-Identifier: Apache-2.0

#include "mustab/text_index.hpp"

#include <algorithm>

#include "mustab/error.hpp"

namespace mustab {

TextIndex build_index(Text text) {
    if (text.empty()) {
        throw Error(ErrorCode::kEmptyText, "cannot index an empty text");
    }
    TextIndex idx;
    idx.text_ = std::move(text);
    const auto bytes = idx.text_.bytes();
    const auto n = static_cast<index_t>(bytes.size());

    idx.sa_ = build_suffix_array(bytes);
    std::vector<index_t> rank(n);
    for (index_t r = 0; r < n; ++r) {
        rank[idx.sa_[r]] = r;
    }
    idx.lcp_ = build_lcp_array(bytes, idx.sa_, rank);

    // L[i] = 1 + max lcp with either rank neighbour; undefined when that
    // substring would run past the end of the text.
    idx.unique_len_.assign(n, kUndefinedLength);
    for (index_t i = 0; i < n; ++i) {
        const index_t r = rank[i];
        index_t longest = 0;
        if (r > 0) {
            longest = idx.lcp_[r - 1];
        }
        if (r + 1 < n) {
            longest = std::max(longest, idx.lcp_[r]);
        }
        if (i + longest + 1 <= n) {
            idx.unique_len_[i] = longest + 1;
        }
    }
    return idx;
}

index_t TextIndex::unique_len_at(std::size_t i) const {
    if (i < 1 || i > size()) {
        throw Error(ErrorCode::kPositionOutOfRange, "position " + std::to_string(i) + " out of range");
    }
    return unique_len_[i - 1];
}

std::pair<std::size_t, std::size_t> TextIndex::rank_range(std::string_view pattern) const {
    const std::string_view t = text_.view();
    // Compare the pattern against the first |pattern| symbols of a suffix.
    auto prefix_of = [&](index_t start) { return t.substr(static_cast<std::size_t>(start), pattern.size()); };
    const auto lo = std::partition_point(sa_.begin(), sa_.end(),
                                         [&](index_t start) { return prefix_of(start) < pattern; });
    const auto hi = std::partition_point(lo, sa_.end(),
                                         [&](index_t start) { return prefix_of(start) == pattern; });
    return {static_cast<std::size_t>(lo - sa_.begin()), static_cast<std::size_t>(hi - sa_.begin())};
}

std::size_t TextIndex::occurrence_count(std::string_view pattern) const {
    if (pattern.empty()) {
        return size() + 1;
    }
    if (pattern.size() > size()) {
        return 0;
    }
    const auto [lo, hi] = rank_range(pattern);
    return hi - lo;
}

std::vector<std::size_t> TextIndex::occurrences(std::string_view pattern) const {
    if (pattern.empty() || pattern.size() > size()) {
        return {};
    }
    const auto [lo, hi] = rank_range(pattern);
    std::vector<std::size_t> starts;
    starts.reserve(hi - lo);
    for (auto r = lo; r < hi; ++r) {
        starts.push_back(static_cast<std::size_t>(sa_[r]) + 1);
    }
    std::sort(starts.begin(), starts.end());
    return starts;
}

}  // namespace mustab
