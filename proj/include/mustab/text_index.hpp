// Copyright 2026 The mustab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <limits>
#include <string_view>
#include <vector>

#include "mustab/suffix_array.hpp"
#include "mustab/text.hpp"

namespace mustab {

/// Marks a position at which no unique substring starts. Compares greater
/// than every defined length.
inline constexpr index_t kUndefinedLength = std::numeric_limits<index_t>::max();

/// Suffix array, LCP array and shortest-unique-length array over one text.
///
/// The arrays are stored 0-based (sa()[r] is the 0-based start of the suffix
/// of rank r; unique_len()[i] belongs to 1-based position i + 1). Use the
/// 1-based accessors when talking to users.
class TextIndex {
public:
    [[nodiscard]] const Text& text() const noexcept { return text_; }
    [[nodiscard]] std::size_t size() const noexcept { return text_.size(); }

    [[nodiscard]] const std::vector<index_t>& sa() const noexcept { return sa_; }
    [[nodiscard]] const std::vector<index_t>& lcp() const noexcept { return lcp_; }
    [[nodiscard]] const std::vector<index_t>& unique_len() const noexcept { return unique_len_; }

    /// Shortest unique length at 1-based position i, or kUndefinedLength.
    [[nodiscard]] index_t unique_len_at(std::size_t i) const;

    /// Number of occurrences of pattern; n + 1 for the empty pattern.
    [[nodiscard]] std::size_t occurrence_count(std::string_view pattern) const;

    /// 1-based start positions of every occurrence of a nonempty pattern,
    /// ascending.
    [[nodiscard]] std::vector<std::size_t> occurrences(std::string_view pattern) const;

    friend TextIndex build_index(Text text);

private:
    // [lo, hi) rank range of suffixes prefixed by pattern.
    [[nodiscard]] std::pair<std::size_t, std::size_t> rank_range(std::string_view pattern) const;

    Text text_;
    std::vector<index_t> sa_;
    std::vector<index_t> lcp_;
    std::vector<index_t> unique_len_;
};

/// Throws Error(kEmptyText) for an empty text.
TextIndex build_index(Text text);

}  // namespace mustab
