// Copyright 2026 The mustab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace mustab {

using index_t = std::int32_t;

/// Suffix array of a byte string by induced sorting (SA-IS). Entries are
/// 0-based suffix starts in lexicographic order. The input must be shorter
/// than 2^31 symbols.
std::vector<index_t> build_suffix_array(std::span<const unsigned char> text);

/// Kasai et al. LCP construction: lcp[r] is the common-prefix length of the
/// suffixes at ranks r and r + 1, so the result has sa.size() - 1 entries.
/// `rank` must be the inverse permutation of `sa`.
std::vector<index_t> build_lcp_array(std::span<const unsigned char> text,
                                     std::span<const index_t> sa,
                                     std::span<const index_t> rank);

}  // namespace mustab
