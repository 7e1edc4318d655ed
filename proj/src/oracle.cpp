// Copyright 2026 The mustab Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include "mustab/error.hpp"
#include "mustab/verify.hpp"

namespace mustab {

MusSet brute_mus(const Text& text, std::size_t cap) {
    const std::size_t n = text.size();
    if (n == 0) {
        throw Error(ErrorCode::kEmptyText, "brute_mus on an empty text");
    }
    if (n > cap) {
        throw Error(ErrorCode::kTextTooLargeForOracle,
                    "brute_mus cap is " + std::to_string(cap) + ", text has " + std::to_string(n) + " symbols");
    }
    const std::string_view t = text.view();

    // lce[k] = longest common extension of positions i and k (0-based),
    // rebuilt right to left from the row of i + 1.
    std::vector<std::size_t> lce(n + 1, 0), lce_next(n + 1, 0);
    // occ[len] = occurrences of T[i..i+len-1]; occ_next for i + 1.
    std::vector<std::size_t> occ(n + 2, 0), occ_next(n + 2, 0);
    std::vector<std::size_t> hist(n + 2, 0);
    occ_next[0] = n + 1;

    std::vector<MusInterval> found;
    for (std::size_t i = n; i-- > 0;) {
        std::fill(hist.begin(), hist.end(), 0);
        for (std::size_t k = 0; k < n; ++k) {
            lce[k] = t[i] == t[k] ? lce_next[k + 1] + 1 : 0;
            ++hist[lce[k]];
        }
        lce[n] = 0;
        const std::size_t max_len = n - i;
        // occ[len] = #{k : lce[k] >= len}
        std::size_t acc = 0;
        for (std::size_t len = n; len >= 1; --len) {
            acc += hist[len];
            occ[len] = acc;
        }
        occ[0] = n + 1;

        for (std::size_t len = 1; len <= max_len; ++len) {
            if (occ[len] == 1 && occ[len - 1] >= 2 && occ_next[len - 1] >= 2) {
                found.push_back({i + 1, i + len});
            }
        }
        std::swap(lce, lce_next);
        std::swap(occ, occ_next);
    }
    std::reverse(found.begin(), found.end());
    return MusSet(std::move(found));
}

}  // namespace mustab
