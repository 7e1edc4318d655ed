// Copyright 2026 The mustab Authors
// SPDX-License-Identifier: Apache-2.0

#include "mustab/suffix_array.hpp"

#include <algorithm>
#include <limits>

#include "mustab/error.hpp"

namespace mustab {

namespace {

// SA-IS over symbols in [0, upper]. The sentinel is implicit: the last
// suffix is L-type and the virtual empty suffix is smaller than all others.
template <typename Symbol>
std::vector<index_t> sa_is(std::span<const Symbol> s, index_t upper) {
    const auto n = static_cast<index_t>(s.size());
    if (n == 0) {
        return {};
    }
    if (n == 1) {
        return {0};
    }
    if (n == 2) {
        return s[0] < s[1] ? std::vector<index_t>{0, 1} : std::vector<index_t>{1, 0};
    }

    std::vector<index_t> sa(n);
    std::vector<bool> is_s(n, false);
    for (index_t i = n - 2; i >= 0; --i) {
        is_s[i] = s[i] == s[i + 1] ? is_s[i + 1] : s[i] < s[i + 1];
    }

    // Bucket boundaries: L-type suffixes fill a bucket from its head, S-type
    // from its tail. sum_l[c] is the head of bucket c, sum_s[c] the head of
    // its S-part.
    std::vector<index_t> sum_l(upper + 1, 0);
    std::vector<index_t> sum_s(upper + 1, 0);
    for (index_t i = 0; i < n; ++i) {
        if (!is_s[i]) {
            ++sum_s[s[i]];
        } else {
            ++sum_l[s[i] + 1];
        }
    }
    for (index_t c = 0; c <= upper; ++c) {
        sum_s[c] += sum_l[c];
        if (c < upper) {
            sum_l[c + 1] += sum_s[c];
        }
    }

    std::vector<index_t> bucket(upper + 1);
    auto induce = [&](const std::vector<index_t>& lms) {
        std::fill(sa.begin(), sa.end(), -1);
        std::copy(sum_s.begin(), sum_s.end(), bucket.begin());
        for (const index_t d : lms) {
            if (d != n) {
                sa[bucket[s[d]]++] = d;
            }
        }
        std::copy(sum_l.begin(), sum_l.end(), bucket.begin());
        sa[bucket[s[n - 1]]++] = n - 1;
        for (index_t r = 0; r < n; ++r) {
            const index_t v = sa[r];
            if (v >= 1 && !is_s[v - 1]) {
                sa[bucket[s[v - 1]]++] = v - 1;
            }
        }
        std::copy(sum_l.begin(), sum_l.end(), bucket.begin());
        for (index_t r = n - 1; r >= 0; --r) {
            const index_t v = sa[r];
            if (v >= 1 && is_s[v - 1]) {
                sa[--bucket[s[v - 1] + 1]] = v - 1;
            }
        }
    };

    std::vector<index_t> lms_id(n + 1, -1);
    std::vector<index_t> lms;
    for (index_t i = 1; i < n; ++i) {
        if (!is_s[i - 1] && is_s[i]) {
            lms_id[i] = static_cast<index_t>(lms.size());
            lms.push_back(i);
        }
    }
    const auto m = static_cast<index_t>(lms.size());

    induce(lms);
    if (m == 0) {
        return sa;
    }

    std::vector<index_t> sorted_lms;
    sorted_lms.reserve(m);
    for (const index_t v : sa) {
        if (lms_id[v] != -1) {
            sorted_lms.push_back(v);
        }
    }

    // Name LMS substrings; equal names iff equal substrings.
    std::vector<index_t> reduced(m);
    index_t name = 0;
    reduced[lms_id[sorted_lms[0]]] = 0;
    for (index_t k = 1; k < m; ++k) {
        index_t l = sorted_lms[k - 1];
        index_t r = sorted_lms[k];
        const index_t end_l = lms_id[l] + 1 < m ? lms[lms_id[l] + 1] : n;
        const index_t end_r = lms_id[r] + 1 < m ? lms[lms_id[r] + 1] : n;
        bool same = true;
        if (end_l - l != end_r - r) {
            same = false;
        } else {
            while (l < end_l && s[l] == s[r]) {
                ++l;
                ++r;
            }
            if (l == n || s[l] != s[r]) {
                same = false;
            }
        }
        if (!same) {
            ++name;
        }
        reduced[lms_id[sorted_lms[k]]] = name;
    }

    const auto reduced_sa = sa_is<index_t>(reduced, name);
    for (index_t k = 0; k < m; ++k) {
        sorted_lms[k] = lms[reduced_sa[k]];
    }
    induce(sorted_lms);
    return sa;
}

}  // namespace

std::vector<index_t> build_suffix_array(std::span<const unsigned char> text) {
    if (text.size() >= static_cast<std::size_t>(std::numeric_limits<index_t>::max())) {
        throw Error(ErrorCode::kInvalidArgument, "text too long for 32-bit suffix array");
    }
    return sa_is<unsigned char>(text, 255);
}

std::vector<index_t> build_lcp_array(std::span<const unsigned char> text, std::span<const index_t> sa,
                                     std::span<const index_t> rank) {
    const auto n = static_cast<index_t>(text.size());
    if (n == 0) {
        return {};
    }
    std::vector<index_t> lcp(n - 1, 0);
    index_t h = 0;
    for (index_t i = 0; i < n; ++i) {
        if (h > 0) {
            --h;
        }
        if (rank[i] == 0) {
            h = 0;
            continue;
        }
        const index_t j = sa[rank[i] - 1];
        while (i + h < n && j + h < n && text[i + h] == text[j + h]) {
            ++h;
        }
        lcp[rank[i] - 1] = h;
    }
    return lcp;
}

}  // namespace mustab
