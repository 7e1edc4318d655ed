// Copyright 2026 The mustab Authors
// SPDX-License-Identifier: Apache-2.0

#include "mustab/mus.hpp"

#include <algorithm>
#include <cmath>

#include "mustab/error.hpp"

namespace mustab {

MusSet::MusSet(std::vector<MusInterval> intervals) : intervals_(std::move(intervals)) {
    for (std::size_t k = 1; k < intervals_.size(); ++k) {
        const auto& a = intervals_[k - 1];
        const auto& b = intervals_[k];
        if (!(a.start < b.start && a.end < b.end)) {
            throw Error(ErrorCode::kInvalidArgument,
                        "nested or unsorted MUS intervals [" + std::to_string(a.start) + "," + std::to_string(a.end) +
                            "] and [" + std::to_string(b.start) + "," + std::to_string(b.end) + "]");
        }
    }
}

MusSet compute_mus(const TextIndex& index) {
    const auto& len = index.unique_len();
    const std::size_t n = len.size();
    if (n == 0) {
        throw Error(ErrorCode::kEmptyText, "compute_mus on an empty text");
    }
    std::vector<MusInterval> out;
    for (std::size_t i = 0; i < n; ++i) {
        const index_t here = len[i];
        if (here == kUndefinedLength) {
            continue;
        }
        const index_t next = i + 1 < n ? len[i + 1] : kUndefinedLength;
        if (next >= here) {
            out.push_back({i + 1, i + static_cast<std::size_t>(here)});
        }
    }
    return MusSet(std::move(out));
}

MusSet compute_mus(const Text& text) { return compute_mus(build_index(text)); }

std::span<const MusInterval> mus_stab(const MusSet& set, std::size_t pos, std::size_t n) {
    if (pos < 1 || pos > n) {
        throw Error(ErrorCode::kPositionOutOfRange,
                    "position " + std::to_string(pos) + " outside 1.." + std::to_string(n));
    }
    const auto& iv = set.intervals();
    // Ends and starts are both increasing: the stabbing set is the slice
    // from the first interval ending at or after pos to the last starting at
    // or before it.
    const auto first = std::partition_point(iv.begin(), iv.end(), [&](const MusInterval& m) { return m.end < pos; });
    const auto last = std::partition_point(first, iv.end(), [&](const MusInterval& m) { return m.start <= pos; });
    return {first, last};
}

std::vector<std::size_t> stab_profile(const MusSet& set, std::size_t n) {
    std::vector<long long> delta(n + 2, 0);
    for (const auto& m : set) {
        ++delta[m.start];
        --delta[m.end + 1];
    }
    std::vector<std::size_t> profile(n + 1, 0);
    long long running = 0;
    for (std::size_t p = 1; p <= n; ++p) {
        running += delta[p];
        profile[p] = static_cast<std::size_t>(running);
    }
    return profile;
}

StabMax max_stab(const MusSet& set, std::size_t n) {
    StabMax best;
    if (n == 0) {
        return best;
    }
    const auto profile = stab_profile(set, n);
    for (std::size_t p = 1; p <= n; ++p) {
        if (profile[p] > best.count) {
            best = {p, profile[p]};
        }
    }
    return best;
}

double sqrt_stab_bound(std::size_t n) noexcept { return std::sqrt(12.0 * static_cast<double>(n) + 18.0) - 2.0; }

BoundReport check_bounds(const Text& text, const MusSet& set) {
    BoundReport r;
    r.n = text.size();
    r.mus_count = set.size();
    r.rle_size = text.empty() ? 0 : rle_size(text);
    const auto best = max_stab(set, r.n);
    r.max_stab_pos = best.pos;
    r.max_stab_count = best.count;
    r.sqrt_bound = sqrt_stab_bound(r.n);
    r.bound_n_ok = r.mus_count <= r.n;
    r.bound_rle_ok = r.mus_count + 1 <= 2 * r.rle_size;
    r.bound_sqrt_ok = static_cast<double>(r.max_stab_count) <= r.sqrt_bound;
    return r;
}

bool is_mus(const TextIndex& index, const MusInterval& interval) {
    const auto& t = index.text();
    if (interval.start < 1 || interval.start > interval.end || interval.end > t.size()) {
        return false;
    }
    return index.occurrence_count(t.substr(interval.start, interval.end)) == 1 &&
           index.occurrence_count(t.substr(interval.start, interval.end - 1)) >= 2 &&
           index.occurrence_count(t.substr(interval.start + 1, interval.end)) >= 2;
}

}  // namespace mustab
