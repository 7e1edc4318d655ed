// Copyright 2026 The mustab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "mustab/text.hpp"
#include "mustab/text_index.hpp"

namespace mustab {

/// A MUS occurrence T[start..end], 1-based and inclusive.
struct MusInterval {
    std::size_t start = 0;
    std::size_t end = 0;

    [[nodiscard]] std::size_t length() const noexcept { return end - start + 1; }
    [[nodiscard]] bool contains(std::size_t pos) const noexcept { return start <= pos && pos <= end; }

    friend auto operator<=>(const MusInterval&, const MusInterval&) = default;
};

/// The MUSs of one text, sorted by start. Because MUSs never nest, the ends
/// are strictly increasing as well, which is what makes stabbing queries a
/// pair of binary searches.
class MusSet {
public:
    MusSet() = default;
    /// Takes intervals already sorted by start; throws Error(kInvalidArgument)
    /// when starts or ends are not strictly increasing.
    explicit MusSet(std::vector<MusInterval> intervals);

    [[nodiscard]] const std::vector<MusInterval>& intervals() const noexcept { return intervals_; }
    [[nodiscard]] std::size_t size() const noexcept { return intervals_.size(); }
    [[nodiscard]] bool empty() const noexcept { return intervals_.empty(); }
    [[nodiscard]] auto begin() const noexcept { return intervals_.begin(); }
    [[nodiscard]] auto end() const noexcept { return intervals_.end(); }

    friend bool operator==(const MusSet&, const MusSet&) = default;

private:
    std::vector<MusInterval> intervals_;
};

/// All MUSs of the indexed text. Position i starts a MUS iff L[i] is defined
/// and L[i+1] >= L[i], where L[n+1] and undefined entries count as infinity.
MusSet compute_mus(const TextIndex& index);

/// Index + enumeration in one call.
MusSet compute_mus(const Text& text);

/// MUS(T, pos): the intervals containing pos, in start order. The result is
/// a contiguous slice of the set. Throws kPositionOutOfRange unless
/// 1 <= pos <= n.
std::span<const MusInterval> mus_stab(const MusSet& set, std::size_t pos, std::size_t n);

struct StabMax {
    std::size_t pos = 1;
    std::size_t count = 0;
};

/// Position with the largest stabbing count (smallest such position).
StabMax max_stab(const MusSet& set, std::size_t n);

/// Stabbing count at every position 1..n (entry 0 unused).
std::vector<std::size_t> stab_profile(const MusSet& set, std::size_t n);

/// sqrt(12n + 18) - 2: the largest stabbing count allowed for a text of
/// length n. From h+1 MUSs through one position, h^2/6 + h - 3/2 < 2n, so
/// (h + 3)^2 < 12n + 18.
double sqrt_stab_bound(std::size_t n) noexcept;

struct BoundReport {
    std::size_t n = 0;
    std::size_t mus_count = 0;
    std::size_t rle_size = 0;
    std::size_t max_stab_count = 0;
    std::size_t max_stab_pos = 1;
    double sqrt_bound = 0.0;
    bool bound_n_ok = false;     // |MUS| <= n
    bool bound_rle_ok = false;   // |MUS| <= 2 * rle - 1
    bool bound_sqrt_ok = false;  // max stab <= sqrt(12n + 18) - 2

    [[nodiscard]] bool all_ok() const noexcept { return bound_n_ok && bound_rle_ok && bound_sqrt_ok; }
};

BoundReport check_bounds(const Text& text, const MusSet& set);

/// Re-checks the MUS definition for one interval with occurrence counts.
bool is_mus(const TextIndex& index, const MusInterval& interval);

}  // namespace mustab
