// Copyright 2026 The mustab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mustab/text.hpp"
#include "mustab/verify.hpp"

namespace mustab {

enum class EditKind { kSubstitute, kInsert, kDelete };

std::string_view to_string(EditKind kind) noexcept;
/// Accepts sub/substitute, ins/insert, del/delete.
EditKind parse_edit_kind(std::string_view name);

/// Single-character edit. Substitute and delete need 1 <= pos <= n; insert
/// needs 1 <= pos <= n + 1 and places the symbol before pos.
struct EditOp {
    EditKind kind = EditKind::kSubstitute;
    std::size_t pos = 1;
    unsigned char symbol = 0;  // ignored for delete

    friend bool operator==(const EditOp&, const EditOp&) = default;
};

/// Throws kPositionOutOfRange, or kResultEmpty when deleting the only symbol.
Text apply_edit(const Text& text, const EditOp& op);

/// Position in the edited text whose stabbing set counts as "at the edit".
/// Substitute and insert: pos. Delete: pos, clamped to the new length.
std::size_t edit_position(const EditOp& op, std::size_t post_len) noexcept;

struct SensitivityRecord {
    EditOp edit;
    bool result_empty = false;  // delete of the last symbol; counts below unset
    std::size_t pre_count = 0;
    std::size_t post_count = 0;
    long long additive = 0;
    double multiplicative = 0.0;
    std::size_t new_at_edit = 0;    // new MUSs (by content) through the edit position
    std::size_t new_elsewhere = 0;  // new MUSs (by content) not through it
    std::size_t surviving = 0;      // MUSs present in both texts by content
    std::size_t pre_stab_at_edit = 0;   // |MUS(pre, pos)|, pos clamped to n
    std::size_t post_stab_at_edit = 0;  // |MUS(post, edit_position)|
    std::size_t post_len = 0;
};

SensitivityRecord sensitivity(const Text& text, const EditOp& op);

struct ScanOptions {
    std::vector<EditKind> kinds{EditKind::kSubstitute, EditKind::kInsert, EditKind::kDelete};
    /// Symbols tried by substitute and insert; unset means the symbols of the
    /// text plus one fresh symbol.
    std::optional<std::string> alphabet;
    std::size_t budget = 1u << 20;  // records
};

struct ScanResult {
    std::vector<SensitivityRecord> records;  // ordered by (pos, kind, symbol)
    std::optional<std::size_t> max_additive;        // index into records
    std::optional<std::size_t> max_multiplicative;  // index into records
};

/// Symbols of the text in byte order plus the smallest byte not present,
/// preferring lowercase letters.
std::string default_scan_alphabet(const Text& text);

/// Every requested edit, each evaluated from scratch. Throws
/// kBudgetExceeded when the number of edits exceeds options.budget.
ScanResult sensitivity_scan(const Text& text, const ScanOptions& options,
                            Execution execution = Execution::kParallel);

}  // namespace mustab
