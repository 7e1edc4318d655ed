// Copyright 2026 The mustab Authors
// SPDX-License-Identifier: Apache-2.0

#include "mustab/sensitivity.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <exception>
#include <unordered_set>

#include "mustab/error.hpp"
#include "mustab/mus.hpp"

namespace mustab {

std::string_view to_string(EditKind kind) noexcept {
    switch (kind) {
        case EditKind::kSubstitute: return "sub";
        case EditKind::kInsert: return "ins";
        case EditKind::kDelete: return "del";
    }
    return "unknown";
}

EditKind parse_edit_kind(std::string_view name) {
    if (name == "sub" || name == "substitute") {
        return EditKind::kSubstitute;
    }
    if (name == "ins" || name == "insert") {
        return EditKind::kInsert;
    }
    if (name == "del" || name == "delete") {
        return EditKind::kDelete;
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown edit kind '" + std::string(name) + "'");
}

Text apply_edit(const Text& text, const EditOp& op) {
    const std::size_t n = text.size();
    const std::size_t limit = op.kind == EditKind::kInsert ? n + 1 : n;
    if (op.pos < 1 || op.pos > limit) {
        throw Error(ErrorCode::kPositionOutOfRange, std::string(to_string(op.kind)) + " position " +
                                                        std::to_string(op.pos) + " outside 1.." +
                                                        std::to_string(limit));
    }
    std::string s = text.str();
    switch (op.kind) {
        case EditKind::kSubstitute:
            s[op.pos - 1] = static_cast<char>(op.symbol);
            break;
        case EditKind::kInsert:
            s.insert(s.begin() + static_cast<std::ptrdiff_t>(op.pos - 1), static_cast<char>(op.symbol));
            break;
        case EditKind::kDelete:
            if (n == 1) {
                throw Error(ErrorCode::kResultEmpty, "deleting the only symbol leaves an empty text");
            }
            s.erase(op.pos - 1, 1);
            break;
    }
    return Text(std::move(s));
}

std::size_t edit_position(const EditOp& op, std::size_t post_len) noexcept {
    return std::min(op.pos, post_len);
}

namespace {

// Pre-edit MUSs keyed by content. MUSs are unique substrings, so content
// identifies them within a text.
struct PreEdit {
    MusSet set;
    std::unordered_set<std::string_view> strings;

    explicit PreEdit(const Text& text) : set(compute_mus(text)) {
        strings.reserve(set.size());
        for (const auto& m : set) {
            strings.insert(text.substr(m.start, m.end));
        }
    }
};

SensitivityRecord evaluate_edit(const Text& text, const PreEdit& pre, const EditOp& op) {
    SensitivityRecord rec;
    rec.edit = op;
    const Text post = apply_edit(text, op);
    const auto post_set = compute_mus(post);

    rec.pre_count = pre.set.size();
    rec.post_count = post_set.size();
    rec.post_len = post.size();
    rec.additive = static_cast<long long>(rec.post_count) - static_cast<long long>(rec.pre_count);
    rec.multiplicative = static_cast<double>(rec.post_count) / static_cast<double>(rec.pre_count);

    const std::size_t at = edit_position(op, post.size());
    for (const auto& m : post_set) {
        if (pre.strings.contains(post.substr(m.start, m.end))) {
            ++rec.surviving;
        } else if (m.contains(at)) {
            ++rec.new_at_edit;
        } else {
            ++rec.new_elsewhere;
        }
    }
    rec.post_stab_at_edit = mus_stab(post_set, at, post.size()).size();
    rec.pre_stab_at_edit = mus_stab(pre.set, std::min(op.pos, text.size()), text.size()).size();
    return rec;
}

}  // namespace

SensitivityRecord sensitivity(const Text& text, const EditOp& op) {
    return evaluate_edit(text, PreEdit(text), op);
}

std::string default_scan_alphabet(const Text& text) {
    std::array<bool, 256> present{};
    for (const auto c : text.bytes()) {
        present[c] = true;
    }
    std::string out;
    for (std::size_t c = 0; c < 256; ++c) {
        if (present[c]) {
            out += static_cast<char>(c);
        }
    }
    std::optional<unsigned char> fresh;
    for (unsigned c = 'a'; c <= 'z' && !fresh; ++c) {
        if (!present[c]) {
            fresh = static_cast<unsigned char>(c);
        }
    }
    for (unsigned c = 0; c < 256 && !fresh; ++c) {
        if (!present[c]) {
            fresh = static_cast<unsigned char>(c);
        }
    }
    if (fresh) {
        out += static_cast<char>(*fresh);
        std::sort(out.begin(), out.end(),
                  [](char x, char y) { return static_cast<unsigned char>(x) < static_cast<unsigned char>(y); });
    }
    return out;
}

ScanResult sensitivity_scan(const Text& text, const ScanOptions& options, Execution execution) {
    const std::size_t n = text.size();
    if (n == 0) {
        throw Error(ErrorCode::kEmptyText, "sensitivity scan of an empty text");
    }
    std::string alphabet = options.alphabet ? *options.alphabet : default_scan_alphabet(text);
    std::sort(alphabet.begin(), alphabet.end(),
              [](char x, char y) { return static_cast<unsigned char>(x) < static_cast<unsigned char>(y); });
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());

    std::vector<EditKind> kinds = options.kinds;
    std::sort(kinds.begin(), kinds.end());
    kinds.erase(std::unique(kinds.begin(), kinds.end()), kinds.end());

    std::vector<EditOp> edits;
    for (std::size_t pos = 1; pos <= n + 1; ++pos) {
        for (const auto kind : kinds) {
            if (kind != EditKind::kInsert && pos > n) {
                continue;
            }
            if (kind == EditKind::kDelete) {
                edits.push_back({kind, pos, 0});
                continue;
            }
            for (const char c : alphabet) {
                edits.push_back({kind, pos, static_cast<unsigned char>(c)});
            }
        }
        if (edits.size() > options.budget) {
            throw Error(ErrorCode::kBudgetExceeded,
                        "scan would evaluate more than " + std::to_string(options.budget) + " edits");
        }
    }

    const PreEdit pre(text);
    ScanResult result;
    result.records.resize(edits.size());
    std::vector<std::exception_ptr> errors(edits.size());
    auto evaluate = [&](std::size_t e) {
        try {
            result.records[e] = evaluate_edit(text, pre, edits[e]);
        } catch (const Error& err) {
            if (err.code() != ErrorCode::kResultEmpty) {
                throw;
            }
            result.records[e].edit = edits[e];
            result.records[e].result_empty = true;
            result.records[e].pre_count = pre.set.size();
        }
    };

    if (execution == Execution::kSerial) {
        for (std::size_t e = 0; e < edits.size(); ++e) {
            evaluate(e);
        }
    } else {
#ifdef MUSTAB_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
        for (std::int64_t e = 0; e < static_cast<std::int64_t>(edits.size()); ++e) {
            try {
                evaluate(static_cast<std::size_t>(e));
            } catch (...) {
                errors[e] = std::current_exception();
            }
        }
        for (const auto& err : errors) {
            if (err) {
                std::rethrow_exception(err);
            }
        }
    }

    for (std::size_t e = 0; e < result.records.size(); ++e) {
        const auto& r = result.records[e];
        if (r.result_empty) {
            continue;
        }
        if (!result.max_additive || r.additive > result.records[*result.max_additive].additive) {
            result.max_additive = e;
        }
        if (!result.max_multiplicative ||
            r.multiplicative > result.records[*result.max_multiplicative].multiplicative) {
            result.max_multiplicative = e;
        }
    }
    return result;
}

}  // namespace mustab
