// Copyright 2026 The mustab Authors
// SPDX-License-Identifier: Apache-2.0

#include "mustab/text.hpp"

#include <fstream>
#include <iterator>
#include <vector>

#include "mustab/error.hpp"

namespace mustab {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::kEmptyText: return "EmptyText";
        case ErrorCode::kEmptyString: return "EmptyString";
        case ErrorCode::kPositionOutOfRange: return "PositionOutOfRange";
        case ErrorCode::kParameterTooSmall: return "ParameterTooSmall";
        case ErrorCode::kTextTooLargeForOracle: return "TextTooLargeForOracle";
        case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
        case ErrorCode::kResultEmpty: return "ResultEmpty";
        case ErrorCode::kInvalidArgument: return "InvalidArgument";
        case ErrorCode::kIo: return "Io";
    }
    return "Unknown";
}

unsigned char Text::at(std::size_t i) const {
    if (i < 1 || i > bytes_.size()) {
        throw Error(ErrorCode::kPositionOutOfRange,
                    "position " + std::to_string(i) + " outside 1.." + std::to_string(bytes_.size()));
    }
    return static_cast<unsigned char>(bytes_[i - 1]);
}

std::string_view Text::substr(std::size_t i, std::size_t j) const {
    if (i > j) {
        return {};
    }
    if (i < 1 || j > bytes_.size()) {
        throw Error(ErrorCode::kPositionOutOfRange,
                    "range [" + std::to_string(i) + ".." + std::to_string(j) + "] outside 1.." +
                        std::to_string(bytes_.size()));
    }
    return std::string_view(bytes_).substr(i - 1, j - i + 1);
}

Text build_text(std::string_view raw, bool strip_trailing_newline) {
    if (strip_trailing_newline && !raw.empty() && raw.back() == '\n') {
        raw.remove_suffix(1);
    }
    return Text(std::string(raw));
}

Text read_text_file(const std::filesystem::path& path, bool strip_trailing_newline) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::kIo, "cannot open " + path.string());
    }
    std::string raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw Error(ErrorCode::kIo, "read failed: " + path.string());
    }
    return build_text(raw, strip_trailing_newline);
}

void write_text_file(const std::filesystem::path& path, const Text& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorCode::kIo, "cannot write " + path.string());
    }
    out.write(text.str().data(), static_cast<std::streamsize>(text.size()));
    if (!out) {
        throw Error(ErrorCode::kIo, "write failed: " + path.string());
    }
}

std::size_t rle_size(const Text& text) {
    if (text.empty()) {
        throw Error(ErrorCode::kEmptyText, "rle_size of an empty text");
    }
    const auto s = text.view();
    std::size_t runs = 1;
    for (std::size_t i = 1; i < s.size(); ++i) {
        runs += s[i] != s[i - 1];
    }
    return runs;
}

bool is_period(std::string_view s, std::size_t p) noexcept {
    if (p == 0) {
        return false;
    }
    for (std::size_t i = 0; i + p < s.size(); ++i) {
        if (s[i] != s[i + p]) {
            return false;
        }
    }
    return true;
}

std::size_t smallest_period(std::string_view s) {
    if (s.empty()) {
        throw Error(ErrorCode::kEmptyString, "smallest_period of an empty string");
    }
    // Smallest period = |s| - longest proper border (KMP failure function).
    std::vector<std::size_t> border(s.size() + 1, 0);
    std::size_t k = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        while (k > 0 && s[i] != s[k]) {
            k = border[k];
        }
        if (s[i] == s[k]) {
            ++k;
        }
        border[i + 1] = k;
    }
    return s.size() - border[s.size()];
}

}  // namespace mustab
