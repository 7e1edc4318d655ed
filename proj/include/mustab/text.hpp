// Copyright 2026 The mustab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>

namespace mustab {

/// An immutable byte string. Positions handed to and returned from the public
/// API are 1-based: at(i) is valid for 1 <= i <= size(), and substr(i, j) is
/// the empty string whenever i > j.
class Text {
public:
    Text() = default;
    explicit Text(std::string bytes) : bytes_(std::move(bytes)) {}

    [[nodiscard]] std::size_t size() const noexcept { return bytes_.size(); }
    [[nodiscard]] bool empty() const noexcept { return bytes_.empty(); }

    /// T[i], 1-based.
    [[nodiscard]] unsigned char at(std::size_t i) const;

    /// T[i..j], 1-based and inclusive.
    [[nodiscard]] std::string_view substr(std::size_t i, std::size_t j) const;

    [[nodiscard]] std::string_view view() const noexcept { return bytes_; }
    [[nodiscard]] std::span<const unsigned char> bytes() const noexcept {
        return {reinterpret_cast<const unsigned char*>(bytes_.data()), bytes_.size()};
    }
    [[nodiscard]] const std::string& str() const noexcept { return bytes_; }

    friend bool operator==(const Text&, const Text&) = default;

private:
    std::string bytes_;
};

Text build_text(std::string_view raw, bool strip_trailing_newline);

/// Reads a file verbatim; throws Error(kIo) when it cannot be opened.
Text read_text_file(const std::filesystem::path& path, bool strip_trailing_newline);

void write_text_file(const std::filesystem::path& path, const Text& text);

/// Number of maximal runs of equal symbols.
std::size_t rle_size(const Text& text);

/// Smallest p >= 1 with s[i] == s[i + p] wherever both sides exist.
std::size_t smallest_period(std::string_view s);

/// True when p satisfies the period equation on s (p >= 1).
bool is_period(std::string_view s, std::size_t p) noexcept;

}  // namespace mustab
