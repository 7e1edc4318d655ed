// Copyright 2026 The mustab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mustab {

enum class ErrorCode {
    kEmptyText,
    kEmptyString,
    kPositionOutOfRange,
    kParameterTooSmall,
    kTextTooLargeForOracle,
    kBudgetExceeded,
    kResultEmpty,
    kInvalidArgument,
    kIo,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace mustab
