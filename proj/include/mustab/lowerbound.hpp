// Copyright 2026 The mustab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mustab/mus.hpp"
#include "mustab/text.hpp"
#include "mustab/verify.hpp"

namespace mustab {

struct FamilyMember {
    std::size_t i = 0;         // b^i a b^(2m-i+1)
    MusInterval interval;
    std::string content;
};

/// T_m = a b^(2m) a b^(2m+2) S_1 ... S_(m-1) with S_k = a b^k a b^(2m-k),
/// its distinguished position p = 2m + 4 and the m - 2 strings
/// b^i a b^(2m-i+1) (2 <= i <= m-1) that are MUSs through p.
struct LowerBoundInstance {
    std::size_t m = 0;
    Text text;
    std::size_t p = 0;
    std::vector<FamilyMember> family;
};

/// Throws Error(kParameterTooSmall) for m < 2. m == 2 gives an empty family.
LowerBoundInstance gen_lower(std::size_t m);

/// Checks that every family member is a MUS in `set`, contains p, passes the
/// three occurrence conditions, and that |MUS(T_m, p)| >= m - 2.
VerificationReport verify_lower(const LowerBoundInstance& inst, const MusSet& set);

}  // namespace mustab
