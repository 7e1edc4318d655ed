// Copyright 2026 The mustab Authors
// SPDX-License-Identifier: Apache-2.0

#include "mustab/lowerbound.hpp"

#include <algorithm>

#include "mustab/error.hpp"

namespace mustab {

namespace {

void append_run(std::string& s, char c, std::size_t count) { s.append(count, c); }

}  // namespace

LowerBoundInstance gen_lower(std::size_t m) {
    if (m < 2) {
        throw Error(ErrorCode::kParameterTooSmall, "lower-bound family needs m >= 2, got " + std::to_string(m));
    }
    std::string s;
    s.reserve(2 * m * m + 4 * m + 2);
    s += 'a';
    append_run(s, 'b', 2 * m);
    s += 'a';
    append_run(s, 'b', 2 * m + 2);
    for (std::size_t k = 1; k < m; ++k) {
        s += 'a';
        append_run(s, 'b', k);
        s += 'a';
        append_run(s, 'b', 2 * m - k);
    }

    LowerBoundInstance inst;
    inst.m = m;
    inst.p = 2 * m + 4;
    for (std::size_t i = 2; i + 1 <= m; ++i) {
        FamilyMember member;
        member.i = i;
        member.interval = {inst.p - (2 + i), inst.p + (2 * m - 1 - i)};
        member.content.assign(i, 'b');
        member.content += 'a';
        member.content.append(2 * m - i + 1, 'b');
        inst.family.push_back(std::move(member));
    }
    inst.text = Text(std::move(s));
    return inst;
}

VerificationReport verify_lower(const LowerBoundInstance& inst, const MusSet& set) {
    VerificationReport report;
    report.suite = "lower-bound";
    report.texts = 1;
    const auto& text = inst.text;
    const std::size_t n = text.size();
    const std::size_t m = inst.m;

    ++report.checks;
    if (n != 2 * m * m + 4 * m + 2) {
        report.add_violation(text, "length " + std::to_string(n) + " != 2m^2+4m+2 for m=" + std::to_string(m));
    }

    const auto index = build_index(text);
    for (const auto& member : inst.family) {
        const auto& iv = member.interval;
        const std::string tag = "b^" + std::to_string(member.i) + " a b^" + std::to_string(2 * m - member.i + 1) +
                                " at [" + std::to_string(iv.start) + "," + std::to_string(iv.end) + "]";
        report.checks += 4;
        if (iv.end > n || text.substr(iv.start, iv.end) != member.content) {
            report.add_violation(text, tag + ": content mismatch");
            continue;
        }
        if (!iv.contains(inst.p)) {
            report.add_violation(text, tag + ": does not contain p=" + std::to_string(inst.p));
        }
        if (!std::binary_search(set.begin(), set.end(), iv)) {
            report.add_violation(text, tag + ": not in the MUS set");
        }
        if (!is_mus(index, iv)) {
            report.add_violation(text, tag + ": occurrence conditions fail (occ=" +
                                           std::to_string(index.occurrence_count(member.content)) + ")");
        }
    }

    ++report.checks;
    if (inst.p >= 1 && inst.p <= n) {
        const auto stab = mus_stab(set, inst.p, n).size();
        if (stab + 2 < m) {
            report.add_violation(text, "|MUS(T,p)|=" + std::to_string(stab) + " < m-2");
        }
    } else {
        report.add_violation(text, "p outside text");
    }
    return report;
}

}  // namespace mustab
