// Copyright 2026 The mustab Authors
// SPDX-License-Identifier: Apache-2.0

#include "mustab/csv.hpp"

#include <array>
#include <charconv>

namespace mustab::csv {

std::string quote(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
        return std::string(field);
    }
    std::string out = "\"";
    for (const char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::string fixed(double value, int decimals) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed, decimals);
    return std::string(buf.data(), res.ptr);
}

namespace {

// Substrings are always quoted so empty and comma-bearing values read back
// the same way.
std::string quoted_bytes(std::string_view bytes) {
    std::string escaped = escape_bytes(bytes);
    std::string out = "\"";
    for (const char c : escaped) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

void write_mus(std::ostream& out, const Text& text, std::span<const MusInterval> intervals, bool with_strings) {
    out << "start,end,length" << (with_strings ? ",substring" : "") << '\n';
    for (const auto& m : intervals) {
        out << m.start << ',' << m.end << ',' << m.length();
        if (with_strings) {
            out << ',' << quoted_bytes(text.substr(m.start, m.end));
        }
        out << '\n';
    }
}

void write_stats(std::ostream& out, const BoundReport& r) {
    out << "n,mus_count,rle,max_stab_pos,max_stab_count,sqrt_bound\n";
    out << r.n << ',' << r.mus_count << ',' << r.rle_size << ',' << r.max_stab_pos << ',' << r.max_stab_count << ','
        << fixed(r.sqrt_bound, 3) << '\n';
}

void write_family(std::ostream& out, const LowerBoundInstance& inst) {
    out << "i,start,end,string\n";
    for (const auto& f : inst.family) {
        out << f.i << ',' << f.interval.start << ',' << f.interval.end << ',' << quoted_bytes(f.content) << '\n';
    }
}

void write_reports(std::ostream& out, std::span<const VerificationReport> reports) {
    out << "suite,texts,checks,violations\n";
    for (const auto& r : reports) {
        out << quote(r.suite) << ',' << r.texts << ',' << r.checks << ',' << r.violations.size() << '\n';
    }
}

void write_violations(std::ostream& out, std::span<const VerificationReport> reports) {
    for (const auto& r : reports) {
        for (const auto& v : r.violations) {
            out << r.suite << '\t' << v.text << '\t' << v.witness << '\n';
        }
    }
}

void write_sensitivity(std::ostream& out, std::span<const SensitivityRecord> records) {
    out << "kind,pos,symbol,pre_count,post_count,additive,multiplicative,new_at_edit,new_elsewhere\n";
    for (const auto& r : records) {
        out << to_string(r.edit.kind) << ',' << r.edit.pos << ',';
        if (r.edit.kind != EditKind::kDelete) {
            out << quoted_bytes(std::string_view(reinterpret_cast<const char*>(&r.edit.symbol), 1));
        }
        out << ',' << r.pre_count << ',';
        if (r.result_empty) {
            // Edit rejected: the result would be the empty text.
            out << ",,,,\n";
            continue;
        }
        out << r.post_count << ',' << r.additive << ',' << fixed(r.multiplicative, 6) << ',' << r.new_at_edit << ','
            << r.new_elsewhere << '\n';
    }
}

}  // namespace mustab::csv
