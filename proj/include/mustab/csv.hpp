// Copyright 2026 The mustab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "mustab/lowerbound.hpp"
#include "mustab/mus.hpp"
#include "mustab/sensitivity.hpp"
#include "mustab/verify.hpp"

namespace mustab::csv {

/// Double-quotes a field when it contains a comma, quote or line break.
std::string quote(std::string_view field);

/// Fixed-point rendering independent of the global locale.
std::string fixed(double value, int decimals);

/// start,end,length[,substring]
void write_mus(std::ostream& out, const Text& text, std::span<const MusInterval> intervals, bool with_strings);

/// n,mus_count,rle,max_stab_pos,max_stab_count,sqrt_bound
void write_stats(std::ostream& out, const BoundReport& report);

/// i,start,end,string
void write_family(std::ostream& out, const LowerBoundInstance& inst);

/// suite,texts,checks,violations
void write_reports(std::ostream& out, std::span<const VerificationReport> reports);

/// One witness per line: suite<TAB>text<TAB>witness.
void write_violations(std::ostream& out, std::span<const VerificationReport> reports);

/// kind,pos,symbol,pre_count,post_count,additive,multiplicative,new_at_edit,new_elsewhere
void write_sensitivity(std::ostream& out, std::span<const SensitivityRecord> records);

}  // namespace mustab::csv
