// Copyright 2026 The mustab Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "mustab/error.hpp"
#include "mustab/verify.hpp"

namespace mustab {

namespace {

void require_cap(const Text& text, std::size_t cap, std::string_view what) {
    if (text.empty()) {
        throw Error(ErrorCode::kEmptyText, std::string(what) + " on an empty text");
    }
    if (text.size() > cap) {
        throw Error(ErrorCode::kTextTooLargeForOracle, std::string(what) + " cap is " + std::to_string(cap) +
                                                           ", text has " + std::to_string(text.size()) + " symbols");
    }
}

std::string interval_str(std::size_t a, std::size_t b) {
    return "[" + std::to_string(a) + "," + std::to_string(b) + "]";
}

bool disjoint(std::size_t a_lo, std::size_t a_hi, std::size_t b_lo, std::size_t b_hi) {
    return a_hi < b_lo || b_hi < a_lo;
}

// Alternative occurrences of the tail T[start+1..end] of a MUS, i.e. every
// occurrence other than the one at start + 1, leftmost first, at most cap.
std::vector<std::size_t> tail_alternatives(const TextIndex& index, const MusInterval& mus, std::size_t cap) {
    const auto tail = index.text().substr(mus.start + 1, mus.end);
    std::vector<std::size_t> out;
    for (const std::size_t occ : index.occurrences(tail)) {
        if (occ != mus.start + 1) {
            out.push_back(occ);
            if (out.size() == cap) {
                break;
            }
        }
    }
    return out;
}

}  // namespace

VerificationReport check_three_overlap_fact(const Text& text, std::size_t cap) {
    require_cap(text, cap, "three-overlap fact checker");
    VerificationReport report;
    report.suite = std::string(to_string(Suite::kFact));
    report.texts = 1;

    const std::size_t n = text.size();
    const std::string_view t = text.view();
    // lce[i][k], 0-based, row-major with a zero sentinel column/row.
    std::vector<std::size_t> lce((n + 1) * (n + 1), 0);
    auto at = [&](std::size_t i, std::size_t k) -> std::size_t& { return lce[i * (n + 1) + k]; };
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t k = n; k-- > 0;) {
            at(i, k) = t[i] == t[k] ? at(i + 1, k + 1) + 1 : 0;
        }
    }

    // Occurrences i < j < k of S = T[i..i+len-1] with k <= i + len - 1.
    for (std::size_t len = 1; len <= n; ++len) {
        for (std::size_t i = 0; i + len <= n; ++i) {
            for (std::size_t j = i + 1; j < i + len && j + len <= n; ++j) {
                if (at(i, j) < len) {
                    continue;
                }
                for (std::size_t k = j + 1; k < i + len && k + len <= n; ++k) {
                    if (at(i, k) < len) {
                        continue;
                    }
                    ++report.checks;
                    const std::size_t g = std::gcd(j - i, k - j);
                    const auto span = t.substr(i, k + len - i);
                    // j >= 1 here, so T[j-1] and T[k-1] (1-based) exist.
                    const bool period_ok = is_period(span, g);
                    const bool chars_ok = t[j - 1] == t[k - 1];
                    if (!period_ok || !chars_ok) {
                        std::ostringstream w;
                        w << "S=" << escape_bytes(t.substr(i, len)) << " i=" << i + 1 << " j=" << j + 1
                          << " k=" << k + 1 << " gcd=" << g << (period_ok ? "" : " not a period")
                          << (chars_ok ? "" : " T[j-1]!=T[k-1]");
                        report.add_violation(text, w.str());
                    }
                }
            }
        }
    }
    return report;
}

VerificationReport check_key_lemma(const Text& text, const CheckLimits& limits) {
    require_cap(text, limits.lemma_cap, "key-lemma checker");
    VerificationReport report;
    report.suite = std::string(to_string(Suite::kKeyLemma));
    report.texts = 1;

    const auto index = build_index(text);
    const auto set = compute_mus(index);
    const auto& iv = set.intervals();
    const std::size_t count = iv.size();

    std::unordered_map<std::size_t, std::vector<std::size_t>> alternatives;
    auto alts = [&](std::size_t k) -> const std::vector<std::size_t>& {
        auto it = alternatives.find(k);
        if (it == alternatives.end()) {
            it = alternatives.emplace(k, tail_alternatives(index, iv[k], limits.occurrence_cap)).first;
        }
        return it->second;
    };

    // Three MUSs share a position iff the rightmost starts no later than the
    // leftmost ends. The lemma depends only on the triple, so each triple is
    // checked once rather than once per shared position.
    for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = a + 1; b < count && iv[b].start <= iv[a].end; ++b) {
            for (std::size_t c = b + 1; c < count && iv[c].start <= iv[a].end; ++c) {
                const auto& m1 = iv[a];
                const auto& m2 = iv[b];
                const auto& m3 = iv[c];
                const std::size_t u_len = m1.end - m3.start;
                if (u_len == 0) {
                    continue;
                }
                const std::size_t q_len = m3.start - m1.start;
                const std::size_t p_len = m3.start - m2.start;
                const auto& s1 = alts(a);
                const auto& s2 = alts(b);
                const auto& s3 = alts(c);
                for (const std::size_t o1 : s1) {
                    const std::size_t u1 = o1 + q_len;
                    for (const std::size_t o2 : s2) {
                        const std::size_t u2 = o2 + p_len;
                        for (const std::size_t o3 : s3) {
                            ++report.checks;
                            const std::size_t u3 = o3;
                            const bool some_disjoint = disjoint(u1, u1 + u_len - 1, u2, u2 + u_len - 1) ||
                                                       disjoint(u1, u1 + u_len - 1, u3, u3 + u_len - 1) ||
                                                       disjoint(u2, u2 + u_len - 1, u3, u3 + u_len - 1);
                            if (!some_disjoint) {
                                std::ostringstream w;
                                w << "M1=" << interval_str(m1.start, m1.end) << " M2=" << interval_str(m2.start, m2.end)
                                  << " M3=" << interval_str(m3.start, m3.end)
                                  << " u=" << escape_bytes(text.substr(m3.start + 1, m1.end))
                                  << " q=" << escape_bytes(text.substr(m1.start + 1, m3.start))
                                  << " p=" << escape_bytes(text.substr(m2.start + 1, m3.start))
                                  << " r=" << escape_bytes(text.substr(m2.start + p_len + u_len + 1, m2.end))
                                  << " S1@" << o1 << " S2@" << o2 << " S3@" << o3
                                  << " U1=" << interval_str(u1, u1 + u_len - 1)
                                  << " U2=" << interval_str(u2, u2 + u_len - 1)
                                  << " U3=" << interval_str(u3, u3 + u_len - 1);
                                report.add_violation(text, w.str());
                            }
                        }
                    }
                }
            }
        }
    }
    return report;
}

VerificationReport check_marker_gap_lemma(const Text& text, const CheckLimits& limits) {
    require_cap(text, limits.lemma_cap, "marker-gap checker");
    VerificationReport report;
    report.suite = std::string(to_string(Suite::kMarkerGap));
    report.texts = 1;

    const auto index = build_index(text);
    const auto set = compute_mus(index);
    const std::size_t n = text.size();
    const auto& all = set.intervals();

    std::vector<std::vector<std::size_t>> alternatives(all.size());
    std::vector<bool> have_alternatives(all.size(), false);

    // Consecutive positions often share the same stabbing slice; the marker
    // differences i_k - i_l do not depend on i, so one position per slice.
    const MusInterval* last_first = nullptr;
    std::size_t last_size = 0;
    for (std::size_t pos = 1; pos <= n; ++pos) {
        const auto stab = mus_stab(set, pos, n);
        if (stab.size() < 4) {
            continue;
        }
        if (stab.data() == last_first && stab.size() == last_size) {
            continue;
        }
        last_first = stab.data();
        last_size = stab.size();

        const std::size_t h = stab.size() - 1;
        const std::size_t base = static_cast<std::size_t>(stab.data() - all.data());
        std::vector<const std::vector<std::size_t>*> choices(h);
        bool any_empty = false;
        for (std::size_t k = 0; k < h; ++k) {
            if (!have_alternatives[base + k]) {
                alternatives[base + k] = tail_alternatives(index, all[base + k], limits.occurrence_cap);
                have_alternatives[base + k] = true;
            }
            choices[k] = &alternatives[base + k];
            any_empty = any_empty || choices[k]->empty();
        }
        if (any_empty) {
            // Tails of MUSs are repeats, so this cannot happen.
            report.add_violation(text, "MUS tail without a second occurrence near position " + std::to_string(pos));
            continue;
        }

        // Mixed-radix walk over the choices, bounded by the budget.
        std::vector<std::size_t> digit(h, 0);
        std::vector<long long> mark(h);
        std::vector<std::size_t> order(h);
        for (std::size_t combo = 0; combo < limits.combination_budget; ++combo) {
            for (std::size_t k = 0; k < h; ++k) {
                const auto& m = stab[k];
                mark[k] = static_cast<long long>((*choices[k])[digit[k]]) +
                          static_cast<long long>(pos - m.start) - 1;
            }
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(),
                             [&](std::size_t x, std::size_t y) { return mark[x] < mark[y]; });
            bool tied = false;
            for (std::size_t x = 1; x < h; ++x) {
                tied = tied || mark[order[x]] == mark[order[x - 1]];
            }
            if (tied) {
                ++report.flagged;
            } else {
                for (std::size_t x = 0; x + 2 < h; ++x) {
                    ++report.checks;
                    // f values are 1-based MUS ranks.
                    const std::size_t omega = std::max({order[x], order[x + 1], order[x + 2]}) + 1;
                    const long long gap = mark[order[x + 2]] - mark[order[x]];
                    if (!(gap > static_cast<long long>(h) - static_cast<long long>(omega))) {
                        std::ostringstream w;
                        w << "pos=" << pos << " h=" << h << " x=" << x + 1 << " f=(" << order[x] + 1 << ","
                          << order[x + 1] + 1 << "," << order[x + 2] + 1 << ") omega=" << omega << " gap=" << gap
                          << " marks=";
                        for (std::size_t k = 0; k < h; ++k) {
                            w << (k ? "," : "") << mark[k];
                        }
                        report.add_violation(text, w.str());
                    }
                }
            }

            std::size_t k = 0;
            while (k < h && ++digit[k] == choices[k]->size()) {
                digit[k] = 0;
                ++k;
            }
            if (k == h) {
                break;
            }
        }
    }
    return report;
}

}  // namespace mustab
