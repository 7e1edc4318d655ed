// Copyright 2026 The mustab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mustab/mus.hpp"
#include "mustab/text.hpp"

namespace mustab {

struct Violation {
    std::string text;     // escaped text the check failed on
    std::string witness;  // human-readable description of the failing case
};

/// Outcome of one suite over a batch of texts. Merging is associative, and
/// the drivers merge in text order so reports are reproducible.
struct VerificationReport {
    std::string suite;
    std::size_t texts = 0;
    std::size_t checks = 0;
    std::size_t flagged = 0;  // configurations reported but not asserted (marker ties)
    std::vector<Violation> violations;

    [[nodiscard]] bool passed() const noexcept { return violations.empty(); }
    void merge(const VerificationReport& other);
    void add_violation(const Text& text, std::string witness);
};

enum class Suite { kOracle, kBounds, kFact, kKeyLemma, kMarkerGap };

std::string_view to_string(Suite suite) noexcept;
/// Accepts oracle, bounds, fact, key-lemma, marker-gap.
Suite parse_suite(std::string_view name);
/// Comma-separated list; "all" expands to every suite.
std::vector<Suite> parse_suites(std::string_view list);

struct CheckLimits {
    std::size_t oracle_cap = 2000;  // brute_mus and the oracle suite
    std::size_t fact_cap = 100;     // exhaustive-substring fact checker
    std::size_t lemma_cap = 2000;   // key-lemma and marker-gap checkers
    std::size_t occurrence_cap = 8;  // alternative occurrences per tail, leftmost first
    std::size_t combination_budget = 1u << 14;  // marker-gap choices per stabbing set
};

/// Reference MUS enumeration straight from the definition: occurrence counts
/// of every substring come from pairwise character comparison, never from a
/// suffix structure. O(n^2) time, O(n) extra space.
MusSet brute_mus(const Text& text, std::size_t cap = CheckLimits{}.oracle_cap);

/// Three overlapping occurrences i < j < k <= i + |S| - 1 of any substring S
/// force gcd(j - i, k - j) to be a period of T[i..k+|S|-1] and T[j-1] == T[k-1].
VerificationReport check_three_overlap_fact(const Text& text, std::size_t cap = CheckLimits{}.fact_cap);

/// For MUSs M1, M2, M3 overlapping in a_3 u (u nonempty) and any alternative
/// occurrences of their tails, at least two of the induced occurrences of u
/// are disjoint.
VerificationReport check_key_lemma(const Text& text, const CheckLimits& limits = {});

/// For h + 1 >= 4 MUSs through one position and alternative occurrences of
/// the first h tails, the sorted marked positions satisfy
/// i_f(x+2) - i_f(x) > h - max{f(x), f(x+1), f(x+2)}.
VerificationReport check_marker_gap_lemma(const Text& text, const CheckLimits& limits = {});

/// Runs one suite on one text (texts == 1 in the result).
VerificationReport run_suite(Suite suite, const Text& text, const CheckLimits& limits = {});

enum class Execution { kSerial, kParallel };

/// Runs every suite on every text. kParallel distributes texts over OpenMP
/// threads; the merged reports are identical to the kSerial ones.
std::vector<VerificationReport> verify_texts(std::span<const Text> texts, std::span<const Suite> suites,
                                             const CheckLimits& limits = {},
                                             Execution execution = Execution::kParallel);

struct ExhaustivePlan {
    std::size_t alphabet_size = 2;
    std::size_t max_len = 8;
    bool canonical = false;  // only texts whose symbols first appear in alphabet order
    std::uint64_t budget = 1u << 24;
};

/// Every nonempty text of length <= max_len. Throws kBudgetExceeded when the
/// number of candidate texts exceeds the plan's budget.
std::vector<VerificationReport> exhaustive_verify(const ExhaustivePlan& plan, std::span<const Suite> suites,
                                                  const CheckLimits& limits = {},
                                                  Execution execution = Execution::kParallel);

/// Number of texts exhaustive_verify visits for a plan.
std::uint64_t exhaustive_text_count(const ExhaustivePlan& plan);

struct RandomPlan {
    std::size_t alphabet_size = 2;
    std::size_t min_len = 1;
    std::size_t max_len = 100;
    std::size_t samples = 100;
    std::uint64_t seed = 42;
};

/// Sample `index` of a plan: uniform length in [min_len, max_len], i.i.d.
/// uniform symbols. Depends only on (plan, index).
Text random_text(const RandomPlan& plan, std::size_t index);

std::vector<VerificationReport> random_verify(const RandomPlan& plan, std::span<const Suite> suites,
                                              const CheckLimits& limits = {},
                                              Execution execution = Execution::kParallel);

/// k-th symbol of an alphabet of the given size: 'a'.. for sizes up to 26,
/// raw byte values otherwise.
unsigned char alphabet_symbol(std::size_t alphabet_size, std::size_t k);

/// Printable rendering of bytes, non-printables as \xHH.
std::string escape_bytes(std::string_view bytes);

}  // namespace mustab
