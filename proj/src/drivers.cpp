// Copyright 2026 The mustab Authors
// SPDX-License-Identifier: Apache-2.0

#include <exception>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "mustab/error.hpp"
#include "mustab/verify.hpp"

#ifdef MUSTAB_HAVE_OPENMP
#include <omp.h>
#endif

namespace mustab {

void VerificationReport::merge(const VerificationReport& other) {
    if (suite.empty()) {
        suite = other.suite;
    }
    texts += other.texts;
    checks += other.checks;
    flagged += other.flagged;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

void VerificationReport::add_violation(const Text& text, std::string witness) {
    violations.push_back({escape_bytes(text.view()), std::move(witness)});
}

std::string_view to_string(Suite suite) noexcept {
    switch (suite) {
        case Suite::kOracle: return "oracle";
        case Suite::kBounds: return "bounds";
        case Suite::kFact: return "fact";
        case Suite::kKeyLemma: return "key-lemma";
        case Suite::kMarkerGap: return "marker-gap";
    }
    return "unknown";
}

Suite parse_suite(std::string_view name) {
    for (const auto s : {Suite::kOracle, Suite::kBounds, Suite::kFact, Suite::kKeyLemma, Suite::kMarkerGap}) {
        if (name == to_string(s)) {
            return s;
        }
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown suite '" + std::string(name) + "'");
}

std::vector<Suite> parse_suites(std::string_view list) {
    std::vector<Suite> out;
    while (!list.empty()) {
        const auto comma = list.find(',');
        const auto item = list.substr(0, comma);
        if (item == "all") {
            out = {Suite::kOracle, Suite::kBounds, Suite::kFact, Suite::kKeyLemma, Suite::kMarkerGap};
        } else if (!item.empty()) {
            out.push_back(parse_suite(item));
        }
        if (comma == std::string_view::npos) {
            break;
        }
        list.remove_prefix(comma + 1);
    }
    if (out.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "no suite selected");
    }
    return out;
}

std::string escape_bytes(std::string_view bytes) {
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size());
    for (const char ch : bytes) {
        const auto c = static_cast<unsigned char>(ch);
        if (c >= 0x20 && c < 0x7f && c != '\\') {
            out += static_cast<char>(c);
        } else {
            out += "\\x";
            out += kHex[c >> 4];
            out += kHex[c & 0xf];
        }
    }
    return out;
}

unsigned char alphabet_symbol(std::size_t alphabet_size, std::size_t k) {
    if (alphabet_size == 0 || alphabet_size > 256 || k >= alphabet_size) {
        throw Error(ErrorCode::kInvalidArgument, "alphabet size must be in 1..256");
    }
    return alphabet_size <= 26 ? static_cast<unsigned char>('a' + k) : static_cast<unsigned char>(k);
}

namespace {

VerificationReport oracle_suite(const Text& text, const CheckLimits& limits) {
    VerificationReport r;
    r.suite = std::string(to_string(Suite::kOracle));
    r.texts = 1;
    r.checks = 1;
    const auto fast = compute_mus(text);
    const auto slow = brute_mus(text, limits.oracle_cap);
    if (fast != slow) {
        std::ostringstream w;
        w << "compute_mus={";
        for (const auto& m : fast) {
            w << "[" << m.start << "," << m.end << "]";
        }
        w << "} brute_mus={";
        for (const auto& m : slow) {
            w << "[" << m.start << "," << m.end << "]";
        }
        w << "}";
        r.add_violation(text, w.str());
    }
    return r;
}

VerificationReport bounds_suite(const Text& text) {
    VerificationReport r;
    r.suite = std::string(to_string(Suite::kBounds));
    r.texts = 1;
    r.checks = 3;
    const auto set = compute_mus(text);
    const auto b = check_bounds(text, set);
    if (!b.bound_n_ok) {
        r.add_violation(text, "|MUS|=" + std::to_string(b.mus_count) + " > n=" + std::to_string(b.n));
    }
    if (!b.bound_rle_ok) {
        r.add_violation(text, "|MUS|=" + std::to_string(b.mus_count) + " > 2*rle-1 with rle=" +
                                  std::to_string(b.rle_size));
    }
    if (!b.bound_sqrt_ok) {
        r.add_violation(text, "max stab " + std::to_string(b.max_stab_count) + " at " +
                                  std::to_string(b.max_stab_pos) + " > sqrt(12n+18)-2=" + std::to_string(b.sqrt_bound));
    }
    return r;
}

// Produces text `index` of a batch, or nothing when the index is skipped.
using TextSource = std::function<std::optional<Text>(std::uint64_t)>;

std::vector<VerificationReport> empty_reports(std::span<const Suite> suites) {
    std::vector<VerificationReport> out(suites.size());
    for (std::size_t s = 0; s < suites.size(); ++s) {
        out[s].suite = std::string(to_string(suites[s]));
    }
    return out;
}

void run_one(const Text& text, std::span<const Suite> suites, const CheckLimits& limits,
             std::vector<VerificationReport>& into) {
    for (std::size_t s = 0; s < suites.size(); ++s) {
        into[s].merge(run_suite(suites[s], text, limits));
    }
}

std::vector<VerificationReport> run_serial(std::uint64_t count, const TextSource& source,
                                           std::span<const Suite> suites, const CheckLimits& limits) {
    auto reports = empty_reports(suites);
    for (std::uint64_t i = 0; i < count; ++i) {
        if (const auto text = source(i)) {
            run_one(*text, suites, limits, reports);
        }
    }
    return reports;
}

std::vector<VerificationReport> run_parallel(std::uint64_t count, const TextSource& source,
                                             std::span<const Suite> suites, const CheckLimits& limits) {
    // Fixed-size blocks merged in block order keep the report independent of
    // the thread count and schedule.
    constexpr std::uint64_t kBlock = 128;
    const std::uint64_t blocks = (count + kBlock - 1) / kBlock;
    std::vector<std::vector<VerificationReport>> partial(blocks);
    std::vector<std::exception_ptr> errors(blocks);

#ifdef MUSTAB_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
        try {
            auto local = empty_reports(suites);
            const std::uint64_t lo = static_cast<std::uint64_t>(b) * kBlock;
            const std::uint64_t hi = std::min(count, lo + kBlock);
            for (std::uint64_t i = lo; i < hi; ++i) {
                if (const auto text = source(i)) {
                    run_one(*text, suites, limits, local);
                }
            }
            partial[b] = std::move(local);
        } catch (...) {
            errors[b] = std::current_exception();
        }
    }

    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    auto reports = empty_reports(suites);
    for (const auto& block : partial) {
        for (std::size_t s = 0; s < suites.size(); ++s) {
            reports[s].merge(block[s]);
        }
    }
    return reports;
}

std::vector<VerificationReport> run_batch(std::uint64_t count, const TextSource& source,
                                          std::span<const Suite> suites, const CheckLimits& limits,
                                          Execution execution) {
    return execution == Execution::kSerial ? run_serial(count, source, suites, limits)
                                           : run_parallel(count, source, suites, limits);
}

std::uint64_t checked_pow_sum(std::size_t k, std::size_t max_len, std::uint64_t limit) {
    std::uint64_t total = 0;
    std::uint64_t power = 1;
    for (std::size_t len = 1; len <= max_len; ++len) {
        if (power > limit / k) {
            return limit + 1;
        }
        power *= k;
        total += power;
        if (total > limit) {
            return limit + 1;
        }
    }
    return total;
}

// Symbols first appear in alphabet order ("aab", never "bba").
bool is_canonical(std::string_view s) {
    unsigned char next = 0;
    for (const char ch : s) {
        const auto rank = static_cast<unsigned char>(ch) >= 'a' ? static_cast<unsigned char>(ch - 'a') : 0;
        if (rank > next) {
            return false;
        }
        if (rank == next) {
            ++next;
        }
    }
    return true;
}

}  // namespace

VerificationReport run_suite(Suite suite, const Text& text, const CheckLimits& limits) {
    switch (suite) {
        case Suite::kOracle: return oracle_suite(text, limits);
        case Suite::kBounds: return bounds_suite(text);
        case Suite::kFact: return check_three_overlap_fact(text, limits.fact_cap);
        case Suite::kKeyLemma: return check_key_lemma(text, limits);
        case Suite::kMarkerGap: return check_marker_gap_lemma(text, limits);
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown suite");
}

std::vector<VerificationReport> verify_texts(std::span<const Text> texts, std::span<const Suite> suites,
                                             const CheckLimits& limits, Execution execution) {
    const TextSource source = [&](std::uint64_t i) -> std::optional<Text> { return texts[i]; };
    return run_batch(texts.size(), source, suites, limits, execution);
}

std::uint64_t exhaustive_text_count(const ExhaustivePlan& plan) {
    if (!plan.canonical) {
        return checked_pow_sum(plan.alphabet_size, plan.max_len, ~std::uint64_t{0} - 1);
    }
    // ways[u] = canonical strings of the current length using u symbols.
    std::vector<std::uint64_t> ways(plan.alphabet_size + 1, 0);
    ways[0] = 1;
    std::uint64_t total = 0;
    for (std::size_t len = 1; len <= plan.max_len; ++len) {
        std::vector<std::uint64_t> next(plan.alphabet_size + 1, 0);
        for (std::size_t u = 0; u <= plan.alphabet_size; ++u) {
            next[u] += ways[u] * u;
            if (u < plan.alphabet_size) {
                next[u + 1] += ways[u];
            }
        }
        ways = std::move(next);
        for (const auto w : ways) {
            total += w;
        }
    }
    return total;
}

std::vector<VerificationReport> exhaustive_verify(const ExhaustivePlan& plan, std::span<const Suite> suites,
                                                  const CheckLimits& limits, Execution execution) {
    const std::size_t k = plan.alphabet_size;
    if (k == 0 || k > 26) {
        throw Error(ErrorCode::kInvalidArgument, "exhaustive mode needs an alphabet of 1..26 symbols");
    }
    const std::uint64_t candidates = checked_pow_sum(k, plan.max_len, plan.budget);
    if (candidates > plan.budget) {
        throw Error(ErrorCode::kBudgetExceeded, "alphabet " + std::to_string(k) + " up to length " +
                                                    std::to_string(plan.max_len) + " exceeds budget " +
                                                    std::to_string(plan.budget));
    }

    const TextSource source = [&](std::uint64_t index) -> std::optional<Text> {
        std::size_t len = 1;
        std::uint64_t block = k;
        while (index >= block) {
            index -= block;
            block *= k;
            ++len;
        }
        // Most significant digit first, so texts of one length come out in
        // lexicographic order.
        std::string s(len, 'a');
        for (std::size_t pos = len; pos-- > 0;) {
            s[pos] = static_cast<char>(alphabet_symbol(k, index % k));
            index /= k;
        }
        if (plan.canonical && !is_canonical(s)) {
            return std::nullopt;
        }
        return Text(std::move(s));
    };
    return run_batch(candidates, source, suites, limits, execution);
}

Text random_text(const RandomPlan& plan, std::size_t index) {
    if (plan.min_len == 0 || plan.min_len > plan.max_len) {
        throw Error(ErrorCode::kInvalidArgument, "random texts need 1 <= min_len <= max_len");
    }
    std::seed_seq seq{static_cast<std::uint32_t>(plan.seed), static_cast<std::uint32_t>(plan.seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(std::uint64_t{index} >> 32)};
    std::mt19937_64 rng(seq);
    const std::size_t span = plan.max_len - plan.min_len + 1;
    const std::size_t len = plan.min_len + static_cast<std::size_t>(rng() % span);
    std::string s(len, '\0');
    for (auto& c : s) {
        c = static_cast<char>(alphabet_symbol(plan.alphabet_size, static_cast<std::size_t>(rng() % plan.alphabet_size)));
    }
    return Text(std::move(s));
}

std::vector<VerificationReport> random_verify(const RandomPlan& plan, std::span<const Suite> suites,
                                              const CheckLimits& limits, Execution execution) {
    // Validate once up front rather than inside the parallel region.
    alphabet_symbol(plan.alphabet_size, 0);
    random_text(plan, 0);
    const TextSource source = [&](std::uint64_t i) -> std::optional<Text> {
        return random_text(plan, static_cast<std::size_t>(i));
    };
    return run_batch(plan.samples, source, suites, limits, execution);
}

}  // namespace mustab
