// Copyright 2026 The mustab Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "mustab/error.hpp"
#include "mustab/lowerbound.hpp"
#include "mustab/verify.hpp"
#include "naive.hpp"

using namespace mustab;

namespace {

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

Pairs pairs(const MusSet& set) {
    Pairs out;
    for (const auto& m : set) {
        out.emplace_back(m.start, m.end);
    }
    return out;
}

bool same_reports(const std::vector<VerificationReport>& a, const std::vector<VerificationReport>& b) {
    if (a.size() != b.size()) {
        return false;
    }
    for (std::size_t s = 0; s < a.size(); ++s) {
        if (a[s].suite != b[s].suite || a[s].texts != b[s].texts || a[s].checks != b[s].checks ||
            a[s].flagged != b[s].flagged || a[s].violations.size() != b[s].violations.size()) {
            return false;
        }
        for (std::size_t v = 0; v < a[s].violations.size(); ++v) {
            if (a[s].violations[v].text != b[s].violations[v].text ||
                a[s].violations[v].witness != b[s].violations[v].witness) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

TEST_CASE("brute_mus examples") {
    CHECK(pairs(brute_mus(Text("abaab"))) == Pairs{{2, 3}, {3, 4}});
    CHECK(pairs(brute_mus(Text("abc"))) == Pairs{{1, 1}, {2, 2}, {3, 3}});
    CHECK(pairs(brute_mus(Text("a"))) == Pairs{{1, 1}});
    CHECK(pairs(brute_mus(Text("banana"))) == Pairs{{1, 1}, {3, 5}});
}

TEST_CASE("brute_mus equals the O(n^4) definition") {
    for (std::size_t len = 1; len <= 10; ++len) {
        for (const auto& s : naive::all_texts(2, len)) {
            REQUIRE_MESSAGE(pairs(brute_mus(Text(s))) == naive::mus(s), s);
        }
    }
}

TEST_CASE("oracle caps") {
    try {
        (void)brute_mus(Text(std::string(50, 'a')), 10);
        FAIL("expected TextTooLargeForOracle");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kTextTooLargeForOracle);
    }
    CHECK_THROWS_AS(check_three_overlap_fact(Text(std::string(101, 'a'))), Error);
    CheckLimits small;
    small.lemma_cap = 5;
    CHECK_THROWS_AS(check_key_lemma(Text("abcdefg"), small), Error);
    CHECK_THROWS_AS(check_marker_gap_lemma(Text("abcdefg"), small), Error);
}

TEST_CASE("three-overlap fact") {
    // "aaaaa" contains e.g. S = "aaa" at 1, 2, 3.
    const auto unary = check_three_overlap_fact(Text("aaaaa"));
    CHECK(unary.checks > 0);
    CHECK(unary.passed());

    // "ababa" occurs at 1 and 3 only; the shorter "aba"/"a" contribute
    // triples of their own.
    const auto alt = check_three_overlap_fact(Text("abababa"));
    CHECK(alt.passed());

    CHECK(check_three_overlap_fact(Text("abc")).checks == 0);

    const RandomPlan plan{2, 1, 60, 100, 3};
    for (std::size_t s = 0; s < plan.samples; ++s) {
        REQUIRE(check_three_overlap_fact(random_text(plan, s)).passed());
    }
}

TEST_CASE("key lemma") {
    const auto t5 = check_key_lemma(gen_lower(5).text);
    CHECK(t5.checks > 0);
    CHECK(t5.passed());
    const auto abc = check_key_lemma(Text("abc"));
    CHECK(abc.checks == 0);
    CHECK(abc.passed());
}

TEST_CASE("marker-gap lemma") {
    const auto inst = gen_lower(6);
    const auto set = compute_mus(inst.text);
    CHECK(mus_stab(set, 16, inst.text.size()).size() >= 4);
    const auto r = check_marker_gap_lemma(inst.text);
    CHECK(r.checks > 0);
    CHECK(r.passed());
    CHECK(check_marker_gap_lemma(Text("banana")).checks == 0);
}

TEST_CASE("lemma checkers on random binary texts") {
    const RandomPlan plan{2, 1, 80, 60, 7};
    for (std::size_t s = 0; s < plan.samples; ++s) {
        const auto text = random_text(plan, s);
        REQUIRE(check_key_lemma(text).passed());
        REQUIRE(check_marker_gap_lemma(text).passed());
    }
}

TEST_CASE("suite names") {
    CHECK(parse_suite("key-lemma") == Suite::kKeyLemma);
    CHECK(parse_suites("oracle,bounds").size() == 2);
    CHECK(parse_suites("all").size() == 5);
    CHECK_THROWS_AS(parse_suite("nope"), Error);
    CHECK_THROWS_AS(parse_suites(""), Error);
}

TEST_CASE("exhaustive enumeration counts") {
    const std::vector<Suite> oracle{Suite::kOracle};
    auto r = exhaustive_verify({2, 3, false}, oracle);
    CHECK(r[0].texts == 14);
    CHECK(exhaustive_text_count({2, 3, false}) == 14);
    r = exhaustive_verify({2, 3, true}, oracle);
    CHECK(r[0].texts == 7);
    CHECK(exhaustive_text_count({2, 3, true}) == 7);
    CHECK(exhaustive_verify({3, 4, true}, oracle)[0].texts == exhaustive_text_count({3, 4, true}));

    try {
        (void)exhaustive_verify({2, 30, false, 1000}, oracle);
        FAIL("expected BudgetExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kBudgetExceeded);
    }
}

TEST_CASE("random texts are deterministic") {
    const RandomPlan plan{4, 10, 20, 5, 42};
    for (std::size_t i = 0; i < plan.samples; ++i) {
        CHECK(random_text(plan, i) == random_text(plan, i));
        CHECK(random_text(plan, i).size() >= 10);
        CHECK(random_text(plan, i).size() <= 20);
    }
    CHECK_FALSE(random_text(plan, 0) == random_text(plan, 1));

    const RandomPlan single{2, 1, 1, 10, 0};
    const auto r = random_verify(single, std::vector<Suite>{Suite::kOracle});
    CHECK(r[0].texts == 10);
    CHECK(r[0].passed());
    for (std::size_t i = 0; i < single.samples; ++i) {
        CHECK(pairs(compute_mus(random_text(single, i))) == Pairs{{1, 1}});
    }
}

TEST_CASE("parallel driver reproduces the serial reference") {
    const auto suites = parse_suites("all");
    const RandomPlan plan{2, 1, 40, 300, 5};
    const auto serial = random_verify(plan, suites, {}, Execution::kSerial);
    const auto parallel = random_verify(plan, suites, {}, Execution::kParallel);
    CHECK(same_reports(serial, parallel));
    CHECK(same_reports(parallel, random_verify(plan, suites, {}, Execution::kParallel)));

    const auto ex_serial = exhaustive_verify({2, 9, false}, suites, {}, Execution::kSerial);
    const auto ex_parallel = exhaustive_verify({2, 9, false}, suites, {}, Execution::kParallel);
    CHECK(same_reports(ex_serial, ex_parallel));
    for (const auto& r : ex_serial) {
        CHECK_MESSAGE(r.passed(), r.suite);
    }
}

TEST_CASE("verify_texts surfaces oracle caps as errors") {
    const std::vector<Text> texts{Text(std::string(30, 'a'))};
    CheckLimits limits;
    limits.oracle_cap = 10;
    const std::vector<Suite> oracle{Suite::kOracle};
    CHECK_THROWS_AS(verify_texts(texts, oracle, limits, Execution::kParallel), Error);
    CHECK_THROWS_AS(verify_texts(texts, oracle, limits, Execution::kSerial), Error);
}

TEST_CASE("escape_bytes") {
    CHECK(escape_bytes("ab") == "ab");
    CHECK(escape_bytes(std::string("a\n\0", 3)) == "a\\x0a\\x00");
    CHECK(escape_bytes("\\") == "\\x5c");
}
