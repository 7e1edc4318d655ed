// Copyright 2026 The mustab Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "mustab/error.hpp"
#include "mustab/text_index.hpp"
#include "mustab/verify.hpp"
#include "naive.hpp"

using namespace mustab;

namespace {

std::vector<std::size_t> one_based(const std::vector<index_t>& v) {
    std::vector<std::size_t> out;
    for (const auto x : v) {
        out.push_back(static_cast<std::size_t>(x) + 1);
    }
    return out;
}

std::vector<std::size_t> as_sizes(const std::vector<index_t>& v) { return {v.begin(), v.end()}; }

std::vector<std::optional<std::size_t>> as_optional(const std::vector<index_t>& v) {
    std::vector<std::optional<std::size_t>> out;
    for (const auto x : v) {
        out.push_back(x == kUndefinedLength ? std::nullopt : std::optional<std::size_t>(x));
    }
    return out;
}

void check_against_naive(const std::string& s) {
    const auto idx = build_index(Text(s));
    REQUIRE_MESSAGE(one_based(idx.sa()) == naive::suffix_array(s), s);
    REQUIRE_MESSAGE(as_sizes(idx.lcp()) == naive::lcp(s), s);
    REQUIRE_MESSAGE(as_optional(idx.unique_len()) == naive::unique_len(s), s);
}

}  // namespace

TEST_CASE("build_text wraps bytes and strips one trailing line feed") {
    CHECK(build_text("banana", true).size() == 6);
    CHECK(build_text("abc\n", true).view() == "abc");
    CHECK(build_text("abc\n\n", true).view() == "abc\n");
    CHECK(build_text("abc\n", false).size() == 4);
    CHECK(build_text("", true).empty());
}

TEST_CASE("Text uses 1-based positions") {
    const Text t("banana");
    CHECK(t.at(1) == 'b');
    CHECK(t.at(6) == 'a');
    CHECK(t.substr(3, 5) == "nan");
    CHECK(t.substr(4, 3).empty());
    CHECK_THROWS_AS((void)t.at(0), Error);
    CHECK_THROWS_AS((void)t.at(7), Error);
}

TEST_CASE("banana index") {
    // Frozen from a brute-force suffix sort and direct prefix comparison.
    const auto idx = build_index(Text("banana"));
    CHECK(one_based(idx.sa()) == std::vector<std::size_t>{6, 4, 2, 1, 5, 3});
    CHECK(as_sizes(idx.lcp()) == std::vector<std::size_t>{1, 3, 0, 0, 2});
    CHECK(idx.unique_len_at(1) == 1);
    CHECK(idx.unique_len_at(2) == 4);
    CHECK(idx.unique_len_at(3) == 3);
    for (std::size_t i = 4; i <= 6; ++i) {
        CHECK(idx.unique_len_at(i) == kUndefinedLength);
    }
}

TEST_CASE("small index examples") {
    const auto abc = build_index(Text("abc"));
    CHECK(one_based(abc.sa()) == std::vector<std::size_t>{1, 2, 3});
    CHECK(as_sizes(abc.lcp()) == std::vector<std::size_t>{0, 0});
    CHECK(as_sizes(abc.unique_len()) == std::vector<std::size_t>{1, 1, 1});

    const auto aaaa = build_index(Text("aaaa"));
    CHECK(aaaa.unique_len_at(1) == 4);
    CHECK(aaaa.unique_len_at(2) == kUndefinedLength);
    CHECK(aaaa.unique_len_at(4) == kUndefinedLength);

    const auto one = build_index(Text("x"));
    CHECK(one.sa().size() == 1);
    CHECK(one.lcp().empty());
    CHECK(one.unique_len_at(1) == 1);
}

TEST_CASE("empty text cannot be indexed") {
    try {
        (void)build_index(Text(""));
        FAIL("expected EmptyText");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kEmptyText);
    }
}

TEST_CASE("occurrence_count") {
    CHECK(build_index(Text("abaab")).occurrence_count("a") == 3);
    CHECK(build_index(Text("banana")).occurrence_count("") == 7);
    CHECK(build_index(Text("banana")).occurrence_count("na") == 2);
    CHECK(build_index(Text("banana")).occurrence_count("bananas") == 0);
    CHECK(build_index(Text("banana")).occurrence_count("x") == 0);
    CHECK(build_index(Text("banana")).occurrences("ana") == std::vector<std::size_t>{2, 4});
}

TEST_CASE("smallest_period") {
    CHECK(smallest_period("aaaa") == 1);
    CHECK(smallest_period("abab") == 2);
    CHECK(smallest_period("abc") == 3);
    CHECK(smallest_period("abaab") == 3);
    CHECK_THROWS_AS(smallest_period(""), Error);

    std::mt19937 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        std::string s(1 + rng() % 30, 'a');
        for (auto& c : s) {
            c = static_cast<char>('a' + rng() % 2);
        }
        const auto p = smallest_period(s);
        REQUIRE(is_period(s, p));
        for (std::size_t q = 1; q < p; ++q) {
            REQUIRE_FALSE(is_period(s, q));
        }
    }
}

TEST_CASE("index matches brute force on every binary text up to length 12") {
    for (std::size_t len = 1; len <= 12; ++len) {
        for (const auto& s : naive::all_texts(2, len)) {
            check_against_naive(s);
        }
    }
}

TEST_CASE("index matches brute force on random texts") {
    for (const std::size_t k : {2, 4, 26}) {
        const RandomPlan plan{k, 1, 200, 500, 1234};
        for (std::size_t i = 0; i < plan.samples; ++i) {
            check_against_naive(random_text(plan, i).str());
        }
    }
}

TEST_CASE("index handles the full byte range") {
    std::string s;
    for (int c = 255; c >= 0; --c) {
        s += static_cast<char>(c);
        s += static_cast<char>(255 - c);
    }
    check_against_naive(s);
}

TEST_CASE("unique lengths satisfy their defining occurrence counts") {
    const RandomPlan plan{3, 1, 120, 200, 99};
    for (std::size_t s = 0; s < plan.samples; ++s) {
        const auto idx = build_index(random_text(plan, s));
        const auto& t = idx.text();
        CHECK(idx.occurrence_count("") == t.size() + 1);
        for (std::size_t i = 1; i <= t.size(); ++i) {
            const auto len = idx.unique_len_at(i);
            if (len == kUndefinedLength) {
                REQUIRE(idx.occurrence_count(t.substr(i, t.size())) >= 2);
                continue;
            }
            const auto l = static_cast<std::size_t>(len);
            REQUIRE(idx.occurrence_count(t.substr(i, i + l - 1)) == 1);
            REQUIRE((l == 1 || idx.occurrence_count(t.substr(i, i + l - 2)) >= 2));
        }
    }
}
