// Copyright 2026 The mustab Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "mustab/error.hpp"
#include "mustab/lowerbound.hpp"
#include "mustab/sensitivity.hpp"

using namespace mustab;

TEST_CASE("apply_edit") {
    const Text abc("abc");
    CHECK(apply_edit(abc, {EditKind::kSubstitute, 2, 'a'}).view() == "aac");
    CHECK(apply_edit(abc, {EditKind::kInsert, 4, 'd'}).view() == "abcd");
    CHECK(apply_edit(abc, {EditKind::kInsert, 1, 'z'}).view() == "zabc");
    CHECK(apply_edit(abc, {EditKind::kDelete, 1, 0}).view() == "bc");
    CHECK_THROWS_AS(apply_edit(abc, {EditKind::kSubstitute, 4, 'a'}), Error);
    CHECK_THROWS_AS(apply_edit(abc, {EditKind::kInsert, 5, 'a'}), Error);
    CHECK_THROWS_AS(apply_edit(abc, {EditKind::kDelete, 0, 0}), Error);
    try {
        (void)apply_edit(Text("a"), {EditKind::kDelete, 1, 0});
        FAIL("expected ResultEmpty");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::kResultEmpty);
    }
}

TEST_CASE("sensitivity examples") {
    auto r = sensitivity(Text("abc"), {EditKind::kSubstitute, 2, 'a'});
    CHECK(r.pre_count == 3);
    CHECK(r.post_count == 2);
    CHECK(r.additive == -1);
    CHECK(r.multiplicative == doctest::Approx(2.0 / 3.0));
    // "aac": MUSs "aa" (new, through position 2) and "c" (kept).
    CHECK(r.new_at_edit == 1);
    CHECK(r.new_elsewhere == 0);
    CHECK(r.surviving == 1);

    r = sensitivity(Text("aaaa"), {EditKind::kSubstitute, 1, 'b'});
    CHECK(r.pre_count == 1);
    CHECK(r.post_count == 2);
    CHECK(r.additive == 1);
    CHECK(r.new_at_edit == 1);     // "b"
    CHECK(r.new_elsewhere == 1);   // "aaa"
    CHECK(r.post_stab_at_edit == 1);
    CHECK(r.pre_stab_at_edit == 1);
}

TEST_CASE("identity substitution changes nothing") {
    const Text t = gen_lower(4).text;
    for (std::size_t pos = 1; pos <= t.size(); ++pos) {
        const auto r = sensitivity(t, {EditKind::kSubstitute, pos, t.at(pos)});
        REQUIRE(r.additive == 0);
        REQUIRE(r.surviving == r.pre_count);
        REQUIRE(r.new_at_edit == 0);
        REQUIRE(r.new_elsewhere == 0);
    }
}

TEST_CASE("edit position convention") {
    CHECK(edit_position({EditKind::kInsert, 4, 'x'}, 4) == 4);
    CHECK(edit_position({EditKind::kDelete, 3, 0}, 2) == 2);
    CHECK(edit_position({EditKind::kDelete, 2, 0}, 2) == 2);
    CHECK(edit_position({EditKind::kSubstitute, 1, 'x'}, 3) == 1);
}

TEST_CASE("default scan alphabet adds one fresh symbol") {
    CHECK(default_scan_alphabet(Text("abc")) == "abcd");
    CHECK(default_scan_alphabet(Text("ba")) == "abc");
    CHECK(default_scan_alphabet(Text("xyz")) == "axyz");
}

TEST_CASE("scan over substitutions of abc") {
    ScanOptions options;
    options.kinds = {EditKind::kSubstitute};
    options.alphabet = "cab";
    const auto result = sensitivity_scan(Text("abc"), options);
    REQUIRE(result.records.size() == 9);
    std::size_t identity = 0;
    for (std::size_t e = 0; e < result.records.size(); ++e) {
        const auto& r = result.records[e];
        CHECK(r.edit.pos == e / 3 + 1);
        CHECK(r.edit.symbol == "abc"[e % 3]);
        if (r.edit.symbol == Text("abc").at(r.edit.pos)) {
            ++identity;
            CHECK(r.additive == 0);
        }
    }
    CHECK(identity == 3);
    REQUIRE(result.max_additive);
}

TEST_CASE("scan ordering is (position, kind, symbol)") {
    ScanOptions options;
    options.alphabet = "ab";
    const auto result = sensitivity_scan(Text("ab"), options);
    // pos 1: sub a, sub b, ins a, ins b, del; pos 2: same; pos 3: ins a, ins b.
    REQUIRE(result.records.size() == 12);
    CHECK(result.records[4].edit == EditOp{EditKind::kDelete, 1, 0});
    CHECK(result.records[10].edit == EditOp{EditKind::kInsert, 3, 'a'});
}

TEST_CASE("scan of a single symbol with delete is flagged, not thrown") {
    ScanOptions options;
    options.kinds = {EditKind::kDelete};
    options.alphabet = "";
    const auto result = sensitivity_scan(Text("a"), options);
    REQUIRE(result.records.size() == 1);
    CHECK(result.records[0].result_empty);
    CHECK_FALSE(result.max_additive);
}

TEST_CASE("scan budget") {
    ScanOptions options;
    options.budget = 10;
    CHECK_THROWS_AS(sensitivity_scan(Text("abcdefgh"), options), Error);
}

TEST_CASE("scan of T_5 respects the stabbing bound at the edit") {
    const auto inst = gen_lower(5);
    ScanOptions options;
    options.kinds = {EditKind::kSubstitute};
    options.alphabet = "ab";
    const auto result = sensitivity_scan(inst.text, options);
    CHECK(result.records.size() == 2 * inst.text.size());
    for (const auto& r : result.records) {
        REQUIRE(static_cast<double>(r.new_at_edit) <= sqrt_stab_bound(r.post_len));
        REQUIRE(r.new_at_edit + r.new_elsewhere + r.surviving == r.post_count);
        REQUIRE(r.new_at_edit <= r.post_stab_at_edit);
    }
    REQUIRE(result.max_additive);
    MESSAGE("T_5 max additive sensitivity (sub): " << result.records[*result.max_additive].additive);
}

TEST_CASE("parallel scan equals serial scan") {
    const auto inst = gen_lower(4);
    const auto a = sensitivity_scan(inst.text, {}, Execution::kSerial);
    const auto b = sensitivity_scan(inst.text, {}, Execution::kParallel);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t e = 0; e < a.records.size(); ++e) {
        REQUIRE(a.records[e].edit == b.records[e].edit);
        REQUIRE(a.records[e].post_count == b.records[e].post_count);
        REQUIRE(a.records[e].new_at_edit == b.records[e].new_at_edit);
        REQUIRE(a.records[e].new_elsewhere == b.records[e].new_elsewhere);
    }
    CHECK(a.max_additive == b.max_additive);
    CHECK(a.max_multiplicative == b.max_multiplicative);
}
