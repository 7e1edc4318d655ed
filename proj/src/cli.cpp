// Copyright 2026 The mustab Authors
// SPDX-License-Identifier: Apache-2.0

#include "mustab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>

#include "mustab/csv.hpp"
#include "mustab/error.hpp"
#include "mustab/lowerbound.hpp"
#include "mustab/mus.hpp"
#include "mustab/sensitivity.hpp"
#include "mustab/text_index.hpp"
#include "mustab/verify.hpp"

namespace mustab::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A single byte given literally ("x") or as \xHH.
unsigned char parse_symbol(const std::string& s) {
    if (s.size() == 1) {
        return static_cast<unsigned char>(s[0]);
    }
    if (s.size() == 4 && s[0] == '\\' && (s[1] == 'x' || s[1] == 'X')) {
        unsigned value = 0;
        const auto res = std::from_chars(s.data() + 2, s.data() + 4, value, 16);
        if (res.ec == std::errc{} && res.ptr == s.data() + 4) {
            return static_cast<unsigned char>(value);
        }
    }
    throw UsageError("--char expects one byte or \\xHH, got '" + s + "'");
}

std::vector<EditKind> parse_kinds(const std::string& list) {
    std::vector<EditKind> kinds;
    std::string_view rest = list;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const auto item = rest.substr(0, comma);
        if (!item.empty()) {
            kinds.push_back(parse_edit_kind(item));
        }
        if (comma == std::string_view::npos) {
            break;
        }
        rest.remove_prefix(comma + 1);
    }
    if (kinds.empty()) {
        throw UsageError("--kinds selects no edit kind");
    }
    return kinds;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw Error(ErrorCode::kIo, "cannot write " + path);
    }
    return f;
}

struct InputOptions {
    std::string file;
    bool keep_newline = false;

    void add_to(CLI::App* cmd) {
        cmd->add_option("FILE", file, "Input text (raw bytes)")->required();
        cmd->add_flag("--keep-newline", keep_newline, "Do not strip one trailing line feed");
    }
    [[nodiscard]] Text load() const { return read_text_file(file, !keep_newline); }
};

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimal unique substrings: enumeration, stabbing queries and bound verification. "
                 "All positions are 1-based."};
    app.name("mustab");
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "List every MUS as CSV");
    InputOptions compute_in;
    bool compute_strings = false;
    compute_in.add_to(compute);
    compute->add_flag("--show-strings", compute_strings, "Add the substring column");

    // query
    auto* query = app.add_subcommand("query", "List the MUSs containing a position");
    InputOptions query_in;
    std::size_t query_pos = 0;
    bool query_strings = false;
    query_in.add_to(query);
    query->add_option("--pos", query_pos, "1-based position")->required();
    query->add_flag("--show-strings", query_strings, "Add the substring column");

    // stats
    auto* stats = app.add_subcommand("stats", "Counts, RLE size, maximum stabbing count and its bound");
    InputOptions stats_in;
    stats_in.add_to(stats);

    // gen-lower
    auto* gen = app.add_subcommand("gen-lower", "Write the lower-bound text T_m");
    std::size_t gen_m = 0;
    std::string gen_out;
    std::string gen_family;
    gen->add_option("--m", gen_m, "Family parameter (>= 2)")->required();
    gen->add_option("--out", gen_out, "Output file for the text")->required();
    gen->add_option("--family-csv", gen_family, "Output file for the family CSV");

    // verify
    auto* verify = app.add_subcommand("verify", "Run verification suites over generated texts");
    std::string suite_list;
    std::size_t alphabet = 2;
    bool exhaustive = false;
    bool canonical = false;
    std::size_t max_len = 0;
    std::optional<std::size_t> random_samples;
    std::size_t len = 0;
    std::optional<std::size_t> min_len;
    std::uint64_t seed = 42;
    std::size_t occ_cap = CheckLimits{}.occurrence_cap;
    std::string violations_path;
    bool serial = false;
    verify->add_option("--suite", suite_list, "oracle,bounds,fact,key-lemma,marker-gap or all")->required();
    verify->add_option("--alphabet", alphabet, "Alphabet size")->required();
    verify->add_flag("--exhaustive", exhaustive, "Every text up to --max-len");
    verify->add_option("--max-len", max_len, "Longest exhaustive text");
    verify->add_flag("--canonical", canonical, "Skip texts equal up to symbol renaming");
    verify->add_option("--random", random_samples, "Number of random texts");
    verify->add_option("--len", len, "Random text length (maximum when --min-len is given)");
    verify->add_option("--min-len", min_len, "Shortest random text length");
    verify->add_option("--seed", seed, "Random seed");
    verify->add_option("--occ-cap", occ_cap, "Alternative occurrences tried per MUS tail");
    verify->add_option("--violations", violations_path, "Write witnesses here instead of standard error");
    verify->add_flag("--serial", serial, "Use the single-threaded reference driver");

    // sensitivity
    auto* sens = app.add_subcommand("sensitivity", "MUS count changes under single-character edits");
    InputOptions sens_in;
    std::optional<std::size_t> sens_pos;
    std::string sens_op;
    std::string sens_char;
    bool scan = false;
    std::string kinds_list = "sub,ins,del";
    std::optional<std::string> scan_alphabet;
    sens_in.add_to(sens);
    sens->add_option("--pos", sens_pos, "1-based edit position");
    sens->add_option("--op", sens_op, "sub, ins or del");
    sens->add_option("--char", sens_char, "Symbol for sub/ins (one byte or \\xHH)");
    sens->add_flag("--scan", scan, "Try every position, kind and symbol");
    sens->add_option("--kinds", kinds_list, "Edit kinds for --scan, comma separated");
    sens->add_option("--symbols", scan_alphabet, "Symbols for --scan (default: text symbols plus one fresh)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (compute->parsed()) {
            const auto text = compute_in.load();
            const auto set = compute_mus(text);
            csv::write_mus(out, text, set.intervals(), compute_strings);
            return kExitOk;
        }
        if (query->parsed()) {
            const auto text = query_in.load();
            const auto set = compute_mus(text);
            csv::write_mus(out, text, mus_stab(set, query_pos, text.size()), query_strings);
            return kExitOk;
        }
        if (stats->parsed()) {
            const auto text = stats_in.load();
            const auto set = compute_mus(text);
            csv::write_stats(out, check_bounds(text, set));
            return kExitOk;
        }
        if (gen->parsed()) {
            const auto inst = gen_lower(gen_m);
            if (inst.family.empty()) {
                err << "warning: m=" << gen_m << " has an empty family\n";
            }
            write_text_file(gen_out, inst.text);
            if (!gen_family.empty()) {
                auto f = open_out(gen_family);
                csv::write_family(f, inst);
            }
            return kExitOk;
        }
        if (verify->parsed()) {
            const auto suites = parse_suites(suite_list);
            CheckLimits limits;
            limits.occurrence_cap = occ_cap;
            const auto exec = serial ? Execution::kSerial : Execution::kParallel;
            std::vector<VerificationReport> reports;
            if (exhaustive == random_samples.has_value()) {
                throw UsageError("choose exactly one of --exhaustive or --random");
            }
            if (exhaustive) {
                if (max_len == 0) {
                    throw UsageError("--exhaustive needs --max-len >= 1");
                }
                reports = exhaustive_verify({alphabet, max_len, canonical}, suites, limits, exec);
            } else {
                if (len == 0) {
                    throw UsageError("--random needs --len >= 1");
                }
                RandomPlan plan{alphabet, min_len.value_or(len), len, *random_samples, seed};
                reports = random_verify(plan, suites, limits, exec);
            }
            csv::write_reports(out, reports);
            std::size_t violations = 0;
            for (const auto& r : reports) {
                violations += r.violations.size();
                if (r.flagged > 0) {
                    err << r.suite << ": " << r.flagged << " tied configurations flagged, not asserted\n";
                }
            }
            if (!violations_path.empty()) {
                auto f = open_out(violations_path);
                csv::write_violations(f, reports);
            } else {
                csv::write_violations(err, reports);
            }
            return violations > 0 ? kExitViolations : kExitOk;
        }
        if (sens->parsed()) {
            const auto text = sens_in.load();
            if (scan == sens_pos.has_value()) {
                throw UsageError("choose exactly one of --scan or --pos/--op");
            }
            if (scan) {
                ScanOptions options;
                options.kinds = parse_kinds(kinds_list);
                options.alphabet = scan_alphabet;
                const auto result = sensitivity_scan(text, options);
                csv::write_sensitivity(out, result.records);
                if (result.max_additive) {
                    const auto& r = result.records[*result.max_additive];
                    err << "max additive: " << to_string(r.edit.kind) << " pos " << r.edit.pos << " -> "
                        << r.additive << '\n';
                }
                if (result.max_multiplicative) {
                    const auto& r = result.records[*result.max_multiplicative];
                    err << "max multiplicative: " << to_string(r.edit.kind) << " pos " << r.edit.pos << " -> "
                        << csv::fixed(r.multiplicative, 6) << '\n';
                }
                return kExitOk;
            }
            if (sens_op.empty()) {
                throw UsageError("--pos needs --op");
            }
            EditOp op{parse_edit_kind(sens_op), *sens_pos, 0};
            if (op.kind != EditKind::kDelete) {
                if (sens_char.empty()) {
                    throw UsageError("--op " + sens_op + " needs --char");
                }
                op.symbol = parse_symbol(sens_char);
            }
            const SensitivityRecord rec = sensitivity(text, op);
            csv::write_sensitivity(out, std::span(&rec, 1));
            return kExitOk;
        }
    } catch (const UsageError& e) {
        err << "mustab: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "mustab: " << to_string(e.code()) << ": " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace mustab::cli
