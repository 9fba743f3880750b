#include "compavoid/query.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "compavoid/engine.hpp"
#include "compavoid/errors.hpp"
#include "compavoid/oracle.hpp"

namespace compavoid {

namespace {

int parse_part(std::string_view token, std::size_t word_no, std::size_t token_no) {
    const auto position = "word " + std::to_string(word_no) + ", token " +
                          std::to_string(token_no);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError("expected a positive integer at " + position + ", got \"" +
                         std::string(token) + "\"");
    if (value < 1)
        throw ParseError("parts must be positive integers; got " + std::to_string(value) +
                         " at " + position);
    return value;
}

std::vector<std::string_view> whitespace_tokens(std::string_view text) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i > start) tokens.push_back(text.substr(start, i - start));
    }
    return tokens;
}

}  // namespace

std::vector<Word> parse_word_list(std::string_view text) {
    std::vector<Word> words;
    std::size_t start = 0;
    std::size_t word_no = 0;
    for (;;) {
        const std::size_t semi = text.find(';', start);
        const std::string_view chunk =
            text.substr(start, semi == std::string_view::npos ? std::string_view::npos
                                                              : semi - start);
        ++word_no;
        const auto tokens = whitespace_tokens(chunk);
        if (tokens.empty())
            throw ParseError("word " + std::to_string(word_no) + " is empty");
        std::vector<int> parts;
        parts.reserve(tokens.size());
        for (std::size_t t = 0; t < tokens.size(); ++t)
            parts.push_back(parse_part(tokens[t], word_no, t + 1));
        words.push_back(Word(std::move(parts)));
        if (semi == std::string_view::npos) break;
        start = semi + 1;
    }
    return words;
}

std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> values;
    std::size_t start = 0;
    std::size_t item_no = 0;
    for (;;) {
        const std::size_t comma = text.find(',', start);
        std::string_view chunk =
            text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                               : comma - start);
        ++item_no;
        const auto tokens = whitespace_tokens(chunk);
        if (tokens.size() != 1)
            throw ParseError("entry " + std::to_string(item_no) +
                             " of the list must be a single integer");
        values.push_back(parse_part(tokens[0], item_no, 1));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return values;
}

std::vector<std::string> split_command_line(std::string_view line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    bool pending = false;
    for (char ch : line) {
        if (ch == '"') {
            quoted = !quoted;
            pending = true;
            continue;
        }
        if (!quoted && std::isspace(static_cast<unsigned char>(ch))) {
            if (pending || !cur.empty()) {
                out.push_back(cur);
                cur.clear();
                pending = false;
            }
            continue;
        }
        cur.push_back(ch);
    }
    if (quoted) throw ParseError("unterminated quote in batch line");
    if (pending || !cur.empty()) out.push_back(cur);
    return out;
}

Query parse_query(const std::vector<std::string> &args) {
    Query query;
    std::string avoid_text;
    std::string exponents_text;
    std::string format_text = "table";

    CLI::App app{"exact generating functions for substring avoidance", "compavoid"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--format", format_text, "table, json or csv")
            ->check(CLI::IsMember({"table", "json", "csv"}));
        sub->add_flag("--run-oracle", query.run_oracle,
                      "cross-check every coefficient against brute-force enumeration");
    };

    CLI::App *compositions = app.add_subcommand(
        "compositions", "count compositions by weight and length avoiding substrings");
    compositions->add_option("--avoid", avoid_text,
                             "forbidden words, e.g. \"2 2; 2 1 2\" (empty: none)");
    compositions->add_option("--max-weight", query.max_weight, "weight truncation bound")
        ->check(CLI::Range(0, kMaxQueryBound));
    compositions->add_flag("--show-quasi", query.show_quasi,
                           "also print one table per quasi-avoider series");
    add_common(compositions);

    CLI::App *strings = app.add_subcommand(
        "strings", "count fixed-alphabet strings by length avoiding substrings");
    strings->add_option("--avoid", avoid_text, "forbidden words, e.g. \"1 1\" (empty: none)");
    strings->add_option("--alphabet", query.alphabet_size, "alphabet size n; letters are 1..n")
        ->required()
        ->check(CLI::Range(1, kMaxQueryBound));
    strings->add_option("--max-length", query.max_length, "length truncation bound")
        ->check(CLI::Range(0, kMaxQueryBound));
    add_common(strings);

    CLI::App *family = app.add_subcommand(
        "family", "closed form for the family 2 1^(a-1) 2 over an exponent set");
    family->add_option("--exponents", exponents_text, "strictly increasing list, e.g. 1,3,5")
        ->required();
    family->add_option("--max-weight", query.max_weight, "weight truncation bound")
        ->check(CLI::Range(0, kMaxQueryBound));
    family->add_flag("--show-quasi", query.show_quasi,
                     "also print one table per quasi-avoider series");
    add_common(family);

    CLI::App *verify = app.add_subcommand(
        "verify", "recompute a composition query and check identities and brute force");
    verify->add_option("--avoid", avoid_text, "forbidden words");
    verify->add_option("--exponents", exponents_text, "family exponent list");
    verify->add_option("--max-weight", query.max_weight, "weight truncation bound")
        ->check(CLI::Range(0, kMaxQueryBound));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp &) {
        throw HelpRequested{app.help()};
    } catch (const CLI::CallForAllHelp &) {
        throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError &e) {
        throw ParseError(e.what());
    }

    if (compositions->parsed()) query.mode = Query::Mode::kCompositions;
    if (strings->parsed()) query.mode = Query::Mode::kStrings;
    if (family->parsed()) query.mode = Query::Mode::kFamily;
    if (verify->parsed()) query.mode = Query::Mode::kVerify;

    if (format_text == "json") query.format = OutputFormat::kJson;
    if (format_text == "csv") query.format = OutputFormat::kCsv;

    if (query.mode == Query::Mode::kVerify && !avoid_text.empty() && !exponents_text.empty())
        throw ParseError("verify takes --avoid or --exponents, not both");

    if (!avoid_text.empty()) query.avoid = parse_word_list(avoid_text);
    if (!exponents_text.empty()) query.exponents = ExponentSet(parse_int_list(exponents_text));

    // Surface set-level problems at parse time.
    if (query.exponents.has_value())
        family_words(*query.exponents);
    else
        validate_antichain(query.avoid);

    if (query.mode == Query::Mode::kStrings)
        for (const Word &w : query.avoid)
            if (w.max_letter() > query.alphabet_size)
                throw LetterOutOfAlphabet("forbidden word \"" + w.str() +
                                          "\" uses a letter above the alphabet size " +
                                          std::to_string(query.alphabet_size));
    return query;
}

namespace {

ForbiddenSet query_set(const Query &query) {
    if (query.exponents.has_value()) return family_words(*query.exponents);
    return validate_antichain(query.avoid);
}

std::string first_mismatch(const CoefficientTriangle &engine, const CoefficientTriangle &brute) {
    for (int n = 0; n <= engine.max_weight; ++n)
        for (int m = 0; m <= n; ++m)
            if (engine.counts[n][m] != brute.counts[n][m])
                return "first mismatch at weight " + std::to_string(n) + ", length " +
                       std::to_string(m) + ": series " + engine.counts[n][m].str() +
                       ", enumeration " + brute.counts[n][m].str() + "\n";
    return "";
}

int run_compositions(const Query &query, std::ostream &out) {
    const ForbiddenSet set = query_set(query);
    const AvoidanceResult result = composition_gf(set, query.max_weight);

    CompositionReport report{
        query.mode == Query::Mode::kFamily ? "family" : "compositions",
        set.words(),
        query.exponents.has_value() ? query.exponents->exponents() : std::vector<int>{},
        to_triangle(result.gf),
        {},
        std::nullopt,
        ""};
    if (query.show_quasi)
        for (const BiSeries &b : result.quasi) report.quasi.push_back(to_triangle(b));

    if (query.run_oracle) {
        const CoefficientTriangle brute = enumerate_avoiders(set, query.max_weight);
        report.oracle_match = (report.gf == brute);
        if (!*report.oracle_match) report.oracle_detail = first_mismatch(report.gf, brute);
    }
    out << render(report, query.format);
    return report.oracle_match.value_or(true) ? kExitOk : kExitMismatch;
}

int run_strings(const Query &query, std::ostream &out) {
    const ForbiddenSet set = query_set(query);
    const UniSeries series = string_gf(set, query.alphabet_size, query.max_length);

    StringReport report{set.words(), query.alphabet_size, {}, std::nullopt, ""};
    report.counts.reserve(query.max_length + 1);
    for (int m = 0; m <= query.max_length; ++m) report.counts.push_back(series.at(m));

    if (query.run_oracle) {
        const std::vector<Int> brute =
            enumerate_string_avoiders(set, query.alphabet_size, query.max_length);
        report.oracle_match = (report.counts == brute);
        if (!*report.oracle_match)
            for (int m = 0; m <= query.max_length; ++m)
                if (report.counts[m] != brute[m]) {
                    report.oracle_detail = "first mismatch at length " + std::to_string(m) +
                                           ": series " + report.counts[m].str() +
                                           ", enumeration " + brute[m].str() + "\n";
                    break;
                }
    }
    out << render(report, query.format);
    return report.oracle_match.value_or(true) ? kExitOk : kExitMismatch;
}

int run_verify(const Query &query, std::ostream &out) {
    const ForbiddenSet set = query_set(query);
    const int N = query.max_weight;
    out << "verifying " << set.size() << " forbidden word(s) through weight " << N << "\n";
    for (const Word &w : set.words()) out << "  avoid: " << w.str() << "\n";

    const AvoidanceResult result = composition_gf(set, N);
    const IdentityReport identities = verify_identities(result, set);
    out << "growth identity: " << (identities.growth_ok ? "pass" : "FAIL") << "\n";
    for (std::size_t i = 0; i < set.size(); ++i)
        out << "tail identity (" << set.word(i).str() << "): "
            << (identities.tail_ok[i] ? "pass" : "FAIL") << "\n";

    const CoefficientTriangle brute = enumerate_avoiders(set, N);
    bool counts_ok = (to_triangle(result.gf) == brute);
    out << "avoider counts vs enumeration: " << (counts_ok ? "match" : "MISMATCH") << "\n";
    if (!counts_ok) out << first_mismatch(to_triangle(result.gf), brute);
    for (std::size_t i = 0; i < set.size(); ++i) {
        const bool ok = (to_triangle(result.quasi[i]) == enumerate_quasi_avoiders(set, i, N));
        out << "quasi-avoider counts (" << set.word(i).str()
            << "): " << (ok ? "match" : "MISMATCH") << "\n";
        counts_ok = counts_ok && ok;
    }

    if (identities.all_ok() && counts_ok) {
        out << "all identities pass; oracle match\n";
        return kExitOk;
    }
    return identities.all_ok() ? kExitMismatch : kExitInternal;
}

}  // namespace

int run_query(const Query &query, std::ostream &out) {
    switch (query.mode) {
        case Query::Mode::kCompositions:
        case Query::Mode::kFamily:
            return run_compositions(query, out);
        case Query::Mode::kStrings:
            return run_strings(query, out);
        case Query::Mode::kVerify:
            return run_verify(query, out);
    }
    throw InternalError("unhandled query mode");
}

int exit_code_for(const std::exception &error) {
    if (dynamic_cast<const ParseError *>(&error) != nullptr ||
        dynamic_cast<const ValidationError *>(&error) != nullptr)
        return kExitUsage;
    if (dynamic_cast<const SizeLimitExceeded *>(&error) != nullptr ||
        dynamic_cast<const BoundTooLarge *>(&error) != nullptr)
        return kExitBound;
    return kExitInternal;
}

int run_args(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    try {
        return run_query(parse_query(args), out);
    } catch (const HelpRequested &help) {
        out << help.text;
        return kExitOk;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

int run_batch(std::istream &in, std::ostream &out, std::ostream &err) {
    int worst = kExitOk;
    int line_no = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
        if (trimmed.empty() || trimmed[0] == '#') continue;
        out << "### query " << line_no << ": " << trimmed << "\n";
        int code;
        try {
            code = run_args(split_command_line(trimmed), out, err);
        } catch (const std::exception &e) {
            err << "error: " << e.what() << "\n";
            code = exit_code_for(e);
        }
        worst = std::max(worst, code);
        out << "\n";
    }
    return worst;
}

}  // namespace compavoid
